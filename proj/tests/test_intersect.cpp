#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tropbt/errors.hpp"
#include "tropbt/intersect.hpp"

#include <random>
#include <set>

using namespace tropbt;

namespace {

struct Fixture {
    QuarticSpec spec = tropbt_test::worked_example();
    DualSubdivision sub = regular_subdivision(spec);
    TropicalCurve curve = dual_curve(spec, sub);
};

std::vector<std::pair<Pt, long>> point_multiset(const IntersectionReport& r) {
    std::vector<std::pair<Pt, long>> out;
    for (const auto& c : r.components)
        for (std::size_t i = 0; i < c.stable_points.size(); ++i)
            out.push_back({c.stable_points[i], c.stable_mults[i]});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    return out;
}

} // namespace

TEST_CASE("far generic line meets the quartic with total multiplicity 4") {
    Fixture fx;
    TropicalLine line{Pt{Rat(-1000003), Rat(-999983)}};
    auto rep = stable_intersection(fx.curve, line);
    CHECK(rep.total == 4);
    CHECK(!is_bitangent(rep));
}

TEST_CASE("stable intersection over random vertices: total 4, perturbation independent") {
    Fixture fx;
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> num(-4000, 4000);
    std::uniform_int_distribution<long> den(1, 40);
    for (int k = 0; k < 1000; ++k) {
        Pt v{Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        v.x.canonicalize();
        v.y.canonicalize();
        TropicalLine line{v};
        auto r1 = stable_intersection(fx.curve, line);
        CHECK(r1.total == 4);
        auto r2 = stable_intersection_alt(fx.curve, line);
        CHECK(point_multiset(r1) == point_multiset(r2));
    }
}

TEST_CASE("transverse crossing multiplicity is the determinant") {
    // Every non-horizontal bounded edge crossed in its interior by the
    // horizontal end contributes |det(e, (-1,0))| = |e_y|.
    Fixture fx;
    int checked = 0;
    for (const auto& e : fx.curve.edges) {
        if (e.dir.y == 0) continue;
        Pt mid = fx.curve.vertices[e.v0].pos + (e.length / 2) * e.dir;
        TropicalLine line{Pt{mid.x + 1000, mid.y}};
        auto rep = stable_intersection(fx.curve, line);
        for (const auto& c : rep.components)
            for (std::size_t i = 0; i < c.stable_points.size(); ++i)
                if (c.stable_points[i] == mid && c.stable_mults.size() == 1 &&
                    c.stable_points.size() == 1) {
                    CHECK(c.stable_mults[i] == std::labs(det(e.dir, IVec{-1, 0})));
                    ++checked;
                }
    }
    CHECK(checked >= 5);
}

TEST_CASE("bitangency fails for a 4-component generic position") {
    Fixture fx;
    bool four = false;
    for (int k = 0; k < 40 && !four; ++k) {
        TropicalLine line{Pt{Rat(-1000003 + 17 * k), Rat(-999983 - 31 * k)}};
        auto rep = stable_intersection(fx.curve, line);
        CHECK(!is_bitangent(rep));
        if (rep.components.size() == 4) {
            four = true;
            for (const auto& c : rep.components) CHECK(c.mult == 1);
            CHECK_THROWS_AS(tangency_points(fx.curve, line), error);
        }
    }
    CHECK(four);
}

TEST_CASE("honeycomb quartic: tripod vertex chip-firing") {
    // Heights i^2+ij+j^2 give the honeycomb triangulation; the perturbations
    // below make the three arms at the vertex dual to {(1,1),(1,2),(2,1)}
    // pairwise distinct (7/8 vertical, 15/16 horizontal, 5/4 diagonal).
    std::array<CoeffEntry, 15> ents{};
    int k = 0;
    for (const auto& p : QuarticSpec::support()) {
        ents[k].p = p;
        ents[k].val = Rat(p.i * p.i + p.i * p.j + p.j * p.j);
        if (p == LPt{2, 0}) ents[k].val -= Rat(1, 8);
        if (p == LPt{0, 2}) ents[k].val -= Rat(1, 16);
        if (p == LPt{2, 2}) ents[k].val += Rat(1, 4);
        ents[k].sign = +1;
        ents[k].lead = 1;
        ++k;
    }
    QuarticSpec spec{ents};
    DualSubdivision sub = regular_subdivision(spec);
    REQUIRE(is_smooth(sub));
    TropicalCurve curve = dual_curve(spec, sub);

    int vi = curve.vertex_at(Pt{Rat(4), Rat(4)});
    REQUIRE(vi >= 0);
    const auto& vx = curve.vertices[vi];
    REQUIRE(vx.degree_bounded == 3);

    TropicalLine line{vx.pos};
    auto rep = stable_intersection(curve, line);
    REQUIRE(rep.components.size() == 1);
    REQUIRE(rep.components[0].mult == 4);
    CHECK(is_bitangent(rep));

    auto tds = tangency_points(curve, line);
    REQUIRE(tds.size() == 2);
    CHECK(tds[0].sub == TangencyDatum::Sub::tripod);
    CHECK(tds[1].sub == TangencyDatum::Sub::tripod);
    // lambda = (7/8, 15/16, 5/4): chips at 1/32 (horizontal) and 3/16
    // (diagonal) away from the vertex.
    std::set<std::string> got, want;
    for (const auto& td : tds) got.insert(to_string(td.location));
    want.insert(to_string(Pt{Rat(4) - Rat(1, 32), Rat(4)}));
    want.insert(to_string(Pt{Rat(4) + Rat(3, 16), Rat(4) + Rat(3, 16)}));
    CHECK(got == want);
}

TEST_CASE("equal minimal arms raise NonGenericCurve") {
    // Same honeycomb but only one perturbation: the vertical and horizontal
    // arms tie at the tripod vertex.
    std::array<CoeffEntry, 15> ents{};
    int k = 0;
    for (const auto& p : QuarticSpec::support()) {
        ents[k].p = p;
        ents[k].val = Rat(p.i * p.i + p.i * p.j + p.j * p.j);
        if (p == LPt{2, 2}) ents[k].val += Rat(1, 4);
        ents[k].sign = +1;
        ents[k].lead = 1;
        ++k;
    }
    QuarticSpec spec{ents};
    DualSubdivision sub = regular_subdivision(spec);
    REQUIRE(is_smooth(sub));
    TropicalCurve curve = dual_curve(spec, sub);
    int vi = curve.vertex_at(Pt{Rat(4), Rat(4)});
    REQUIRE(vi >= 0);
    TropicalLine line{curve.vertices[vi].pos};
    try {
        tangency_points(curve, line);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.kind() == errc::non_generic_curve);
    }
}
