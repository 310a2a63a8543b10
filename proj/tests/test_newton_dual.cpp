#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tropbt/errors.hpp"
#include "tropbt/newton_dual.hpp"

using namespace tropbt;

namespace {

QuarticSpec flat_lift() {
    std::array<CoeffEntry, 15> ents{};
    int k = 0;
    for (const auto& p : QuarticSpec::support()) {
        ents[k].p = p;
        ents[k].val = 0;
        ents[k].sign = +1;
        ents[k].lead = 1;
        ++k;
    }
    return QuarticSpec(ents);
}

/// Independent lower-face oracle: a triangle is a lower face iff every other
/// lifted point lies on or above its plane, checked in plain brute force.
bool lower_face_oracle(const QuarticSpec& spec, LPt a, LPt b, LPt c) {
    long d = static_cast<long>(b.i - a.i) * (c.j - a.j) - static_cast<long>(b.j - a.j) * (c.i - a.i);
    if (d == 0) return false;
    for (const auto& p : QuarticSpec::support()) {
        // Solve for the plane through the lifted a, b, c and compare.
        Rat beta = ((spec.val(b) - spec.val(a)) * (c.j - a.j) -
                    (spec.val(c) - spec.val(a)) * (b.j - a.j)) / Rat(d);
        Rat gamma = ((spec.val(c) - spec.val(a)) * (b.i - a.i) -
                     (spec.val(b) - spec.val(a)) * (c.i - a.i)) / Rat(d);
        Rat alpha = spec.val(a) - beta * a.i - gamma * a.j;
        if (spec.val(p) < alpha + beta * p.i + gamma * p.j) return false;
    }
    return true;
}

} // namespace

TEST_CASE("worked example subdivision is a unimodular triangulation") {
    QuarticSpec spec = tropbt_test::worked_example();
    DualSubdivision sub = regular_subdivision(spec);
    CHECK(sub.cells.size() == 16);
    CHECK(is_smooth(sub));
    CHECK(sub.has_triangle({LPt{0, 0}, LPt{1, 0}, LPt{1, 1}}));
    // 18 interior and 12 boundary edges for a unimodular triangulation.
    CHECK(sub.interior_edges.size() == 18);
    CHECK(sub.boundary_edges.size() == 12);
}

TEST_CASE("brute-force lower-face oracle agrees with the subdivision") {
    QuarticSpec spec = tropbt_test::worked_example();
    DualSubdivision sub = regular_subdivision(spec);
    const auto& pts = QuarticSpec::support();
    int oracle_count = 0;
    for (int a = 0; a < 15; ++a)
        for (int b = a + 1; b < 15; ++b)
            for (int c = b + 1; c < 15; ++c)
                if (lower_face_oracle(spec, pts[a], pts[b], pts[c])) {
                    ++oracle_count;
                    CHECK(sub.has_triangle({pts[a], pts[b], pts[c]}));
                }
    CHECK(oracle_count == 16);
}

TEST_CASE("flat lift gives a single cell and is not smooth") {
    DualSubdivision sub = regular_subdivision(flat_lift());
    CHECK(sub.cells.size() == 1);
    CHECK(sub.cells[0].points.size() == 15);
    CHECK(!is_smooth(sub));
    CHECK_THROWS_AS(dual_curve(flat_lift(), sub), error);
}

TEST_CASE("subdivision is invariant under affine height changes") {
    QuarticSpec spec = tropbt_test::worked_example();
    std::array<CoeffEntry, 15> ents{};
    int k = 0;
    for (const auto& e : spec.entries()) {
        ents[k] = e;
        ents[k].val = e.val + Rat(7) + Rat(3) * e.p.i - Rat(2) * e.p.j;
        ++k;
    }
    QuarticSpec shifted(ents);
    auto t1 = regular_subdivision(spec).triangles();
    auto t2 = regular_subdivision(shifted).triangles();
    CHECK(t1 == t2);
}

TEST_CASE("dual curve of the worked example") {
    QuarticSpec spec = tropbt_test::worked_example();
    DualSubdivision sub = regular_subdivision(spec);
    TropicalCurve curve = dual_curve(spec, sub);

    CHECK(curve.vertices.size() == 16);
    CHECK(curve.edges.size() == 18);
    CHECK(curve.rays.size() == 12);

    // Vertex dual to {(0,0),(1,0),(1,1)} sits at (10,5): all 15 affine forms
    // are dominated by the triangle's three.
    int vi = curve.vertex_at(Pt{Rat(10), Rat(5)});
    REQUIRE(vi >= 0);
    std::array<LPt, 3> want = {LPt{0, 0}, LPt{1, 0}, LPt{1, 1}};
    CHECK(curve.vertices[vi].dual == want);
    Rat best(-1000000);
    for (const auto& p : QuarticSpec::support()) {
        Rat v = -spec.val(p) + Rat(p.i) * 10 + Rat(p.j) * 5;
        best = std::max(best, v);
    }
    for (LPt p : want) CHECK(-spec.val(p) + Rat(p.i) * 10 + Rat(p.j) * 5 == best);

    // Balancing at every vertex.
    for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
        IVec sum{0, 0};
        const auto& vx = curve.vertices[v];
        for (int k = 0; k < vx.degree_bounded; ++k) {
            const auto& e = curve.edges[vx.edges[k]];
            sum = sum + (e.v0 == static_cast<int>(v) ? e.dir : -e.dir);
        }
        for (int k = 0; k < vx.degree_rays; ++k) sum = sum + curve.rays[vx.rays[k]].dir;
        CHECK(sum == IVec{0, 0});
        CHECK(vx.degree_bounded + vx.degree_rays == 3);
    }

    // Duality: edge directions are the 90-degree rotations of their duals.
    for (const auto& e : curve.edges) {
        IVec dual{e.dual_b.i - e.dual_a.i, e.dual_b.j - e.dual_a.j};
        CHECK(det(e.dir, rot90(dual)) == 0);
        CHECK(e.length > 0);
    }

    // Bottom boundary edges are dual to rays of direction (0,-1).
    for (const auto& r : curve.rays)
        if (r.dual_a.j == 0 && r.dual_b.j == 0) CHECK(r.dir == IVec{0, -1});
}

TEST_CASE("skeleton of the worked example") {
    QuarticSpec spec = tropbt_test::worked_example();
    TropicalCurve curve = dual_curve(spec, regular_subdivision(spec));
    MetricGraph g = skeleton(curve);

    CHECK(g.first_betti() == 3);
    CHECK(g.loops == 2);
    CHECK(g.biedges == 1);
    CHECK(g.bridges == 2);

    CHECK(g.loop_lengths.at(LPt{1, 2}) == 17);
    CHECK(g.loop_lengths.at(LPt{1, 1}) == 12);
    CHECK(g.loop_lengths.at(LPt{2, 1}) == 14);

    for (const auto& e : g.edges) CHECK(e.length > 0);
}
