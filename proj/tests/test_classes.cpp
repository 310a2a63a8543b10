#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tropbt/classes.hpp"
#include "tropbt/errors.hpp"
#include <random>
#include "tropbt/intersect.hpp"

using namespace tropbt;

namespace {

struct Fixture {
    QuarticSpec spec = tropbt_test::worked_example();
    DualSubdivision sub = regular_subdivision(spec);
    TropicalCurve curve = dual_curve(spec, sub);
};

} // namespace

TEST_CASE("critical lines of the worked example") {
    Fixture fx;
    auto lines = critical_lines(fx.curve);
    // Deduplicated; every curve vertex contributes its three lines.
    CHECK(lines.size() <= 16u * 3u + 18u + 12u);
    Line x10 = Line::through(Pt{Rat(10), Rat(5)}, IVec{0, 1});
    Line y5 = Line::through(Pt{Rat(10), Rat(5)}, IVec{1, 0});
    Line d5 = Line::through(Pt{Rat(10), Rat(5)}, IVec{1, 1});
    int found = 0;
    for (const auto& l : lines) found += (l == x10) + (l == y5) + (l == d5);
    CHECK(found == 3);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) CHECK(!(lines[i] == lines[j]));
}

TEST_CASE("small arrangements") {
    SUBCASE("two crossing lines") {
        std::vector<Line> ls = {Line::through(Pt{Rat(0), Rat(0)}, IVec{1, 0}),
                                Line::through(Pt{Rat(0), Rat(0)}, IVec{0, 1})};
        Arrangement arr = build_arrangement(ls);
        CHECK(arr.verts.size() == 1);
        CHECK(arr.edge_cells.size() == 4);
    }
    SUBCASE("single line") {
        std::vector<Line> ls = {Line::through(Pt{Rat(0), Rat(0)}, IVec{1, 0})};
        Arrangement arr = build_arrangement(ls);
        CHECK(arr.verts.empty());
        CHECK(arr.edge_cells.size() == 1);
    }
    SUBCASE("duplicate input lines are removed") {
        std::vector<Line> ls = {Line::through(Pt{Rat(0), Rat(0)}, IVec{1, 0}),
                                Line::through(Pt{Rat(0), Rat(1)}, IVec{1, 0}),
                                Line::through(Pt{Rat(0), Rat(0)}, IVec{1, 0})};
        Arrangement arr = build_arrangement(ls);
        CHECK(arr.lines.size() == 2);
    }
}

TEST_CASE("worked example has exactly seven classes") {
    Fixture fx;
    auto classes = enumerate_classes(fx.curve);
    CHECK(classes.size() == 7);

    int zero_dim = 0;
    for (const auto& cls : classes) {
        CHECK(!cls.cells.empty());
        if (cls.dim() == 0) {
            ++zero_dim;
            CHECK(cls.cells.size() == 1);
        }
        // Every member point of every cell is bitangent.
        for (const auto& c : cls.cells) {
            CHECK(is_bitangent(fx.curve, TropicalLine{c.sample}));
            CHECK(!c.tangencies.empty());
        }
        // Unbounded cells recede only towards the three allowed directions.
        for (const auto& c : cls.cells)
            for (const auto& d : c.recession) {
                bool ok = d == IVec{-1, -1} || d == IVec{1, 0} || d == IVec{0, 1};
                CHECK(ok);
            }
    }
    // The worked example has the three singleton (A)-classes.
    CHECK(zero_dim >= 3);
}

TEST_CASE("refine_shape flags match the curve") {
    Fixture fx;
    auto classes = enumerate_classes(fx.curve);
    for (const auto& cls : classes) {
        BitangentClass r = refine_shape(cls, fx.curve);
        for (const auto& c : r.cells) {
            if (c.dim == 0) {
                CHECK(c.on_curve == fx.curve.on_curve(c.p0));
                CHECK(c.curve_vertex == (fx.curve.vertex_at(c.p0) >= 0));
            }
            if (c.dim == 2) CHECK(!c.on_curve);
        }
    }
}

TEST_CASE("min-tropical convexity of class membership") {
    // For member pairs p, q and scalars a, b normalized to min(a,b) = 0, the
    // coordinatewise min of a+p and b+q stays in the class.
    Fixture fx;
    auto classes = enumerate_classes(fx.curve);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> shift(0, 25);
    for (const auto& cls : classes) {
        std::vector<Pt> members;
        for (const auto& c : cls.cells) {
            members.push_back(c.sample);
            CHECK(class_contains(cls, c.sample));
        }
        for (int it = 0; it < 60; ++it) {
            const Pt& p = members[rng() % members.size()];
            const Pt& q = members[rng() % members.size()];
            Rat a(shift(rng)), b(0);
            if (rng() % 2) std::swap(a, b);
            Pt m{std::min(a + p.x, b + q.x), std::min(a + p.y, b + q.y)};
            CHECK(is_bitangent(fx.curve, TropicalLine{m}));
            CHECK(class_contains(cls, m));
        }
    }
}
