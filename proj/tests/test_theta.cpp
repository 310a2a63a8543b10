#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tropbt/classes.hpp"
#include "tropbt/errors.hpp"
#include "tropbt/theta.hpp"

#include <random>

using namespace tropbt;

namespace {

/// Hand-built metric graphs for the divisor machinery.
MetricGraph single_loop(const Rat& len) {
    MetricGraph g;
    g.nodes.push_back({Pt{Rat(0), Rat(0)}, -1});
    // A loop needs an auxiliary node to exist as two edges in our model; use
    // one node and a self-loop edge instead.
    MetricGraph::Edge e;
    e.n0 = e.n1 = 0;
    e.length = len;
    g.edges.push_back(e);
    return g;
}

MetricGraph theta_graph(const Rat& a, const Rat& b, const Rat& c) {
    MetricGraph g;
    g.nodes.push_back({Pt{Rat(0), Rat(0)}, -1});
    g.nodes.push_back({Pt{Rat(1), Rat(0)}, -1});
    for (const Rat& len : {a, b, c}) {
        MetricGraph::Edge e;
        e.n0 = 0;
        e.n1 = 1;
        e.length = len;
        g.edges.push_back(e);
    }
    return g;
}

} // namespace

TEST_CASE("cycle classes of small graphs") {
    CHECK(cycle_classes(single_loop(Rat(5))).size() == 1);
    CHECK(cycle_classes(theta_graph(Rat(1), Rat(2), Rat(4))).size() == 3);
}

TEST_CASE("zharkov on the theta graph") {
    MetricGraph g = theta_graph(Rat(2), Rat(3), Rat(7));
    auto classes = cycle_classes(g);
    for (const auto& gamma : classes) {
        Divisor d = zharkov_theta(g, gamma);
        CHECK(d.degree() == 1); // genus 2
        if (gamma.edges.size() == 2) {
            // The third edge burns from both nodes; chip at its midpoint.
            int other = 3 - gamma.edges[0] - gamma.edges[1];
            REQUIRE(d.chips.size() == 1);
            CHECK(d.chips[0].edge == other);
            CHECK(d.chips[0].offset == g.edges[other].length / 2);
        }
    }
}

TEST_CASE("divisors on a loop") {
    MetricGraph g = single_loop(Rat(10));
    Divisor d1, d2;
    d1.add_edge_point(g, 0, Rat(0));
    d2.add_edge_point(g, 0, Rat(5));
    // Degree-1 divisors on a circle are equivalent iff equal.
    CHECK(!linearly_equivalent(g, d1, d2));
    CHECK(linearly_equivalent(g, d1, d1));
    CHECK(!linearly_equivalent_abel_jacobi(g, d1, d2));

    // Sliding two chips in opposite directions preserves the class.
    Divisor a, b;
    a.add_edge_point(g, 0, Rat(2));
    a.add_edge_point(g, 0, Rat(7));
    b.add_edge_point(g, 0, Rat(3));
    b.add_edge_point(g, 0, Rat(6));
    CHECK(linearly_equivalent(g, a, b));
    CHECK(linearly_equivalent_abel_jacobi(g, a, b));

    Divisor c;
    c.add_edge_point(g, 0, Rat(3));
    c.add_edge_point(g, 0, Rat(13, 2));
    CHECK(!linearly_equivalent(g, a, c));
    CHECK(!linearly_equivalent_abel_jacobi(g, a, c));

    Divisor deg1;
    deg1.add_edge_point(g, 0, Rat(1));
    CHECK_THROWS_AS(linearly_equivalent(g, a, deg1), error);
}

TEST_CASE("reduction is idempotent and respects equivalence") {
    MetricGraph g = theta_graph(Rat(2), Rat(3), Rat(7));
    std::mt19937_64 rng(5);
    for (int it = 0; it < 25; ++it) {
        Divisor d;
        int chips = 1 + static_cast<int>(rng() % 3);
        for (int c = 0; c < chips; ++c) {
            int e = static_cast<int>(rng() % 3);
            long num = static_cast<long>(rng() % 13);
            Rat off = g.edges[e].length * Rat(num, 13);
            if (off == 0) d.add_node(g.edges[e].n0);
            else d.add_edge_point(g, e, off);
        }
        Divisor r = q_reduced(g, d);
        CHECK(r.degree() == d.degree());
        Divisor rr = q_reduced(g, r);
        CHECK(r.same_chips(rr));
        CHECK(linearly_equivalent(g, d, r));
        CHECK(linearly_equivalent_abel_jacobi(g, d, r));
    }
}

TEST_CASE("reduced-form equality matches the Abel-Jacobi test") {
    MetricGraph g = theta_graph(Rat(2), Rat(3), Rat(7));
    std::mt19937_64 rng(11);
    auto random_divisor = [&](int chips) {
        Divisor d;
        for (int c = 0; c < chips; ++c) {
            int e = static_cast<int>(rng() % 3);
            long num = static_cast<long>(rng() % 11);
            Rat off = g.edges[e].length * Rat(num, 11);
            if (off == 0) d.add_node(g.edges[e].n0);
            else d.add_edge_point(g, e, off);
        }
        return d;
    };
    int equivalent = 0;
    for (int it = 0; it < 60; ++it) {
        Divisor a = random_divisor(2), b = random_divisor(2);
        bool lhs = linearly_equivalent(g, a, b);
        bool rhs = linearly_equivalent_abel_jacobi(g, a, b);
        CHECK(lhs == rhs);
        equivalent += lhs;
    }
    CHECK(equivalent >= 0);
}

TEST_CASE("worked example: zharkov chips and the class bijection") {
    QuarticSpec spec = tropbt_test::worked_example();
    DualSubdivision sub = regular_subdivision(spec);
    TropicalCurve curve = dual_curve(spec, sub);
    MetricGraph g = skeleton(curve);

    auto gammas = cycle_classes(g);
    CHECK(gammas.size() == 7);
    for (const auto& gamma : gammas) CHECK(zharkov_theta(g, gamma).degree() == 2);

    // gamma1: the loop dual to (1,2) alone. Its theta characteristic has one
    // chip on the central bi-edge pair and one on the far side.
    const auto& e_gamma1 = g.loops_dual.at(LPt{1, 2});
    const auto& e_gamma2 = g.loops_dual.at(LPt{1, 1});
    const auto& e_gamma3 = g.loops_dual.at(LPt{2, 1});
    auto find_class = [&](const std::vector<int>& edges) -> const CycleClass* {
        for (const auto& gamma : gammas)
            if (gamma.edges == edges) return &gamma;
        return nullptr;
    };
    const CycleClass* g1 = find_class(e_gamma1);
    REQUIRE(g1 != nullptr);
    Divisor L1 = zharkov_theta(g, *g1);
    CHECK(L1.degree() == 2);
    // One chip on a biedge-cycle edge (the point v12), one on the gamma3 side.
    bool chip_on_biedge = false, chip_near_loop3 = false;
    for (const auto& c : L1.chips) {
        bool on2 = false, on3 = false;
        for (int e : e_gamma2) on2 |= (c.edge == e);
        for (int e : e_gamma3) on3 |= (c.edge == e);
        chip_on_biedge |= on2;
        chip_near_loop3 |= on3 || (c.node >= 0);
    }
    CHECK(chip_on_biedge);
    CHECK(chip_near_loop3);

    // gamma_123 = gamma1 + gamma2 + gamma3: chips at the two bridge midpoints.
    std::set<int> sym;
    for (const auto& edges : {e_gamma1, e_gamma2, e_gamma3})
        for (int e : edges) {
            if (sym.count(e)) sym.erase(e);
            else sym.insert(e);
        }
    const CycleClass* g123 = find_class(std::vector<int>(sym.begin(), sym.end()));
    REQUIRE(g123 != nullptr);
    Divisor L123 = zharkov_theta(g, *g123);
    REQUIRE(L123.chips.size() == 2);
    for (const auto& c : L123.chips) {
        REQUIRE(c.edge >= 0);
        const auto& e = g.edges[c.edge];
        CHECK(e.n0 != e.n1);
        CHECK(c.offset == e.length / 2); // bridge midpoints
        // The edge is a bridge: not on any cycle.
        for (const auto& edges : {e_gamma1, e_gamma2, e_gamma3})
            for (int ce : edges) CHECK(ce != c.edge);
    }

    auto classes = enumerate_classes(curve);
    auto bij = class_theta_bijection(classes, curve, g);
    std::set<int> used(bij.gamma_of_class.begin(), bij.gamma_of_class.end());
    CHECK(used.size() == 7);
}
