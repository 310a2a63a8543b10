#ifndef TROPBT_THETA_HPP
#define TROPBT_THETA_HPP

#include "tropbt/classes.hpp"
#include "tropbt/newton_dual.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tropbt {

/// Effective divisor on a metric graph: chips at nodes or edge-interior
/// points (offset measured from the edge's n0 endpoint).
struct Divisor {
    struct Chip {
        int node = -1;     // set when the chip sits on a node
        int edge = -1;     // else the edge carrying it
        Rat offset;        // 0 < offset < length
        long mult = 1;
    };
    std::vector<Chip> chips;

    long degree() const;
    void add_node(int node, long mult = 1);
    void add_edge_point(const MetricGraph& g, int edge, const Rat& offset, long mult = 1);
    /// Merge chips at equal positions; drop zero multiplicities.
    void normalize();
    bool same_chips(const Divisor& other) const;
};

/// Nonzero element of H1(graph, Z/2), as the edge set of its support.
struct CycleClass {
    std::vector<int> edges; // sorted skeleton edge ids
};

/// All 2^b - 1 nonzero cycle classes (b = first Betti number).
std::vector<CycleClass> cycle_classes(const MetricGraph& g);

/// Zharkov's fire-front construction of the effective theta characteristic
/// attached to a nonzero cycle class: ignite the cycle, spread at unit
/// speed, and drop (colliding fronts - 1) chips at every collision.
Divisor zharkov_theta(const MetricGraph& g, const CycleClass& gamma);

/// q-reduced representative of an effective divisor (Dhar burning adapted to
/// metric graphs, exact arithmetic). The base point is the node with
/// lexicographically smallest embedded coordinates unless given.
Divisor q_reduced(const MetricGraph& g, const Divisor& d, int base_node = -1);

bool linearly_equivalent(const MetricGraph& g, const Divisor& d1, const Divisor& d2);

/// Independent test through the tropical Abel-Jacobi map: project a 1-chain
/// with boundary D1 - D2 onto the cycle space and check integrality.
bool linearly_equivalent_abel_jacobi(const MetricGraph& g, const Divisor& d1, const Divisor& d2);

/// Retract a point of the curve onto the skeleton.
Divisor::Chip retract_point(const TropicalCurve& curve, const MetricGraph& g, const Pt& p);

struct ThetaBijection {
    /// For each class (input order): the index into cycle_classes(g).
    std::vector<int> gamma_of_class;
    std::vector<Divisor> thetas; // per cycle class
};

/// Match every bitangent class to the theta characteristic its tangency
/// divisor retracts to. Throws BijectionFailure if the matching is not a
/// bijection.
ThetaBijection class_theta_bijection(const std::vector<BitangentClass>& classes,
                                     const TropicalCurve& curve, const MetricGraph& g);

} // namespace tropbt

#endif
