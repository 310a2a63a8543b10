#ifndef TROPBT_NEWTON_DUAL_HPP
#define TROPBT_NEWTON_DUAL_HPP

#include "tropbt/geometry.hpp"
#include "tropbt/quartic.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace tropbt {

/// Regular subdivision of the side-4 simplex induced by the coefficient
/// valuations (projection of the lower faces of the lifted point set).
struct DualSubdivision {
    /// Each cell lists all its lattice points; the first entries are the hull
    /// vertices in counterclockwise order, `hull_size` many.
    struct Cell {
        std::vector<LPt> points;
        int hull_size = 0;
    };
    std::vector<Cell> cells;

    struct InteriorEdge {
        LPt a, b;
        int cell_left = -1;  // cells incident to the edge
        int cell_right = -1;
    };
    std::vector<InteriorEdge> interior_edges;
    std::vector<std::pair<LPt, LPt>> boundary_edges;

    /// Triangle cells as lattice triples (all cells, when smooth).
    std::vector<std::array<LPt, 3>> triangles() const;
    bool has_triangle(std::array<LPt, 3> t) const;
    /// Index of the cell that is a triangle containing both a and b, other
    /// than `except`; -1 if none.
    int cell_with_edge(LPt a, LPt b, int except = -1) const;
};

DualSubdivision regular_subdivision(const QuarticSpec& spec);

/// True iff the subdivision is a unimodular triangulation (16 unit triangles).
bool is_smooth(const DualSubdivision& sub);

/// The plane tropical curve dual to a unimodular subdivision, max convention.
struct TropicalCurve {
    struct Vertex {
        Pt pos;
        std::array<LPt, 3> dual; // dual triangle, sorted
        std::array<int, 3> edges{-1, -1, -1}; // incident bounded edges
        std::array<int, 2> rays{-1, -1};      // incident rays (at most 2)
        int degree_bounded = 0;
        int degree_rays = 0;
    };
    struct Edge {
        int v0 = -1, v1 = -1;
        IVec dir;      // primitive, oriented from v0 to v1
        Rat length;    // lattice length
        LPt dual_a, dual_b; // dual interior edge
    };
    struct Ray {
        int v0 = -1;
        IVec dir;      // primitive, outward
        LPt dual_a, dual_b; // dual boundary edge
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Ray> rays;

    int vertex_at(const Pt& p) const;          // -1 if none
    bool on_curve(const Pt& p) const;
    /// Bounding box of the vertices.
    void bbox(Rat& xmin, Rat& xmax, Rat& ymin, Rat& ymax) const;
};

TropicalCurve dual_curve(const QuarticSpec& spec, const DualSubdivision& sub);

/// Genus-3 metric graph obtained by contracting the tree parts of the curve.
struct MetricGraph {
    struct Node {
        Pt pos;          // embedded position of the underlying curve vertex
        int curve_vertex = -1;
    };
    struct Edge {
        int n0 = -1, n1 = -1;
        Rat length;
        /// Chain of curve edge ids realizing this skeleton edge, oriented
        /// from n0 to n1; parallel entry says whether curve edge dir agrees.
        std::vector<std::pair<int, bool>> chain;
    };

    std::vector<Node> nodes;
    std::vector<Edge> edges;

    int loops = 0, biedges = 0, bridges = 0;
    /// Independent cycles keyed by their dual interior lattice point; each is
    /// an edge subset (Z/2 chain) of the skeleton.
    std::map<LPt, std::vector<int>> loops_dual;
    /// Cycle lengths keyed by dual interior lattice point.
    std::map<LPt, Rat> loop_lengths;

    /// Retraction data: where each curve vertex lands.
    struct VertexImage {
        int node = -1;          // if the vertex maps to a node
        int edge = -1;          // else: interior of this skeleton edge
        Rat offset;             // distance from edge.n0
    };
    std::vector<VertexImage> vertex_image; // indexed by curve vertex id
    /// For each curve edge: -1 in `edge` if contracted (both ends retract to
    /// the same node), else the skeleton edge and the offset of its v0 end.
    struct EdgeImage {
        int edge = -1;
        Rat offset0;    // image of the curve edge's v0 endpoint along edge
        bool forward = true;
        int node = -1;  // when contracted: the node everything maps to
    };
    std::vector<EdgeImage> edge_image;

    int first_betti() const { return static_cast<int>(edges.size()) - static_cast<int>(nodes.size()) + 1; }
};

MetricGraph skeleton(const TropicalCurve& curve);

} // namespace tropbt

#endif
