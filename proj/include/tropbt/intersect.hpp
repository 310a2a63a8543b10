#ifndef TROPBT_INTERSECT_HPP
#define TROPBT_INTERSECT_HPP

#include "tropbt/geometry.hpp"
#include "tropbt/newton_dual.hpp"

#include <optional>
#include <vector>

namespace tropbt {

/// Non-degenerate tropical line: a tripod with ends of direction
/// (-1,0), (0,-1) and (1,1) hanging off `vertex`.
struct TropicalLine {
    Pt vertex;
};

/// Which end of the line carries a tangency.
enum class End { none, horizontal, vertical, diagonal };

inline IVec end_dir(End e) {
    switch (e) {
        case End::horizontal: return {-1, 0};
        case End::vertical: return {0, -1};
        case End::diagonal: return {1, 1};
        default: return {0, 0};
    }
}
const char* end_name(End e);

/// Result of intersecting the line with the curve: the stable intersection
/// points with multiplicities, grouped into connected components of the
/// set-theoretic intersection, plus the overlap structure per component.
struct IntersectionReport {
    struct Overlap {
        End end = End::none;     // line end carrying the overlap
        int curve_edge = -1;     // exactly one of curve_edge / curve_ray set
        int curve_ray = -1;
        Pt a, b;                 // endpoints; for unbounded overlaps b unused
        Rat t_lo, t_hi;          // parameters along the line end
        bool unbounded = false;
    };
    struct Component {
        long mult = 0;
        std::vector<Pt> stable_points;
        std::vector<long> stable_mults;
        std::vector<Overlap> overlaps;
        bool contains_line_vertex = false;
    };
    std::vector<Component> components;
    long total = 0;
};

IntersectionReport stable_intersection(const TropicalCurve& curve, const TropicalLine& line);
/// Same computation with an alternative generic perturbation direction;
/// the point-multiplicity multiset must agree with stable_intersection.
IntersectionReport stable_intersection_alt(const TropicalCurve& curve, const TropicalLine& line);

bool is_bitangent(const TropicalCurve& curve, const TropicalLine& line);
bool is_bitangent(const IntersectionReport& report);

enum class TanType { t1, t2, t3a, t3b, t3c, t4, t5a, t5b, t6a, t6b };
const char* tan_type_name(TanType t);

struct TangencyDatum {
    Pt location;
    TanType type = TanType::t1;
    int mult = 2;            // 2, or 4 for a coincident double tangency
    End end = End::none;     // end carrying the tangency, when in an end's interior
    int curve_vertex = -1;   // set when the tangency sits on a vertex of the curve
    int curve_edge = -1;     // carrier edge: tangency-bearing edge of the curve
    int curve_ray = -1;      // shared end of curve and line for types (6a)/(6b)
    /// Finer tag for type (3b) configurations.
    enum class Sub { none, mid_edge, at_vertex, tripod, shared_rays } sub = Sub::none;
};

/// Locations and local types of the tangencies of a bitangent line.
/// Returns two data, or a single datum of multiplicity 4 when the two
/// tangencies coincide. Throws NotBitangent, NonGenericCurve or
/// UnclassifiableTangency.
std::vector<TangencyDatum> tangency_points(const TropicalCurve& curve, const TropicalLine& line);

/// Classify the tangency of `line` at a given location (must be one of the
/// points reported by tangency_points).
TangencyDatum tangency_type(const TropicalCurve& curve, const TropicalLine& line, const Pt& location);

/// |det(e, e')| entering the local lifting multiplicity of a type (4) or
/// (6a) tangency, where e' is the end carrying the partner tangency. For
/// (6a) the carrier is the adjacent bounded edge moved along, recovered from
/// the vertex star.
long det46(const TropicalCurve& curve, const TangencyDatum& d, End partner_end);

/// The carrier edge realizing det46 (type (4): the stored carrier; type
/// (6a): the star edge of maximal determinant against the partner end).
int carrier46(const TropicalCurve& curve, const TangencyDatum& d, End partner_end);

} // namespace tropbt

#endif
