#ifndef TROPBT_CLASSES_HPP
#define TROPBT_CLASSES_HPP

#include "tropbt/intersect.hpp"
#include "tropbt/newton_dual.hpp"

#include <string>
#include <vector>

namespace tropbt {

/// Lines along which the combinatorics of line-curve intersection can change:
/// supporting lines of all edges and rays, plus the horizontal, vertical and
/// diagonal lines through every vertex. Deduplicated.
std::vector<Line> critical_lines(const TropicalCurve& curve);

/// Exact arrangement of the critical lines, with sample points for every
/// cell. Cells are addressed as (dim, index).
struct Arrangement {
    std::vector<Line> lines;
    std::vector<Pt> verts; // 0-cells

    /// 1-cells: per line, params of the vertices on it (sorted); interval k
    /// runs between params k-1 and k, with k=0 and k=#params the unbounded
    /// ends. On a line with no vertices the single interval 0 is the line.
    struct LineData {
        std::vector<Rat> params;       // sorted parameters of vertices
        std::vector<int> vert_ids;
        Pt origin;                     // param 0 point
        IVec dir;                      // primitive direction
    };
    std::vector<LineData> on_line;

    struct EdgeCell {
        int line = -1;
        int interval = -1;
        Pt sample;
        bool lo_bounded = false, hi_bounded = false;
        Pt lo, hi;                     // endpoints when bounded
        int vlo = -1, vhi = -1;        // endpoint vertex ids
        std::string signs;             // sign vector at the sample, '0' at own line
    };
    std::vector<EdgeCell> edge_cells;

    struct FaceCell {
        std::string signs;             // '+'/'-' per line
        Pt sample;
    };
    std::vector<FaceCell> face_cells;

    std::string signs_at(const Pt& p) const;
    int face_index(const std::string& signs) const;

    /// Face registry: returns the face id for a sample point, creating it on
    /// first sight.
    int face_of_sample(const Pt& p);
};

Arrangement build_arrangement(const std::vector<Line>& lines);

/// One cell of a refined bitangent class, after merging away spurious
/// arrangement subdivisions.
struct ClassCell {
    int dim = 0;
    bool bounded = true;
    bool on_curve = false;
    bool curve_vertex = false;
    Pt p0, p1;                    // 0-cell: p0; bounded 1-cell: [p0,p1]; ray: p0 + t*dir
    IVec dir;                     // 1-cells: undirected for segments, outward for rays
    std::vector<IVec> recession;  // extreme recession directions (unbounded cells)
    std::vector<Pt> hull;         // 2-cells: finite hull vertices, ccw
    std::vector<TangencyDatum> tangencies; // member tangency data at a sample point
    Pt sample;                    // interior sample point (members of the class)
    std::vector<int> faces;       // lower-dimensional cells in the closure
};

struct BitangentClass {
    std::vector<ClassCell> cells; // sorted: 0-cells, then 1-cells, then 2-cells
    int dim() const;
    bool bounded() const;
    /// Lexicographically least 0-cell position, used as a deterministic
    /// anchor for ordering classes.
    Pt anchor() const;
};

struct EnumerateOptions {
    bool parallel = true; // OpenMP kernel for the cell probes
};

/// The seven refined bitangent classes of a smooth generic quartic curve.
/// Throws ClassCountNotSeven when the count differs, and propagates
/// NonGenericCurve from the tangency analysis.
std::vector<BitangentClass> enumerate_classes(const TropicalCurve& curve,
                                              const EnumerateOptions& opts = {});

/// Flags of `cls` recomputed against the curve (the enumeration already
/// refines; this re-derives the on-curve data and is exposed for testing).
BitangentClass refine_shape(const BitangentClass& cls, const TropicalCurve& curve);

/// Transform a refined class by a symmetry of the plane; tangency carrier
/// ids are remapped from `curve` onto `curve_sigma`.
BitangentClass transform_class(const S3Element& sigma, const BitangentClass& cls,
                               const TropicalCurve& curve, const TropicalCurve& curve_sigma);

/// Canonical summary of one member's tangency combinatorics (types, ends,
/// multiplicities and the (4)/(6a) determinants).
std::string member_summary(const TropicalCurve& curve, const std::vector<TangencyDatum>& tds);

/// Exact membership test: does the point lie in the closed class?
bool class_contains(const BitangentClass& cls, const Pt& p);

} // namespace tropbt

#endif
