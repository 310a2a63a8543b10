#ifndef TROPBT_QUARTIC_HPP
#define TROPBT_QUARTIC_HPP

#include "tropbt/geometry.hpp"
#include "tropbt/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace tropbt {

/// Lattice point of the side-4 simplex.
struct LPt {
    int i = 0;
    int j = 0;
    friend bool operator==(const LPt&, const LPt&) = default;
    friend auto operator<=>(const LPt&, const LPt&) = default;
};

inline bool in_simplex4(LPt p) { return p.i >= 0 && p.j >= 0 && p.i + p.j <= 4; }
std::string to_string(LPt p);

/// One quartic coefficient a_ij over the real valued field, reduced to the
/// data the pipeline needs: its valuation, and the sign and magnitude of its
/// initial form.
struct CoeffEntry {
    LPt p;
    Rat val;
    int sign = +1;   // sign of the initial form, +1 or -1
    Rat lead = 1;    // positive magnitude of the initial form
};

/// All 15 coefficients of a quartic with full Newton polytope.
class QuarticSpec {
  public:
    QuarticSpec() = default;
    explicit QuarticSpec(std::array<CoeffEntry, 15> entries);

    const CoeffEntry& at(LPt p) const;
    const std::array<CoeffEntry, 15>& entries() const { return entries_; }

    const Rat& val(LPt p) const { return at(p).val; }
    int sign(LPt p) const { return at(p).sign; }
    const Rat& lead(LPt p) const { return at(p).lead; }
    /// Signed initial form sign * lead.
    Rat initial(LPt p) const { return Rat(sign(p)) * lead(p); }

    QuarticSpec with_sign(LPt p, int sign) const;

    /// All 15 lattice points in a fixed (i, then j) order.
    static const std::array<LPt, 15>& support();

  private:
    std::array<CoeffEntry, 15> entries_; // indexed per support() order
};

/// Parse the coefficient document format: one record per line, fields
/// i=, j=, val=, sign=, lead= in any order; '#' starts a comment.
QuarticSpec parse_spec(const std::string& text);

/// Element of the S3 symmetry group generated by t0 (x<->y) and t1 (x<->z),
/// acting on lattice points, on coefficient tables, and on the tropical
/// plane. Words multiply as function composition: (a*b)(x) = a(b(x)).
class S3Element {
  public:
    static S3Element identity() { return S3Element(0); }
    static S3Element t0() { return S3Element(1); }
    static S3Element t1() { return S3Element(2); }
    /// Parse a word such as "id", "t0t1", "t0*t1*t0".
    static S3Element from_word(const std::string& word);
    static const std::array<S3Element, 6>& all();

    S3Element() : idx_(0) {}

    S3Element operator*(const S3Element& o) const; // composition, this after o
    S3Element inverse() const;
    bool operator==(const S3Element&) const = default;
    bool operator<(const S3Element& o) const { return idx_ < o.idx_; }

    /// Canonical word over {id, t0, t1}, listing generators in application
    /// order ("t1t0" applies t1 first). The canonicalization tie-break order
    /// is id < t0 < t1 < t0t1 < t1t0 < t0t1t0 on these words.
    const std::string& word() const;
    int index() const { return idx_; }

    LPt lattice(LPt p) const;
    Pt plane(const Pt& v) const;
    IVec plane_dir(const IVec& d) const; // linear part only

  private:
    explicit S3Element(int idx) : idx_(idx) {}
    int idx_;
};

LPt apply_s3_lattice(const S3Element& sigma, LPt p);
Pt apply_s3_plane(const S3Element& sigma, const Pt& v);

/// Sign table keyed by lattice point.
using SignTable = std::map<LPt, int>;

SignTable signs_of(const QuarticSpec& spec);
/// s'[p] = s[sigma^{-1}(p)], the table of the transformed quartic.
SignTable apply_s3_signs(const S3Element& sigma, const SignTable& s);

/// The quartic q^sigma obtained from the projective substitution; its
/// tropical curve is the sigma-image of the original curve.
QuarticSpec transform_spec(const S3Element& sigma, const QuarticSpec& spec);

} // namespace tropbt

#endif
