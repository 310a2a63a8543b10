#ifndef TROPBT_CATALOG_HPP
#define TROPBT_CATALOG_HPP

#include "tropbt/classes.hpp"
#include "tropbt/signature.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tropbt {

/// One of the 41 shape catalog entries, transcribed as data.
struct CatalogEntry {
    std::string label;            // (A) ... (II), primes spelled L', T'' etc.
    std::string condition;        // real-lifting condition template id
    std::vector<long> weights;    // complex weights of the 0-cells, descending
    std::string signature;        // canonical representative signature
};

class ShapeCatalog {
  public:
    static ShapeCatalog load_file(const std::string& path);
    /// The catalog shipped with the library (data/shape_catalog.txt).
    static const ShapeCatalog& builtin();

    const CatalogEntry* by_signature(const std::string& sig) const;
    const CatalogEntry* by_label(const std::string& label) const;
    const std::vector<CatalogEntry>& entries() const { return entries_; }

    void add(CatalogEntry e) { entries_.push_back(std::move(e)); }

  private:
    std::vector<CatalogEntry> entries_;
};

/// Weight multiset of a catalog shape; the sum is 4 for every label.
std::vector<long> weights(const std::string& label, const ShapeCatalog& cat = ShapeCatalog::builtin());

/// All six transformed copies of the input data, used to canonicalize
/// classes and evaluate sign conditions in representative position.
struct S3Context {
    QuarticSpec spec;
    std::array<QuarticSpec, 6> spec_t;
    std::array<DualSubdivision, 6> sub_t;
    std::array<TropicalCurve, 6> curve_t;

    static S3Context make(const QuarticSpec& spec);
    const TropicalCurve& curve() const { return curve_t[0]; }
    const DualSubdivision& sub() const { return sub_t[0]; }
};

struct Canonicalized {
    std::string label;
    S3Element sigma;               // maps the class onto the representative
    BitangentClass rep_class;      // the transformed class
    ShapeSignature rep_signature;
};

/// Match a refined class against the catalog under all six symmetries;
/// ties are broken by the fixed word order id < t0 < t1 < t0t1 < t1t0 <
/// t0t1t0. Throws UnrecognizedShape when nothing matches.
Canonicalized canonicalize(const BitangentClass& refined, const S3Context& ctx,
                           const ShapeCatalog& cat = ShapeCatalog::builtin());

} // namespace tropbt

#endif
