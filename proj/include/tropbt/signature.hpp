#ifndef TROPBT_SIGNATURE_HPP
#define TROPBT_SIGNATURE_HPP

#include "tropbt/classes.hpp"

#include <string>

namespace tropbt {

/// Translation-invariant, metric-free encoding of a refined bitangent class:
/// per-cell combinatorial data (dimension, boundedness, curve flags, slopes,
/// recession directions, tangency summaries) plus the face-incidence
/// relation, serialized deterministically. Two classes with the same local
/// combinatorics produce identical signatures.
struct ShapeSignature {
    std::string text;
    bool operator==(const ShapeSignature&) const = default;
};

ShapeSignature signature(const BitangentClass& refined, const TropicalCurve& curve);

} // namespace tropbt

#endif
