#ifndef TROPBT_RATIONAL_HPP
#define TROPBT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace tropbt {

/// Exact rational scalar used everywhere in the geometry pipeline.
using Rat = mpq_class;

/// Parse "p", "-p", or "p/q" (q > 0 after normalization). Throws
/// errc::malformed_rational on anything else.
Rat parse_rational(const std::string& text);

/// Serialize canonically: integer as "p", otherwise "p/q" with q > 0.
std::string to_string(const Rat& q);

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

} // namespace tropbt

#endif
