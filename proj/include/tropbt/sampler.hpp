#ifndef TROPBT_SAMPLER_HPP
#define TROPBT_SAMPLER_HPP

#include "tropbt/quartic.hpp"

#include <random>

namespace tropbt {

/// Random smooth quartic: integer heights in a window that grows with the
/// attempt count, normalized so the corner heights vanish, rejection-sampled
/// until the subdivision is unimodular. Signs are uniform.
QuarticSpec random_smooth_quartic(std::mt19937_64& rng, int* attempts = nullptr);

} // namespace tropbt

#endif
