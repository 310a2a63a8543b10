#ifndef TROPBT_SVG_HPP
#define TROPBT_SVG_HPP

#include "tropbt/pipeline.hpp"

#include <string>
#include <vector>

namespace tropbt {

/// SVG 1.1 picture of the curve with its bitangent classes: off-curve cells
/// black/gray, on-curve cells red, curve-vertex members unfilled, weights
/// annotated, unbounded cells clipped with an arrowhead in the recession
/// direction.
std::string render_svg(const TropicalCurve& curve, const std::vector<ClassResult>& classes);

} // namespace tropbt

#endif
