#pragma once

#include <string>

#include "tropdual/subdivision.hpp"

namespace tropdual {

/// SVG 1.1 picture of the Newton polytope with its induced subdivision and,
/// for two variables, the dual tropical curve beside it. Polytope at 64 px
/// per lattice unit; curve viewport fitted to its vertices plus 2 units.
/// Throws UnsupportedShape for three or more variables.
[[nodiscard]] std::string render_svg(const TropPolynomial& f, SignConvention sign = SignConvention::examples);

}  // namespace tropdual
