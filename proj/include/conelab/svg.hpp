#pragma once

#include "conelab/tiling.hpp"

#include <string>

namespace conelab {

// Byte-deterministic SVG of the acted-on cone, its boundary rays, the
// fundamental domain (highlighted) and every translate as a wedge of the
// unit-disk section. The only place in the project where floats appear.
std::string render_tiling_svg(const TilingReport& report, const Cone2& c);

}  // namespace conelab
