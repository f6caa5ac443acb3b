#pragma once

#include <optional>
#include <span>
#include <string>

#include "ell3/color.hpp"
#include "ell3/geometry.hpp"

namespace ell3 {

struct SvgOptions {
  double scale = 80.0;     // pixels per unit length
  bool unit_edges = true;  // light segments between points at distance 1
  bool labels = true;
  std::string title;
};

/// Deterministic SVG drawing. Red points are filled, blue points hollow,
/// uncolored points small grey dots. `coloring` may be empty.
std::string render_svg(std::span<const PlanePoint> points, std::span<const std::optional<Color>> coloring,
                       const SvgOptions& options = {});

}  // namespace ell3
