#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace ell3 {

enum class Color : std::uint8_t { Red, Blue };

constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

constexpr std::string_view to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

constexpr std::optional<Color> parse_color(std::string_view s) {
  if (s == "red") return Color::Red;
  if (s == "blue") return Color::Blue;
  return std::nullopt;
}

/// Seed coloring as (point index, color) pairs.
using Seed = std::vector<std::pair<std::size_t, Color>>;

}  // namespace ell3
