#include "ell3/grid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ell3/error.hpp"

namespace ell3 {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

bool hex_within(const GridCoord& vertex, int radius) {
  const int m = vertex.a / 3, n = vertex.b / 3;
  return std::abs(m) <= radius && std::abs(n) <= radius && std::abs(m + n) <= radius;
}

// Vertices of the unit triangle a centroid coordinate sits in.
std::array<GridCoord, 3> triangle_of(const GridCoord& c) {
  if (mod3(c.a) == 1) {
    GridCoord v{c.a - 1, c.b - 1};
    return {v, v + GridCoord{3, 0}, v + GridCoord{0, 3}};
  }
  GridCoord v{c.a - 2, c.b - 2};
  return {v + GridCoord{3, 0}, v + GridCoord{0, 3}, v + GridCoord{3, 3}};
}

}  // namespace

PlanePoint grid_point(const GridCoord& c, std::string label) {
  PlanePoint p;
  p.x = FieldScalar(Rational(2 * c.a + c.b, 6));
  p.y = FieldScalar(0, Rational(c.b, 6), 0, 0);
  p.label = std::move(label);
  return p;
}

std::optional<std::size_t> GridRegion::find(const GridCoord& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> GridRegion::labels() const {
  std::vector<std::string> out;
  for (const auto& p : points) out.push_back(p.label);
  return out;
}

GridRegion generate_grid(int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  GridRegion region;
  region.radius = radius;

  std::set<GridCoord> vertices;
  for (int m = -radius; m <= radius; ++m)
    for (int n = -radius; n <= radius; ++n)
      if (std::abs(m + n) <= radius) vertices.insert({3 * m, 3 * n});

  std::set<GridCoord> centroids;
  for (int m = -radius - 1; m <= radius; ++m) {
    for (int n = -radius - 1; n <= radius; ++n) {
      GridCoord v{3 * m, 3 * n};
      const bool right = vertices.count(v + GridCoord{3, 0});
      const bool up = vertices.count(v + GridCoord{0, 3});
      if (right && up && vertices.count(v)) centroids.insert(v + GridCoord{1, 1});
      if (right && up && vertices.count(v + GridCoord{3, 3})) centroids.insert(v + GridCoord{2, 2});
    }
  }

  // Vertices first, each group in row order.
  auto row_order = [](const GridCoord& x, const GridCoord& y) { return std::pair(x.b, x.a) < std::pair(y.b, y.a); };
  std::vector<GridCoord> vs(vertices.begin(), vertices.end());
  std::vector<GridCoord> cs(centroids.begin(), centroids.end());
  std::sort(vs.begin(), vs.end(), row_order);
  std::sort(cs.begin(), cs.end(), row_order);
  region.vertex_count = vs.size();
  region.coords = vs;
  region.coords.insert(region.coords.end(), cs.begin(), cs.end());
  for (std::size_t i = 0; i < region.coords.size(); ++i) {
    const auto& c = region.coords[i];
    region.points.push_back(grid_point(c, "g" + std::to_string(c.a) + "," + std::to_string(c.b)));
    region.index_.emplace(c, i);
  }
  return region;
}

std::vector<Constraint> grid_constraints(const GridRegion& region) {
  return enumerate_constraints(region.points, KindSet::all());
}

const std::array<GridCoord, 6>& circle_offsets() {
  static const std::array<GridCoord, 6> offsets = {
      GridCoord{4, 4}, GridCoord{-4, 8}, GridCoord{-8, 4}, GridCoord{-4, -4}, GridCoord{4, -8}, GridCoord{8, -4}};
  return offsets;
}

std::vector<std::size_t> interior_points(const GridRegion& region) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < region.coords.size(); ++i) {
    const auto& c = region.coords[i];
    if (std::all_of(circle_offsets().begin(), circle_offsets().end(),
                    [&](const GridCoord& v) { return region.find(c + v).has_value(); }))
      out.push_back(i);
  }
  return out;
}

Seed standard_seed(const GridRegion& region) {
  auto a0 = region.find({0, 0});
  auto b0 = region.find({3, 0});
  auto c0 = region.find({0, 3});
  if (!a0 || !b0 || !c0) throw std::invalid_argument("region too small for the seed triangle");
  return {{*a0, Color::Red}, {*b0, Color::Blue}, {*c0, Color::Blue}};
}

std::vector<std::vector<Color>> propagate_grid(const GridRegion& region, const Seed& seed) {
  auto constraints = grid_constraints(region);
  return propagate_grid(region, constraints, seed);
}

std::vector<std::vector<Color>> propagate_grid(const GridRegion& region, std::span<const Constraint> constraints,
                                               const Seed& seed) {
  if (seed.size() != 3) throw std::invalid_argument("grid seed must be one unit triangle");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (classify_pair(region.points.at(seed[i].first), region.points.at(seed[j].first)) != PairClass::Unit)
        throw std::invalid_argument("grid seed points are not a unit triangle");
  auto colorings = all_solutions(region.points.size(), constraints, seed);
  if (colorings.empty()) throw NoCompletion("no valid coloring of the radius-" + std::to_string(region.radius) + " region");
  return colorings;
}

bool check_monochromatic_circle(std::span<const Color> coloring, const GridRegion& region, std::size_t center) {
  const auto& c = region.coords.at(center);
  for (const auto& v : circle_offsets())
    if (!region.find(c + v))
      throw CenterTooCloseToBoundary("point " + region.points[center].label + " is not interior");
  static const Rational kRadiusSquared(16, 3);
  std::size_t on_circle = 0;
  for (std::size_t q = 0; q < region.points.size(); ++q) {
    if (!fs_eq_rational(sqdist(region.points[center], region.points[q]), kRadiusSquared)) continue;
    ++on_circle;
    if (coloring[q] != coloring[center]) return false;
  }
  return on_circle == circle_offsets().size();
}

GridCoord point_group_apply(std::size_t k, const GridCoord& c) {
  GridCoord r = c;
  for (std::size_t i = 0; i < k % 6; ++i) r = {-r.b, r.a + r.b};  // multiply by w
  if (k >= 6) r = {r.b, r.a};
  return r;
}

bool isometric_on(std::span<const Color> a, std::span<const Color> b, const GridRegion& region,
                  std::span<const std::size_t> subset) {
  for (std::size_t k = 0; k < kPointGroupOrder; ++k) {
    bool match = true;
    for (auto i : subset) {
      auto image = region.find(point_group_apply(k, region.coords[i]));
      if (!image) throw std::invalid_argument("subset is not invariant under the point group");
      if (a[i] != b[*image]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

std::vector<std::size_t> sub_region(const GridRegion& region, int radius) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < region.coords.size(); ++i) {
    const auto& c = region.coords[i];
    bool inside = mod3(c.a) == 0 ? hex_within(c, radius) : std::ranges::all_of(triangle_of(c), [&](const GridCoord& v) {
      return hex_within(v, radius);
    });
    if (inside) out.push_back(i);
  }
  return out;
}

GridReport verify_grid(int radius) {
  GridReport report;
  report.radius = radius;
  auto region = generate_grid(radius);
  auto constraints = grid_constraints(region);
  report.points = region.points.size();
  report.constraints = constraints.size();
  report.colorings = propagate_grid(region, constraints, standard_seed(region));
  report.completions = report.colorings.size();

  const auto interior = interior_points(region);
  report.interior = interior.size();

  std::set<std::vector<Color>> patterns;
  for (const auto& col : report.colorings) {
    std::vector<Color> p;
    for (auto i : interior) p.push_back(col[i]);
    patterns.insert(std::move(p));
  }
  report.distinct_interior_patterns = patterns.size();

  report.pairwise_isometric = true;
  for (std::size_t i = 0; i < report.colorings.size(); ++i)
    for (std::size_t j = i + 1; j < report.colorings.size(); ++j)
      report.pairwise_isometric &= isometric_on(report.colorings[i], report.colorings[j], region, interior);

  report.circle_property = !interior.empty();
  report.translation_invariant = !interior.empty();
  std::vector<char> is_interior(region.points.size(), 0);
  for (auto i : interior) is_interior[i] = 1;
  for (const auto& col : report.colorings) {
    for (auto i : interior) {
      report.circle_property &= check_monochromatic_circle(col, region, i);
      for (const auto& v : circle_offsets()) {
        auto j = region.find(region.coords[i] + v);
        if (j && is_interior[*j]) report.translation_invariant &= col[i] == col[*j];
      }
    }
  }
  return report;
}

}  // namespace ell3
