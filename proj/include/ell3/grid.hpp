#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ell3/color.hpp"
#include "ell3/geometry.hpp"
#include "ell3/solver.hpp"

namespace ell3 {

/// Point of the 1/sqrt3-scaled triangular grid in integer coordinates (a, b),
/// meaning (a + b*w)/3 with w = (1/2, sqrt3/2). Unit-lattice vertices have
/// a, b both divisible by 3; centroids of up and down unit triangles are the
/// vertices shifted by (1, 1) and (2, 2).
struct GridCoord {
  int a = 0, b = 0;
  friend bool operator==(const GridCoord&, const GridCoord&) = default;
  friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
  GridCoord operator+(const GridCoord& o) const { return {a + o.a, b + o.b}; }
};

/// a^2 + ab + b^2: nine times the squared Euclidean length.
inline int norm9(const GridCoord& c) { return c.a * c.a + c.a * c.b + c.b * c.b; }

PlanePoint grid_point(const GridCoord& c, std::string label = {});

/// Lattice vertices m + n*w with |m|, |n|, |m + n| <= radius, plus the
/// centroids of every unit triangle among them.
struct GridRegion {
  int radius = 0;
  std::vector<GridCoord> coords;
  std::vector<PlanePoint> points;
  std::size_t vertex_count = 0;

  std::optional<std::size_t> find(const GridCoord& c) const;
  std::vector<std::string> labels() const;

 private:
  friend GridRegion generate_grid(int radius);
  std::map<GridCoord, std::size_t> index_;
};

GridRegion generate_grid(int radius);

/// Ell3, Eq1, Eq2 and Centroid constraints within the region.
std::vector<Constraint> grid_constraints(const GridRegion& region);

/// The six grid vectors of length 4/sqrt3 (squared length 16/3).
const std::array<GridCoord, 6>& circle_offsets();

/// Points whose six neighbours at distance 4/sqrt3 all lie in the region.
std::vector<std::size_t> interior_points(const GridRegion& region);

/// Red origin, blue (1, 0) and blue (1/2, sqrt3/2).
Seed standard_seed(const GridRegion& region);

/// Every valid coloring of the region extending a seeded unit triangle.
/// Throws std::invalid_argument unless the seed is three points at mutual
/// distance 1, SeedConflict if it is monochromatic, NoCompletion if nothing
/// extends it.
std::vector<std::vector<Color>> propagate_grid(const GridRegion& region, const Seed& seed);
std::vector<std::vector<Color>> propagate_grid(const GridRegion& region, std::span<const Constraint> constraints,
                                               const Seed& seed);

/// Whether every region point at squared distance 16/3 from `center` shares its
/// color. Throws CenterTooCloseToBoundary unless `center` is interior.
bool check_monochromatic_circle(std::span<const Color> coloring, const GridRegion& region, std::size_t center);

/// Element `k` (0..11) of the lattice symmetries fixing the origin: rotation
/// by k*60 degrees for k < 6, followed by the reflection (a, b) -> (b, a) for
/// k >= 6.
GridCoord point_group_apply(std::size_t k, const GridCoord& c);
inline constexpr std::size_t kPointGroupOrder = 12;

/// Whether some lattice symmetry fixing the origin carries the coloring of
/// `subset` under `a` onto that under `b`. `subset` must be invariant under the
/// point group (interior sets and hexagonal sub-regions are).
bool isometric_on(std::span<const Color> a, std::span<const Color> b, const GridRegion& region,
                  std::span<const std::size_t> subset);

/// Indices of the hexagonal sub-region of the given radius (vertices and
/// centroids), e.g. radius 1 gives the 13 points around the origin.
std::vector<std::size_t> sub_region(const GridRegion& region, int radius);

struct GridReport {
  int radius = 0;
  std::size_t points = 0;
  std::size_t constraints = 0;
  std::size_t completions = 0;
  std::size_t interior = 0;
  std::size_t distinct_interior_patterns = 0;
  bool pairwise_isometric = false;
  bool circle_property = false;       // every interior point, every completion
  bool translation_invariant = false; // color(p) == color(p + v) on the interior
  std::vector<std::vector<Color>> colorings;
};

/// Full verification on `generate_grid(radius)` with the standard seed.
GridReport verify_grid(int radius);

}  // namespace ell3
