#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ell3/datasets.hpp"
#include "ell3/field.hpp"
#include "ell3/geometry.hpp"
#include "ell3/solver.hpp"

namespace ell3::test {

inline Rational random_rational(std::mt19937_64& rng, int range = 20) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 6);
  return Rational(num(rng), den(rng));
}

inline FieldScalar random_scalar(std::mt19937_64& rng, int range = 20) {
  return {random_rational(rng, range), random_rational(rng, range), random_rational(rng, range),
          random_rational(rng, range)};
}

inline std::vector<std::size_t> random_subset(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(std::min(k, n));
  std::sort(idx.begin(), idx.end());
  return idx;
}

/// Up to `k` indices grown along `constraints`: start from one constraint and
/// keep adding the remaining members of a constraint that already has two
/// chosen members. Produces tightly constrained subsets.
inline std::vector<std::size_t> dense_subset(std::mt19937_64& rng, std::span<const Constraint> constraints,
                                             std::size_t k) {
  std::vector<std::size_t> chosen;
  if (constraints.empty() || k == 0) return chosen;
  auto has = [&](std::size_t p) { return std::find(chosen.begin(), chosen.end(), p) != chosen.end(); };
  auto add = [&](const Constraint& c) {
    for (auto p : c.points())
      if (!has(p) && chosen.size() < k) chosen.push_back(p);
  };
  add(constraints[rng() % constraints.size()]);
  for (;;) {
    std::vector<std::size_t> frontier;
    for (std::size_t id = 0; id < constraints.size(); ++id) {
      auto pts = constraints[id].points();
      const auto in = std::count_if(pts.begin(), pts.end(), has);
      if (in >= 2 && in < static_cast<long>(pts.size())) frontier.push_back(id);
    }
    if (frontier.empty() || chosen.size() >= k) break;
    add(constraints[frontier[rng() % frontier.size()]]);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

inline std::vector<PlanePoint> pick(const std::vector<PlanePoint>& pts, const std::vector<std::size_t>& idx) {
  std::vector<PlanePoint> out;
  for (auto i : idx) out.push_back(pts[i]);
  return out;
}

inline Seed random_seed(std::mt19937_64& rng, std::size_t n, std::size_t max_points) {
  Seed seed;
  if (n == 0) return seed;
  std::uniform_int_distribution<std::size_t> count(0, std::min(max_points, n));
  for (auto p : random_subset(rng, n, count(rng))) seed.emplace_back(p, rng() & 1 ? Color::Red : Color::Blue);
  return seed;
}

inline Seed swapped(const Seed& seed) {
  Seed out;
  for (auto [p, c] : seed) out.emplace_back(p, opposite(c));
  return out;
}

inline const PointSetFile& fig1_points() {
  static const PointSetFile pts = bundled("fig1").points;
  return pts;
}

}  // namespace ell3::test
