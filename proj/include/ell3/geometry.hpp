#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ell3/field.hpp"

namespace ell3 {

/// Integer coordinates [a,b,c,d] of the point ((a*sqrt3 + b*sqrt11)/12, (c + d*sqrt33)/12).
struct Quadruple {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
  friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

struct PlanePoint {
  FieldScalar x, y;
  std::string label;
  std::optional<Quadruple> quadruple;  // set when built from the integer form

  bool same_position(const PlanePoint& o) const { return x == o.x && y == o.y; }
};

PlanePoint point_from_quadruple(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                                std::string label = {});
inline PlanePoint point_from_quadruple(const Quadruple& q, std::string label = {}) {
  return point_from_quadruple(q.a, q.b, q.c, q.d, std::move(label));
}

FieldScalar sqdist(const PlanePoint& p, const PlanePoint& q);

/// Squared distance of two quadruple points is (u + v*sqrt33)/144 with
/// u = 3da^2 + 11db^2 + dc^2 + 33dd^2 and v = 2(da*db + dc*dd).
struct QuadrupleDistance {
  std::int64_t u = 0, v = 0;
  FieldScalar value() const;
};
QuadrupleDistance sqdist_closed_form(const Quadruple& p, const Quadruple& q);

enum class PairClass : std::uint8_t { Unit, Double, Other };

PairClass classify_sqdist(const FieldScalar& d2);
PairClass classify_pair(const PlanePoint& p, const PlanePoint& q);

PlanePoint midpoint(const PlanePoint& p, const PlanePoint& q);
PlanePoint centroid(const PlanePoint& p, const PlanePoint& q, const PlanePoint& r);

enum class ConstraintKind : std::uint8_t { Ell3, Eq1, Eq2, Centroid };

std::string_view to_string(ConstraintKind kind);
std::optional<ConstraintKind> parse_constraint_kind(std::string_view name);

/// Set of constraint kinds, as a bit mask over ConstraintKind.
class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(std::initializer_list<ConstraintKind> kinds) {
    for (auto k : kinds) bits_ |= bit(k);
  }
  static constexpr KindSet all() {
    return {ConstraintKind::Ell3, ConstraintKind::Eq1, ConstraintKind::Eq2, ConstraintKind::Centroid};
  }
  /// The kinds available inside the forced-chain proof: no centroid rule.
  static constexpr KindSet triples() {
    return {ConstraintKind::Ell3, ConstraintKind::Eq1, ConstraintKind::Eq2};
  }
  constexpr void insert(ConstraintKind k) { bits_ |= bit(k); }
  constexpr bool contains(ConstraintKind k) const { return (bits_ & bit(k)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  friend constexpr bool operator==(KindSet, KindSet) = default;

 private:
  static constexpr std::uint8_t bit(ConstraintKind k) { return std::uint8_t(1u << unsigned(k)); }
  std::uint8_t bits_ = 0;
};

/// Comma-separated kind names, e.g. "ell3,eq1,eq2".
std::string to_string(KindSet kinds);
/// Throws std::invalid_argument on an unknown or empty name.
KindSet parse_kind_set(std::string_view csv);

/// A forbidden configuration over point indices.
///
/// Member order is canonical: Ell3 stores (end, midpoint, end) with the ends
/// ascending; Eq1/Eq2 store ascending indices; Centroid stores the three
/// triangle vertices ascending followed by the centroid.
struct Constraint {
  ConstraintKind kind = ConstraintKind::Eq1;
  std::array<std::size_t, 4> members{};

  std::size_t size() const { return kind == ConstraintKind::Centroid ? 4 : 3; }
  std::span<const std::size_t> points() const { return {members.data(), size()}; }
  bool contains(std::size_t p) const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
  friend auto operator<=>(const Constraint&, const Constraint&) = default;
};

/// All constraints of the requested kinds in `points`, sorted canonically
/// (kind, then members). Throws DuplicatePoint if two points coincide.
///
/// Ell3 is recognised by the distance multiset {1, 1, 4}; the middle point
/// is then checked to be the exact midpoint and a violation throws
/// std::logic_error. Centroid constraints come from Eq1 triangles whose exact
/// centroid is one of the points.
std::vector<Constraint> enumerate_constraints(std::span<const PlanePoint> points,
                                              KindSet kinds = KindSet::all());

}  // namespace ell3
