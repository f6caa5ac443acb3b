#include "ell3/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ell3/error.hpp"

namespace ell3 {

PlanePoint point_from_quadruple(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                                std::string label) {
  // mpq_class has no int64 constructor on every platform; go through long.
  const Rational twelfth(1, 12);
  PlanePoint p;
  p.x = FieldScalar(0, Rational(static_cast<long>(a)) * twelfth,
                    Rational(static_cast<long>(b)) * twelfth, 0);
  p.y = FieldScalar(Rational(static_cast<long>(c)) * twelfth, 0, 0,
                    Rational(static_cast<long>(d)) * twelfth);
  p.label = std::move(label);
  p.quadruple = Quadruple{a, b, c, d};
  return p;
}

FieldScalar sqdist(const PlanePoint& p, const PlanePoint& q) {
  FieldScalar dx = p.x - q.x;
  FieldScalar dy = p.y - q.y;
  return dx * dx + dy * dy;
}

FieldScalar QuadrupleDistance::value() const {
  return FieldScalar(Rational(static_cast<long>(u), 144), 0, 0, Rational(static_cast<long>(v), 144));
}

QuadrupleDistance sqdist_closed_form(const Quadruple& p, const Quadruple& q) {
  const std::int64_t da = p.a - q.a, db = p.b - q.b, dc = p.c - q.c, dd = p.d - q.d;
  return {3 * da * da + 11 * db * db + dc * dc + 33 * dd * dd, 2 * (da * db + dc * dd)};
}

PairClass classify_sqdist(const FieldScalar& d2) {
  if (fs_eq_rational(d2, 1)) return PairClass::Unit;
  if (fs_eq_rational(d2, 4)) return PairClass::Double;
  return PairClass::Other;
}

PairClass classify_pair(const PlanePoint& p, const PlanePoint& q) {
  return classify_sqdist(sqdist(p, q));
}

PlanePoint midpoint(const PlanePoint& p, const PlanePoint& q) {
  PlanePoint m;
  m.x = (p.x + q.x) / 2;
  m.y = (p.y + q.y) / 2;
  if (p.quadruple && q.quadruple) {
    const auto& s = *p.quadruple;
    const auto& t = *q.quadruple;
    if ((s.a + t.a) % 2 == 0 && (s.b + t.b) % 2 == 0 && (s.c + t.c) % 2 == 0 && (s.d + t.d) % 2 == 0)
      m.quadruple = Quadruple{(s.a + t.a) / 2, (s.b + t.b) / 2, (s.c + t.c) / 2, (s.d + t.d) / 2};
  }
  return m;
}

PlanePoint centroid(const PlanePoint& p, const PlanePoint& q, const PlanePoint& r) {
  PlanePoint c;
  c.x = (p.x + q.x + r.x) / 3;
  c.y = (p.y + q.y + r.y) / 3;
  if (p.quadruple && q.quadruple && r.quadruple) {
    const auto& s = *p.quadruple;
    const auto& t = *q.quadruple;
    const auto& u = *r.quadruple;
    Quadruple sum{s.a + t.a + u.a, s.b + t.b + u.b, s.c + t.c + u.c, s.d + t.d + u.d};
    if (sum.a % 3 == 0 && sum.b % 3 == 0 && sum.c % 3 == 0 && sum.d % 3 == 0)
      c.quadruple = Quadruple{sum.a / 3, sum.b / 3, sum.c / 3, sum.d / 3};
  }
  return c;
}

std::string_view to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::Ell3: return "ell3";
    case ConstraintKind::Eq1: return "eq1";
    case ConstraintKind::Eq2: return "eq2";
    case ConstraintKind::Centroid: return "centroid";
  }
  return "?";
}

std::optional<ConstraintKind> parse_constraint_kind(std::string_view name) {
  for (auto k : {ConstraintKind::Ell3, ConstraintKind::Eq1, ConstraintKind::Eq2, ConstraintKind::Centroid})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::string to_string(KindSet kinds) {
  std::string out;
  for (auto k : {ConstraintKind::Ell3, ConstraintKind::Eq1, ConstraintKind::Eq2, ConstraintKind::Centroid})
    if (kinds.contains(k)) out += (out.empty() ? "" : ",") + std::string(to_string(k));
  return out;
}

KindSet parse_kind_set(std::string_view csv) {
  KindSet set;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = std::min(csv.find(',', start), csv.size());
    auto name = csv.substr(start, end - start);
    auto k = parse_constraint_kind(name);
    if (!k) throw std::invalid_argument("unknown constraint kind '" + std::string(name) + "'");
    set.insert(*k);
    start = end + 1;
  }
  return set;
}

bool Constraint::contains(std::size_t p) const {
  auto pts = points();
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

namespace {

using PositionKey = std::pair<FieldScalar, FieldScalar>;

struct PositionLess {
  bool operator()(const PositionKey& a, const PositionKey& b) const {
    if (auto c = lex_compare(a.first, b.first); c != 0) return c < 0;
    return lex_compare(a.second, b.second) < 0;
  }
};

}  // namespace

std::vector<Constraint> enumerate_constraints(std::span<const PlanePoint> points, KindSet kinds) {
  const std::size_t n = points.size();

  std::map<PositionKey, std::size_t, PositionLess> index;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = index.emplace(PositionKey{points[i].x, points[i].y}, i);
    if (!inserted) {
      throw DuplicatePoint("points " + std::to_string(it->second) + " and " + std::to_string(i) +
                           " coincide");
    }
  }

  std::vector<PairClass> table(n * n, PairClass::Other);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PairClass c = classify_pair(points[i], points[j]);
      table[i * n + j] = c;
      table[j * n + i] = c;
    }
  }
  auto cls = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

  std::vector<Constraint> out;
  const bool want_centroid = kinds.contains(ConstraintKind::Centroid);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairClass ij = cls(i, j);
      if (ij == PairClass::Other) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        const PairClass ik = cls(i, k);
        const PairClass jk = cls(j, k);
        if (ik == PairClass::Other || jk == PairClass::Other) continue;
        int units = (ij == PairClass::Unit) + (ik == PairClass::Unit) + (jk == PairClass::Unit);
        if (units == 3) {
          if (kinds.contains(ConstraintKind::Eq1)) out.push_back({ConstraintKind::Eq1, {i, j, k, 0}});
          if (want_centroid) {
            PlanePoint c = centroid(points[i], points[j], points[k]);
            if (auto it = index.find({c.x, c.y}); it != index.end())
              out.push_back({ConstraintKind::Centroid, {i, j, k, it->second}});
          }
        } else if (units == 0) {
          if (kinds.contains(ConstraintKind::Eq2)) out.push_back({ConstraintKind::Eq2, {i, j, k, 0}});
        } else if (units == 2) {
          // The pair at distance 2 are the ends; the remaining point is the middle.
          std::size_t mid, lo, hi;
          if (ij == PairClass::Double) {
            mid = k, lo = i, hi = j;
          } else if (ik == PairClass::Double) {
            mid = j, lo = i, hi = k;
          } else {
            mid = i, lo = j, hi = k;
          }
          if (!midpoint(points[lo], points[hi]).same_position(points[mid]))
            throw std::logic_error("distances {1,1,2} without an exact midpoint");
          if (kinds.contains(ConstraintKind::Ell3)) out.push_back({ConstraintKind::Ell3, {lo, mid, hi, 0}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ell3
