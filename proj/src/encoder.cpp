#include "ell3/encoder.hpp"

#include <cstdint>
#include <cstdlib>
#include <sstream>

#include "ell3/error.hpp"

namespace ell3 {

namespace {

int var(std::size_t point) { return static_cast<int>(point) + 1; }

}  // namespace

CnfInstance encode(std::size_t num_points, std::span<const Constraint> constraints, const Seed& seed) {
  CnfInstance cnf;
  cnf.variables = num_points;
  for (const auto& c : constraints) {
    const auto& m = c.members;
    if (c.kind != ConstraintKind::Centroid) {
      const int x = var(m[0]), y = var(m[1]), z = var(m[2]);
      cnf.clauses.push_back({x, y, z});
      cnf.clauses.push_back({-x, -y, -z});
      continue;
    }
    const int g = var(m[3]);
    const int v[3] = {var(m[0]), var(m[1]), var(m[2])};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) cnf.clauses.push_back({-v[i], -v[j], g});
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) cnf.clauses.push_back({v[i], v[j], -g});
  }
  for (const auto& [p, color] : seed) cnf.clauses.push_back({color == Color::Red ? var(p) : -var(p)});
  return cnf;
}

std::string to_dimacs(const CnfInstance& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.variables << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string to_dimacs(std::span<const PlanePoint> points, std::span<const Constraint> constraints,
                      const Seed& seed) {
  std::ostringstream out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << "c point " << var(i) << ' ' << (points[i].label.empty() ? "pt" + std::to_string(i + 1) : points[i].label);
    if (const auto& q = points[i].quadruple) out << ' ' << q->a << ' ' << q->b << ' ' << q->c << ' ' << q->d;
    out << '\n';
  }
  out << to_dimacs(encode(points.size(), constraints, seed));
  return out.str();
}

CnfInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0, declared = 0;
  bool header = false;
  CnfInstance cnf;
  std::vector<int> current;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c") continue;
    if (first == "p") {
      std::string fmt;
      long long v = -1, c = -1;
      if (header || !(ls >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0)
        throw SyntaxError(lineno, "bad header");
      cnf.variables = std::size_t(v);
      declared = std::size_t(c);
      header = true;
      continue;
    }
    if (!header) throw SyntaxError(lineno, "clause before header");
    std::istringstream body(line);
    long long lit;
    while (body >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::size_t(lit < 0 ? -lit : lit) > cnf.variables) throw SyntaxError(lineno, "literal out of range");
      current.push_back(int(lit));
    }
    if (!body.eof()) throw SyntaxError(lineno, "bad literal");
  }
  if (!header) throw SyntaxError(lineno, "missing header");
  if (!current.empty()) throw SyntaxError(lineno, "unterminated clause");
  if (cnf.clauses.size() != declared) throw SyntaxError(lineno, "clause count differs from header");
  return cnf;
}

bool cnf_satisfiable(const CnfInstance& cnf) {
  if (cnf.variables > 20) throw TooLarge("cnf enumeration limited to 20 variables");
  const std::uint64_t total = std::uint64_t(1) << cnf.variables;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    bool ok = true;
    for (const auto& clause : cnf.clauses) {
      bool sat = false;
      for (int lit : clause) {
        const bool value = (bits >> (std::abs(lit) - 1)) & 1;
        if (value == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool cnf_selfcheck(std::span<const PlanePoint> points, std::span<const Constraint> constraints, const Seed& seed) {
  if (points.size() > 15) throw TooLarge("cnf self-check limited to 15 points");
  const auto cnf = parse_dimacs(to_dimacs(points, constraints, seed));
  return cnf_satisfiable(cnf) == brute_force(points.size(), constraints, seed);
}

}  // namespace ell3
