#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ell3/geometry.hpp"
#include "ell3/solver.hpp"

namespace ell3 {

/// Point i is variable i + 1; a positive literal means red.
struct CnfInstance {
  std::size_t variables = 0;
  std::vector<std::vector<int>> clauses;

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;
};

/// Clauses in constraint order, then one unit clause per seed entry.
///
/// Ell3/Eq1/Eq2 give `x y z` and `-x -y -z`. Centroid gives the six clauses of
/// "centroid equals the majority color of the vertices".
CnfInstance encode(std::size_t num_points, std::span<const Constraint> constraints, const Seed& seed);

/// DIMACS text with one `c point` comment per point before the header.
std::string to_dimacs(std::span<const PlanePoint> points, std::span<const Constraint> constraints,
                      const Seed& seed);
std::string to_dimacs(const CnfInstance& cnf);

/// Comments are skipped; throws SyntaxError on malformed input or when the
/// body disagrees with the header counts.
CnfInstance parse_dimacs(std::string_view text);

/// Exhaustive assignment enumeration. Throws TooLarge above 20 variables.
bool cnf_satisfiable(const CnfInstance& cnf);

/// Whether the emitted CNF, read back from text, is satisfiable exactly when
/// brute_force finds a coloring. Throws TooLarge above 15 points.
bool cnf_selfcheck(std::span<const PlanePoint> points, std::span<const Constraint> constraints, const Seed& seed);

}  // namespace ell3
