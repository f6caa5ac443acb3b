#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ell3/color.hpp"
#include "ell3/geometry.hpp"

namespace ell3 {

enum class ReasonKind : std::uint8_t { Seed, Decision, Forced };

struct Reason {
  ReasonKind kind = ReasonKind::Seed;
  std::size_t constraint = 0;  // meaningful for Forced only

  static Reason seed() { return {ReasonKind::Seed, 0}; }
  static Reason decision() { return {ReasonKind::Decision, 0}; }
  static Reason forced(std::size_t id) { return {ReasonKind::Forced, id}; }
  friend bool operator==(const Reason&, const Reason&) = default;
};

struct TrailStep {
  std::size_t point = 0;
  Color color = Color::Red;
  Reason reason;
  friend bool operator==(const TrailStep&, const TrailStep&) = default;
};

/// A point that the current colors exclude from both colors. `forced_red_by`
/// is the lowest-id constraint ruling out blue, `forced_blue_by` the lowest
/// ruling out red; they coincide when one constraint rules out both.
struct Conflict {
  std::size_t point = 0;
  std::size_t forced_red_by = 0;
  std::size_t forced_blue_by = 0;
  friend bool operator==(const Conflict&, const Conflict&) = default;
};

class PartialColoring {
 public:
  explicit PartialColoring(std::size_t n) : colors_(n) {}

  std::size_t size() const { return colors_.size(); }
  std::optional<Color> color(std::size_t i) const { return colors_[i]; }
  bool is_set(std::size_t i) const { return colors_[i].has_value(); }
  bool complete() const { return assigned_ == colors_.size(); }

  /// Appends to the trail. The point must be unset.
  void assign(std::size_t point, Color c, Reason reason);
  /// Retract trail entries until `trail_length` remain.
  void undo_to(std::size_t trail_length);

  const std::vector<TrailStep>& trail() const { return trail_; }
  const std::vector<std::optional<Color>>& colors() const { return colors_; }
  /// Total coloring; the state must be complete.
  std::vector<Color> to_total() const;

 private:
  std::vector<std::optional<Color>> colors_;
  std::vector<TrailStep> trail_;
  std::size_t assigned_ = 0;
};

/// True iff the fully colored constraint is respected: triples are not
/// monochromatic; a centroid has the majority color of its triangle.
bool constraint_holds(const Constraint& c, std::span<const Color> member_colors);

/// Colors the sole unset member `p` of `c` may take; bit 0 red, bit 1 blue.
/// Returns 3 (no restriction) unless every other member of `c` is colored.
std::uint8_t allowed_colors(const Constraint& c, std::size_t p, const PartialColoring& state);

/// Forced-move propagation to a fixpoint.
///
/// A constraint whose only unset member admits exactly one color forces it.
/// Constraints are examined in ascending id order from a work set, so the
/// resulting trail is a deterministic function of the input.
class Propagator {
 public:
  Propagator(std::size_t num_points, std::span<const Constraint> constraints);

  /// Examine every constraint.
  std::optional<Conflict> propagate_all(PartialColoring& state) const;
  /// Examine the constraints touching `point` (after it was just colored).
  std::optional<Conflict> propagate_from(PartialColoring& state, std::size_t point) const;

  const std::vector<std::size_t>& occurrences(std::size_t point) const { return occ_[point]; }
  std::span<const Constraint> constraints() const { return constraints_; }

 private:
  template <class Queue>
  std::optional<Conflict> run(PartialColoring& state, Queue& queue) const;

  std::span<const Constraint> constraints_;
  std::vector<std::vector<std::size_t>> occ_;
};

/// Propagate over all constraints; nullopt means a fixpoint was reached.
std::optional<Conflict> propagate(PartialColoring& state, std::span<const Constraint> constraints);

/// Retract `trail_length` trail entries: used to mark refuted subtrees.
struct Backtrack {
  std::size_t trail_length = 0;
  friend bool operator==(const Backtrack&, const Backtrack&) = default;
};

using CertificateEvent = std::variant<TrailStep, Conflict, Backtrack>;

enum class Outcome : std::uint8_t { Sat, Unsat };

/// Depth-first record of a search. Steps extend the trail; every Conflict
/// closes a refuted leaf and is followed by a Backtrack to just before the
/// most recent decision still on its first (red) branch, after which the same
/// point is decided blue. An Unsat certificate ends with its last Conflict; a
/// Sat certificate ends with a complete trail.
struct DerivationCertificate {
  Outcome outcome = Outcome::Sat;
  std::vector<CertificateEvent> events;
  std::vector<Color> coloring;  // Sat only
};

/// Decide whether `seed` extends to a coloring violating no constraint.
///
/// Branches on the lowest-index unset point occurring in the most constraints
/// with exactly one colored member, red first. Throws SeedConflict if the seed
/// alone violates a constraint or colors a point twice differently.
DerivationCertificate solve(std::size_t num_points, std::span<const Constraint> constraints,
                            const Seed& seed);

/// Every total valid coloring extending `seed`, in search order. Throws
/// TooLarge once more than `limit` are found.
std::vector<std::vector<Color>> all_solutions(std::size_t num_points, std::span<const Constraint> constraints,
                                              const Seed& seed, std::size_t limit = 4096);

/// Exhaustive enumeration over the unseeded points; independent of the
/// propagator. Throws TooLarge for more than 25 unseeded points.
bool brute_force(std::size_t num_points, std::span<const Constraint> constraints, const Seed& seed);

/// Ids of the constraints the total coloring violates.
std::vector<std::size_t> verify_coloring(std::span<const Color> coloring, std::span<const Constraint> constraints);

}  // namespace ell3
