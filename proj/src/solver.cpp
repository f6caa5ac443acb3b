#include "ell3/solver.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "ell3/error.hpp"

namespace ell3 {

void PartialColoring::assign(std::size_t point, Color c, Reason reason) {
  if (colors_.at(point)) throw std::logic_error("point " + std::to_string(point) + " already colored");
  colors_[point] = c;
  trail_.push_back({point, c, reason});
  ++assigned_;
}

void PartialColoring::undo_to(std::size_t trail_length) {
  while (trail_.size() > trail_length) {
    colors_[trail_.back().point].reset();
    trail_.pop_back();
    --assigned_;
  }
}

std::vector<Color> PartialColoring::to_total() const {
  if (!complete()) throw std::logic_error("coloring is partial");
  std::vector<Color> out;
  out.reserve(colors_.size());
  for (const auto& c : colors_) out.push_back(*c);
  return out;
}

bool constraint_holds(const Constraint& c, std::span<const Color> m) {
  if (c.kind == ConstraintKind::Centroid) {
    int red = (m[0] == Color::Red) + (m[1] == Color::Red) + (m[2] == Color::Red);
    Color majority = red >= 2 ? Color::Red : Color::Blue;
    return m[3] == majority;
  }
  return !(m[0] == m[1] && m[1] == m[2]);
}

std::uint8_t allowed_colors(const Constraint& c, std::size_t p, const PartialColoring& state) {
  std::array<Color, 4> m{};
  std::size_t slot = 4;
  auto pts = c.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == p) {
      slot = i;
      continue;
    }
    auto col = state.color(pts[i]);
    if (!col) return 3;
    m[i] = *col;
  }
  if (slot == 4) return 3;
  std::uint8_t mask = 0;
  m[slot] = Color::Red;
  if (constraint_holds(c, std::span(m.data(), pts.size()))) mask |= 1;
  m[slot] = Color::Blue;
  if (constraint_holds(c, std::span(m.data(), pts.size()))) mask |= 2;
  return mask;
}

namespace {

class WorkSet {
 public:
  explicit WorkSet(std::size_t n) : queued_(n, 0) {}
  void push(std::size_t id) {
    if (!queued_[id]) {
      queued_[id] = 1;
      heap_.push(id);
    }
  }
  bool empty() const { return heap_.empty(); }
  std::size_t pop() {
    std::size_t id = heap_.top();
    heap_.pop();
    queued_[id] = 0;
    return id;
  }

 private:
  std::vector<char> queued_;
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap_;
};

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

Propagator::Propagator(std::size_t num_points, std::span<const Constraint> constraints)
    : constraints_(constraints), occ_(num_points) {
  for (std::size_t id = 0; id < constraints.size(); ++id)
    for (auto p : constraints[id].points()) occ_.at(p).push_back(id);
}

template <class Queue>
std::optional<Conflict> Propagator::run(PartialColoring& state, Queue& queue) const {
  while (!queue.empty()) {
    const std::size_t id = queue.pop();
    const Constraint& c = constraints_[id];

    std::size_t unset = kNone;
    int unset_count = 0;
    for (auto p : c.points()) {
      if (!state.is_set(p)) {
        unset = p;
        ++unset_count;
      }
    }
    if (unset_count != 1) continue;
    if (allowed_colors(c, unset, state) == 3) continue;

    // Gather every constraint that now restricts `unset`.
    std::size_t excludes_red = kNone, excludes_blue = kNone;
    for (auto k : occ_[unset]) {
      std::uint8_t mask = allowed_colors(constraints_[k], unset, state);
      if (!(mask & 1) && excludes_red == kNone) excludes_red = k;
      if (!(mask & 2) && excludes_blue == kNone) excludes_blue = k;
    }
    if (excludes_red != kNone && excludes_blue != kNone) return Conflict{unset, excludes_blue, excludes_red};
    if (excludes_red != kNone) {
      state.assign(unset, Color::Blue, Reason::forced(excludes_red));
    } else {
      state.assign(unset, Color::Red, Reason::forced(excludes_blue));
    }
    for (auto k : occ_[unset]) queue.push(k);
  }
  return std::nullopt;
}

std::optional<Conflict> Propagator::propagate_all(PartialColoring& state) const {
  WorkSet queue(constraints_.size());
  for (std::size_t id = 0; id < constraints_.size(); ++id) queue.push(id);
  return run(state, queue);
}

std::optional<Conflict> Propagator::propagate_from(PartialColoring& state, std::size_t point) const {
  WorkSet queue(constraints_.size());
  for (auto k : occ_.at(point)) queue.push(k);
  return run(state, queue);
}

std::optional<Conflict> propagate(PartialColoring& state, std::span<const Constraint> constraints) {
  return Propagator(state.size(), constraints).propagate_all(state);
}

namespace {

void check_constraint_ids(std::size_t n, std::span<const Constraint> constraints) {
  for (const auto& c : constraints)
    for (auto p : c.points())
      if (p >= n) throw std::out_of_range("constraint member " + std::to_string(p) + " out of range");
}

PartialColoring apply_seed(std::size_t n, std::span<const Constraint> constraints, const Seed& seed) {
  PartialColoring state(n);
  for (auto [p, c] : seed) {
    if (p >= n) throw std::out_of_range("seed point " + std::to_string(p) + " out of range");
    if (auto existing = state.color(p)) {
      if (*existing != c) throw SeedConflict("point " + std::to_string(p) + " seeded with both colors");
      continue;
    }
    state.assign(p, c, Reason::seed());
  }
  for (std::size_t id = 0; id < constraints.size(); ++id) {
    const auto& con = constraints[id];
    std::array<Color, 4> m{};
    bool full = true;
    auto pts = con.points();
    for (std::size_t i = 0; i < pts.size() && full; ++i) {
      if (auto col = state.color(pts[i])) m[i] = *col;
      else full = false;
    }
    if (full && !constraint_holds(con, std::span(m.data(), pts.size())))
      throw SeedConflict("seed violates constraint C#" + std::to_string(id) + " (" +
                         std::string(to_string(con.kind)) + ")");
  }
  return state;
}

/// Depth-first search shared by solve() and all_solutions().
class Search {
 public:
  Search(std::size_t n, std::span<const Constraint> constraints, PartialColoring state, bool record)
      : constraints_(constraints), propagator_(n, constraints), state_(std::move(state)), record_(record) {}

  // Returns true when the visitor asks to stop.
  template <class OnSolution>
  bool root(OnSolution&& on_solution) {
    emit_steps_from(0);
    auto conflict = propagator_.propagate_all(state_);
    emit_steps_from(emitted_);
    if (conflict) {
      emit(*conflict);
      return false;
    }
    return dfs(on_solution);
  }

  std::vector<CertificateEvent>& events() { return events_; }

 private:
  void emit(CertificateEvent e) {
    if (record_) events_.push_back(std::move(e));
  }

  void emit_steps_from(std::size_t from) {
    const auto& trail = state_.trail();
    for (std::size_t i = from; i < trail.size(); ++i) emit(trail[i]);
    emitted_ = trail.size();
  }

  std::size_t choose_branch_point() const {
    const std::size_t n = state_.size();
    std::vector<std::size_t> score(n, 0);
    for (const auto& c : constraints_) {
      int colored = 0;
      for (auto p : c.points()) colored += state_.is_set(p);
      if (colored != 1) continue;
      for (auto p : c.points())
        if (!state_.is_set(p)) ++score[p];
    }
    std::size_t best = kNone;
    for (std::size_t p = 0; p < n; ++p) {
      if (state_.is_set(p)) continue;
      if (best == kNone || score[p] > score[best]) best = p;
    }
    return best;
  }

  template <class OnSolution>
  bool dfs(OnSolution& on_solution) {
    if (state_.complete()) return on_solution(state_);
    const std::size_t p = choose_branch_point();
    const std::size_t mark = state_.trail().size();
    for (Color c : {Color::Red, Color::Blue}) {
      state_.assign(p, c, Reason::decision());
      auto conflict = propagator_.propagate_from(state_, p);
      emit_steps_from(mark);
      if (conflict) {
        emit(*conflict);
      } else if (dfs(on_solution)) {
        return true;
      }
      state_.undo_to(mark);
      emitted_ = mark;
      if (c == Color::Red) emit(Backtrack{mark});
    }
    return false;
  }

  std::span<const Constraint> constraints_;
  Propagator propagator_;
  PartialColoring state_;
  bool record_;
  std::vector<CertificateEvent> events_;
  std::size_t emitted_ = 0;
};

}  // namespace

DerivationCertificate solve(std::size_t num_points, std::span<const Constraint> constraints, const Seed& seed) {
  check_constraint_ids(num_points, constraints);
  Search search(num_points, constraints, apply_seed(num_points, constraints, seed), true);
  DerivationCertificate cert;
  bool found = search.root([&](const PartialColoring& state) {
    cert.coloring = state.to_total();
    return true;
  });
  cert.outcome = found ? Outcome::Sat : Outcome::Unsat;
  cert.events = std::move(search.events());
  return cert;
}

std::vector<std::vector<Color>> all_solutions(std::size_t num_points, std::span<const Constraint> constraints,
                                              const Seed& seed, std::size_t limit) {
  check_constraint_ids(num_points, constraints);
  Search search(num_points, constraints, apply_seed(num_points, constraints, seed), false);
  std::vector<std::vector<Color>> out;
  search.root([&](const PartialColoring& state) {
    if (out.size() == limit) throw TooLarge("more than " + std::to_string(limit) + " completions");
    out.push_back(state.to_total());
    return false;
  });
  return out;
}

bool brute_force(std::size_t num_points, std::span<const Constraint> constraints, const Seed& seed) {
  check_constraint_ids(num_points, constraints);
  std::vector<int> fixed(num_points, -1);
  for (auto [p, c] : seed) {
    if (p >= num_points) throw std::out_of_range("seed point out of range");
    int v = c == Color::Red ? 1 : 0;
    if (fixed[p] != -1 && fixed[p] != v) return false;
    fixed[p] = v;
  }
  std::vector<std::size_t> free;
  for (std::size_t p = 0; p < num_points; ++p)
    if (fixed[p] == -1) free.push_back(p);
  if (free.size() > 25) throw TooLarge(std::to_string(free.size()) + " unseeded points (limit 25)");

  std::vector<Color> colors(num_points, Color::Blue);
  for (std::size_t p = 0; p < num_points; ++p)
    if (fixed[p] == 1) colors[p] = Color::Red;
  const std::uint64_t total = std::uint64_t(1) << free.size();
  // Evaluated directly rather than through constraint_holds so the oracle
  // shares nothing with the propagation path.
  auto violated = [&](const Constraint& c) {
    const auto& m = c.members;
    int red = (colors[m[0]] == Color::Red) + (colors[m[1]] == Color::Red) + (colors[m[2]] == Color::Red);
    if (c.kind == ConstraintKind::Centroid) return (colors[m[3]] == Color::Red) != (red >= 2);
    return red == 0 || red == 3;
  };
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < free.size(); ++i)
      colors[free[i]] = (mask >> i) & 1 ? Color::Red : Color::Blue;
    if (std::none_of(constraints.begin(), constraints.end(), violated)) return true;
  }
  return false;
}

std::vector<std::size_t> verify_coloring(std::span<const Color> coloring, std::span<const Constraint> constraints) {
  std::vector<std::size_t> out;
  std::array<Color, 4> m{};
  for (std::size_t id = 0; id < constraints.size(); ++id) {
    auto pts = constraints[id].points();
    for (std::size_t i = 0; i < pts.size(); ++i) m[i] = coloring[pts[i]];
    if (!constraint_holds(constraints[id], std::span(m.data(), pts.size()))) out.push_back(id);
  }
  return out;
}

}  // namespace ell3
