#include "ell3/proof_checker.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "ell3/error.hpp"

namespace ell3 {

namespace {

const std::array<std::string, 6> kQLabels = {"q1", "q2", "q3", "q3'", "q4", "q5"};

// Colors `p` may not take under constraint `c`, given that every other member
// is colored. Bit 0 red, bit 1 blue; 0 when some other member is uncolored.
std::uint8_t excluded(const Constraint& c, std::size_t p, const std::vector<std::optional<Color>>& colors) {
  std::array<Color, 3> others{};
  std::size_t k = 0;
  for (auto m : c.points()) {
    if (m == p) continue;
    if (!colors[m]) return 0;
    others[k++] = *colors[m];
  }
  // Triples only: two equal neighbours exclude their own color.
  if (k != 2 || others[0] != others[1]) return 0;
  return others[0] == Color::Red ? 1 : 2;
}

std::vector<std::string> witnesses_of(const Constraint& c, std::size_t p, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (auto m : c.points())
    if (m != p) out.push_back(labels[m]);
  return out;
}

std::string describe(const Constraint& c, std::size_t id, const std::vector<std::string>& labels,
                     const std::vector<std::optional<Color>>& colors) {
  std::ostringstream out;
  out << "  C#" << id << ' ' << to_string(c.kind) << " {";
  bool first = true;
  for (auto m : c.points()) {
    out << (first ? "" : ", ") << labels[m] << ':' << (colors[m] ? to_string(*colors[m]) : "unset");
    first = false;
  }
  out << "}\n";
  return out.str();
}

}  // namespace

ChainVerdict check_chain(const CaseSpec& spec, const PointSetFile& points) {
  return check_chain(spec, points, spec.variant);
}

ChainVerdict check_chain(const CaseSpec& spec, const PointSetFile& points, Variant variant) {
  ChainVerdict v;
  v.case_name = spec.name;
  v.variant = variant;
  v.labels = points.display_labels();
  v.constraints = enumerate_constraints(points.points, KindSet::triples());
  v.seed = resolve_seed(points, apply_variant(spec.seeds, variant), true);

  std::vector<std::size_t> chain;
  for (const auto& l : spec.chain) {
    auto idx = points.find(l);
    if (!idx) throw UnknownLabel(spec.name + ": chain label '" + l + "' not in point set");
    chain.push_back(*idx);
  }
  if (chain.empty()) throw NoContradiction(spec.name + ": empty chain");

  const std::size_t n = points.points.size();
  std::vector<std::optional<Color>> colors(n);
  for (auto [p, c] : v.seed) colors[p] = c;

  std::vector<std::vector<std::size_t>> occ(n);
  for (std::size_t id = 0; id < v.constraints.size(); ++id)
    for (auto p : v.constraints[id].points()) occ[p].push_back(id);

  for (std::size_t id = 0; id < v.constraints.size(); ++id) {
    const auto& c = v.constraints[id];
    if (std::all_of(c.points().begin(), c.points().end(), [&](auto m) { return colors[m].has_value(); }) &&
        colors[c.members[0]] == colors[c.members[1]] && colors[c.members[1]] == colors[c.members[2]])
      throw SeedConflict(spec.name + ": seed makes C#" + std::to_string(id) + " monochromatic");
  }

  for (std::size_t k = 0; k < chain.size(); ++k) {
    const std::size_t p = chain[k];
    const bool last = k + 1 == chain.size();
    if (colors[p]) throw SeedConflict(spec.name + ": chain point " + v.labels[p] + " is seeded");

    std::vector<std::size_t> force_red, force_blue;  // constraints excluding blue / red
    for (auto id : occ[p]) {
      auto ex = excluded(v.constraints[id], p, colors);
      if (ex & 2) force_red.push_back(id);
      if (ex & 1) force_blue.push_back(id);
    }

    if (force_red.empty() && force_blue.empty()) {
      std::string diag;
      for (auto id : occ[p]) diag += describe(v.constraints[id], id, v.labels, colors);
      if (diag.empty()) diag = "  (point lies in no constraint)\n";
      throw StepNotForced(k + 1, spec.name + ": " + v.labels[p] + "\n" + diag);
    }

    if (last) {
      if (force_red.empty() || force_blue.empty())
        throw NoContradiction(spec.name + ": final point " + v.labels[p] + " can still be colored " +
                              (force_red.empty() ? "blue" : "red"));
      auto& con = v.contradiction;
      con.label = v.labels[p];
      con.point = p;
      con.forced_red_by = force_red.front();
      con.forced_blue_by = force_blue.front();
      con.red_witnesses = witnesses_of(v.constraints[con.forced_red_by], p, v.labels);
      con.blue_witnesses = witnesses_of(v.constraints[con.forced_blue_by], p, v.labels);
      break;
    }

    if (!force_red.empty() && !force_blue.empty()) {
      throw PrematureContradiction(k + 1, spec.name + ": " + v.labels[p] + " is forced to both colors before the end of the chain");
    }

    ChainStep step;
    step.label = v.labels[p];
    step.point = p;
    step.color = force_red.empty() ? Color::Blue : Color::Red;
    step.candidates = force_red.empty() ? force_blue : force_red;
    step.constraint = step.candidates.front();
    step.kind = v.constraints[step.constraint].kind;
    step.witnesses = witnesses_of(v.constraints[step.constraint], p, v.labels);
    colors[p] = step.color;
    v.steps.push_back(std::move(step));
  }
  return v;
}

std::optional<Variant> find_variant(const CaseSpec& spec, const PointSetFile& points) {
  for (auto variant : kVariantSearchOrder) {
    try {
      check_chain(spec, points, variant);
      return variant;
    } catch (const StepNotForced&) {
    } catch (const PrematureContradiction&) {
    } catch (const NoContradiction&) {
    } catch (const SeedConflict&) {
    }
  }
  return std::nullopt;
}

DerivationCertificate ChainVerdict::certificate() const {
  DerivationCertificate cert;
  cert.outcome = Outcome::Unsat;
  std::set<std::size_t> seen;
  for (auto [p, c] : seed)
    if (seen.insert(p).second) cert.events.emplace_back(TrailStep{p, c, Reason::seed()});
  for (const auto& s : steps) cert.events.emplace_back(TrailStep{s.point, s.color, Reason::forced(s.constraint)});
  cert.events.emplace_back(Conflict{contradiction.point, contradiction.forced_red_by, contradiction.forced_blue_by});
  return cert;
}

std::string ChainVerdict::report() const {
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
    return s;
  };
  std::ostringstream out;
  out << "# " << case_name << " (variant " << to_string(variant) << ")\n";
  for (const auto& s : steps)
    out << s.label << " <- " << to_string(s.color) << " via {" << join(s.witnesses) << "} ["
        << to_string(s.kind) << "]\n";
  const auto& c = contradiction;
  out << c.label << " <- red via {" << join(c.red_witnesses) << "} ["
      << to_string(constraints[c.forced_red_by].kind) << "] and blue via {" << join(c.blue_witnesses) << "} ["
      << to_string(constraints[c.forced_blue_by].kind) << "]: contradiction\n";
  return out.str();
}

void replay_verdict(const ChainVerdict& v, const CaseSpec& spec) {
  std::map<std::string, std::size_t> chain_pos;
  for (std::size_t k = 0; k < spec.chain.size(); ++k) chain_pos.emplace(spec.chain[k], k);

  std::vector<std::optional<Color>> colors(v.labels.size());
  for (auto [p, c] : v.seed) colors[p] = c;

  auto check_witnesses = [&](const Constraint& c, std::size_t p, std::size_t k) {
    for (auto m : c.points()) {
      if (m == p) continue;
      auto it = chain_pos.find(v.labels[m]);
      if (it != chain_pos.end() && it->second >= k)
        throw OutOfOrderWitness(spec.name + ": step " + std::to_string(k + 1) + " uses " + v.labels[m]);
    }
  };
  auto constraint_at = [&](std::size_t id) -> const Constraint& {
    if (id >= v.constraints.size()) throw StepNotForced(0, "no constraint C#" + std::to_string(id));
    return v.constraints[id];
  };

  for (std::size_t k = 0; k < v.steps.size(); ++k) {
    const auto& s = v.steps[k];
    const auto& c = constraint_at(s.constraint);
    if (!c.contains(s.point)) throw StepNotForced(k + 1, "justification does not contain " + s.label);
    check_witnesses(c, s.point, k);
    auto ex = excluded(c, s.point, colors);
    if (ex != (s.color == Color::Red ? 2 : 1))
      throw StepNotForced(k + 1, spec.name + ": C#" + std::to_string(s.constraint) + " does not force " + s.label);
    colors[s.point] = s.color;
  }
  const auto& con = v.contradiction;
  const std::size_t k = v.steps.size();
  const auto& red = constraint_at(con.forced_red_by);
  const auto& blue = constraint_at(con.forced_blue_by);
  check_witnesses(red, con.point, k);
  check_witnesses(blue, con.point, k);
  if (!red.contains(con.point) || !blue.contains(con.point) || excluded(red, con.point, colors) != 2 ||
      excluded(blue, con.point, colors) != 1)
    throw NoContradiction(spec.name + ": recorded contradiction does not hold");
}

CaseSummary check_cases(const std::vector<Dataset>& cases) {
  CaseSummary summary;
  const auto& mirror = base_mirror_map();

  // Shared base coloring, read from the fig1 seed.
  std::map<std::string, Color> base;
  for (const auto& s : bundled("fig1").spec.seeds) base.emplace(s.label, s.color);
  bool base_symmetric = true;
  for (const auto& [l, c] : base) {
    auto it = mirror.find(l);
    base_symmetric &= it != mirror.end() && base.count(it->second) && base.at(it->second) == c;
  }

  // Seed patterns on the q points, expressed relative to the shared base.
  std::vector<std::map<std::string, Color>> patterns;
  for (const auto& ds : cases) {
    auto verdict = check_chain(ds.spec, ds.points);
    const bool swapped = verdict.variant == Variant::Swap || verdict.variant == Variant::MirrorSwap;
    std::map<std::string, Color> pattern;
    bool base_ok = true;
    for (const auto& s : apply_variant(ds.spec.seeds, verdict.variant, mirror)) {
      if (!ds.points.find(s.label)) continue;
      Color c = swapped ? opposite(s.color) : s.color;
      if (auto it = base.find(s.label); it != base.end()) {
        base_ok &= it->second == c;
      } else if (std::find(kQLabels.begin(), kQLabels.end(), s.label) != kQLabels.end()) {
        pattern.emplace(s.label, c);
      }
    }
    if (base_ok) patterns.push_back(std::move(pattern));
    summary.verdicts.push_back(std::move(verdict));
  }

  for (unsigned bits = 0; bits < 64; ++bits) {
    std::map<std::string, Color> assignment;
    for (std::size_t i = 0; i < kQLabels.size(); ++i)
      assignment.emplace(kQLabels[i], (bits >> i) & 1 ? Color::Blue : Color::Red);
    auto extends = [&](const std::map<std::string, Color>& pattern, bool reflect) {
      for (const auto& [l, c] : pattern) {
        const std::string& target = reflect ? mirror.at(l) : l;
        if (assignment.at(target) != c) return false;
      }
      return true;
    };
    bool covered = std::any_of(patterns.begin(), patterns.end(), [&](const auto& p) {
      return extends(p, false) || (base_symmetric && extends(p, true));
    });
    if (!covered) {
      std::string s;
      for (const auto& l : kQLabels) s += l + "=" + std::string(to_string(assignment.at(l))) + " ";
      summary.uncovered.push_back(s);
    }
  }
  summary.exhaustive = summary.uncovered.empty();
  return summary;
}

CaseSummary check_all_cases() {
  std::vector<Dataset> cases;
  for (int i = 1; i <= 6; ++i) cases.push_back(bundled("case" + std::to_string(i)));
  return check_cases(cases);
}

}  // namespace ell3
