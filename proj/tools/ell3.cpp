// ell3: command-line front end.
//
// Exit codes: 0 success (SAT for `solve`), 1 verification failed, 2 usage
// error, 3 invalid input, 4 I/O failure, 10 UNSAT.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ell3/certificate.hpp"
#include "ell3/datasets.hpp"
#include "ell3/encoder.hpp"
#include "ell3/error.hpp"
#include "ell3/grid.hpp"
#include "ell3/proof_checker.hpp"
#include "ell3/solver.hpp"
#include "ell3/svg.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace ell3;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInput = 3;
constexpr int kExitIo = 4;
constexpr int kExitUnsat = 10;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

bool is_bundled(const std::string& name) {
  auto names = bundled_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

// A path to a point file, or the name of a bundled set.
PointSetFile load_points(const std::string& arg) {
  if (fs::exists(arg)) return parse_pointset(read_file(arg), fs::path(arg).stem().string());
  if (is_bundled(arg)) return bundled(arg).points;
  throw IoError("no such point file or bundled set: " + arg);
}

CaseSpec load_case(const std::string& arg) {
  if (fs::exists(arg)) return parse_case(read_file(arg));
  if (is_bundled(arg)) return bundled(arg).spec;
  throw IoError("no such case file or bundled case: " + arg);
}

KindSet parse_kinds(const std::vector<std::string>& names) {
  if (names.empty()) return KindSet::all();
  KindSet set;
  for (const auto& name : names) {
    auto k = parse_constraint_kind(name);
    if (!k) throw std::invalid_argument("unknown constraint kind: " + name);
    set.insert(*k);
  }
  return set;
}

struct Instance {
  Seed seed;
  std::vector<Constraint> constraints;
};

// Seed and constraint kinds come from the case file; `--kinds` overrides.
Instance load_instance(const PointSetFile& points, const std::string& case_arg,
                       const std::vector<std::string>& kinds) {
  Instance inst;
  KindSet set = KindSet::all();
  if (!case_arg.empty()) {
    const auto spec = load_case(case_arg);
    inst.seed = resolve_seed(points, apply_variant(spec.seeds, spec.variant), true);
    set = spec.kinds;
  }
  if (!kinds.empty()) set = parse_kinds(kinds);
  inst.constraints = enumerate_constraints(points.points, set);
  return inst;
}

std::vector<std::optional<Color>> seed_state(std::size_t n, const Seed& seed) {
  std::vector<std::optional<Color>> out(n);
  for (auto [p, c] : seed) out[p] = c;
  return out;
}

// Colors present after the last event of a certificate.
std::vector<std::optional<Color>> final_state(std::size_t n, const DerivationCertificate& cert) {
  std::vector<TrailStep> trail;
  for (const auto& e : cert.events) {
    if (auto* s = std::get_if<TrailStep>(&e)) trail.push_back(*s);
    if (auto* b = std::get_if<Backtrack>(&e)) trail.resize(std::min(trail.size(), b->trail_length));
  }
  std::vector<std::optional<Color>> out(n);
  for (const auto& s : trail)
    if (s.point < n) out[s.point] = s.color;
  return out;
}

std::string count_line(std::span<const Constraint> cons) {
  std::size_t n[4] = {};
  for (const auto& c : cons) ++n[static_cast<int>(c.kind)];
  std::ostringstream out;
  out << "ell3 " << n[0] << ", eq1 " << n[1] << ", eq2 " << n[2] << ", centroid " << n[3] << ", total "
      << cons.size();
  return out.str();
}

json count_json(std::span<const Constraint> cons) {
  json j = {{"ell3", 0}, {"eq1", 0}, {"eq2", 0}, {"centroid", 0}};
  for (const auto& c : cons) j[std::string(to_string(c.kind))] = j[std::string(to_string(c.kind))].get<int>() + 1;
  j["total"] = cons.size();
  return j;
}


struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

int cmd_distances(const Options& opt, const std::string& file, bool all) {
  const auto pts = load_points(file);
  const auto labels = pts.display_labels();
  json rows = json::array();
  std::size_t units = 0, doubles = 0;
  std::ostringstream out;
  for (std::size_t i = 0; i < pts.points.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.points.size(); ++j) {
      const auto d2 = sqdist(pts.points[i], pts.points[j]);
      const auto cls = classify_sqdist(d2);
      units += cls == PairClass::Unit;
      doubles += cls == PairClass::Double;
      if (!all && cls == PairClass::Other) continue;
      const char* name = cls == PairClass::Unit ? "unit" : cls == PairClass::Double ? "double" : "other";
      out << labels[i] << ' ' << labels[j] << ' ' << name << ' ' << d2.to_string() << '\n';
      rows.push_back({{"p", labels[i]}, {"q", labels[j]}, {"class", name}, {"sqdist", d2.to_string()}});
    }
  }
  if (opt.json())
    std::cout << json{{"points", pts.points.size()}, {"unit", units}, {"double", doubles}, {"pairs", rows}}.dump(2)
              << '\n';
  else
    std::cout << out.str() << "# " << pts.points.size() << " points, " << units << " unit pairs, " << doubles
              << " double pairs\n";
  return 0;
}

int cmd_constraints(const Options& opt, const std::string& file, const std::vector<std::string>& kinds) {
  const auto pts = load_points(file);
  const auto labels = pts.display_labels();
  const auto cons = enumerate_constraints(pts.points, parse_kinds(kinds));
  if (opt.json()) {
    json list = json::array();
    for (std::size_t id = 0; id < cons.size(); ++id) {
      json members = json::array();
      for (auto p : cons[id].points()) members.push_back(labels[p]);
      list.push_back({{"id", id}, {"kind", to_string(cons[id].kind)}, {"members", members}});
    }
    std::cout << json{{"counts", count_json(cons)}, {"constraints", list}}.dump(2) << '\n';
    return 0;
  }
  for (std::size_t id = 0; id < cons.size(); ++id) {
    std::cout << "C#" << id << ' ' << to_string(cons[id].kind);
    for (auto p : cons[id].points()) std::cout << ' ' << labels[p];
    std::cout << '\n';
  }
  std::cout << "# " << count_line(cons) << '\n';
  return 0;
}

int cmd_solve(const Options& opt, const std::string& file, const std::string& seed_arg,
              const std::vector<std::string>& kinds, const std::string& cert_path) {
  const auto pts = load_points(file);
  const auto labels = pts.display_labels();
  const auto [seed, cons] = load_instance(pts, seed_arg, kinds);
  const auto cert = solve(pts.points.size(), cons, seed);
  const auto replay = replay_certificate(cert, pts.points.size(), cons, seed);
  if (!cert_path.empty()) write_file(cert_path, write_certificate(cert, labels));
  const bool sat = cert.outcome == Outcome::Sat;
  if (opt.json()) {
    json j = {{"result", sat ? "sat" : "unsat"}, {"points", pts.points.size()}, {"constraints", count_json(cons)},
              {"events", cert.events.size()}, {"leaves", replay.leaves}, {"replayed", true}};
    if (sat) {
      json colors = json::object();
      for (std::size_t i = 0; i < labels.size(); ++i) colors[labels[i]] = to_string(cert.coloring[i]);
      j["coloring"] = colors;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (sat ? "SAT" : "UNSAT") << ": " << pts.points.size() << " points, " << count_line(cons) << '\n'
              << "certificate: " << cert.events.size() << " events, " << replay.leaves
              << (sat ? " coloring" : " refuted leaves") << ", replay ok\n";
    if (sat)
      for (std::size_t i = 0; i < labels.size(); ++i)
        std::cout << labels[i] << ' ' << to_string(cert.coloring[i]) << '\n';
  }
  return sat ? 0 : kExitUnsat;
}

ChainVerdict run_case(const std::vector<std::string>& args, CaseSpec& spec) {
  PointSetFile pts;
  if (args.size() == 2) {
    pts = load_points(args[0]);
    spec = load_case(args[1]);
  } else if (is_bundled(args[0]) && !fs::exists(args[0])) {
    auto ds = bundled(args[0]);
    pts = ds.points;
    spec = ds.spec;
  } else {
    spec = load_case(args[0]);
    auto sibling = fs::path(args[0]).parent_path() / (spec.points_name + ".pts");
    pts = fs::exists(sibling) ? load_points(sibling.string()) : load_points(spec.points_name);
  }
  auto verdict = check_chain(spec, pts);
  replay_verdict(verdict, spec);
  return verdict;
}

int cmd_check_case(const Options& opt, const std::vector<std::string>& args) {
  if (args.size() > 2) throw std::invalid_argument("check-case takes a case name, a case file, or <points> <case>");
  CaseSpec spec;
  try {
    const auto verdict = run_case(args, spec);
    if (opt.json()) {
      json steps = json::array();
      for (const auto& s : verdict.steps)
        steps.push_back({{"label", s.label}, {"color", to_string(s.color)}, {"kind", to_string(s.kind)},
                         {"witnesses", s.witnesses}});
      const auto& c = verdict.contradiction;
      std::cout << json{{"case", verdict.case_name},
                        {"variant", to_string(verdict.variant)},
                        {"verified", true},
                        {"steps", steps},
                        {"contradiction",
                         {{"label", c.label}, {"red_witnesses", c.red_witnesses}, {"blue_witnesses", c.blue_witnesses}}}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << verdict.report() << verdict.case_name << ": verified (" << verdict.steps.size()
                << " forced steps)\n";
    }
    return 0;
  } catch (const StepNotForced& e) {
    std::cout << (opt.json() ? json{{"case", spec.name}, {"verified", false}, {"error", e.what()}}.dump(2)
                             : spec.name + ": NOT verified: " + e.what())
              << '\n';
  } catch (const PrematureContradiction& e) {
    std::cout << spec.name << ": NOT verified: " << e.what() << '\n';
  } catch (const NoContradiction& e) {
    std::cout << spec.name << ": NOT verified: " << e.what() << '\n';
  }
  return kExitFailed;
}

bool grid_ok(const GridReport& r) {
  return r.pairwise_isometric && (r.interior == 0 || (r.circle_property && r.translation_invariant));
}

void print_grid(const GridReport& r) {
  std::cout << "radius " << r.radius << ": " << r.points << " points, " << r.constraints << " constraints\n"
            << "completions: " << r.completions << "\n"
            << "interior points: " << r.interior << ", distinct interior patterns: " << r.distinct_interior_patterns
            << "\n"
            << "interior patterns pairwise isometric: " << (r.pairwise_isometric ? "yes" : "no") << "\n"
            << "monochromatic circles of squared radius 16/3: " << (r.circle_property ? "yes" : "no") << "\n"
            << "invariant under the circle translations: " << (r.translation_invariant ? "yes" : "no") << "\n";
}

int cmd_grid(const Options& opt, int radius, const std::string& svg_path) {
  const auto report = verify_grid(radius);
  if (!svg_path.empty()) {
    const auto region = generate_grid(radius);
    std::vector<std::optional<Color>> colors(report.colorings.front().begin(), report.colorings.front().end());
    SvgOptions so;
    so.labels = false;
    so.title = "radius " + std::to_string(radius) + " grid completion";
    write_file(svg_path, render_svg(region.points, colors, so));
  }
  if (opt.json())
    std::cout << json{{"radius", report.radius},
                      {"points", report.points},
                      {"constraints", report.constraints},
                      {"completions", report.completions},
                      {"interior", report.interior},
                      {"distinct_interior_patterns", report.distinct_interior_patterns},
                      {"pairwise_isometric", report.pairwise_isometric},
                      {"circle_property", report.circle_property},
                      {"translation_invariant", report.translation_invariant},
                      {"verified", grid_ok(report)}}
                     .dump(2)
              << '\n';
  else
    print_grid(report);
  return grid_ok(report) ? 0 : kExitFailed;
}

int cmd_check_all(const Options& opt) {
  const char* ok = "✓";
  const char* bad = "✗";

  const auto fig1 = bundled("fig1");
  const auto cons = enumerate_constraints(fig1.points.points, fig1.spec.kinds);
  const auto seed = resolve_seed(fig1.points, apply_variant(fig1.spec.seeds, fig1.spec.variant), false);
  const auto cert = solve(fig1.points.points.size(), cons, seed);
  const auto text = write_certificate(cert, fig1.points.display_labels());
  const auto replay = replay_certificate(parse_certificate(text, fig1.points.display_labels()),
                                         fig1.points.points.size(), cons, seed);
  const bool fig1_ok = cert.outcome == Outcome::Unsat && replay.outcome == Outcome::Unsat;

  bool cases_ok = false;
  CaseSummary summary;
  std::string case_error;
  try {
    summary = check_all_cases();
    for (std::size_t i = 0; i < summary.verdicts.size(); ++i) replay_verdict(summary.verdicts[i], bundled(summary.verdicts[i].case_name).spec);
    cases_ok = summary.verdicts.size() == 6 && summary.exhaustive;
  } catch (const Error& e) {
    case_error = e.what();
  }

  const auto grid = verify_grid(6);
  const bool unique = grid.pairwise_isometric;
  const bool circle = grid.circle_property && grid.translation_invariant;

  if (opt.json()) {
    std::cout << json{{"fig1", {{"unsat", fig1_ok}, {"points", fig1.points.points.size()}, {"constraints", count_json(cons)}, {"leaves", replay.leaves}}},
                      {"cases", {{"verified", cases_ok}, {"exhaustive", summary.exhaustive}, {"uncovered", summary.uncovered}, {"error", case_error}}},
                      {"grid", {{"unique", unique}, {"circle", circle}, {"completions", grid.completions}, {"interior", grid.interior}}}}
                         .dump(2)
              << '\n';
  } else {
    std::cout << "fig1: " << fig1.points.points.size() << " points, " << count_line(cons) << ", "
              << (cert.outcome == Outcome::Unsat ? "UNSAT" : "SAT") << " with " << replay.leaves
              << " refuted leaves, certificate replayed\n";
    for (const auto& v : summary.verdicts)
      std::cout << v.case_name << ": " << v.steps.size() << " forced steps, contradiction at "
                << v.contradiction.label << " (variant " << to_string(v.variant) << ")\n";
    if (!case_error.empty()) std::cout << "cases: " << case_error << '\n';
    std::cout << "cases cover all 64 colorings of the q points: " << (summary.exhaustive ? "yes" : "no") << '\n';
    print_grid(grid);
    std::cout << "fig1: " << (fig1_ok ? "UNSAT " : "SAT ") << (fig1_ok ? ok : bad) << ", cases 1–6: "
              << (cases_ok ? "verified " : "failed ") << (cases_ok ? ok : bad) << ", grid: "
              << (unique ? "unique" : "not unique") << " + " << (circle ? "circle " : "no circle ")
              << (unique && circle ? ok : bad) << '\n';
  }
  return fig1_ok && cases_ok && unique && circle ? 0 : kExitFailed;
}

int cmd_encode(const std::string& file, const std::string& seed_arg, const std::vector<std::string>& kinds,
               const std::string& out_path) {
  const auto pts = load_points(file);
  const auto [seed, cons] = load_instance(pts, seed_arg, kinds);
  auto shown = pts.points;
  const auto labels = pts.display_labels();
  for (std::size_t i = 0; i < shown.size(); ++i) shown[i].label = labels[i];
  write_file(out_path, to_dimacs(shown, cons, seed));
  return 0;
}

int cmd_render(const std::string& file, const std::string& cert_path, const std::string& seed_arg,
               const std::string& out_path, const std::string& title) {
  const auto pts = load_points(file);
  const auto labels = pts.display_labels();
  std::vector<std::optional<Color>> colors;
  if (!cert_path.empty())
    colors = final_state(pts.points.size(), parse_certificate(read_file(cert_path), labels));
  else if (!seed_arg.empty())
    colors = seed_state(pts.points.size(), load_instance(pts, seed_arg, {}).seed);
  SvgOptions so;
  so.title = title.empty() ? pts.name : title;
  write_file(out_path, render_svg(pts.points, colors, so));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of 2-colorings with forbidden unit configurations"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string file, seed_arg, out_path, cert_path, title;
  std::vector<std::string> kinds, case_args;
  bool all_pairs = false;
  int radius = 6;

  auto* distances = app.add_subcommand("distances", "Classify every pair of points");
  distances->add_option("pointfile", file, "Point file or bundled set name")->required();
  distances->add_flag("--all", all_pairs, "Also list pairs at other distances");

  auto* constraints = app.add_subcommand("constraints", "List the constraints of a point set");
  constraints->add_option("pointfile", file)->required();
  constraints->add_option("--kinds", kinds, "Comma-separated kinds: ell3,eq1,eq2,centroid")->delimiter(',');

  auto* solve_cmd = app.add_subcommand("solve", "Decide whether the seed extends to a valid coloring");
  solve_cmd->add_option("pointfile", file)->required();
  solve_cmd->add_option("--seed", seed_arg, "Case file or bundled case name supplying the seed");
  solve_cmd->add_option("--kinds", kinds, "Constraint kinds (default: from the case file, else all)")->delimiter(',');
  solve_cmd->add_option("--certificate", cert_path, "Write the derivation certificate here");

  auto* check_case = app.add_subcommand("check-case", "Verify a forced-coloring chain");
  check_case->add_option("case", case_args, "Bundled case name, case file, or <points> <case>")->required()->expected(1, 2);

  auto* check_all = app.add_subcommand("check-all", "Run every bundled verification");

  auto* grid = app.add_subcommand("grid", "Enumerate completions of a seeded triangular grid");
  grid->add_option("--radius", radius, "Hexagon radius")->check(CLI::Range(0, 12))->capture_default_str();
  grid->add_option("--svg", out_path, "Draw the first completion");

  auto* encode_cmd = app.add_subcommand("encode", "Emit the instance as DIMACS CNF");
  encode_cmd->add_option("pointfile", file)->required();
  encode_cmd->add_option("--seed", seed_arg);
  encode_cmd->add_option("--kinds", kinds)->delimiter(',');
  encode_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* render = app.add_subcommand("render", "Draw a point set as SVG");
  render->add_option("pointfile", file)->required();
  render->add_option("--coloring", cert_path, "Certificate whose final colors are drawn");
  render->add_option("--seed", seed_arg, "Draw the seed colors of a case");
  render->add_option("--title", title);
  render->add_option("-o,--output", out_path, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*distances) return cmd_distances(opt, file, all_pairs);
    if (*constraints) return cmd_constraints(opt, file, kinds);
    if (*solve_cmd) return cmd_solve(opt, file, seed_arg, kinds, cert_path);
    if (*check_case) return cmd_check_case(opt, case_args);
    if (*check_all) return cmd_check_all(opt);
    if (*grid) return cmd_grid(opt, radius, out_path);
    if (*encode_cmd) return cmd_encode(file, seed_arg, kinds, out_path);
    if (*render) return cmd_render(file, cert_path, seed_arg, out_path, title);
  } catch (const IoError& e) {
    std::cerr << "ell3: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "ell3: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ell3: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
