#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ell3/certificate.hpp"
#include "ell3/datasets.hpp"
#include "ell3/encoder.hpp"
#include "ell3/error.hpp"
#include "ell3/grid.hpp"
#include "ell3/proof_checker.hpp"
#include "ell3/svg.hpp"

namespace py = pybind11;
using namespace ell3;

namespace {

// Points are (a, b, c, d) or (a, b, c, d, label).
PlanePoint to_point(const py::handle& h) {
  auto t = py::cast<py::sequence>(h);
  if (t.size() != 4 && t.size() != 5) throw std::invalid_argument("a point is (a, b, c, d[, label])");
  std::string label = t.size() == 5 ? py::cast<std::string>(t[4]) : std::string();
  return point_from_quadruple(py::cast<std::int64_t>(t[0]), py::cast<std::int64_t>(t[1]),
                              py::cast<std::int64_t>(t[2]), py::cast<std::int64_t>(t[3]), std::move(label));
}

std::vector<PlanePoint> to_points(const py::sequence& s) {
  std::vector<PlanePoint> pts;
  for (auto h : s) pts.push_back(to_point(h));
  return pts;
}

py::tuple from_point(const PlanePoint& p) {
  const auto& q = p.quadruple.value();
  return py::make_tuple(q.a, q.b, q.c, q.d, p.label);
}

Color to_color(const std::string& s) {
  auto c = parse_color(s);
  if (!c) throw std::invalid_argument("unknown color '" + s + "'");
  return *c;
}

Seed to_seed(const std::vector<std::pair<std::size_t, std::string>>& seed, std::size_t n) {
  Seed out;
  for (const auto& [i, c] : seed) {
    if (i >= n) throw std::out_of_range("seed index " + std::to_string(i) + " out of range");
    out.emplace_back(i, to_color(c));
  }
  return out;
}

std::vector<std::string> color_names(std::span<const Color> cs) {
  std::vector<std::string> out;
  for (auto c : cs) out.emplace_back(to_string(c));
  return out;
}

py::list constraint_list(std::span<const Constraint> cons) {
  py::list out;
  for (const auto& c : cons) {
    py::tuple members(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) members[k] = c.members[k];
    out.append(py::make_tuple(std::string(to_string(c.kind)), members));
  }
  return out;
}

py::dict verdict_dict(const ChainVerdict& v) {
  py::dict d;
  d["name"] = v.case_name;
  d["variant"] = std::string(to_string(v.variant));
  d["steps"] = v.steps.size();
  d["contradiction"] = v.contradiction.label;
  d["report"] = v.report();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact unit-distance geometry and two-coloring checks";

  // Translators run newest first, so subclasses are registered after the base.
  auto& error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "ParseError", error.ptr());
  py::register_exception<SeedConflict>(m, "SeedConflict", error.ptr());
  py::register_exception<TooLarge>(m, "TooLarge", error.ptr());

  m.def(
      "sqdist",
      [](const py::sequence& p, const py::sequence& q) {
        auto d = sqdist_closed_form(*to_point(p).quadruple, *to_point(q).quadruple);
        return py::make_tuple(d.u, d.v);
      },
      "Squared distance as (u, v), meaning (u + v*sqrt33)/144.", py::arg("p"), py::arg("q"));

  m.def(
      "classify",
      [](const py::sequence& p, const py::sequence& q) {
        switch (classify_pair(to_point(p), to_point(q))) {
          case PairClass::Unit: return "unit";
          case PairClass::Double: return "double";
          default: return "other";
        }
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "constraints",
      [](const py::sequence& points, const std::string& kinds) {
        return constraint_list(enumerate_constraints(to_points(points), parse_kind_set(kinds)));
      },
      "List of (kind, members) in canonical order.", py::arg("points"),
      py::arg("kinds") = to_string(KindSet::all()));

  m.def(
      "solve",
      [](const py::sequence& points, const std::vector<std::pair<std::size_t, std::string>>& seed,
         const std::string& kinds) {
        auto pts = to_points(points);
        auto cons = enumerate_constraints(pts, parse_kind_set(kinds));
        auto s = to_seed(seed, pts.size());
        auto cert = solve(pts.size(), cons, s);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < pts.size(); ++i)
          labels.push_back(pts[i].label.empty() ? "pt" + std::to_string(i + 1) : pts[i].label);
        py::dict d;
        d["satisfiable"] = cert.outcome == Outcome::Sat;
        d["coloring"] = cert.outcome == Outcome::Sat ? py::cast(color_names(cert.coloring)) : py::none();
        d["certificate"] = write_certificate(cert, labels);
        d["leaves"] = replay_certificate(cert, pts.size(), cons, s).leaves;
        return d;
      },
      py::arg("points"), py::arg("seed") = std::vector<std::pair<std::size_t, std::string>>{},
      py::arg("kinds") = to_string(KindSet::all()));

  m.def(
      "brute_force",
      [](const py::sequence& points, const std::vector<std::pair<std::size_t, std::string>>& seed,
         const std::string& kinds) {
        auto pts = to_points(points);
        return brute_force(pts.size(), enumerate_constraints(pts, parse_kind_set(kinds)), to_seed(seed, pts.size()));
      },
      py::arg("points"), py::arg("seed") = std::vector<std::pair<std::size_t, std::string>>{},
      py::arg("kinds") = to_string(KindSet::all()));

  m.def("bundled_names", &bundled_names);

  m.def(
      "dataset",
      [](const std::string& name) {
        auto ds = bundled(name);
        py::list pts;
        for (const auto& p : ds.points.points) pts.append(from_point(p));
        py::list seeds;
        for (const auto& s : ds.spec.seeds) seeds.append(py::make_tuple(s.label, std::string(to_string(s.color))));
        py::dict d;
        d["name"] = ds.spec.name;
        d["points"] = pts;
        d["seed"] = seeds;
        d["chain"] = ds.spec.chain;
        d["variant"] = std::string(to_string(ds.spec.variant));
        d["kinds"] = to_string(ds.spec.kinds);
        return d;
      },
      py::arg("name"));

  m.def(
      "check_case",
      [](const std::string& name) {
        auto ds = bundled(name);
        auto v = check_chain(ds.spec, ds.points);
        replay_verdict(v, ds.spec);
        return verdict_dict(v);
      },
      py::arg("name"));

  m.def("check_all_cases", [] {
    auto s = check_all_cases();
    py::list cases;
    for (const auto& v : s.verdicts) cases.append(verdict_dict(v));
    py::dict d;
    d["cases"] = cases;
    d["exhaustive"] = s.exhaustive;
    d["uncovered"] = s.uncovered;
    return d;
  });

  m.def(
      "verify_grid",
      [](int radius) {
        auto r = verify_grid(radius);
        py::dict d;
        d["radius"] = r.radius;
        d["points"] = r.points;
        d["constraints"] = r.constraints;
        d["completions"] = r.completions;
        d["interior"] = r.interior;
        d["distinct_interior_patterns"] = r.distinct_interior_patterns;
        d["pairwise_isometric"] = r.pairwise_isometric;
        d["circle_property"] = r.circle_property;
        d["translation_invariant"] = r.translation_invariant;
        return d;
      },
      py::arg("radius") = 6);

  m.def(
      "to_dimacs",
      [](const py::sequence& points, const std::vector<std::pair<std::size_t, std::string>>& seed,
         const std::string& kinds) {
        auto pts = to_points(points);
        return to_dimacs(pts, enumerate_constraints(pts, parse_kind_set(kinds)), to_seed(seed, pts.size()));
      },
      py::arg("points"), py::arg("seed") = std::vector<std::pair<std::size_t, std::string>>{},
      py::arg("kinds") = to_string(KindSet::all()));

  m.def(
      "parse_dimacs",
      [](const std::string& text) {
        auto cnf = parse_dimacs(text);
        return py::make_tuple(cnf.variables, cnf.clauses);
      },
      "Returns (variables, clauses).", py::arg("text"));

  m.def(
      "render_svg",
      [](const py::sequence& points, const std::vector<std::optional<std::string>>& coloring,
         const std::string& title) {
        auto pts = to_points(points);
        std::vector<std::optional<Color>> cols;
        for (const auto& c : coloring) cols.push_back(c ? std::optional(to_color(*c)) : std::nullopt);
        if (!cols.empty() && cols.size() != pts.size()) throw std::invalid_argument("coloring length mismatch");
        SvgOptions opts;
        opts.title = title;
        return render_svg(pts, cols, opts);
      },
      py::arg("points"), py::arg("coloring") = std::vector<std::optional<std::string>>{},
      py::arg("title") = std::string());
}
