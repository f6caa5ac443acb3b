#include "doctest.h"
#include "support.hpp"
#include "ell3/certificate.hpp"
#include "ell3/error.hpp"

using namespace ell3;

namespace {

Constraint line3(std::size_t a, std::size_t m, std::size_t b) { return {ConstraintKind::Ell3, {a, m, b, 0}}; }
Constraint eq1(std::size_t a, std::size_t b, std::size_t c) { return {ConstraintKind::Eq1, {a, b, c, 0}}; }
Constraint centroid(std::size_t a, std::size_t b, std::size_t c, std::size_t g) {
  return {ConstraintKind::Centroid, {a, b, c, g}};
}

// UNSAT, with a seed that itself violates a constraint counted as UNSAT.
bool solve_sat(std::size_t n, std::span<const Constraint> cons, const Seed& seed) {
  try {
    return solve(n, cons, seed).outcome == Outcome::Sat;
  } catch (const SeedConflict&) {
    return false;
  }
}

struct Fig1Instance {
  std::vector<PlanePoint> points;
  std::vector<Constraint> constraints;
  Seed seed;
  std::vector<std::string> labels;
};

const Fig1Instance& fig1_instance() {
  static const Fig1Instance inst = [] {
    auto ds = bundled("fig1");
    Fig1Instance f;
    f.points = ds.points.points;
    f.constraints = enumerate_constraints(f.points, ds.spec.kinds);
    f.seed = resolve_seed(ds.points, apply_variant(ds.spec.seeds, ds.spec.variant), false);
    f.labels = ds.points.display_labels();
    return f;
  }();
  return inst;
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("constraint semantics") {
    using enum Color;
    CHECK_FALSE(constraint_holds(eq1(0, 1, 2), std::vector{Red, Red, Red}));
    CHECK_FALSE(constraint_holds(eq1(0, 1, 2), std::vector{Blue, Blue, Blue}));
    CHECK(constraint_holds(eq1(0, 1, 2), std::vector{Red, Blue, Blue}));
    CHECK(constraint_holds(centroid(0, 1, 2, 3), std::vector{Red, Blue, Blue, Blue}));
    CHECK_FALSE(constraint_holds(centroid(0, 1, 2, 3), std::vector{Red, Blue, Blue, Red}));
    CHECK(constraint_holds(centroid(0, 1, 2, 3), std::vector{Red, Red, Blue, Red}));
    // A monochromatic triangle is left to its Eq1 constraint.
    CHECK(constraint_holds(centroid(0, 1, 2, 3), std::vector{Red, Red, Red, Red}));
    CHECK_FALSE(constraint_holds(centroid(0, 1, 2, 3), std::vector{Blue, Blue, Blue, Red}));
  }

  TEST_CASE("two equal members force the third") {
    std::vector<Constraint> cons = {line3(0, 1, 2)};
    PartialColoring s(3);
    s.assign(0, Color::Red, Reason::seed());
    s.assign(1, Color::Red, Reason::seed());
    CHECK_FALSE(propagate(s, cons));
    CHECK(s.color(2) == Color::Blue);
    CHECK(s.trail().back() == TrailStep{2, Color::Blue, Reason::forced(0)});
  }

  TEST_CASE("propagation without two colored members changes nothing") {
    std::vector<Constraint> cons = {line3(0, 1, 2), eq1(2, 3, 4)};
    PartialColoring s(5);
    s.assign(0, Color::Red, Reason::seed());
    s.assign(3, Color::Blue, Reason::seed());
    CHECK_FALSE(propagate(s, cons));
    CHECK(s.trail().size() == 2);
  }

  TEST_CASE("a red-blue-blue triangle forces a blue centroid") {
    std::vector<Constraint> cons = {centroid(0, 1, 2, 3)};
    PartialColoring s(4);
    s.assign(0, Color::Red, Reason::seed());
    s.assign(1, Color::Blue, Reason::seed());
    s.assign(2, Color::Blue, Reason::seed());
    CHECK_FALSE(propagate(s, cons));
    CHECK(s.color(3) == Color::Blue);
  }

  TEST_CASE("conflict reports the lowest constraint for each color") {
    // Point 4 is forced red by constraints 1 and 2 and blue by constraint 0.
    std::vector<Constraint> cons = {eq1(0, 1, 4), eq1(2, 3, 4), eq1(2, 4, 5)};
    PartialColoring s(6);
    for (auto [p, c] : Seed{{0, Color::Red}, {1, Color::Red}, {2, Color::Blue}, {3, Color::Blue}, {5, Color::Blue}})
      s.assign(p, c, Reason::seed());
    auto conflict = propagate(s, cons);
    REQUIRE(conflict);
    CHECK(conflict->point == 4);
    CHECK(conflict->forced_red_by == 1);
    CHECK(conflict->forced_blue_by == 0);
  }

  TEST_CASE("small instances") {
    std::vector<Constraint> one = {eq1(0, 1, 2)};
    auto cert = solve(3, one, {{0, Color::Red}});
    CHECK(cert.outcome == Outcome::Sat);
    CHECK(verify_coloring(cert.coloring, one).empty());

    auto empty = solve(0, {}, {});
    CHECK(empty.outcome == Outcome::Sat);
    CHECK(empty.coloring.empty());

    std::vector<Constraint> line = {line3(0, 1, 2)};
    CHECK(brute_force(3, line, {}));
    CHECK_FALSE(brute_force(3, line, {{0, Color::Red}, {1, Color::Red}, {2, Color::Red}}));
    CHECK_THROWS_AS(solve(3, line, {{0, Color::Red}, {1, Color::Red}, {2, Color::Red}}), SeedConflict);
    CHECK_THROWS_AS(solve(3, line, {{0, Color::Red}, {0, Color::Blue}}), SeedConflict);
    CHECK(brute_force(7, {}, {}));
    CHECK_THROWS_AS(brute_force(30, {}, {}), TooLarge);
  }

  TEST_CASE("exactly six colorings of a single triple are valid") {
    std::vector<Constraint> line = {line3(0, 1, 2)};
    CHECK(all_solutions(3, line, {}).size() == 6);
  }

  TEST_CASE("verify_coloring") {
    std::vector<Constraint> cons = {eq1(0, 1, 2)};
    CHECK(verify_coloring(std::vector<Color>(3, Color::Red), cons) == std::vector<std::size_t>{0});
    // Two overlapping ell3 triples on a path of four points.
    std::vector<Constraint> path = {line3(0, 1, 2), line3(1, 2, 3)};
    using enum Color;
    CHECK(verify_coloring(std::vector{Red, Blue, Red, Blue}, path).empty());
    CHECK(verify_coloring(std::vector{Red, Red, Red, Blue}, path) == std::vector<std::size_t>{0});
  }

  TEST_CASE("fig1 is unsat under its seed and the certificate replays") {
    const auto& f = fig1_instance();
    CHECK(f.constraints.size() == 48 + 79 + 9);
    auto cert = solve(f.points.size(), f.constraints, f.seed);
    REQUIRE(cert.outcome == Outcome::Unsat);
    auto replay = replay_certificate(cert, f.points.size(), f.constraints, f.seed);
    CHECK(replay.outcome == Outcome::Unsat);
    CHECK(replay.leaves >= 1);

    auto text = write_certificate(cert, f.labels);
    CHECK(text.rfind("unsat point ", text.size() - 1) != std::string::npos);
    auto parsed = parse_certificate(text, f.labels);
    CHECK(write_certificate(parsed, f.labels) == text);
    CHECK(replay_certificate(parsed, f.points.size(), f.constraints, f.seed).outcome == Outcome::Unsat);
    CHECK(solve(f.points.size(), f.constraints, f.seed).events == cert.events);
  }

  TEST_CASE("fig1 becomes satisfiable with a blue centroid") {
    const auto& f = fig1_instance();
    auto seed = f.seed;
    for (auto& [p, c] : seed)
      if (f.labels[p] == "p2") c = Color::Blue;
    auto cert = solve(f.points.size(), f.constraints, seed);
    REQUIRE(cert.outcome == Outcome::Sat);
    CHECK(verify_coloring(cert.coloring, f.constraints).empty());
    auto text = write_certificate(cert, f.labels);
    auto replay = replay_certificate(parse_certificate(text, f.labels), f.points.size(), f.constraints, seed);
    CHECK(replay.coloring == cert.coloring);
  }

  TEST_CASE("tampered certificates are rejected") {
    const auto& f = fig1_instance();
    const auto text = write_certificate(solve(f.points.size(), f.constraints, f.seed), f.labels);
    auto replay_text = [&](const std::string& t) {
      return replay_certificate(parse_certificate(t, f.labels), f.points.size(), f.constraints, f.seed);
    };

    // Flip the color of the first forced step.
    auto pos = text.find(" forced:");
    auto line_start = text.rfind('\n', pos) + 1;
    auto line = text.substr(line_start, pos - line_start);
    auto flipped = line.find(" red") != std::string::npos ? line.replace(line.find(" red"), 4, " blue")
                                                           : line.replace(line.find(" blue"), 5, " red");
    auto bad = text.substr(0, line_start) + flipped + text.substr(pos);
    CHECK_THROWS_AS(replay_text(bad), CertificateError);

    // Drop the final refutation.
    auto truncated = text.substr(0, text.rfind("unsat point"));
    CHECK_THROWS_AS(replay_text(truncated), CertificateError);

    // Claim sat.
    CHECK_THROWS_AS(replay_text(truncated + "sat\n"), CertificateError);

    CHECK_THROWS_AS(parse_certificate("step 1 point nowhere red seed\n", f.labels), CertificateError);
    CHECK_THROWS_AS(parse_certificate("step 2 point p1 red seed\n", f.labels), CertificateError);
  }

  TEST_CASE("solve agrees with brute force on random fig1 subsets") {
    std::mt19937_64 rng(17);
    const auto& pts = test::fig1_points().points;
    const auto all = enumerate_constraints(pts, KindSet::triples());
    std::uniform_int_distribution<std::size_t> size(3, 18);
    int unsat = 0;
    for (int trial = 0; trial < 300; ++trial) {
      auto idx = trial % 2 ? test::dense_subset(rng, all, size(rng)) : test::random_subset(rng, pts.size(), size(rng));
      auto sub = test::pick(pts, idx);
      auto cons = enumerate_constraints(sub);
      auto seed = test::random_seed(rng, sub.size(), 4);
      const bool expected = brute_force(sub.size(), cons, seed);
      REQUIRE(solve_sat(sub.size(), cons, seed) == expected);
      unsat += !expected;
      try {
        auto cert = solve(sub.size(), cons, seed);
        auto replay = replay_certificate(cert, sub.size(), cons, seed);
        REQUIRE(replay.outcome == cert.outcome);
        if (cert.outcome == Outcome::Sat) REQUIRE(verify_coloring(cert.coloring, cons).empty());
      } catch (const SeedConflict&) {
      }
    }
    CHECK(unsat > 0);
  }

  TEST_CASE("swapping colors preserves satisfiability") {
    std::mt19937_64 rng(23);
    const auto& pts = test::fig1_points().points;
    for (int trial = 0; trial < 150; ++trial) {
      auto sub = test::pick(pts, test::random_subset(rng, pts.size(), 30));
      auto cons = enumerate_constraints(sub);
      auto seed = test::random_seed(rng, sub.size(), 6);
      REQUIRE(solve_sat(sub.size(), cons, seed) == solve_sat(sub.size(), cons, test::swapped(seed)));
    }
    const auto& f = fig1_instance();
    CHECK_FALSE(solve_sat(f.points.size(), f.constraints, test::swapped(f.seed)));
  }

  TEST_CASE("adding points never turns unsat into sat") {
    std::mt19937_64 rng(29);
    const auto& pts = test::fig1_points().points;
    const auto all = enumerate_constraints(pts, KindSet::triples());
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
      auto small_idx = test::dense_subset(rng, all, 15);
      auto big_idx = small_idx;
      for (auto p : test::random_subset(rng, pts.size(), 15))
        if (std::find(big_idx.begin(), big_idx.end(), p) == big_idx.end()) big_idx.push_back(p);
      auto small = test::pick(pts, small_idx), big = test::pick(pts, big_idx);
      auto seed = test::random_seed(rng, small.size(), 6);
      if (solve_sat(small.size(), enumerate_constraints(small), seed)) continue;
      ++checked;
      // The first small.size() points of `big` are `small`, so the seed carries over.
      REQUIRE_FALSE(solve_sat(big.size(), enumerate_constraints(big), seed));
    }
    CHECK(checked > 0);
  }
}
