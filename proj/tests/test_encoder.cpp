#include "doctest.h"
#include "support.hpp"
#include "ell3/encoder.hpp"
#include "ell3/error.hpp"

using namespace ell3;

namespace {

std::string body(const std::string& dimacs) {
  return dimacs.substr(dimacs.find("p cnf"));
}

}  // namespace

TEST_SUITE("encoder") {
  TEST_CASE("one triple") {
    std::vector<PlanePoint> pts = {point_from_quadruple(-1, -3, 3, -1, "a"), point_from_quadruple(0, 0, 0, 0, "b"),
                                   point_from_quadruple(1, 3, -3, 1, "c")};
    auto cons = enumerate_constraints(pts);
    auto text = to_dimacs(pts, cons, {});
    CHECK(body(text) == "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
    CHECK(text.rfind("c point 1 a -1 -3 3 -1\n", 0) == 0);
  }

  TEST_CASE("empty instance") {
    CHECK(to_dimacs(std::vector<PlanePoint>{}, {}, {}) == "p cnf 0 0\n");
  }

  TEST_CASE("seeds become trailing unit clauses") {
    std::vector<Constraint> cons = {{ConstraintKind::Eq1, {0, 1, 2, 0}}};
    auto cnf = encode(3, cons, {{2, Color::Blue}, {0, Color::Red}});
    REQUIRE(cnf.clauses.size() == 4);
    CHECK(cnf.clauses[2] == std::vector<int>{-3});
    CHECK(cnf.clauses[3] == std::vector<int>{1});
  }

  TEST_CASE("centroid clauses encode the majority rule") {
    std::vector<Constraint> cons = {{ConstraintKind::Centroid, {0, 1, 2, 3}}};
    auto cnf = encode(4, cons, {});
    CHECK(cnf.clauses.size() == 6);
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      std::vector<Color> col(4);
      for (int i = 0; i < 4; ++i) col[i] = (mask >> i) & 1 ? Color::Red : Color::Blue;
      CnfInstance fixed = cnf;
      for (int i = 0; i < 4; ++i) fixed.clauses.push_back({col[i] == Color::Red ? i + 1 : -(i + 1)});
      CHECK(cnf_satisfiable(fixed) == constraint_holds(cons[0], col));
    }
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 3 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 2 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs(""), SyntaxError);
    CHECK(parse_dimacs("c hi\np cnf 2 1\n1 -2 0\n").clauses == std::vector<std::vector<int>>{{1, -2}});
  }

  TEST_CASE("fig1 header counts match the enumeration") {
    auto ds = bundled("fig1");
    auto cons = enumerate_constraints(ds.points.points, ds.spec.kinds);
    auto seed = resolve_seed(ds.points, ds.spec.seeds, false);
    auto text = to_dimacs(ds.points.points, cons, seed);
    std::size_t triples = 0, centroids = 0;
    for (const auto& c : cons) (c.kind == ConstraintKind::Centroid ? centroids : triples)++;
    const auto expected = "p cnf 56 " + std::to_string(2 * triples + 6 * centroids + seed.size()) + "\n";
    CHECK(body(text).rfind(expected, 0) == 0);
    auto parsed = parse_dimacs(text);
    CHECK(parsed == encode(56, cons, seed));
    CHECK(to_dimacs(ds.points.points, cons, seed) == text);

    auto all = enumerate_constraints(ds.points.points);
    CHECK(parse_dimacs(to_dimacs(ds.points.points, all, seed)).clauses.size() ==
          2 * triples + 6 * (all.size() - cons.size()) + seed.size());
  }

  TEST_CASE("self-check examples") {
    std::vector<PlanePoint> line = {point_from_quadruple(-1, -3, 3, -1), point_from_quadruple(0, 0, 0, 0),
                                    point_from_quadruple(1, 3, -3, 1)};
    auto cons = enumerate_constraints(line);
    CHECK(cnf_selfcheck(line, cons, {{0, Color::Red}, {1, Color::Red}, {2, Color::Red}}));
    CHECK(cnf_selfcheck(line, {}, {}));
    std::vector<PlanePoint> many(16);
    CHECK_THROWS_AS(cnf_selfcheck(many, {}, {}), TooLarge);
  }

  TEST_CASE("self-check on random fig1 subsets") {
    std::mt19937_64 rng(31);
    const auto& pts = test::fig1_points().points;
    std::uniform_int_distribution<std::size_t> size(1, 12);
    for (int trial = 0; trial < 150; ++trial) {
      auto sub = test::pick(pts, test::random_subset(rng, pts.size(), size(rng)));
      auto cons = enumerate_constraints(sub);
      REQUIRE(cnf_selfcheck(sub, cons, test::random_seed(rng, sub.size(), 4)));
    }
  }
}
