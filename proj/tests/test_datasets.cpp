#include "doctest.h"
#include "support.hpp"
#include "ell3/error.hpp"

using namespace ell3;

TEST_SUITE("datasets") {
  TEST_CASE("point lines") {
    auto f = parse_pointset("-4 0 0 0 p1\n2 0 0 -2 q3'\n");
    REQUIRE(f.points.size() == 2);
    CHECK(*f.points[0].quadruple == Quadruple{-4, 0, 0, 0});
    CHECK(f.points[0].label == "p1");
    CHECK(*f.points[1].quadruple == Quadruple{2, 0, 0, -2});
    CHECK(f.find("q3'") == 1u);
    CHECK_FALSE(f.find("q4"));
    CHECK(parse_pointset("").points.empty());
    CHECK(parse_pointset("# only a comment\n\n").points.empty());
  }

  TEST_CASE("unlabelled points display by position") {
    auto f = parse_pointset("1 0 0 0 a\n2 0 0 0\n");
    CHECK(f.display_label(0) == "a");
    CHECK(f.display_label(1) == "pt2");
  }

  TEST_CASE("point file errors") {
    try {
      parse_pointset("1 0 0 0 a\n1 0 x 0 b\n");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_pointset("1 0 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_pointset("1 0 0 0 a b\n"), SyntaxError);
    CHECK_THROWS_AS(parse_pointset("1 0 0 99999999999999999999\n"), SyntaxError);
    CHECK_THROWS_AS(parse_pointset("1 0 0 0 a\n2 0 0 0 a\n"), DuplicateLabel);
    CHECK_THROWS_AS(parse_pointset("1 0 0 0 a\n1 0 0 0 b\n"), DuplicatePoint);
  }

  TEST_CASE("case file errors") {
    CHECK_THROWS_AS(parse_case("seed p1 green\n"), SyntaxError);
    CHECK_THROWS_AS(parse_case("frobnicate\n"), SyntaxError);
    CHECK_THROWS_AS(parse_case("variant sideways\n"), SyntaxError);
    CHECK_THROWS_AS(parse_case("kinds eq1,eq7\n"), SyntaxError);
    CHECK_THROWS_AS(parse_case("seed p1 red\nseed p1 blue\n"), DuplicateLabel);
    CHECK_THROWS_AS(parse_case("seed s1 red\nchain s1 s2\n"), DuplicateLabel);
    CHECK_THROWS_AS(parse_case("chain s1 s2 s1\n"), DuplicateLabel);
  }

  TEST_CASE("chains may span several lines") {
    auto spec = parse_case("chain s1 s2\nchain s3\n");
    CHECK(spec.chain == std::vector<std::string>{"s1", "s2", "s3"});
    CHECK(spec.kinds == KindSet::all());
    CHECK(spec.variant == Variant::Identity);
  }

  TEST_CASE("bundled files round-trip byte for byte") {
    for (const auto& name : bundled_names()) {
      CAPTURE(name);
      const auto ds = bundled(name);
      CHECK(serialize_pointset(ds.points) == bundled_file(ds.spec.points_name + ".pts"));
      CHECK(serialize_case(ds.spec) == bundled_file(name + ".case"));
    }
  }

  TEST_CASE("bundled sizes") {
    CHECK(bundled("fig1").points.points.size() == 56);
    CHECK(bundled("fig1").spec.chain.empty());
    const std::size_t chain_lengths[] = {18, 21, 14, 25, 18, 19};
    for (int k = 1; k <= 6; ++k) {
      const auto ds = bundled("case" + std::to_string(k));
      CHECK(ds.spec.chain.size() == chain_lengths[k - 1]);
      for (std::size_t i = 0; i < ds.spec.chain.size(); ++i) CHECK(ds.spec.chain[i] == "s" + std::to_string(i + 1));
    }
    const auto case1 = bundled("case1");
    CHECK(case1.points.points.size() == 5 + 18);
    CHECK_THROWS_AS(bundled("case7"), UnknownDataset);
  }

  TEST_CASE("fig1 labels") {
    const auto& f = test::fig1_points();
    for (const char* l : {"p1", "p2", "p3", "p4", "q1", "q2", "q3", "q3'", "q4", "q5"}) CHECK(f.find(l));
    CHECK(*f.points[*f.find("p1")].quadruple == Quadruple{-4, 0, 0, 0});
    CHECK(*f.points[*f.find("p2")].quadruple == Quadruple{0, 0, 0, 0});
  }

  TEST_CASE("bundled seeds") {
    auto seeds = [](const std::string& name) {
      std::map<std::string, Color> m;
      for (const auto& s : bundled(name).spec.seeds) m.emplace(s.label, s.color);
      return m;
    };
    const auto base = seeds("fig1");
    CHECK(base == std::map<std::string, Color>{
                      {"p1", Color::Red}, {"p2", Color::Red}, {"p3", Color::Blue}, {"p4", Color::Blue}});
    auto c1 = seeds("case1");
    CHECK(c1.at("q1") == Color::Red);
    CHECK(c1.at("q2") == Color::Blue);
    auto c6 = seeds("case6");
    for (const char* l : {"q1", "q2", "q3", "q3'", "q4", "q5"}) CHECK(c6.at(l) == Color::Blue);
    for (const auto& name : bundled_names())
      for (const auto& [l, c] : base) CHECK(seeds(name).at(l) == c);
  }

  TEST_CASE("seed resolution") {
    const auto ds = bundled("case1");
    CHECK_THROWS_AS(resolve_seed(ds.points, ds.spec.seeds, false), UnknownLabel);
    auto seed = resolve_seed(ds.points, ds.spec.seeds, true);
    CHECK(seed.size() == 5);
  }

  TEST_CASE("mirror map of the base configuration") {
    const auto& m = base_mirror_map();
    CHECK(m.at("p1") == "p1");
    CHECK(m.at("p2") == "p2");
    CHECK(m.at("p3") == "p4");
    CHECK(m.at("q1") == "q2");
    CHECK(m.at("q4") == "q5");
    for (const auto& [from, to] : m) CHECK(m.at(to) == from);
  }

  TEST_CASE("variants") {
    std::vector<SeedEntry> s = {{"p3", Color::Red}, {"q1", Color::Blue}};
    CHECK(apply_variant(s, Variant::Identity) == s);
    auto swapped = apply_variant(s, Variant::Swap);
    CHECK(swapped[0].color == Color::Blue);
    auto mirrored = apply_variant(s, Variant::Mirror);
    CHECK(mirrored[0].label == "p4");
    CHECK(mirrored[1].label == "q2");
    CHECK(apply_variant(apply_variant(s, Variant::MirrorSwap), Variant::MirrorSwap) == s);
    for (auto v : kVariantSearchOrder) CHECK(parse_variant(to_string(v)) == v);
  }

  TEST_CASE("reflecting a point set twice is the identity") {
    const auto& f = test::fig1_points();
    auto twice = reflect_pointset(reflect_pointset(f));
    REQUIRE(twice.points.size() == f.points.size());
    for (std::size_t i = 0; i < f.points.size(); ++i) {
      CHECK(twice.points[i].same_position(f.points[i]));
      CHECK(twice.points[i].label == f.points[i].label);
    }
  }
}
