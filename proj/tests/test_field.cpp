#include <array>
#include <cmath>
#include <map>

#include "doctest.h"
#include "support.hpp"

using namespace ell3;

namespace {

// Reference multiplication: expand term by term, writing sqrt(i*j) as
// s*sqrt(t) with t squarefree. Shares nothing with the multiplication table.
FieldScalar expand_mul(const FieldScalar& u, const FieldScalar& v) {
  const std::array<long, 4> radicand = {1, 3, 11, 33};
  const std::array<Rational, 4> a = {u.r0(), u.r3(), u.r11(), u.r33()};
  const std::array<Rational, 4> b = {v.r0(), v.r3(), v.r11(), v.r33()};
  std::map<long, Rational> acc;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      long n = radicand[i] * radicand[j], s = 1;
      for (long f = 2; f * f <= n; ++f)
        while (n % (f * f) == 0) n /= f * f, s *= f;
      acc[n] += a[i] * b[j] * s;
    }
  }
  return {acc[1], acc[3], acc[11], acc[33]};
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("addition examples") {
    CHECK(fs_add(FieldScalar(1), FieldScalar(0)) == FieldScalar(1));
    const FieldScalar half_root3(0, Rational(1, 2), 0, 0);
    CHECK(fs_add(half_root3, half_root3) == FieldScalar::sqrt3());
    CHECK(fs_add(FieldScalar(1, 0, 0, 1), FieldScalar(2, 0, 0, -1)) == FieldScalar(3));
  }

  TEST_CASE("multiplication examples") {
    CHECK(fs_mul(FieldScalar::sqrt3(), FieldScalar::sqrt11()) == FieldScalar::sqrt33());
    CHECK(fs_mul(FieldScalar::sqrt3(), FieldScalar::sqrt3()) == FieldScalar(3));
    CHECK(fs_mul(FieldScalar::sqrt11(), FieldScalar::sqrt33()) == FieldScalar(0, 11, 0, 0));
    CHECK(fs_mul(FieldScalar::sqrt33(), FieldScalar::sqrt33()) == FieldScalar(33));
    const FieldScalar x(0, Rational(1, 12), Rational(1, 12), 0);
    CHECK(fs_mul(x, x) == FieldScalar(Rational(14, 144), 0, 0, Rational(2, 144)));
  }

  TEST_CASE("multiplication agrees with term-by-term expansion") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
      auto u = test::random_scalar(rng), v = test::random_scalar(rng);
      REQUIRE(fs_mul(u, v) == expand_mul(u, v));
    }
  }

  TEST_CASE("rational comparison") {
    CHECK(fs_eq_rational(FieldScalar(1), 1));
    CHECK_FALSE(fs_eq_rational(FieldScalar::sqrt33(), 33));
    CHECK_FALSE(fs_eq_rational(FieldScalar(168, 0, 0, -24) / 144, 1));
    CHECK(fs_eq_rational(FieldScalar(Rational(2, 4)), Rational(1, 2)));
  }

  TEST_CASE("coefficients stay canonical") {
    FieldScalar x(Rational(2, 4), Rational(-3, -6), 0, Rational(0, 5));
    CHECK(x.r0().get_num() == 1);
    CHECK(x.r0().get_den() == 2);
    CHECK(x.r3() == Rational(1, 2));
    CHECK(x.r3().get_den() > 0);
    CHECK((x - x).is_zero());
    CHECK(FieldScalar(Rational(1, 3)).to_string() == "1/3");
    CHECK(FieldScalar(0, 1, 0, 0).to_string() == "sqrt3");
  }

  TEST_CASE("approximation") {
    CHECK(fs_approx(FieldScalar(0)) == 0.0);
    CHECK(std::abs(fs_approx(FieldScalar::sqrt3()) - 1.7320508075688772) < 1e-12);
    CHECK(std::abs(fs_approx(FieldScalar(Rational(1, 3))) - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(fs_approx(FieldScalar::sqrt33()) - std::sqrt(33.0)) < 1e-12);
  }

  TEST_CASE("approximation is multiplicative") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
      auto u = test::random_scalar(rng, 100), v = test::random_scalar(rng, 100);
      const double exact = fs_approx(fs_mul(u, v));
      const double approx = fs_approx(u) * fs_approx(v);
      REQUIRE(std::abs(exact - approx) <= 1e-9 * std::max(1.0, std::abs(exact)));
    }
  }

  TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(2024);
    const FieldScalar zero(0), one(1);
    for (int i = 0; i < 1000; ++i) {
      auto a = test::random_scalar(rng), b = test::random_scalar(rng), c = test::random_scalar(rng);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + zero == a);
      REQUIRE(a * one == a);
      REQUIRE((a + (-a)).is_zero());
    }
  }

  TEST_CASE("representation order is total and consistent with equality") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
      auto a = test::random_scalar(rng, 3), b = test::random_scalar(rng, 3);
      auto ab = lex_compare(a, b), ba = lex_compare(b, a);
      CHECK((ab == 0) == (a == b));
      CHECK((ab < 0) == (ba > 0));
    }
  }
}
