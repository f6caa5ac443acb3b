#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace ell3 {

using Rational = mpq_class;

/**
 * Element r0 + r3*sqrt(3) + r11*sqrt(11) + r33*sqrt(33) of Q(sqrt 3, sqrt 11).
 *
 * {1, sqrt 3, sqrt 11, sqrt 33} is a basis over Q, so equality is
 * coefficientwise. Every coefficient is kept in lowest terms with a positive
 * denominator after each operation. There is no ordering of field values;
 * `lex_compare` is a total order on representations for use as a map key.
 */
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(Rational r0, Rational r3, Rational r11, Rational r33);
  explicit FieldScalar(const Rational& q) : FieldScalar(q, 0, 0, 0) {}
  explicit FieldScalar(long q) : FieldScalar(Rational(q), 0, 0, 0) {}

  static FieldScalar sqrt3() { return {0, 1, 0, 0}; }
  static FieldScalar sqrt11() { return {0, 0, 1, 0}; }
  static FieldScalar sqrt33() { return {0, 0, 0, 1}; }

  const Rational& r0() const { return r0_; }
  const Rational& r3() const { return r3_; }
  const Rational& r11() const { return r11_; }
  const Rational& r33() const { return r33_; }

  bool is_zero() const { return sgn(r0_) == 0 && sgn(r3_) == 0 && sgn(r11_) == 0 && sgn(r33_) == 0; }

  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  FieldScalar& operator/=(const Rational& q);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const Rational& q) { return a /= q; }
  friend FieldScalar operator-(const FieldScalar& a);

  friend bool operator==(const FieldScalar& a, const FieldScalar& b);

  // Representation order, not a numeric order.
  friend std::strong_ordering lex_compare(const FieldScalar& a, const FieldScalar& b);

  std::string to_string() const;

 private:
  void canonicalize();

  Rational r0_, r3_, r11_, r33_;
};

FieldScalar fs_add(const FieldScalar& u, const FieldScalar& v);
FieldScalar fs_mul(const FieldScalar& u, const FieldScalar& v);

/// True iff u is the rational q (all irrational coefficients zero).
bool fs_eq_rational(const FieldScalar& u, const Rational& q);

/// Double-precision value. For coefficients bounded by 1e6 in magnitude the
/// absolute error is below 1e-12 relative to max(1, |u|). Used only for
/// rendering; no verification path calls it.
double fs_approx(const FieldScalar& u);

struct FieldScalarLess {
  bool operator()(const FieldScalar& a, const FieldScalar& b) const { return lex_compare(a, b) < 0; }
};

}  // namespace ell3
