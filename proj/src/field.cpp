#include "ell3/field.hpp"

#include <cmath>
#include <sstream>

namespace ell3 {

namespace {

std::strong_ordering cmp(const Rational& a, const Rational& b) {
  int c = ::cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

void append_term(std::ostringstream& out, const Rational& coeff, const char* surd, bool& first) {
  if (sgn(coeff) == 0) return;
  if (!first) out << (sgn(coeff) > 0 ? " + " : " - ");
  else if (sgn(coeff) < 0) out << "-";
  first = false;
  Rational mag = abs(coeff);
  if (*surd == '\0') {
    out << mag.get_str();
  } else if (mag == 1) {
    out << surd;
  } else {
    out << mag.get_str() << "*" << surd;
  }
}

}  // namespace

FieldScalar::FieldScalar(Rational r0, Rational r3, Rational r11, Rational r33)
    : r0_(std::move(r0)), r3_(std::move(r3)), r11_(std::move(r11)), r33_(std::move(r33)) {
  canonicalize();
}

void FieldScalar::canonicalize() {
  r0_.canonicalize();
  r3_.canonicalize();
  r11_.canonicalize();
  r33_.canonicalize();
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  r0_ += o.r0_;
  r3_ += o.r3_;
  r11_ += o.r11_;
  r33_ += o.r33_;
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  r0_ -= o.r0_;
  r3_ -= o.r3_;
  r11_ -= o.r11_;
  r33_ -= o.r33_;
  return *this;
}

// sqrt3*sqrt11 = sqrt33, sqrt3*sqrt33 = 3 sqrt11, sqrt11*sqrt33 = 11 sqrt3.
FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  const FieldScalar& a = *this;
  Rational c0 = a.r0_ * o.r0_ + 3 * a.r3_ * o.r3_ + 11 * a.r11_ * o.r11_ + 33 * a.r33_ * o.r33_;
  Rational c3 = a.r0_ * o.r3_ + a.r3_ * o.r0_ + 11 * (a.r11_ * o.r33_ + a.r33_ * o.r11_);
  Rational c11 = a.r0_ * o.r11_ + a.r11_ * o.r0_ + 3 * (a.r3_ * o.r33_ + a.r33_ * o.r3_);
  Rational c33 = a.r0_ * o.r33_ + a.r33_ * o.r0_ + a.r3_ * o.r11_ + a.r11_ * o.r3_;
  r0_ = std::move(c0);
  r3_ = std::move(c3);
  r11_ = std::move(c11);
  r33_ = std::move(c33);
  return *this;
}

FieldScalar& FieldScalar::operator/=(const Rational& q) {
  r0_ /= q;
  r3_ /= q;
  r11_ /= q;
  r33_ /= q;
  return *this;
}

FieldScalar operator-(const FieldScalar& a) {
  return {-a.r0_, -a.r3_, -a.r11_, -a.r33_};
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  return a.r0_ == b.r0_ && a.r3_ == b.r3_ && a.r11_ == b.r11_ && a.r33_ == b.r33_;
}

std::strong_ordering lex_compare(const FieldScalar& a, const FieldScalar& b) {
  if (auto c = cmp(a.r0_, b.r0_); c != 0) return c;
  if (auto c = cmp(a.r3_, b.r3_); c != 0) return c;
  if (auto c = cmp(a.r11_, b.r11_); c != 0) return c;
  return cmp(a.r33_, b.r33_);
}

std::string FieldScalar::to_string() const {
  std::ostringstream out;
  bool first = true;
  append_term(out, r0_, "", first);
  append_term(out, r3_, "sqrt3", first);
  append_term(out, r11_, "sqrt11", first);
  append_term(out, r33_, "sqrt33", first);
  if (first) return "0";
  return out.str();
}

FieldScalar fs_add(const FieldScalar& u, const FieldScalar& v) { return u + v; }
FieldScalar fs_mul(const FieldScalar& u, const FieldScalar& v) { return u * v; }

bool fs_eq_rational(const FieldScalar& u, const Rational& q) {
  return u.r0() == q && sgn(u.r3()) == 0 && sgn(u.r11()) == 0 && sgn(u.r33()) == 0;
}

double fs_approx(const FieldScalar& u) {
  static const double kSqrt3 = std::sqrt(3.0);
  static const double kSqrt11 = std::sqrt(11.0);
  static const double kSqrt33 = std::sqrt(33.0);
  return u.r0().get_d() + u.r3().get_d() * kSqrt3 + u.r11().get_d() * kSqrt11 +
         u.r33().get_d() * kSqrt33;
}

}  // namespace ell3
