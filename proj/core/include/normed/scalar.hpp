#pragma once

#include <compare>
#include <string>

#include "normed/norm_value.hpp"
#include "normed/rational.hpp"

namespace normed {

/// Gaussian rational a + bi. In real mode every scalar has b = 0.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(Rational real) : re(std::move(real)) {}  // NOLINT: implicit by design of the field embedding
  Scalar(int real) : re(real) {}                   // NOLINT
  Scalar(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static Scalar i() { return {Rational(0), Rational(1)}; }
  /// i^n for any integer n.
  static Scalar i_power(long n);

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Rational modulus_squared() const { return re * re + im * im; }
  NormValue modulus() const { return NormValue::sqrt_of(modulus_squared()); }
  Scalar conj() const { return {re, -im}; }

  Scalar operator-() const { return {-re, -im}; }
  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o);
  /// Throws DomainError on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
};

std::string format_scalar(const Scalar& value);

}  // namespace normed
