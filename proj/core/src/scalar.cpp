#include "normed/scalar.hpp"

#include "normed/errors.hpp"

namespace normed {

Scalar Scalar::i_power(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0:
      return {Rational(1), Rational(0)};
    case 1:
      return {Rational(0), Rational(1)};
    case 2:
      return {Rational(-1), Rational(0)};
    default:
      return {Rational(0), Rational(-1)};
  }
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  const Rational d = o.modulus_squared();
  if (sgn(d) == 0) throw DomainError("division by the zero scalar");
  *this *= o.conj();
  re /= d;
  im /= d;
  return *this;
}

std::string format_scalar(const Scalar& value) {
  if (value.is_real()) return format_rational(value.re);
  std::string out;
  if (sgn(value.re) != 0) out = format_rational(value.re);
  const Rational mag = rational_abs(value.im);
  if (sgn(value.im) < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  if (mag != 1) out += format_rational(mag);
  return out + "i";
}

}  // namespace normed
