#include "normed/norm_value.hpp"

#include "normed/errors.hpp"

namespace normed {

namespace {

constexpr unsigned long kTrialDivisionLimit = 1000;

// Pulls square factors out of `radicand`, multiplying them into `coefficient`.
// Exhaustive for factors below kTrialDivisionLimit and for a square remainder.
void extract_squares(Integer& radicand, Rational& coefficient) {
  if (is_perfect_square(radicand)) {
    coefficient *= Rational(integer_sqrt(radicand));
    radicand = 1;
    return;
  }
  for (unsigned long p = 2; p < kTrialDivisionLimit; ++p) {
    const unsigned long sq = p * p;
    if (radicand < sq) break;
    while (mpz_divisible_ui_p(radicand.get_mpz_t(), sq) != 0) {
      mpz_divexact_ui(radicand.get_mpz_t(), radicand.get_mpz_t(), sq);
      coefficient *= p;
    }
  }
  if (is_perfect_square(radicand)) {
    coefficient *= Rational(integer_sqrt(radicand));
    radicand = 1;
  }
}

// [lo, hi] around sqrt(m) of width 2^-bits.
Interval sqrt_enclosure(const Integer& m, unsigned long bits) {
  Integer scaled = m;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  const Integer root = integer_sqrt(scaled);
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Interval out{Rational(root, den), Rational(root + 1, den)};
  out.lo.canonicalize();
  out.hi.canonicalize();
  if (root * root == scaled) out.hi = out.lo;
  return out;
}

// Smallest k with 2^-k <= x (x > 0).
unsigned long bits_for(const Rational& x) {
  unsigned long k = 0;
  Rational step = 1;
  while (step > x) {
    step /= 2;
    ++k;
  }
  return k;
}

}  // namespace

Rational default_precision() {
  Rational out(1);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), 64);
  return out;
}

NormValue::NormValue(Rational exact) : rational_(std::move(exact)) {
  if (sgn(rational_) < 0) throw DomainError("negative norm value " + format_rational(rational_));
}

NormValue NormValue::sqrt_of(const Rational& radicand) {
  if (sgn(radicand) < 0) throw DomainError("square root of a negative rational");
  NormValue out;
  if (sgn(radicand) == 0) return out;
  // sqrt(p/q) = sqrt(p*q) / q
  out.add_radical(radicand.get_num() * radicand.get_den(), Rational(1, 1) / Rational(radicand.get_den()));
  return out;
}

void NormValue::add_radical(const Integer& radicand, const Rational& coefficient) {
  if (sgn(coefficient) == 0 || sgn(radicand) == 0) return;
  Integer m = radicand;
  Rational c = coefficient;
  extract_squares(m, c);
  if (m == 1) {
    rational_ += c;
  } else {
    radicals_[m] += c;
  }
}

const Rational& NormValue::exact() const {
  if (!is_exact()) throw DomainError("norm value " + to_string() + " is not rational");
  return rational_;
}

Interval NormValue::enclose(const Rational& width) const {
  Interval out{rational_, rational_};
  if (radicals_.empty()) return out;
  const Rational per_term = width / static_cast<unsigned long>(radicals_.size());
  for (const auto& [radicand, coefficient] : radicals_) {
    const unsigned long bits = bits_for(per_term / coefficient);
    const Interval root = sqrt_enclosure(radicand, bits);
    out.lo += coefficient * root.lo;
    out.hi += coefficient * root.hi;
  }
  return out;
}

NormValue& NormValue::operator+=(const NormValue& other) {
  rational_ += other.rational_;
  for (const auto& [radicand, coefficient] : other.radicals_) radicals_[radicand] += coefficient;
  return *this;
}

NormValue& NormValue::operator*=(const Rational& factor) {
  if (sgn(factor) < 0) throw DomainError("norm values scale by nonnegative factors only");
  if (sgn(factor) == 0) {
    *this = NormValue();
    return *this;
  }
  rational_ *= factor;
  for (auto& entry : radicals_) entry.second *= factor;
  return *this;
}

NormValue& NormValue::operator*=(const NormValue& other) {
  NormValue out;
  out.rational_ = rational_ * other.rational_;
  for (const auto& [m, c] : radicals_) out.add_radical(m, c * other.rational_);
  for (const auto& [m, c] : other.radicals_) out.add_radical(m, c * rational_);
  for (const auto& [m1, c1] : radicals_) {
    for (const auto& [m2, c2] : other.radicals_) {
      // sqrt(m1) sqrt(m2) = g sqrt((m1/g)(m2/g)), g = gcd(m1, m2)
      Integer g;
      mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
      const Integer rest = (m1 / g) * (m2 / g);
      out.add_radical(rest, c1 * c2 * Rational(g));
    }
  }
  *this = std::move(out);
  return *this;
}

std::string NormValue::to_string(const Rational& precision) const {
  if (is_exact()) return format_rational(rational_);
  const Interval box = enclose(precision);
  return "[" + format_rational(box.lo) + "," + format_rational(box.hi) + "]";
}

std::optional<std::strong_ordering> try_compare(const NormValue& a, const NormValue& b, const Rational& resolution) {
  if (a == b) return std::strong_ordering::equal;
  if (a.is_exact() && b.is_exact()) {
    const int c = cmp(a.rational_part(), b.rational_part());
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  Rational width(1, 256);
  while (true) {
    const Interval x = a.enclose(width);
    const Interval y = b.enclose(width);
    if (x.hi < y.lo) return std::strong_ordering::less;
    if (x.lo > y.hi) return std::strong_ordering::greater;
    if (width < resolution) return std::nullopt;
    mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), 32);
  }
}

std::strong_ordering compare(const NormValue& a, const NormValue& b) {
  static const Rational resolution = [] {
    Rational r(1);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), 256);
    return r;
  }();
  return try_compare(a, b, resolution).value_or(std::strong_ordering::equal);
}

const NormValue& norm_max(const NormValue& a, const NormValue& b) { return compare(a, b) < 0 ? b : a; }

}  // namespace normed
