#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "normed/rational.hpp"

namespace normed {

struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Default refinement width used when printing: 2^-64.
Rational default_precision();

/// A nonnegative real of the form  q + sum_i c_i * sqrt(m_i)  with rational
/// q, c_i >= 0 and integer radicands m_i > 1 that carry no small square
/// factors. Every norm in the library is a NormValue: it is an exact
/// rational whenever every contributing modulus is rational, otherwise it
/// can be enclosed in rational intervals of any positive width.
class NormValue {
 public:
  NormValue() = default;
  NormValue(Rational exact);  // NOLINT: every nonnegative rational is a norm value
  NormValue(int exact) : NormValue(Rational(exact)) {}  // NOLINT

  /// sqrt(radicand) for radicand >= 0.
  static NormValue sqrt_of(const Rational& radicand);

  bool is_exact() const { return radicals_.empty(); }
  bool is_zero() const { return radicals_.empty() && sgn(rational_) == 0; }
  /// Throws DomainError when the value is not rational.
  const Rational& exact() const;
  const Rational& rational_part() const { return rational_; }
  const std::map<Integer, Rational>& radical_terms() const { return radicals_; }

  /// Rational enclosure [lo, hi] with hi - lo <= width (width > 0).
  Interval enclose(const Rational& width) const;

  NormValue& operator+=(const NormValue& other);
  NormValue& operator*=(const NormValue& other);
  /// Scaling by a nonnegative rational.
  NormValue& operator*=(const Rational& factor);

  friend NormValue operator+(NormValue a, const NormValue& b) { return a += b; }
  friend NormValue operator*(NormValue a, const NormValue& b) { return a *= b; }
  friend NormValue operator*(NormValue a, const Rational& b) { return a *= b; }
  friend NormValue operator*(const Rational& a, NormValue b) { return b *= a; }

  /// Structural equality of canonical forms.
  friend bool operator==(const NormValue& a, const NormValue& b) {
    return a.rational_ == b.rational_ && a.radicals_ == b.radicals_;
  }

  /// Exact rational text, or "[lo,hi]" of width at most `precision`.
  std::string to_string(const Rational& precision = default_precision()) const;

 private:
  void add_radical(const Integer& radicand, const Rational& coefficient);

  Rational rational_;
  std::map<Integer, Rational> radicals_;
};

/// Three-way comparison. Exact for rational operands and for structurally
/// equal ones; otherwise intervals are refined down to `resolution`, and
/// std::nullopt means the operands were not separated at that width.
std::optional<std::strong_ordering> try_compare(const NormValue& a, const NormValue& b,
                                                const Rational& resolution);

/// try_compare at width 2^-256, treating an unseparated pair as equal.
std::strong_ordering compare(const NormValue& a, const NormValue& b);

inline bool norm_less_equal(const NormValue& a, const NormValue& b) { return compare(a, b) <= 0; }
inline bool norm_less(const NormValue& a, const NormValue& b) { return compare(a, b) < 0; }
const NormValue& norm_max(const NormValue& a, const NormValue& b);

}  // namespace normed
