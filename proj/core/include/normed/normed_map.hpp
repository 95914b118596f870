#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "normed/normed_set.hpp"
#include "normed/rational.hpp"

namespace normed {

/// The bound constant of a map: a nonnegative rational, or the marker for
/// an unbounded map. Also reused for the infimum lambda of a bounded map,
/// where the marker reads as +infinity (infimum over an empty set).
class Bound {
 public:
  Bound(Rational value) : value_(std::move(value)) {}  // NOLINT
  static Bound unbounded() { return Bound(); }

  bool is_bounded() const { return value_.has_value(); }
  /// Precondition: is_bounded().
  const Rational& value() const { return *value_; }

  /// Exact test `this <= limit`; false when unbounded.
  bool at_most(const Rational& limit) const { return value_ && *value_ <= limit; }

  std::string to_string(std::string_view unbounded_text = "unbounded") const;

  friend bool operator==(const Bound&, const Bound&) = default;

 private:
  Bound() = default;
  std::optional<Rational> value_;
};

/// crh for s |-> image_norms[s] against source norms f:
/// max{ g/f : f != 0 } u {0}, or unbounded when some f(s) = 0 has g != 0.
Bound bound_constant(std::span<const Rational> source_norms, std::span<const Rational> image_norms);

/// A total function between normed sets, stored as an index table.
class NormedMap {
 public:
  /// Throws DomainError when the table is not total or leaves the codomain.
  NormedMap(NormedSet domain, NormedSet codomain, std::vector<std::size_t> assignment);

  /// Builds the table from (domain label, codomain label) pairs; every
  /// domain label must appear exactly once.
  static NormedMap from_labels(NormedSet domain, NormedSet codomain,
                               std::span<const std::pair<std::string, std::string>> pairs);
  static NormedMap identity(const NormedSet& set);

  const NormedSet& domain() const { return domain_; }
  const NormedSet& codomain() const { return codomain_; }
  std::span<const std::size_t> assignment() const { return assignment_; }
  std::size_t operator()(std::size_t s) const { return assignment_[s]; }

  /// Bound constant; computed on first use and shared with copies.
  const Bound& crh() const;
  bool is_bounded() const { return crh().is_bounded(); }
  bool is_contractive() const { return crh().at_most(Rational(1)); }

  bool is_injective() const;
  bool is_surjective() const;
  /// g o phi == f.
  bool is_norm_preserving() const;

  friend bool operator==(const NormedMap& a, const NormedMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.assignment_ == b.assignment_;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::optional<Bound> crh;
  };

  NormedSet domain_;
  NormedSet codomain_;
  std::vector<std::size_t> assignment_;
  std::shared_ptr<Cache> cache_;
};

/// Pointwise composite `second o first`. Throws DomainError when
/// first.codomain() != second.domain(). When both maps are bounded the
/// result satisfies crh(second o first) <= crh(second) * crh(first).
NormedMap compose(const NormedMap& second, const NormedMap& first);

bool is_contractive(const NormedMap& map);

}  // namespace normed
