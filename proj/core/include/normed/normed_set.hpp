#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normed/rational.hpp"

namespace normed {

/// A finite set S with a norm function f : S -> [0, inf).
///
/// Elements are kept sorted by label, so element indices follow the
/// lexicographic label order and every derived listing is deterministic.
/// The table is immutable and shared between copies.
class NormedSet {
 public:
  struct Element {
    std::string label;
    Rational norm;

    friend bool operator==(const Element&, const Element&) = default;
  };

  NormedSet();
  /// Throws DomainError on a duplicate label or a negative norm.
  explicit NormedSet(std::vector<Element> elements);

  std::size_t size() const { return elements_->size(); }
  bool empty() const { return elements_->empty(); }
  std::span<const Element> elements() const { return *elements_; }
  const std::string& label(std::size_t i) const { return (*elements_)[i].label; }
  const Rational& norm(std::size_t i) const { return (*elements_)[i].norm; }
  bool is_zero_norm(std::size_t i) const { return sgn(norm(i)) == 0; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws DomainError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  /// Indices of S \ f^{-1}(0).
  std::vector<std::size_t> support() const;
  bool all_zero() const;
  Rational max_norm() const;

  friend bool operator==(const NormedSet& a, const NormedSet& b) {
    return a.elements_ == b.elements_ || *a.elements_ == *b.elements_;
  }

 private:
  std::shared_ptr<const std::vector<Element>> elements_;
};

/// Label for a tuple of labels, "(a,b)", escaping separators inside parts.
std::string tuple_label(std::span<const std::string> parts);
/// Label for a member of summand `index` in a disjoint union, "index:label".
std::string tagged_label(std::size_t index, std::string_view label);
/// Label for an equivalence class, "{a,b}".
std::string class_label(std::span<const std::string> members);

}  // namespace normed
