#include "normed/free_space.hpp"

namespace normed::free_space {

FreeVector::FreeVector(NormedSet base) : base_(std::move(base)) {}

FreeVector::FreeVector(NormedSet base, std::map<std::size_t, Scalar> coefficients) : base_(std::move(base)) {
  for (auto& [s, c] : coefficients) {
    if (s >= base_.size()) throw DomainError("coefficient index outside the base");
    if (c.is_zero() || base_.is_zero_norm(s)) continue;
    coefficients_.emplace(s, std::move(c));
  }
}

FreeVector FreeVector::from_labels(NormedSet base, std::span<const std::pair<std::string, Scalar>> terms) {
  std::map<std::size_t, Scalar> sums;
  for (const auto& [label, c] : terms) sums[base.index_of(label)] += c;
  return FreeVector(std::move(base), std::move(sums));
}

Scalar FreeVector::coefficient(std::size_t s) const {
  const auto it = coefficients_.find(s);
  return it == coefficients_.end() ? Scalar() : it->second;
}

FreeVector zeta(const NormedSet& base, std::size_t index) {
  if (index >= base.size()) throw DomainError("generator index outside the base");
  return FreeVector(base, {{index, Scalar(1)}});
}

FreeVector zeta(const NormedSet& base, std::string_view label) { return zeta(base, base.index_of(label)); }

NormValue vector_norm(const FreeVector& v) {
  NormValue total;
  for (const auto& [s, c] : v.coefficients()) total += c.modulus() * v.base().norm(s);
  return total;
}

FreeVector linear_combine(const NormedSet& base, std::span<const std::pair<Scalar, FreeVector>> terms) {
  std::map<std::size_t, Scalar> sums;
  for (const auto& [c, v] : terms) {
    if (!(v.base() == base)) throw DomainError("vectors live over different bases");
    for (const auto& [s, x] : v.coefficients()) sums[s] += c * x;
  }
  return FreeVector(base, std::move(sums));
}

FreeVector linear_combine(std::span<const std::pair<Scalar, FreeVector>> terms) {
  if (terms.empty()) throw DomainError("linear combination of no vectors has no base");
  return linear_combine(terms.front().second.base(), terms);
}

FreeVector operator+(const FreeVector& a, const FreeVector& b) {
  const std::pair<Scalar, FreeVector> terms[] = {{Scalar(1), a}, {Scalar(1), b}};
  return linear_combine(terms);
}

FreeVector operator*(const Scalar& c, const FreeVector& v) {
  const std::pair<Scalar, FreeVector> terms[] = {{c, v}};
  return linear_combine(terms);
}

CoordinateSpace::CoordinateSpace(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (const auto& w : weights_) {
    if (sgn(w) <= 0) throw DomainError("coordinate weights must be positive");
  }
}

void CoordinateSpace::check(const Element& x) const {
  if (x.size() != weights_.size()) throw DomainError("coordinate vector has the wrong dimension");
}

CoordinateSpace::Element CoordinateSpace::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

CoordinateSpace::Element CoordinateSpace::scale(const Scalar& c, const Element& x) const {
  check(x);
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return out;
}

NormValue CoordinateSpace::norm(const Element& x) const {
  check(x);
  NormValue total;
  for (std::size_t i = 0; i < x.size(); ++i) total += x[i].modulus() * weights_[i];
  return total;
}

LinearExtension<FreeSpace> functor_on_map(const NormedMap& alpha) {
  if (!alpha.is_bounded()) throw UnboundedError("map is unbounded; FBanSp is defined on bounded maps only");
  std::vector<FreeVector> images;
  for (std::size_t s = 0; s < alpha.domain().size(); ++s) images.push_back(zeta(alpha.codomain(), alpha(s)));
  return extend(alpha.domain(), std::move(images), FreeSpace(alpha.codomain()));
}

}  // namespace normed::free_space
