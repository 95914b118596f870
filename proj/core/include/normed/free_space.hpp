#pragma once

#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normed/errors.hpp"
#include "normed/norm_value.hpp"
#include "normed/normed_map.hpp"
#include "normed/normed_set.hpp"
#include "normed/scalar.hpp"

/// The free Banach space on a normed set (S, f): finitely supported
/// combinations of point masses delta_s, s in S \ f^{-1}(0), under the
/// weighted l1 norm sum |c_s| f(s).
namespace normed::free_space {

class FreeVector {
 public:
  /// The zero vector over `base`.
  explicit FreeVector(NormedSet base);
  /// Drops zero coefficients and coefficients on zero-norm generators.
  FreeVector(NormedSet base, std::map<std::size_t, Scalar> coefficients);
  /// Sums repeated labels. Throws DomainError on an unknown label.
  static FreeVector from_labels(NormedSet base, std::span<const std::pair<std::string, Scalar>> terms);

  const NormedSet& base() const { return base_; }
  const std::map<std::size_t, Scalar>& coefficients() const { return coefficients_; }
  Scalar coefficient(std::size_t s) const;
  bool is_zero() const { return coefficients_.empty(); }

  friend bool operator==(const FreeVector& a, const FreeVector& b) {
    return a.base_ == b.base_ && a.coefficients_ == b.coefficients_;
  }

 private:
  NormedSet base_;
  std::map<std::size_t, Scalar> coefficients_;
};

/// zeta(s) = delta_s when f(s) != 0, else the zero vector.
FreeVector zeta(const NormedSet& base, std::size_t index);
FreeVector zeta(const NormedSet& base, std::string_view label);

NormValue vector_norm(const FreeVector& v);

/// Canonical sum of c_i v_i. Throws DomainError when the vectors live over
/// different bases, or when `terms` is empty (use the overload with a base).
FreeVector linear_combine(std::span<const std::pair<Scalar, FreeVector>> terms);
FreeVector linear_combine(const NormedSet& base, std::span<const std::pair<Scalar, FreeVector>> terms);

FreeVector operator+(const FreeVector& a, const FreeVector& b);
FreeVector operator*(const Scalar& c, const FreeVector& v);

/// A normed vector space the linear extensions can land in.
template <class Space>
concept NormedTarget = requires(const Space& space, const typename Space::Element& x, const Scalar& c) {
  typename Space::Element;
  { space.zero() } -> std::same_as<typename Space::Element>;
  { space.add(x, x) } -> std::same_as<typename Space::Element>;
  { space.scale(c, x) } -> std::same_as<typename Space::Element>;
  { space.norm(x) } -> std::same_as<NormValue>;
  { space.equal(x, x) } -> std::same_as<bool>;
};

/// The scalar field with the modulus norm.
struct ScalarField {
  using Element = Scalar;

  Scalar zero() const { return {}; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar scale(const Scalar& c, const Scalar& x) const { return c * x; }
  Scalar multiply(const Scalar& a, const Scalar& b) const { return a * b; }
  NormValue norm(const Scalar& x) const { return x.modulus(); }
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }

  friend bool operator==(const ScalarField&, const ScalarField&) = default;
};

/// F^n with the weighted l1 norm sum |x_i| w_i, all weights positive.
class CoordinateSpace {
 public:
  using Element = std::vector<Scalar>;

  /// Throws DomainError for a weight <= 0.
  explicit CoordinateSpace(std::vector<Rational> weights);

  std::size_t dimension() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }

  Element zero() const { return Element(weights_.size()); }
  Element add(const Element& a, const Element& b) const;
  Element scale(const Scalar& c, const Element& x) const;
  NormValue norm(const Element& x) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }

  friend bool operator==(const CoordinateSpace&, const CoordinateSpace&) = default;

 private:
  void check(const Element& x) const;
  std::vector<Rational> weights_;
};

/// V_{S,f} itself as a target.
class FreeSpace {
 public:
  using Element = FreeVector;

  explicit FreeSpace(NormedSet base) : base_(std::move(base)) {}

  const NormedSet& base() const { return base_; }
  FreeVector zero() const { return FreeVector(base_); }
  FreeVector add(const FreeVector& a, const FreeVector& b) const { return a + b; }
  FreeVector scale(const Scalar& c, const FreeVector& x) const { return c * x; }
  NormValue norm(const FreeVector& x) const { return vector_norm(x); }
  bool equal(const FreeVector& a, const FreeVector& b) const { return a == b; }

  friend bool operator==(const FreeSpace&, const FreeSpace&) = default;

 private:
  NormedSet base_;
};

/// Bound constant of the normed-set map s |-> images[s] into a target:
/// max{ |images[s]| / f(s) : f(s) != 0 } u {0}, or nullopt (unbounded) when
/// a zero-norm generator has an image of nonzero norm.
template <NormedTarget Space>
std::optional<NormValue> generator_bound(const NormedSet& base, std::span<const typename Space::Element> images,
                                         const Space& target) {
  if (images.size() != base.size()) throw DomainError("one image per generator is required");
  NormValue best;
  for (std::size_t s = 0; s < base.size(); ++s) {
    NormValue n = target.norm(images[s]);
    if (base.is_zero_norm(s)) {
      if (!n.is_zero()) return std::nullopt;
      continue;
    }
    n *= Rational(1) / base.norm(s);
    if (norm_less(best, n)) best = std::move(n);
  }
  return best;
}

enum class ExtensionMode { bounded, contractive };

/// The unique linear map V_{S,f} -> target sending delta_s to images[s].
template <NormedTarget Space>
class LinearExtension {
 public:
  using Element = typename Space::Element;

  LinearExtension(NormedSet source, Space target, std::vector<Element> images, NormValue operator_norm)
      : source_(std::move(source)),
        target_(std::move(target)),
        images_(std::move(images)),
        operator_norm_(std::move(operator_norm)) {}

  const NormedSet& source() const { return source_; }
  const Space& target() const { return target_; }
  const std::vector<Element>& generator_images() const { return images_; }
  const Element& image(std::size_t s) const { return images_[s]; }
  /// Equals the bound constant of the generator map.
  const NormValue& operator_norm() const { return operator_norm_; }

  Element apply(const FreeVector& v) const {
    if (!(v.base() == source_)) throw DomainError("vector does not live over the extension's source");
    Element acc = target_.zero();
    for (const auto& [s, c] : v.coefficients()) acc = target_.add(acc, target_.scale(c, images_[s]));
    return acc;
  }

  /// (extension o zeta)(s).
  Element on_generator(std::size_t s) const { return apply(zeta(source_, s)); }

 private:
  NormedSet source_;
  Space target_;
  std::vector<Element> images_;
  NormValue operator_norm_;
};

/// Throws UnboundedError when the generator map is unbounded and, in
/// contractive mode, NotContractiveError when its bound exceeds 1.
template <NormedTarget Space>
LinearExtension<Space> extend(const NormedSet& base, std::vector<typename Space::Element> images, Space target,
                              ExtensionMode mode = ExtensionMode::bounded) {
  std::optional<NormValue> bound = generator_bound<Space>(base, images, target);
  if (!bound) {
    throw UnboundedError("generator map is unbounded: a zero-norm generator has an image of nonzero norm");
  }
  if (mode == ExtensionMode::contractive && norm_less(NormValue(1), *bound)) {
    throw NotContractiveError("generator map is not contractive: bound constant " + bound->to_string() + " > 1");
  }
  return LinearExtension<Space>(base, std::move(target), std::move(images), std::move(*bound));
}

/// Label-keyed convenience: every generator must receive exactly one image.
template <NormedTarget Space>
std::vector<typename Space::Element> images_from_labels(
    const NormedSet& base, std::span<const std::pair<std::string, typename Space::Element>> pairs) {
  std::vector<std::optional<typename Space::Element>> slots(base.size());
  for (const auto& [label, value] : pairs) {
    auto& slot = slots[base.index_of(label)];
    if (slot) throw DomainError("label \"" + label + "\" has two images");
    slot = value;
  }
  std::vector<typename Space::Element> out;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (!slots[s]) throw DomainError("no image for generator \"" + base.label(s) + "\"");
    out.push_back(std::move(*slots[s]));
  }
  return out;
}

/// FBanSp on morphisms: the extension of zeta_codomain o alpha.
LinearExtension<FreeSpace> functor_on_map(const NormedMap& alpha);

/// second o first, where first lands in the free space second starts from.
template <NormedTarget Space>
LinearExtension<Space> compose(const LinearExtension<Space>& second, const LinearExtension<FreeSpace>& first) {
  if (!(first.target().base() == second.source())) throw DomainError("extensions are not composable");
  std::vector<typename Space::Element> images;
  for (std::size_t s = 0; s < first.source().size(); ++s) images.push_back(second.apply(first.image(s)));
  return extend(first.source(), std::move(images), second.target());
}

/// Contractive extension of the rescaled map
///   s |-> (f(s) / |phi(s)|) phi(s)   (0 when phi(s) = 0),
/// which satisfies |phi(s)| (ext o zeta)(s) = f(s) phi(s) for every s.
/// Throws IrrationalNormError when some |phi(s)| is not rational.
template <NormedTarget Space>
LinearExtension<Space> scaled_free_extend(const NormedSet& base, std::vector<typename Space::Element> images,
                                          Space target) {
  if (images.size() != base.size()) throw DomainError("one image per generator is required");
  for (std::size_t s = 0; s < base.size(); ++s) {
    const NormValue n = target.norm(images[s]);
    if (n.is_zero()) {
      images[s] = target.zero();
      continue;
    }
    if (!n.is_exact()) {
      throw IrrationalNormError("image of \"" + base.label(s) + "\" has irrational norm " + n.to_string() +
                                "; its rescaling factor is not rational");
    }
    images[s] = target.scale(Scalar(Rational(base.norm(s) / n.exact())), images[s]);
  }
  return extend(base, std::move(images), std::move(target), ExtensionMode::contractive);
}

struct RoundTripReport {
  std::size_t maps_checked = 0;
  std::size_t vectors_checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Both directions of the hom-set bijection on sampled data:
///   extend(phi) o zeta == phi            for every bounded sample phi, and
///   extend(L o zeta)    == L on `vectors` for L the extension of each sample.
/// Unbounded samples are skipped.
template <NormedTarget Space>
RoundTripReport hom_roundtrip_check(const NormedSet& base, const Space& target,
                                    const std::vector<std::vector<typename Space::Element>>& samples,
                                    const std::vector<FreeVector>& vectors) {
  RoundTripReport report;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& phi = samples[k];
    if (!generator_bound<Space>(base, phi, target)) continue;
    ++report.maps_checked;
    const LinearExtension<Space> ext = extend(base, phi, target);
    for (std::size_t s = 0; s < base.size(); ++s) {
      if (!target.equal(ext.on_generator(s), phi[s])) {
        report.failures.push_back("sample " + std::to_string(k) + ": extension o zeta differs at \"" +
                                  base.label(s) + "\"");
      }
    }
    std::vector<typename Space::Element> restricted;
    for (std::size_t s = 0; s < base.size(); ++s) restricted.push_back(ext.on_generator(s));
    const LinearExtension<Space> again = extend(base, std::move(restricted), target);
    for (const auto& v : vectors) {
      ++report.vectors_checked;
      if (!target.equal(again.apply(v), ext.apply(v))) {
        report.failures.push_back("sample " + std::to_string(k) + ": extend(L o zeta) differs from L");
      }
    }
  }
  return report;
}

}  // namespace normed::free_space
