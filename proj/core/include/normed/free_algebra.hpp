#pragma once

#include <concepts>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "normed/errors.hpp"
#include "normed/free_space.hpp"
#include "normed/norm_value.hpp"
#include "normed/normed_map.hpp"
#include "normed/normed_set.hpp"
#include "normed/scalar.hpp"

/// The free Banach algebra on (S, f): the non-unital tensor algebra of
/// V_{S,f}. Its basis tensors are nonempty words over S \ f^{-1}(0); a
/// word's weight is the product of f over its letters and the norm is the
/// weighted l1 norm over words.
namespace normed::free_algebra {

/// Letters are generator indices of the base set.
using Word = std::vector<std::size_t>;

Rational word_weight(const NormedSet& base, const Word& word);

class TensorElement {
 public:
  explicit TensorElement(NormedSet base);
  /// Drops zero coefficients and words through zero-norm generators.
  /// Throws DomainError on an empty word or a letter outside the base.
  TensorElement(NormedSet base, std::map<Word, Scalar> terms);

  const NormedSet& base() const { return base_; }
  /// Lexicographic word order.
  const std::map<Word, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Word& w) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.base_ == b.base_ && a.terms_ == b.terms_;
  }

 private:
  NormedSet base_;
  std::map<Word, Scalar> terms_;
};

TensorElement operator+(const TensorElement& a, const TensorElement& b);
TensorElement operator*(const Scalar& c, const TensorElement& x);

/// kappa(s): the one-letter word s, or zero when f(s) = 0.
TensorElement kappa(const NormedSet& base, std::size_t index);
TensorElement kappa(const NormedSet& base, std::string_view label);

/// Bilinear extension of word concatenation.
TensorElement alg_mul(const TensorElement& x, const TensorElement& y);
NormValue alg_norm(const TensorElement& x);
/// x^n for n >= 1.
TensorElement power(const TensorElement& x, unsigned n);

/// The free algebra as a normed algebra target.
class TensorAlgebra {
 public:
  using Element = TensorElement;

  explicit TensorAlgebra(NormedSet base) : base_(std::move(base)) {}

  const NormedSet& base() const { return base_; }
  TensorElement zero() const { return TensorElement(base_); }
  TensorElement add(const TensorElement& a, const TensorElement& b) const { return a + b; }
  TensorElement scale(const Scalar& c, const TensorElement& x) const { return c * x; }
  TensorElement multiply(const TensorElement& a, const TensorElement& b) const { return alg_mul(a, b); }
  NormValue norm(const TensorElement& x) const { return alg_norm(x); }
  bool equal(const TensorElement& a, const TensorElement& b) const { return a == b; }

  friend bool operator==(const TensorAlgebra&, const TensorAlgebra&) = default;

 private:
  NormedSet base_;
};

/// n x n matrices over the scalars, maximum absolute column sum norm.
class MatrixAlgebra {
 public:
  struct Matrix {
    std::size_t size = 0;
    std::vector<Scalar> entries;  // row-major

    const Scalar& at(std::size_t r, std::size_t c) const { return entries[r * size + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return entries[r * size + c]; }
    friend bool operator==(const Matrix&, const Matrix&) = default;
  };
  using Element = Matrix;

  explicit MatrixAlgebra(std::size_t size) : size_(size) {}

  std::size_t size() const { return size_; }
  /// Throws DomainError unless `rows` is size x size.
  Matrix from_rows(const std::vector<std::vector<Scalar>>& rows) const;
  Matrix zero() const { return {size_, std::vector<Scalar>(size_ * size_)}; }
  Matrix add(const Matrix& a, const Matrix& b) const;
  Matrix scale(const Scalar& c, const Matrix& x) const;
  Matrix multiply(const Matrix& a, const Matrix& b) const;
  NormValue norm(const Matrix& x) const;
  bool equal(const Matrix& a, const Matrix& b) const { return a == b; }

  friend bool operator==(const MatrixAlgebra&, const MatrixAlgebra&) = default;

 private:
  void check(const Matrix& x) const;
  std::size_t size_;
};

/// A normed target with an associative bilinear submultiplicative product.
template <class Algebra>
concept AlgebraTarget = free_space::NormedTarget<Algebra> &&
                        requires(const Algebra& algebra, const typename Algebra::Element& x) {
                          { algebra.multiply(x, x) } -> std::same_as<typename Algebra::Element>;
                        };

/// The algebra homomorphism sending a word s_1...s_n to
/// images[s_1] * ... * images[s_n], extended linearly.
template <AlgebraTarget Algebra>
class AlgebraExtension {
 public:
  using Element = typename Algebra::Element;

  /// No norm condition is checked; this is how the witnesses evaluate the
  /// homomorphism a bounded free algebra would have to contain.
  static AlgebraExtension unchecked(NormedSet source, Algebra target, std::vector<Element> images) {
    if (images.size() != source.size()) throw DomainError("one image per generator is required");
    return AlgebraExtension(std::move(source), std::move(target), std::move(images));
  }

  const NormedSet& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const std::vector<Element>& generator_images() const { return images_; }

  Element apply_word(const Word& word) const {
    Element acc = images_.at(word.front());
    for (std::size_t i = 1; i < word.size(); ++i) acc = target_.multiply(acc, images_.at(word[i]));
    return acc;
  }

  Element apply(const TensorElement& x) const {
    if (!(x.base() == source_)) throw DomainError("element does not live over the extension's source");
    Element acc = target_.zero();
    for (const auto& [word, c] : x.terms()) acc = target_.add(acc, target_.scale(c, apply_word(word)));
    return acc;
  }

 private:
  AlgebraExtension(NormedSet source, Algebra target, std::vector<Element> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

  NormedSet source_;
  Algebra target_;
  std::vector<Element> images_;
};

/// The unique contractive homomorphism extending a contractive generator
/// map. Throws NotContractiveError when some |images[s]| > f(s): a bounded
/// but non-contractive generator map has no such extension in general.
template <AlgebraTarget Algebra>
AlgebraExtension<Algebra> extend_to_algebra(const NormedSet& base, std::vector<typename Algebra::Element> images,
                                            Algebra target) {
  if (images.size() != base.size()) throw DomainError("one image per generator is required");
  for (std::size_t s = 0; s < base.size(); ++s) {
    const NormValue n = target.norm(images[s]);
    if (norm_less(NormValue(base.norm(s)), n)) {
      throw NotContractiveError("generator \"" + base.label(s) + "\" has image of norm " + n.to_string() +
                                " exceeding its weight " + format_rational(base.norm(s)) +
                                "; algebra extensions require a contractive generator map");
    }
  }
  return AlgebraExtension<Algebra>::unchecked(base, std::move(target), std::move(images));
}

/// FBanAlg on morphisms: relabels letters along a contractive alpha; words
/// through a zero-norm image vanish.
TensorElement relabel(const TensorElement& x, const NormedMap& alpha);
/// The same morphism as an algebra extension of kappa o alpha.
AlgebraExtension<TensorAlgebra> functor_on_map_alg(const NormedMap& alpha);

struct ConvolutionReport {
  Rational weight;
  unsigned degree = 0;
  std::size_t products_checked = 0;
  std::size_t norms_checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Compares the free algebra on one generator of norm `weight` with the
/// weighted convolution algebra on sequences indexed from 1: every pair of
/// monomials s^i s^j with i + j <= degree, the norms of s^n for n <= degree,
/// and products of seeded pseudo-random polynomials of degree <= degree/2.
ConvolutionReport one_generator_convolution_check(const Rational& weight, unsigned degree, unsigned random_pairs = 50,
                                                  unsigned long seed = 1);

}  // namespace normed::free_algebra
