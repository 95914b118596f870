#include "normed/free_algebra.hpp"

#include <random>

namespace normed::free_algebra {

Rational word_weight(const NormedSet& base, const Word& word) {
  Rational w = 1;
  for (std::size_t letter : word) w *= base.norm(letter);
  return w;
}

TensorElement::TensorElement(NormedSet base) : base_(std::move(base)) {}

TensorElement::TensorElement(NormedSet base, std::map<Word, Scalar> terms) : base_(std::move(base)) {
  for (auto& [word, c] : terms) {
    if (word.empty()) throw DomainError("the empty word is not an element of the non-unital tensor algebra");
    bool through_zero = false;
    for (std::size_t letter : word) {
      if (letter >= base_.size()) throw DomainError("letter outside the base");
      through_zero = through_zero || base_.is_zero_norm(letter);
    }
    if (through_zero || c.is_zero()) continue;
    terms_.emplace(word, std::move(c));
  }
}

Scalar TensorElement::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

std::size_t TensorElement::degree() const {
  std::size_t d = 0;
  for (const auto& entry : terms_) d = std::max(d, entry.first.size());
  return d;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  if (!(a.base() == b.base())) throw DomainError("tensor elements live over different bases");
  std::map<Word, Scalar> sums = a.terms();
  for (const auto& [w, c] : b.terms()) sums[w] += c;
  return TensorElement(a.base(), std::move(sums));
}

TensorElement operator*(const Scalar& c, const TensorElement& x) {
  std::map<Word, Scalar> scaled;
  for (const auto& [w, v] : x.terms()) scaled.emplace(w, c * v);
  return TensorElement(x.base(), std::move(scaled));
}

TensorElement kappa(const NormedSet& base, std::size_t index) {
  if (index >= base.size()) throw DomainError("generator index outside the base");
  return TensorElement(base, {{Word{index}, Scalar(1)}});
}

TensorElement kappa(const NormedSet& base, std::string_view label) { return kappa(base, base.index_of(label)); }

TensorElement alg_mul(const TensorElement& x, const TensorElement& y) {
  if (!(x.base() == y.base())) throw DomainError("tensor elements live over different bases");
  std::map<Word, Scalar> out;
  for (const auto& [u, a] : x.terms()) {
    for (const auto& [v, b] : y.terms()) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      out[std::move(uv)] += a * b;
    }
  }
  return TensorElement(x.base(), std::move(out));
}

NormValue alg_norm(const TensorElement& x) {
  NormValue total;
  for (const auto& [w, c] : x.terms()) total += c.modulus() * word_weight(x.base(), w);
  return total;
}

TensorElement power(const TensorElement& x, unsigned n) {
  if (n == 0) throw DomainError("the non-unital tensor algebra has no zeroth power");
  TensorElement acc = x;
  for (unsigned i = 1; i < n; ++i) acc = alg_mul(acc, x);
  return acc;
}

void MatrixAlgebra::check(const Matrix& x) const {
  if (x.size != size_ || x.entries.size() != size_ * size_) throw DomainError("matrix has the wrong size");
}

MatrixAlgebra::Matrix MatrixAlgebra::from_rows(const std::vector<std::vector<Scalar>>& rows) const {
  Matrix m = zero();
  if (rows.size() != size_) throw DomainError("matrix has the wrong number of rows");
  for (std::size_t r = 0; r < size_; ++r) {
    if (rows[r].size() != size_) throw DomainError("matrix row has the wrong length");
    for (std::size_t c = 0; c < size_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

MatrixAlgebra::Matrix MatrixAlgebra::add(const Matrix& a, const Matrix& b) const {
  check(a);
  check(b);
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
  return out;
}

MatrixAlgebra::Matrix MatrixAlgebra::scale(const Scalar& c, const Matrix& x) const {
  check(x);
  Matrix out = x;
  for (auto& e : out.entries) e = c * e;
  return out;
}

MatrixAlgebra::Matrix MatrixAlgebra::multiply(const Matrix& a, const Matrix& b) const {
  check(a);
  check(b);
  Matrix out = zero();
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t k = 0; k < size_; ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < size_; ++c) out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  }
  return out;
}

NormValue MatrixAlgebra::norm(const Matrix& x) const {
  check(x);
  NormValue best;
  for (std::size_t c = 0; c < size_; ++c) {
    NormValue column;
    for (std::size_t r = 0; r < size_; ++r) column += x.at(r, c).modulus();
    if (norm_less(best, column)) best = std::move(column);
  }
  return best;
}

TensorElement relabel(const TensorElement& x, const NormedMap& alpha) {
  if (!(x.base() == alpha.domain())) throw DomainError("element does not live over the map's domain");
  if (!alpha.is_contractive()) throw NotContractiveError("FBanAlg is defined on contractive maps only");
  std::map<Word, Scalar> out;
  for (const auto& [w, c] : x.terms()) {
    Word image;
    for (std::size_t letter : w) image.push_back(alpha(letter));
    out[std::move(image)] += c;
  }
  return TensorElement(alpha.codomain(), std::move(out));
}

AlgebraExtension<TensorAlgebra> functor_on_map_alg(const NormedMap& alpha) {
  if (!alpha.is_contractive()) throw NotContractiveError("FBanAlg is defined on contractive maps only");
  std::vector<TensorElement> images;
  for (std::size_t s = 0; s < alpha.domain().size(); ++s) images.push_back(kappa(alpha.codomain(), alpha(s)));
  return extend_to_algebra(alpha.domain(), std::move(images), TensorAlgebra(alpha.codomain()));
}

namespace {

// Sequences indexed from 1; entry 0 is unused and stays zero.
using Sequence = std::vector<Scalar>;

Sequence convolve(const Sequence& x, const Sequence& y) {
  Sequence out(x.size() + y.size(), Scalar());
  for (std::size_t i = 1; i < x.size(); ++i) {
    for (std::size_t j = 1; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

NormValue sequence_norm(const Sequence& x, const Rational& weight) {
  NormValue total;
  for (std::size_t n = 1; n < x.size(); ++n) total += x[n].modulus() * rational_pow(weight, static_cast<unsigned>(n));
  return total;
}

TensorElement from_sequence(const NormedSet& base, const Sequence& x) {
  std::map<Word, Scalar> terms;
  for (std::size_t n = 1; n < x.size(); ++n) terms.emplace(Word(n, 0), x[n]);
  return TensorElement(base, std::move(terms));
}

bool matches(const TensorElement& element, const Sequence& x) {
  std::map<Word, Scalar> terms;
  for (std::size_t n = 1; n < x.size(); ++n) {
    if (!x[n].is_zero()) terms.emplace(Word(n, 0), x[n]);
  }
  return element.terms() == terms;
}

}  // namespace

ConvolutionReport one_generator_convolution_check(const Rational& weight, unsigned degree, unsigned random_pairs,
                                                  unsigned long seed) {
  if (sgn(weight) <= 0) throw DomainError("the generator weight must be positive");
  ConvolutionReport report;
  report.weight = weight;
  report.degree = degree;
  const NormedSet base({{"s", weight}});

  auto check_pair = [&](const Sequence& x, const Sequence& y, const std::string& what) {
    ++report.products_checked;
    const TensorElement product = alg_mul(from_sequence(base, x), from_sequence(base, y));
    const Sequence expected = convolve(x, y);
    if (!matches(product, expected)) report.failures.push_back("product mismatch for " + what);
    if (!(alg_norm(product) == sequence_norm(expected, weight))) {
      report.failures.push_back("norm mismatch for product " + what);
    }
  };

  for (unsigned i = 1; i <= degree; ++i) {
    for (unsigned j = 1; i + j <= degree; ++j) {
      Sequence x(i + 1);
      Sequence y(j + 1);
      x[i] = Scalar(1);
      y[j] = Scalar(1);
      check_pair(x, y, "s^" + std::to_string(i) + " * s^" + std::to_string(j));
    }
  }
  for (unsigned n = 1; n <= degree; ++n) {
    ++report.norms_checked;
    const TensorElement sn = power(kappa(base, std::size_t{0}), n);
    if (!(alg_norm(sn) == NormValue(rational_pow(weight, n)))) {
      report.failures.push_back("norm of s^" + std::to_string(n) + " differs from weight^" + std::to_string(n));
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coefficient(-3, 3);
  const unsigned half = degree / 2;
  for (unsigned k = 0; k < random_pairs && half >= 1; ++k) {
    Sequence x(half + 1);
    Sequence y(half + 1);
    for (unsigned n = 1; n <= half; ++n) {
      x[n] = Scalar(make_rational(coefficient(rng), 1 + static_cast<long>(k % 3)));
      y[n] = Scalar(make_rational(coefficient(rng), 1));
    }
    ++report.norms_checked;
    if (!(alg_norm(from_sequence(base, x)) == sequence_norm(x, weight))) {
      report.failures.push_back("norm mismatch for random element " + std::to_string(k));
    }
    check_pair(x, y, "random pair " + std::to_string(k));
  }
  return report;
}

}  // namespace normed::free_algebra
