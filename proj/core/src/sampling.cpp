#include "normed/sampling.hpp"

namespace normed::sampling {

const Rational& pick(Rng& rng, const std::vector<Rational>& palette) {
  std::uniform_int_distribution<std::size_t> d(0, palette.size() - 1);
  return palette[d(rng)];
}

NormedSet random_set(Rng& rng, std::size_t min_size, std::size_t max_size, const std::vector<Rational>& palette) {
  std::uniform_int_distribution<std::size_t> size(min_size, max_size);
  const std::size_t n = size(rng);
  std::vector<NormedSet::Element> elements;
  for (std::size_t i = 0; i < n; ++i) {
    std::string label(1, static_cast<char>('a' + i % 26));
    if (i >= 26) label += std::to_string(i / 26);
    elements.push_back({label, pick(rng, palette)});
  }
  return NormedSet(std::move(elements));
}

NormedMap random_map(Rng& rng, const NormedSet& domain, const NormedSet& codomain) {
  std::vector<std::size_t> table(domain.size());
  if (!table.empty()) {
    std::uniform_int_distribution<std::size_t> d(0, codomain.size() - 1);
    for (auto& t : table) t = d(rng);
  }
  return NormedMap(domain, codomain, std::move(table));
}

Scalar random_scalar(Rng& rng, bool complex) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  Scalar out(make_rational(num(rng), den(rng)));
  if (complex) out.im = make_rational(num(rng), den(rng));
  return out;
}

Scalar random_nonzero_scalar(Rng& rng, bool complex) {
  Scalar out;
  while (out.is_zero()) out = random_scalar(rng, complex);
  return out;
}

free_space::FreeVector random_vector(Rng& rng, const NormedSet& base, std::size_t terms, bool complex) {
  std::map<std::size_t, Scalar> coefficients;
  if (!base.empty()) {
    std::uniform_int_distribution<std::size_t> d(0, base.size() - 1);
    for (std::size_t k = 0; k < terms; ++k) coefficients[d(rng)] += random_scalar(rng, complex);
  }
  return free_space::FreeVector(base, std::move(coefficients));
}

std::vector<Scalar> random_coordinates(Rng& rng, std::size_t dimension, bool complex) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < dimension; ++i) out.push_back(random_scalar(rng, complex));
  return out;
}

free_algebra::TensorElement random_tensor(Rng& rng, const NormedSet& base, std::size_t terms, std::size_t max_degree,
                                          bool complex) {
  std::map<free_algebra::Word, Scalar> out;
  if (!base.empty() && max_degree > 0) {
    std::uniform_int_distribution<std::size_t> letter(0, base.size() - 1);
    std::uniform_int_distribution<std::size_t> length(1, max_degree);
    for (std::size_t k = 0; k < terms; ++k) {
      free_algebra::Word w(length(rng));
      for (auto& l : w) l = letter(rng);
      out[w] += random_scalar(rng, complex);
    }
  }
  return free_algebra::TensorElement(base, std::move(out));
}

}  // namespace normed::sampling
