#include <benchmark/benchmark.h>

#include "normed/normed.hpp"
#include "normed/sampling.hpp"

namespace {

using namespace normed;

const std::vector<Rational>& palette() {
  static const std::vector<Rational> p{0, Rational(1, 3), Rational(1, 2), 1, 2, 5};
  return p;
}

// Exactly `terms` distinct words with nonzero coefficients.
free_algebra::TensorElement dense_tensor(sampling::Rng& rng, const NormedSet& base, std::size_t terms,
                                         std::size_t max_degree, bool complex = false) {
  std::map<free_algebra::Word, Scalar> out;
  while (out.size() < terms) {
    free_algebra::Word w(1 + rng() % max_degree);
    for (auto& letter : w) letter = rng() % base.size();
    out.emplace(std::move(w), sampling::random_nonzero_scalar(rng, complex));
  }
  return free_algebra::TensorElement(base, std::move(out));
}

void BM_Crh(benchmark::State& state) {
  sampling::Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const NormedSet s = sampling::random_set(rng, n, n, {Rational(1, 3), Rational(1, 2), 1, 2, 5});
  const NormedSet t = sampling::random_set(rng, n, n, palette());
  const NormedMap phi = sampling::random_map(rng, s, t);
  std::vector<Rational> source;
  std::vector<Rational> image;
  for (std::size_t i = 0; i < n; ++i) {
    source.push_back(s.norm(i));
    image.push_back(t.norm(phi(i)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(bound_constant(source, image));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Crh)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_AlgMul(benchmark::State& state) {
  sampling::Rng rng(2);
  const NormedSet base = sampling::random_set(rng, 3, 3, {Rational(1, 2), 1, 2});
  const auto terms = static_cast<std::size_t>(state.range(0));
  const auto x = dense_tensor(rng, base, terms, 3);
  const auto y = dense_tensor(rng, base, terms, 3);
  for (auto _ : state) benchmark::DoNotOptimize(free_algebra::alg_mul(x, y));
}
BENCHMARK(BM_AlgMul)->RangeMultiplier(2)->Range(2, 32);

void BM_AlgNorm(benchmark::State& state) {
  sampling::Rng rng(3);
  const NormedSet base = sampling::random_set(rng, 3, 3, {Rational(1, 2), 1, 2});
  const auto x = dense_tensor(rng, base, static_cast<std::size_t>(state.range(0)), 6, true);
  for (auto _ : state) benchmark::DoNotOptimize(free_algebra::alg_norm(x));
}
BENCHMARK(BM_AlgNorm)->Arg(8)->Arg(64);

void BM_Classify(benchmark::State& state) {
  const NormedSet s({{"a", 1}, {"b", Rational(1, 2)}, {"c", 0}});
  const NormedSet t({{"x", 2}, {"y", 1}, {"z", 0}});
  const NormedMap phi(s, t, {0, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(category::classify(phi));
}
BENCHMARK(BM_Classify);

void BM_BruteForceFlags(benchmark::State& state) {
  verification::Universe tests;
  tests.max_size = 2;
  tests.palette = {0, Rational(1, 2), 1, 2, 3};
  const auto objects = verification::enumerate_sets(tests);
  const NormedSet s({{"a", 1}, {"b", Rational(1, 2)}, {"c", 0}});
  const NormedSet t({{"x", 2}, {"y", 1}, {"z", 0}});
  const NormedMap phi(s, t, {0, 1, 2});
  const auto category =
      state.range(0) == 0 ? verification::Category::contractive : verification::Category::bounded;
  for (auto _ : state) benchmark::DoNotOptimize(verification::brute_force_flags(phi, category, objects));
}
BENCHMARK(BM_BruteForceFlags)->Arg(0)->Arg(1);

void BM_VectorNormComplex(benchmark::State& state) {
  sampling::Rng rng(4);
  const NormedSet base = sampling::random_set(rng, 6, 6, {Rational(1, 3), 1, 2});
  const auto v = sampling::random_vector(rng, base, 6, true);
  for (auto _ : state) benchmark::DoNotOptimize(free_space::vector_norm(v).to_string());
}
BENCHMARK(BM_VectorNormComplex);

}  // namespace

BENCHMARK_MAIN();
