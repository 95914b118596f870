#include <doctest.h>

#include "support.hpp"

using namespace normed;
using namespace normed::testing;
using namespace normed::free_algebra;

namespace {

TensorElement element(const NormedSet& base, std::initializer_list<std::pair<std::string, Scalar>> terms) {
  std::map<Word, Scalar> out;
  for (const auto& [word, c] : terms) {
    Word w;
    for (char letter : word) w.push_back(base.index_of(std::string(1, letter)));
    out[w] += c;
  }
  return TensorElement(base, out);
}

// Termwise weighted l1 norm for real coefficients.
Rational real_norm(const TensorElement& x) {
  Rational total = 0;
  for (const auto& [w, c] : x.terms()) {
    Rational weight = 1;
    for (std::size_t s : w) weight *= x.base().norm(s);
    total += rational_abs(c.re) * weight;
  }
  return total;
}

}  // namespace

TEST_CASE("kappa") {
  const NormedSet base = set_of({{"s", "2"}, {"t", "3"}, {"z", "0"}});
  CHECK(kappa(base, "z").is_zero());
  CHECK(alg_norm(kappa(base, "s")).exact() == 2);
  const TensorElement st = alg_mul(kappa(base, "s"), kappa(base, "t"));
  CHECK(st == element(base, {{"st", 1}}));
  CHECK(alg_norm(st).exact() == 6);
  CHECK(alg_mul(kappa(base, "z"), kappa(base, "s")).is_zero());
}

TEST_CASE("products") {
  const NormedSet base = set_of({{"a", "1"}, {"b", "1"}});
  const TensorElement a = kappa(base, "a");
  const TensorElement b = kappa(base, "b");
  CHECK(alg_mul(a + b, a) == element(base, {{"aa", 1}, {"ba", 1}}));
  const TensorElement product = alg_mul(a + b, a + Scalar(-1) * b);
  CHECK(product == element(base, {{"aa", 1}, {"ab", -1}, {"ba", 1}, {"bb", -1}}));
  CHECK(alg_norm(product).exact() == 4);
  // coinciding words cancel: (a + ab)(b) - a(bb) ... strict inequality
  const TensorElement x = a + Scalar(-1) * alg_mul(a, b);
  const TensorElement y = b + alg_mul(b, b);
  CHECK(alg_norm(alg_mul(x, y)).exact() == 2);
  CHECK(real_norm(x) * real_norm(y) == 4);
  CHECK_THROWS_AS(alg_mul(a, kappa(set_of({{"a", "1"}}), "a")), DomainError);
}

TEST_CASE("norm examples") {
  const NormedSet base = set_of({{"a", "1/2"}, {"b", "4"}});
  CHECK(alg_norm(TensorElement(base)).is_zero());
  CHECK(alg_norm(element(base, {{"ab", 3}})).exact() == 6);
  const TensorElement s = kappa(base, "a");
  for (unsigned n = 1; n <= 20; ++n) {
    CHECK(alg_norm(power(s, n)).exact() == rational_pow(q("1/2"), n));
    CHECK(power(s, n).degree() == n);
  }
  CHECK_THROWS_AS(power(s, 0), DomainError);
  CHECK_THROWS_AS(TensorElement(base, {{Word{}, Scalar(1)}}), DomainError);
}

TEST_CASE("ring laws on random elements") {
  sampling::Rng rng(17);
  const std::vector<Rational> palette{0, q("1/2"), 1, 2, 3};
  for (int k = 0; k < 60; ++k) {
    const NormedSet base = sampling::random_set(rng, 1, 3, palette);
    const auto x = sampling::random_tensor(rng, base, 3, 2);
    const auto y = sampling::random_tensor(rng, base, 3, 2);
    const auto z = sampling::random_tensor(rng, base, 3, 2);
    const Scalar c = sampling::random_scalar(rng);
    CHECK(alg_mul(x, alg_mul(y, z)) == alg_mul(alg_mul(x, y), z));
    CHECK(alg_mul(x, y + z) == alg_mul(x, y) + alg_mul(x, z));
    CHECK(alg_mul(x + y, z) == alg_mul(x, z) + alg_mul(y, z));
    CHECK(alg_mul(c * x, y) == c * alg_mul(x, y));
    CHECK(alg_mul(x, c * y) == c * alg_mul(x, y));
    CHECK(alg_norm(x).exact() == real_norm(x));
    CHECK(real_norm(alg_mul(x, y)) <= real_norm(x) * real_norm(y));
  }
}

TEST_CASE("norm is multiplicative on nonnegative elements") {
  sampling::Rng rng(19);
  const NormedSet base = set_of({{"a", "1/2"}, {"b", "3"}});
  for (int k = 0; k < 50; ++k) {
    auto x = sampling::random_tensor(rng, base, 3, 3);
    auto y = sampling::random_tensor(rng, base, 3, 3);
    std::map<Word, Scalar> px;
    std::map<Word, Scalar> py;
    for (const auto& [w, c] : x.terms()) px[w] = Scalar(rational_abs(c.re));
    for (const auto& [w, c] : y.terms()) py[w] = Scalar(rational_abs(c.re));
    const TensorElement xp(base, px);
    const TensorElement yp(base, py);
    CHECK(real_norm(alg_mul(xp, yp)) == real_norm(xp) * real_norm(yp));
  }
}

TEST_CASE("algebra extensions") {
  const NormedSet s = set_of({{"s", "1"}});
  SUBCASE("into the scalars") {
    const auto ext = extend_to_algebra(s, {Scalar(1)}, free_space::ScalarField{});
    const TensorElement x = kappa(s, 0) + Scalar(3) * power(kappa(s, 0), 2) + Scalar(-2) * power(kappa(s, 0), 5);
    CHECK(ext.apply(x) == Scalar(2));
  }
  SUBCASE("into 2x2 matrices") {
    const MatrixAlgebra m2(2);
    const auto nilpotent = m2.from_rows({{0, 1}, {0, 0}});
    const auto half = m2.from_rows({{Scalar(q("1/2")), Scalar(q("1/2"))}, {0, Scalar(q("1/2"))}});
    CHECK(m2.norm(half).exact() == 1);
    const auto ext = extend_to_algebra(s, {half}, m2);
    const auto square = ext.apply(power(kappa(s, 0), 2));
    CHECK(square == m2.from_rows({{Scalar(q("1/4")), Scalar(q("1/2"))}, {0, Scalar(q("1/4"))}}));
    CHECK(extend_to_algebra(s, {nilpotent}, m2).apply(power(kappa(s, 0), 2)) == m2.zero());
    CHECK_THROWS_AS(m2.from_rows({{0, 1}}), DomainError);
  }
  SUBCASE("kappa extends to the identity") {
    const NormedSet ab = set_of({{"a", "1"}, {"b", "2"}});
    const auto ext = extend_to_algebra(ab, {kappa(ab, 0), kappa(ab, 1)}, TensorAlgebra(ab));
    const TensorElement x = element(ab, {{"ab", 2}, {"bba", -1}, {"a", 3}});
    CHECK(ext.apply(x) == x);
  }
  SUBCASE("non-contractive generator maps are refused") {
    CHECK_THROWS_AS(extend_to_algebra(s, {Scalar(2)}, free_space::ScalarField{}), NotContractiveError);
  }
  SUBCASE("degree one agrees with the linear extension") {
    const NormedSet ab = set_of({{"a", "1"}, {"b", "2"}});
    const std::vector<Scalar> images{Scalar(q("1/2")), Scalar(-2)};
    const auto alg = extend_to_algebra(ab, images, free_space::ScalarField{});
    const auto lin = free_space::extend(ab, images, free_space::ScalarField{});
    CHECK(alg.apply(element(ab, {{"a", 3}, {"b", 5}})) ==
          lin.apply(free_space::FreeVector::from_labels(
              ab, std::vector<std::pair<std::string, Scalar>>{{"a", 3}, {"b", 5}})));
  }
}

TEST_CASE("extension is multiplicative and contractive") {
  sampling::Rng rng(23);
  const NormedSet base = set_of({{"a", "1"}, {"b", "1/2"}});
  const free_space::ScalarField field;
  const auto ext = extend_to_algebra(base, {Scalar(q("1/2")), Scalar(q("-1/3"))}, field);
  for (int k = 0; k < 50; ++k) {
    const auto x = sampling::random_tensor(rng, base, 3, 3);
    const auto y = sampling::random_tensor(rng, base, 3, 3);
    CHECK(ext.apply(alg_mul(x, y)) == ext.apply(x) * ext.apply(y));
    CHECK(rational_abs(ext.apply(x).re) <= real_norm(x));
  }
}

TEST_CASE("relabel functor") {
  const NormedSet a = set_of({{"a", "1"}});
  const NormedSet x = set_of({{"x", "1"}});
  const auto aa = power(kappa(a, 0), 2);
  CHECK(relabel(aa, map_of(a, x, {{"a", "x"}})) == power(kappa(x, 0), 2));
  CHECK(relabel(aa, NormedMap::identity(a)) == aa);
  CHECK(relabel(aa, map_of(a, set_of({{"x", "0"}}), {{"a", "x"}})).is_zero());
  CHECK(functor_on_map_alg(map_of(a, x, {{"a", "x"}})).apply(aa) == power(kappa(x, 0), 2));
  CHECK_THROWS_AS(relabel(aa, map_of(a, set_of({{"x", "2"}}), {{"a", "x"}})), NotContractiveError);
}

TEST_CASE("one generator and convolution") {
  const NormedSet base = set_of({{"s", "1"}});
  const TensorElement s = kappa(base, 0);
  const TensorElement s2 = power(s, 2);
  CHECK(alg_mul(s + s2, s) == s2 + power(s, 3));
  CHECK(alg_norm(alg_mul(s + s2, s)).exact() == 2);
  CHECK(alg_mul(TensorElement(base), s).is_zero());
  CHECK(one_generator_convolution_check(1, 20).ok());
  CHECK(one_generator_convolution_check(q("3/2"), 12).ok());
  CHECK(one_generator_convolution_check(q("1/3"), 12).ok());
}
