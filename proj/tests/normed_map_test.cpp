#include <doctest.h>

#include "support.hpp"

using namespace normed;
using namespace normed::testing;

TEST_CASE("normed sets") {
  const NormedSet s = set_of({{"b", "2"}, {"a", "1"}, {"c", "0"}});
  CHECK(s.label(0) == "a");
  CHECK(s.index_of("c") == 2);
  CHECK(s.support() == std::vector<std::size_t>{0, 1});
  CHECK(s.max_norm() == 2);
  CHECK_FALSE(s.all_zero());
  CHECK_THROWS_AS(s.index_of("z"), DomainError);
  CHECK_THROWS_AS(set_of({{"a", "1"}, {"a", "2"}}), DomainError);
  CHECK_THROWS_AS(set_of({{"a", "-1"}}), DomainError);
  CHECK(set_of({}).all_zero());
}

TEST_CASE("bound constant") {
  const NormedSet ab = set_of({{"a", "1"}, {"b", "2"}});
  const NormedSet x3 = set_of({{"x", "3"}});
  CHECK(NormedMap::identity(ab).crh() == Bound(1));
  CHECK(map_of(ab, x3, {{"a", "x"}, {"b", "x"}}).crh() == Bound(3));
  CHECK_FALSE(map_of(set_of({{"a", "0"}}), set_of({{"x", "1"}}), {{"a", "x"}}).is_bounded());
  CHECK(NormedMap(set_of({}), x3, {}).crh() == Bound(0));
  CHECK(map_of(set_of({{"a", "0"}}), set_of({{"x", "0"}}), {{"a", "x"}}).crh() == Bound(0));
  CHECK(Bound::unbounded().to_string() == "unbounded");
  CHECK(Bound(q("3/2")).to_string() == "3/2");
}

TEST_CASE("contractivity") {
  const NormedSet a = set_of({{"a", "2"}});
  CHECK(NormedMap::identity(a).is_contractive());
  CHECK_FALSE(map_of(a, set_of({{"x", "3"}}), {{"a", "x"}}).is_contractive());
  CHECK(NormedMap(set_of({}), a, {}).is_contractive());
}

TEST_CASE("composition") {
  const NormedSet a = set_of({{"a", "1"}});
  const NormedSet x = set_of({{"x", "2"}});
  const NormedSet u = set_of({{"u", "3"}});
  const NormedMap phi = map_of(a, x, {{"a", "x"}});
  const NormedMap psi = map_of(x, u, {{"x", "u"}});
  CHECK(phi.crh() == Bound(2));
  CHECK(psi.crh() == Bound(q("3/2")));
  CHECK(compose(psi, phi).crh() == Bound(3));
  CHECK(compose(NormedMap::identity(x), phi) == phi);
  CHECK(compose(phi, NormedMap::identity(a)) == phi);
  CHECK_THROWS_AS(compose(phi, psi), DomainError);

  const NormedMap to_zero = map_of(a, set_of({{"z", "0"}}), {{"a", "z"}});
  // an unbounded second factor can still give a bounded composite
  CHECK(compose(map_of(set_of({{"z", "0"}}), u, {{"z", "u"}}), to_zero).crh() == Bound(3));
  CHECK(compose(map_of(set_of({{"z", "0"}}), set_of({{"w", "0"}}), {{"z", "w"}}), to_zero).crh() == Bound(0));
}

TEST_CASE("map construction errors") {
  const NormedSet ab = set_of({{"a", "1"}, {"b", "2"}});
  CHECK_THROWS_AS(map_of(ab, ab, {{"a", "a"}}), DomainError);
  CHECK_THROWS_AS(map_of(ab, ab, {{"a", "a"}, {"a", "b"}, {"b", "b"}}), DomainError);
  CHECK_THROWS_AS(map_of(ab, ab, {{"a", "q"}, {"b", "b"}}), DomainError);
  CHECK_THROWS_AS(NormedMap(ab, ab, {0, 5}), DomainError);
}

TEST_CASE("crh agrees with ratio enumeration on random maps") {
  sampling::Rng rng(11);
  const std::vector<Rational> palette{0, q("1/3"), q("1/2"), 1, 2, 5};
  for (int k = 0; k < 300; ++k) {
    const NormedSet s = sampling::random_set(rng, 0, 5, palette);
    const NormedSet t = sampling::random_set(rng, 1, 5, palette);
    const NormedSet u = sampling::random_set(rng, 1, 5, palette);
    const NormedMap phi = sampling::random_map(rng, s, t);
    const NormedMap psi = sampling::random_map(rng, t, u);
    CHECK(phi.crh() == ratio_oracle(phi));
    if (phi.is_bounded() && psi.is_bounded()) {
      CHECK(compose(psi, phi).crh().at_most(psi.crh().value() * phi.crh().value()));
    }
    if (phi.is_contractive() && psi.is_contractive()) CHECK(compose(psi, phi).is_contractive());
  }
}
