#include <doctest.h>

#include "support.hpp"

using namespace normed;
using namespace normed::testing;
using namespace normed::serialization;

TEST_CASE("normed set format") {
  const Json j = parse_json(R"({"elements":[{"label":"b","norm":"3/2"},{"label":"a","norm":"0"}]})");
  const NormedSet s = normed_set_from_json(j);
  CHECK(s == set_of({{"a", "0"}, {"b", "3/2"}}));
  CHECK(dump(to_json(s)) == dump(parse_json(R"({"elements":[{"label":"a","norm":"0"},{"label":"b","norm":"3/2"}]})")));
  CHECK_THROWS_AS(normed_set_from_json(parse_json(R"({"elements":[{"label":"a","norm":"-1"}]})")), ParseError);
  CHECK_THROWS_AS(normed_set_from_json(parse_json(R"({"elements":[{"label":"a","norm":"inf"}]})")), ParseError);
  CHECK_THROWS_AS(normed_set_from_json(parse_json(R"({"elements":[{"label":"a","norm":1}]})")), ParseError);
  CHECK_THROWS_AS(normed_set_from_json(parse_json(R"([])")), ParseError);
  CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("normed map format") {
  const Json j = parse_json(R"({"domain":{"elements":[{"label":"a","norm":"1"}]},
                               "codomain":{"elements":[{"label":"x","norm":"2"}]},
                               "map":[["a","x"]]})");
  const NormedMap m = normed_map_from_json(j);
  CHECK(m.crh() == Bound(2));
  CHECK(normed_map_from_json(to_json(m)) == m);
  Json bad = j;
  bad["map"] = parse_json(R"([["a","nope"]])");
  CHECK_THROWS_AS(normed_map_from_json(bad), DomainError);
}

TEST_CASE("scalars") {
  CHECK(scalar_from_json(parse_json(R"(["1/2","-3"])"), ScalarMode::complex) == Scalar(q("1/2"), q("-3")));
  CHECK(scalar_from_json(parse_json(R"("5")"), ScalarMode::real) == Scalar(5));
  CHECK_THROWS_AS(scalar_from_json(parse_json(R"(["1","1"])"), ScalarMode::real), ParseError);
  CHECK(scalar_from_json(parse_json(R"(["1","0"])"), ScalarMode::real) == Scalar(1));
}

TEST_CASE("round trips on random values") {
  sampling::Rng rng(31);
  const std::vector<Rational> palette{0, q("1/3"), q("1/2"), 1, 2, 5};
  for (int k = 0; k < 100; ++k) {
    const NormedSet s = sampling::random_set(rng, 0, 4, palette);
    const NormedSet t = sampling::random_set(rng, 1, 4, palette);
    CHECK(normed_set_from_json(parse_json(dump(to_json(s)))) == s);
    const NormedMap m = sampling::random_map(rng, s, t);
    CHECK(normed_map_from_json(parse_json(dump(to_json(m)))) == m);
    const auto v = sampling::random_vector(rng, t, 3, true);
    CHECK(free_vector_from_json(parse_json(dump(to_json(v))), ScalarMode::complex) == v);
    const auto x = sampling::random_tensor(rng, t, 3, 3, true);
    CHECK(tensor_from_json(parse_json(dump(to_json(x))), ScalarMode::complex) == x);
    CHECK(dump(to_json(x)) == dump(to_json(tensor_from_json(to_json(x), ScalarMode::complex))));
  }
}

TEST_CASE("vector and tensor formats") {
  const Json v = parse_json(R"({"base":{"elements":[{"label":"a","norm":"1/2"},{"label":"b","norm":"1"}]},
                               "coeffs":[["a","2","0"],["b","-3"]]})");
  CHECK(free_space::vector_norm(free_vector_from_json(v, ScalarMode::real)).exact() == 4);
  const Json x = parse_json(R"({"base":{"elements":[{"label":"a","norm":"1/2"},{"label":"b","norm":"4"}]},
                               "terms":[{"word":["a","b"],"coeff":["3","0"]}]})");
  CHECK(free_algebra::alg_norm(tensor_from_json(x, ScalarMode::real)).exact() == 6);
  Json empty_word = x;
  empty_word["terms"][0]["word"] = Json::array();
  CHECK_THROWS_AS(tensor_from_json(empty_word, ScalarMode::real), ParseError);
}

TEST_CASE("reports") {
  const NormedSet s = set_of({{"a", "0"}});
  const Json report = to_json(category::classify(NormedMap::identity(s)));
  CHECK(report["lambda"] == "inf");
  CHECK(report["cset1"]["iso"] == true);
  const Json unbounded = to_json(category::classify(map_of(s, set_of({{"x", "1"}}), {{"a", "x"}})));
  CHECK(unbounded["crh"] == "unbounded");
  CHECK(unbounded["cset1"] == "not-applicable");
  const Json construction = to_json(category::product({s, s}));
  CHECK(construction["kind"] == "product");
  CHECK(construction["legs"].size() == 2);
  const Json witness = to_json(counterexamples::witness_banalg_bounded(1, 3));
  CHECK(witness["required_bound"] == "8");
  CHECK(witness["established"] == true);
}
