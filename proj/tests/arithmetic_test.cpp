#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace normed;
using normed::testing::q;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(format_rational(parse_rational("4/6")) == "2/3");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_rational(make_rational(6, -4)) == "-3/2");
  for (const char* bad : {"", "inf", "1/0", "1.5", "a", "1/", "/2", " 1"}) {
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("exact square roots") {
  Rational root;
  CHECK(rational_sqrt_exact(q("9/4"), root));
  CHECK(root == q("3/2"));
  CHECK_FALSE(rational_sqrt_exact(q("2"), root));
  CHECK(integer_sqrt(Integer(99)) == 9);
  CHECK(is_perfect_square(Integer(144)));
  CHECK_FALSE(is_perfect_square(Integer(145)));
}

TEST_CASE("norm values") {
  SUBCASE("rational values stay exact") {
    NormValue v(q("1/2"));
    v += NormValue(q("1/3"));
    CHECK(v.is_exact());
    CHECK(v.exact() == q("5/6"));
    CHECK(v.to_string() == "5/6");
  }
  SUBCASE("perfect squares collapse") {
    CHECK(NormValue::sqrt_of(q("25/9")).is_exact());
    CHECK(NormValue::sqrt_of(q("25/9")).exact() == q("5/3"));
    CHECK(NormValue::sqrt_of(q("8")) == NormValue::sqrt_of(2) * NormValue(2));
  }
  SUBCASE("irrational values print as intervals") {
    const NormValue r2 = NormValue::sqrt_of(2);
    CHECK_FALSE(r2.is_exact());
    CHECK_THROWS_AS(r2.exact(), DomainError);
    const Interval box = r2.enclose(q("1/1000"));
    CHECK(box.width() <= q("1/1000"));
    CHECK(box.contains(q("1414213/1000000")));
    CHECK(r2.to_string().front() == '[');
  }
  SUBCASE("comparison separates close radicals") {
    // sqrt(2) + sqrt(3) = 3.1462...
    NormValue sum = NormValue::sqrt_of(2);
    sum += NormValue::sqrt_of(3);
    CHECK(norm_less(NormValue(q("3146/1000")), sum));
    CHECK(norm_less(sum, NormValue(q("3147/1000"))));
    CHECK(compare(sum, sum) == std::strong_ordering::equal);
    CHECK(norm_max(sum, NormValue(3)) == sum);
  }
  SUBCASE("negative values are rejected") { CHECK_THROWS_AS(NormValue(q("-1")), DomainError); }
}

TEST_CASE("gaussian rational scalars") {
  const Scalar a(q("1"), q("2"));
  const Scalar b(q("3"), q("-1"));
  CHECK(a * b == Scalar(q("5"), q("5")));
  CHECK(a / a == Scalar(1));
  CHECK(Scalar::i_power(2) == Scalar(-1));
  CHECK(Scalar::i_power(-1) == Scalar(q("0"), q("-1")));
  CHECK(Scalar(q("3"), q("4")).modulus().exact() == 5);
  CHECK(format_scalar(Scalar(q("0"), q("-1"))) == "-i");
  CHECK(format_scalar(Scalar(q("3/2"))) == "3/2");
  CHECK(format_scalar(a) == "1+2i");
  CHECK_THROWS_AS(a / Scalar(0), DomainError);
}

TEST_CASE("modulus is multiplicative on random scalars") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Scalar x = sampling::random_scalar(rng, true);
    const Scalar y = sampling::random_scalar(rng, true);
    CHECK((x * y).modulus_squared() == x.modulus_squared() * y.modulus_squared());
    CHECK(norm_less_equal((x + y).modulus(), [&] {
      NormValue s = x.modulus();
      s += y.modulus();
      return s;
    }()));
  }
}
