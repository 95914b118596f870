#include "normed/rational.hpp"

#include <cctype>

#include "normed/errors.hpp"

namespace normed {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational number: \"" + std::string(text) + "\"");
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  Rational value(Integer(std::string(num), 10), d);
  value.canonicalize();
  if (text.front() == '-') value = -value;
  return value;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer integer_sqrt(const Integer& n) {
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

bool is_perfect_square(const Integer& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool rational_sqrt_exact(const Rational& value, Rational& root) {
  if (sgn(value) < 0) return false;
  if (!is_perfect_square(value.get_num()) || !is_perfect_square(value.get_den())) return false;
  root = Rational(integer_sqrt(value.get_num()), integer_sqrt(value.get_den()));
  return true;
}

}  // namespace normed
