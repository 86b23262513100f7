#include "k3nl/arith.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace k3nl {

Integer floor_mod(const Integer& a, const Integer& m) {
  if (m <= 0) throw DomainError("floor_mod: modulus must be positive");
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer floor(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  Integer quot = num / den;
  if (num % den != 0 && num < 0) --quot;
  return quot;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Rational reduce_mod2(const Rational& q) {
  // Shift into (-2, 0]: subtract 2*ceil(q/2).
  Rational half = q / 2;
  Integer c = -floor(-half);
  return q - Rational(2 * c);
}

Rational reduce_mod1(const Rational& q) { return q - Rational(floor(q)); }

bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

Integer to_integer(const Rational& q, std::string_view what) {
  if (!is_integer(q)) {
    throw ComputationError(std::string(what) + " is not an integer: " +
                           to_string(q));
  }
  return boost::multiprecision::numerator(q);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  std::string_view body = text.substr(i, j - i);
  std::size_t start = 0;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) start = 1;
  if (start == body.size()) {
    throw DomainError("malformed integer: '" + std::string(text) + "'");
  }
  for (std::size_t k = start; k < body.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(body[k]))) {
      throw DomainError("malformed integer: '" + std::string(text) + "'");
    }
  }
  Integer value(std::string(body.substr(start)));
  return body[0] == '-' ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

bool is_perfect_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

}  // namespace k3nl
