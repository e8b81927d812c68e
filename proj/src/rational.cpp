#include "folinv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace folinv {

namespace {

bool is_int_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

} // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  if (!is_int_literal(num)) throw std::invalid_argument("not a rational literal: '" + raw + "'");
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(Integer(num[0] == '+' ? num.substr(1) : num));
  } else {
    std::string den = text.substr(slash + 1);
    if (!is_int_literal(den) || den[0] == '-' || den[0] == '+')
      throw std::invalid_argument("not a rational literal: '" + raw + "'");
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
    q = Rational(Integer(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  Rational r(sqrt(n), sqrt(d));
  r.canonicalize();
  return r;
}

long long ceil_half(long long a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

} // namespace folinv
