#pragma once

#include "folinv/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace folinv {

inline constexpr int kMaxArity = 3;

/// Exponent vector in up to three variables; unused slots stay zero.
struct Monomial {
  std::array<int, kMaxArity> exp{};

  Monomial() = default;
  Monomial(int ex, int ey, int ez = 0) : exp{ex, ey, ez} {}

  int degree() const { return exp[0] + exp[1] + exp[2]; }
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const {
    return exp[0] <= other.exp[0] && exp[1] <= other.exp[1] && exp[2] <= other.exp[2];
  }
  Monomial operator*(const Monomial& o) const {
    return {exp[0] + o.exp[0], exp[1] + o.exp[1], exp[2] + o.exp[2]};
  }
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    return {exp[0] - divisor.exp[0], exp[1] - divisor.exp[1], exp[2] - divisor.exp[2]};
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    return {std::max(a.exp[0], b.exp[0]), std::max(a.exp[1], b.exp[1]),
            std::max(a.exp[2], b.exp[2])};
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  std::string str() const;
};

/// Degree-lexicographic, larger degree first. Used for printing and as the
/// global order for exact division.
struct DegLexFirst {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exp > b.exp;
  }
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Sparse polynomial with rational coefficients in 2 (x, y) or 3 (x, y, z) variables.
/// No stored coefficient is ever zero.
class Poly {
public:
  using Terms = std::map<Monomial, Rational, DegLexFirst>;

  explicit Poly(int arity = 2);

  static Poly constant(const Rational& c, int arity = 2);
  static Poly variable(int index, int arity = 2);
  static Poly term(const Monomial& m, const Rational& c, int arity = 2);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff(Monomial{}); }

  /// Minimal total degree of a term; throws std::domain_error on zero.
  int order() const;
  /// Maximal total degree; -1 for zero.
  int degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;

  Poly homogeneous_part(int d) const;
  Poly lowest_part() const { return homogeneous_part(order()); }
  /// Drops every term of total degree >= bound.
  Poly truncated(int bound) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;
  Poly pow(unsigned e) const;
  Poly times_monomial(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  Poly derivative(int var) const;

  /// Replaces variable i by images[i]; all images share the result arity.
  Poly substitute(std::span<const Poly> images) const;

  std::string str() const;

private:
  int arity_;
  Terms terms_;
};

std::string variable_name(int index);

/// Named rational constants usable inside expressions (e.g. lambda).
using ParamMap = std::map<std::string, Rational, std::less<>>;

/// expr := ['+'|'-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := base ('^' nat)?; base := var | rational | param | '(' expr ')'.
Poly parse_poly(std::string_view text, int arity = 2, const ParamMap& params = {});

std::optional<Poly> divide_exact(const Poly& numerator, const Poly& denominator);
bool divides(const Poly& divisor, const Poly& p);

/// Integer coefficients with content 1 and positive leading coefficient
/// under DegLexFirst.
Poly normalized(const Poly& p);

/// Normalized gcd; throws std::domain_error for gcd(0, 0).
Poly gcd(const Poly& a, const Poly& b);
bool coprime(const Poly& a, const Poly& b);
bool is_squarefree(const Poly& p);

} // namespace folinv
