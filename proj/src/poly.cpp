#include "folinv/poly.hpp"

#include <algorithm>
#include <cctype>

namespace folinv {

std::string variable_name(int index) {
  static const char* names[] = {"x", "y", "z"};
  return names[index];
}

std::string Monomial::str() const {
  std::string out;
  for (int i = 0; i < kMaxArity; ++i) {
    if (exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variable_name(i);
    if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
  }
  return out.empty() ? "1" : out;
}

Poly::Poly(int arity) : arity_(arity) {
  if (arity < 2 || arity > kMaxArity) throw std::invalid_argument("arity must be 2 or 3");
}

Poly Poly::constant(const Rational& c, int arity) { return term(Monomial{}, c, arity); }

Poly Poly::variable(int index, int arity) {
  Monomial m;
  m.exp[index] = 1;
  return term(m, 1, arity);
}

Poly Poly::term(const Monomial& m, const Rational& c, int arity) {
  Poly p(arity);
  p.add_term(m, c);
  return p;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::order() const {
  if (is_zero()) throw std::domain_error("order of the zero polynomial");
  int best = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) best = std::min(best, m.degree());
  return best;
}

int Poly::degree() const { return is_zero() ? -1 : terms_.begin()->first.degree(); }

int Poly::degree_in(int var) const {
  int best = is_zero() ? -1 : 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.exp[var]);
  return best;
}

bool Poly::is_homogeneous() const { return is_zero() || order() == degree(); }

Poly Poly::homogeneous_part(int d) const {
  Poly out(arity_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Poly Poly::truncated(int bound) const {
  Poly out(arity_);
  for (const auto& [m, c] : terms_)
    if (m.degree() < bound) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  for (int i = arity_; i < kMaxArity; ++i)
    if (m.exp[i] != 0) throw std::invalid_argument("monomial exceeds polynomial arity");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(std::max(a.arity_, b.arity_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(1, arity_);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
  Poly out(arity_);
  if (sgn(c) == 0) return out;
  for (const auto& [mm, cc] : terms_) out.terms_.emplace(mm * m, cc * c);
  return out;
}

Poly Poly::derivative(int var) const {
  Poly out(arity_);
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] == 0) continue;
    Monomial d = m;
    d.exp[var] -= 1;
    out.add_term(d, c * m.exp[var]);
  }
  return out;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (static_cast<int>(images.size()) != arity_)
    throw std::invalid_argument("substitution needs one image per variable");
  const int result_arity = images[0].arity();
  for (const auto& im : images)
    if (im.arity() != result_arity) throw std::invalid_argument("substitution images differ in arity");

  std::array<std::vector<Poly>, kMaxArity> powers;
  for (int i = 0; i < arity_; ++i) powers[i].push_back(constant(1, result_arity));
  auto power = [&](int var, int e) -> const Poly& {
    auto& cache = powers[var];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  Poly out(result_arity);
  for (const auto& [m, c] : terms_) {
    Poly t = constant(c, result_arity);
    for (int i = 0; i < arity_; ++i)
      if (m.exp[i] > 0) t = t * power(i, m.exp[i]);
    out += t;
  }
  return out;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += m.str();
    } else {
      out += mag.get_str() + "*" + m.str();
    }
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
  Parser(std::string_view text, int arity, const ParamMap& params)
      : text_(text), arity_(arity), params_(params) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Poly b = base();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected natural exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 4096) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Poly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = digits();
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Poly::constant(q, arity_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (int i = 0; i < kMaxArity; ++i) {
        if (name == variable_name(i)) {
          if (i >= arity_) {
            pos_ = start;
            fail("variable '" + std::string(name) + "' not allowed with arity " +
                 std::to_string(arity_));
          }
          return Poly::variable(i, arity_);
        }
      }
      auto it = params_.find(name);
      if (it == params_.end()) {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      return Poly::constant(it->second, arity_);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int arity_;
  const ParamMap& params_;
  std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, int arity, const ParamMap& params) {
  if (arity < 2 || arity > kMaxArity) throw std::invalid_argument("arity must be 2 or 3");
  return Parser(text, arity, params).parse();
}

// ---------------------------------------------------------------- division and gcd

std::optional<Poly> divide_exact(const Poly& numerator, const Poly& denominator) {
  if (denominator.is_zero()) throw std::domain_error("division by the zero polynomial");
  const int arity = std::max(numerator.arity(), denominator.arity());
  Poly rem = numerator;
  Poly quot(arity);
  const auto& [lead_m, lead_c] = *denominator.terms().begin();
  while (!rem.is_zero()) {
    const auto& [m, c] = *rem.terms().begin();
    if (!lead_m.divides(m)) return std::nullopt;
    Monomial q = m / lead_m;
    Rational qc = c / lead_c;
    quot.add_term(q, qc);
    rem -= denominator.times_monomial(q, qc);
  }
  return quot;
}

bool divides(const Poly& divisor, const Poly& p) { return divide_exact(p, divisor).has_value(); }

Poly normalized(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, content);
  factor.canonicalize();
  if (sgn(p.terms().begin()->second) < 0) factor = -factor;
  return p * factor;
}

namespace {

int main_variable(const Poly& a, const Poly& b) {
  for (int v = kMaxArity - 1; v >= 0; --v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

// Coefficients of p as a polynomial in variable v.
std::vector<Poly> coefficients_in(const Poly& p, int v) {
  std::vector<Poly> coeffs(std::max(p.degree_in(v), 0) + 1, Poly(p.arity()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.exp[v] = 0;
    coeffs[m.exp[v]].add_term(rest, c);
  }
  return coeffs;
}

Poly leading_coeff_in(const Poly& p, int v) { return coefficients_in(p, v).back(); }

Poly pseudo_remainder(Poly a, const Poly& b, int v) {
  const int db = b.degree_in(v);
  const Poly lc = leading_coeff_in(b, v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    int da = a.degree_in(v);
    Monomial shift;
    shift.exp[v] = da - db;
    Poly t = leading_coeff_in(a, v).times_monomial(shift, 1);
    a = lc * a - t * b;
  }
  return a;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, int v) {
  Poly c(p.arity());
  for (const auto& coef : coefficients_in(p, v)) {
    if (coef.is_zero()) continue;
    c = c.is_zero() ? normalized(coef) : gcd_rec(c, coef);
  }
  return c;
}

Poly primitive_part_in(const Poly& p, int v) {
  return normalized(*divide_exact(p, content_in(p, v)));
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  const int arity = std::max(a.arity(), b.arity());
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  const int v = main_variable(a, b);
  if (v < 0) return Poly::constant(1, arity);

  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly c = gcd_rec(ca, cb);
  Poly pa = normalized(*divide_exact(a, ca));
  Poly pb = normalized(*divide_exact(b, cb));
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  Poly g = Poly::constant(1, arity);
  if (pb.degree_in(v) > 0) {
    for (;;) {
      Poly r = pseudo_remainder(pa, pb, v);
      if (r.is_zero()) {
        g = pb;
        break;
      }
      if (r.degree_in(v) == 0) break;
      pa = std::move(pb);
      pb = primitive_part_in(r, v);
    }
  }
  return normalized(c * g);
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  return gcd_rec(a, b);
}

bool coprime(const Poly& a, const Poly& b) { return gcd(a, b).degree() == 0; }

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) return false;
  Poly g = p;
  for (int v = 0; v < p.arity(); ++v) {
    Poly d = p.derivative(v);
    if (!d.is_zero()) g = gcd(g, d);
  }
  return g.degree() == 0;
}

} // namespace folinv
