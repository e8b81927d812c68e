#include "folinv/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace folinv {

void trim(UniPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const UniPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (sgn(p[i]) != 0) return i;
  return -1;
}

Rational evaluate(const UniPoly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace {

UniPoly remainder(UniPoly a, const UniPoly& b) {
  trim(a);
  const int db = degree(b);
  while (degree(a) >= db) {
    const int da = degree(a);
    Rational q = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    trim(a);
  }
  return a;
}

void make_monic(UniPoly& p) {
  trim(p);
  if (p.empty()) return;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

// Divides by (t - r); r must be a root.
UniPoly deflate(const UniPoly& p, const Rational& r) {
  const int d = degree(p);
  UniPoly q(d);
  Rational carry = 0;
  for (int i = d; i >= 1; --i) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, int>> factors;
  Integer d = 2;
  const Integer limit = 10000000;
  while (d * d <= n && d <= limit) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) factors.emplace_back(d, e);
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (d > limit && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw std::runtime_error("rational root test: coefficient too large to factor");
    factors.emplace_back(n, 1);
  }
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

} // namespace

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

RationalRootSplit split_rational_roots(UniPoly p) {
  trim(p);
  if (p.empty()) throw std::domain_error("rational roots of the zero polynomial");
  RationalRootSplit out;
  std::size_t zeros = 0;
  while (zeros < p.size() && sgn(p[zeros]) == 0) ++zeros;
  if (zeros > 0) {
    out.roots.push_back(0);
    p.erase(p.begin(), p.begin() + static_cast<long>(zeros));
  }
  if (degree(p) > 0) {
    Integer den_lcm = 1;
    for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer a0 = Rational(p.front() * den_lcm).get_num();
    Integer an = Rational(p.back() * den_lcm).get_num();
    auto nums = positive_divisors(a0);
    auto dens = positive_divisors(an);
    std::vector<Rational> candidates;
    for (const auto& n : nums)
      for (const auto& d : dens)
        for (int s : {1, -1}) {
          Rational r(n * s, d);
          r.canonicalize();
          candidates.push_back(r);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      if (degree(p) < 1) break;
      if (sgn(evaluate(p, r)) != 0) continue;
      out.roots.push_back(r);
      while (degree(p) >= 1 && sgn(evaluate(p, r)) == 0) p = deflate(p, r);
    }
  }
  make_monic(p);
  out.residual = p;
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

std::string uni_str(const UniPoly& p, const std::string& var) {
  std::string out;
  for (int i = degree(p); i >= 0; --i) {
    if (sgn(p[i]) == 0) continue;
    Rational mag = abs(p[i]);
    if (out.empty()) {
      if (sgn(p[i]) < 0) out += "-";
    } else {
      out += sgn(p[i]) < 0 ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

} // namespace folinv
