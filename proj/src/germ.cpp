#include "folinv/germ.hpp"

#include <algorithm>
#include <numeric>

namespace folinv {

namespace {

std::size_t finite_dim(std::vector<Poly> gens, const char* what) {
  auto sb = standard_basis(std::move(gens));
  auto d = quotient_dim(sb);
  if (!d) throw NonIsolated(std::string(what) + ": non-isolated singularity (infinite quotient)");
  return *d;
}

std::optional<long long> try_intersection(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  auto d = quotient_dim(standard_basis({f, g}));
  if (!d) return std::nullopt;
  return static_cast<long long>(*d);
}

} // namespace

FoliationGerm make_germ(const Poly& P, const Poly& Q) {
  if (P.arity() != 2 || Q.arity() != 2) throw InvalidInput("foliation coefficients must be in x, y");
  if (P.is_zero() && Q.is_zero()) throw InvalidInput("the 1-form is zero");
  if (!coprime(P, Q))
    throw InvalidInput("P and Q share the factor " + gcd(P, Q).str());
  return {P, Q};
}

CurveGerm make_curve(const Poly& f) {
  if (f.arity() != 2) throw InvalidInput("curve equation must be in x, y");
  if (f.is_zero()) throw InvalidInput("curve equation is zero");
  if (sgn(f.constant_term()) != 0) throw InvalidInput("curve " + f.str() + " does not pass through the origin");
  return {f, is_squarefree(f)};
}

BalancedEquation make_balanced(const FoliationGerm& F, const Poly& zero, const std::optional<Poly>& pole) {
  BalancedEquation B;
  B.zero = make_curve(zero);
  if (!B.zero.reduced) throw InvalidInput("zero divisor " + zero.str() + " is not reduced");
  if (!invariance_test(F, zero)) throw InvalidInput("zero divisor " + zero.str() + " is not invariant");
  if (pole) {
    B.pole = make_curve(*pole);
    if (!B.pole->reduced) throw InvalidInput("pole divisor " + pole->str() + " is not reduced");
    if (!invariance_test(F, *pole)) throw InvalidInput("pole divisor " + pole->str() + " is not invariant");
    if (!coprime(zero, *pole)) throw InvalidInput("zero and pole divisors share a component");
  }
  return B;
}

int multiplicity(const FoliationGerm& F) {
  if (F.P.is_zero()) return F.Q.order();
  if (F.Q.is_zero()) return F.P.order();
  return std::min(F.P.order(), F.Q.order());
}

bool invariance_test(const FoliationGerm& F, const Poly& f) {
  if (f.is_zero()) throw InvalidInput("invariance test against the zero curve");
  Poly wedge = F.P * f.derivative(1) - F.Q * f.derivative(0);
  return divides(f, wedge);
}

std::size_t milnor_foliation(const FoliationGerm& F) { return finite_dim({F.P, F.Q}, "Milnor number"); }

std::size_t milnor_curve(const Poly& f) {
  return finite_dim({f.derivative(0), f.derivative(1)}, "Milnor number of curve");
}

std::size_t tjurina_curve(const Poly& f) {
  return finite_dim({f, f.derivative(0), f.derivative(1)}, "Tjurina number of curve");
}

std::size_t tjurina_foliation(const FoliationGerm& F, const Poly& f) {
  return finite_dim({f, F.P, F.Q}, "Tjurina number");
}

std::size_t intersection_multiplicity(const Poly& f, const Poly& g) {
  auto d = try_intersection(f, g);
  if (!d) throw InvalidInput("curves " + f.str() + " and " + g.str() + " share a component through the origin");
  return static_cast<std::size_t>(*d);
}

std::vector<Probe> default_probes(std::size_t count) {
  std::vector<Probe> out = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}};
  for (long n = 4; out.size() < count; ++n)
    for (long k = 1; k < n && out.size() < count + 1; ++k) {
      if (std::gcd(k, n) != 1) continue;
      out.push_back({k, n});
      out.push_back({n, k});
    }
  out.resize(count);
  return out;
}

PolarResult generic_polar(const FoliationGerm& F, const std::vector<Probe>& probes,
                          const BalancedEquation* divisor) {
  if (probes.empty()) throw InvalidInput("generic polar needs at least one probe");
  PolarResult result;
  if (divisor) result.value_names = {"i(polar,B0)", "i(polar,Binf)", "nu(polar)"};
  else result.value_names = {"nu(polar)", "mu(polar)"};

  for (const auto& probe : probes) {
    ProbeRow row{probe, F.P * probe.a + F.Q * probe.b, {}};
    const Poly& p = row.polar;
    std::optional<long long> nu;
    if (!p.is_zero()) nu = p.order();
    if (divisor) {
      row.values.push_back(try_intersection(p, divisor->zero.f));
      row.values.push_back(divisor->pole ? try_intersection(p, divisor->pole->f) : std::optional<long long>(0));
      row.values.push_back(nu);
    } else {
      row.values.push_back(nu);
      std::optional<long long> mu;
      if (!p.is_zero()) {
        auto d = quotient_dim(standard_basis({p.derivative(0), p.derivative(1)}));
        if (d) mu = static_cast<long long>(*d);
      }
      row.values.push_back(mu);
    }
    result.table.push_back(std::move(row));
  }

  // nullopt (infinite) compares greater than every finite value.
  auto key_less = [](const ProbeRow& a, const ProbeRow& b) {
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      const auto& x = a.values[i];
      const auto& y = b.values[i];
      if (x == y) continue;
      if (!x) return false;
      if (!y) return true;
      return *x < *y;
    }
    return false;
  };
  auto best = std::min_element(result.table.begin(), result.table.end(), key_less);
  result.polar = best->polar;
  result.probe = best->probe;
  const bool finite = std::all_of(best->values.begin(), best->values.end(), [](const auto& v) { return v.has_value(); });
  auto hits = std::count_if(result.table.begin(), result.table.end(),
                            [&](const ProbeRow& r) { return r.values == best->values; });
  result.certified = finite && hits >= 2;
  return result;
}

long long excess_polar(const FoliationGerm& /*F*/, const BalancedEquation& B, const Poly& polar) {
  const Poly& f = B.zero.f;
  long long i_polar = static_cast<long long>(intersection_multiplicity(polar, f));
  long long i_zero_pole = B.pole ? static_cast<long long>(intersection_multiplicity(f, B.pole->f)) : 0;
  long long mu_zero = static_cast<long long>(milnor_curve(f));
  return i_polar + i_zero_pole - mu_zero - f.order() + 1;
}

long long tangency_excess(const FoliationGerm& F, const BalancedEquation& B) {
  if (!invariance_test(F, B.zero.f) || (B.pole && !invariance_test(F, B.pole->f)))
    throw InvalidInput("balanced equation is not invariant for the foliation");
  return multiplicity(F) - B.signed_multiplicity() + 1;
}

long long gsv_index(const FoliationGerm& F, const Poly& f) {
  return static_cast<long long>(tjurina_foliation(F, f)) - static_cast<long long>(tjurina_curve(f));
}

bool is_semihomogeneous(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("semi-homogeneity of the zero polynomial");
  return is_squarefree(f.lowest_part());
}

} // namespace folinv
