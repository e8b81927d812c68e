#pragma once

#include "folinv/localalg.hpp"
#include "folinv/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace folinv {

/// Raised when user-supplied data violates a documented precondition.
class InvalidInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A quotient that should be finite turned out infinite.
class NonIsolated : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The 1-form P dx + Q dy at the origin of the plane; dual field -Q d/dx + P d/dy.
struct FoliationGerm {
  Poly P{2};
  Poly Q{2};

  bool singular() const { return sgn(P.constant_term()) == 0 && sgn(Q.constant_term()) == 0; }
};

/// Checks arity and coprimality of the coefficients.
FoliationGerm make_germ(const Poly& P, const Poly& Q);

struct CurveGerm {
  Poly f{2};
  bool reduced = false;
};

/// f must vanish at the origin.
CurveGerm make_curve(const Poly& f);

/// F = f / h; pole absent means h = 1.
struct BalancedEquation {
  CurveGerm zero;
  std::optional<CurveGerm> pole;

  Poly pole_poly() const { return pole ? pole->f : Poly::constant(1, 2); }
  int zero_multiplicity() const { return zero.f.order(); }
  int pole_multiplicity() const { return pole ? pole->f.order() : 0; }
  /// nu(B0) - nu(B_inf).
  int signed_multiplicity() const { return zero_multiplicity() - pole_multiplicity(); }
};

/// Verifies f, h coprime and squarefree, and invariance of both for F.
BalancedEquation make_balanced(const FoliationGerm& F, const Poly& zero, const std::optional<Poly>& pole);

int multiplicity(const FoliationGerm& F);

/// P * f_y - Q * f_x divisible by f.
bool invariance_test(const FoliationGerm& F, const Poly& f);

std::size_t milnor_foliation(const FoliationGerm& F);
std::size_t milnor_curve(const Poly& f);
std::size_t tjurina_curve(const Poly& f);
std::size_t tjurina_foliation(const FoliationGerm& F, const Poly& f);

/// Local colength of (f, g); throws InvalidInput if they share a branch through the origin.
std::size_t intersection_multiplicity(const Poly& f, const Poly& g);

struct Probe {
  Rational a;
  Rational b;
  std::string str() const { return "(" + a.get_str() + ":" + b.get_str() + ")"; }
};

/// (1:1),(1:2),(2:1),(1:3),(3:1),(2:3),(3:2), then further coprime pairs.
std::vector<Probe> default_probes(std::size_t count = 7);

struct ProbeRow {
  Probe probe;
  Poly polar{2};
  /// Invariant tuple compared lexicographically; nullopt entries mean infinite.
  std::vector<std::optional<long long>> values;
};

struct PolarResult {
  Poly polar{2};
  Probe probe;
  std::vector<std::string> value_names;
  std::vector<ProbeRow> table;
  bool certified = false;
};

/// Picks the probe minimizing (i(polar, B0), i(polar, B_inf), order(polar)) when a divisor is
/// given, (order(polar), mu(polar)) otherwise; certified when the minimum is attained twice.
PolarResult generic_polar(const FoliationGerm& F, const std::vector<Probe>& probes,
                          const BalancedEquation* divisor = nullptr);

/// Delta = i(polar, B0) + i(B0, B_inf) - mu(B0) - nu(B0) + 1.
long long excess_polar(const FoliationGerm& F, const BalancedEquation& B, const Poly& polar);

/// xi = nu(F) - (nu(B0) - nu(B_inf)) + 1.
long long tangency_excess(const FoliationGerm& F, const BalancedEquation& B);

/// tau(F, C) - tau(C).
long long gsv_index(const FoliationGerm& F, const Poly& f);

/// Lowest homogeneous part squarefree.
bool is_semihomogeneous(const Poly& f);

} // namespace folinv
