#include "folinv/projective.hpp"

#include <exception>

namespace folinv {

namespace {

using ll = long long;

Poly euler_residual(const Poly& A, const Poly& B, const Poly& C) {
  return A * Poly::variable(0, 3) + B * Poly::variable(1, 3) + C * Poly::variable(2, 3);
}

// Chart variables other than the fixed one, in increasing index order.
std::array<int, 2> free_vars(Axis which) {
  switch (which) {
    case Axis::X: return {1, 2};
    case Axis::Y: return {0, 2};
    case Axis::Z: return {0, 1};
  }
  return {0, 1};
}

// Images of x, y, z in the affine chart centered at p.
std::array<Poly, 3> chart_images(const ProjectivePoint& p, Axis which) {
  const int k = static_cast<int>(which);
  const Rational& scale = p.coords[k];
  if (sgn(scale) == 0) throw InvalidInput("point " + p.str() + " is not in chart " + to_string(which));
  std::array<Poly, 3> images;
  images[k] = Poly::constant(1, 2);
  auto vars = free_vars(which);
  for (int i = 0; i < 2; ++i)
    images[vars[i]] = Poly::variable(i, 2) + Poly::constant(p.coords[vars[i]] / scale, 2);
  return images;
}

std::array<const Poly*, 2> chart_coefficients(const ProjectiveFoliation& W, Axis which) {
  switch (which) {
    case Axis::X: return {&W.B, &W.C};
    case Axis::Y: return {&W.A, &W.C};
    case Axis::Z: return {&W.A, &W.B};
  }
  return {&W.A, &W.B};
}

Rational evaluate(const Poly& f, const ProjectivePoint& p) {
  Rational sum = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational t = c;
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < m.exp[i]; ++e) t *= p.coords[i];
    sum += t;
  }
  return sum;
}

void echo(CheckReport& r, const ProjectiveFoliation& W) {
  r.input("A", W.A.str());
  r.input("B", W.B.str());
  r.input("C", W.C.str());
}

std::string points_str(const std::vector<ProjectivePoint>& points) {
  std::string s;
  for (const auto& p : points) s += (s.empty() ? "" : "; ") + p.str();
  return s;
}

// Runs body(i) for every index concurrently; the first exception is rethrown afterwards.
template <class Body>
void parallel_each(std::size_t n, Body body) {
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct PointMilnor {
  std::vector<ll> mu;
  ll sum = 0;
  ll expected = 0;
};

PointMilnor milnor_at_points(const ProjectiveFoliation& W, const std::vector<ProjectivePoint>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw InvalidInput("point " + points[i].str() + " is listed twice");
  std::vector<FoliationGerm> germs;
  for (const auto& p : points) {
    FoliationGerm g = germ_at(W, p);
    if (!g.singular()) throw InvalidInput("point " + p.str() + " is not a singular point");
    germs.push_back(std::move(g));
  }
  PointMilnor out;
  out.mu.resize(points.size());
  parallel_each(points.size(), [&](std::size_t i) { out.mu[i] = static_cast<ll>(milnor_foliation(germs[i])); });
  for (ll m : out.mu) out.sum += m;
  const ll d = W.degree;
  out.expected = d * d + d + 1;
  return out;
}

} // namespace

Validation validate(const Poly& A, const Poly& B, const Poly& C) {
  for (const Poly* p : {&A, &B, &C})
    if (p->arity() != 3) throw InvalidInput("projective coefficients must be in x, y, z");
  if (A.is_zero() && B.is_zero() && C.is_zero()) throw InvalidInput("the 1-form is zero");
  int deg = -1;
  const char* names[] = {"A", "B", "C"};
  const Poly* polys[] = {&A, &B, &C};
  for (int i = 0; i < 3; ++i) {
    const Poly& p = *polys[i];
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw InvalidInput(std::string(names[i]) + " = " + p.str() + " is not homogeneous");
    if (deg >= 0 && p.degree() != deg) throw InvalidInput("A, B, C must have equal degree");
    deg = p.degree();
  }
  if (deg < 1) throw InvalidInput("coefficients must have degree at least 1");
  Poly residual = euler_residual(A, B, C);
  if (!residual.is_zero()) throw EulerViolation(residual);
  Poly g = gcd(gcd(A, B), C);
  if (g.degree() > 0) throw InvalidInput("A, B, C share the factor " + g.str());

  Validation v;
  v.degree = deg - 1;
  v.diagnostics.push_back("coefficients homogeneous of degree " + std::to_string(deg));
  v.diagnostics.push_back("Euler identity Ax + By + Cz = 0 holds");
  v.diagnostics.push_back("gcd(A, B, C) = 1");
  return v;
}

ProjectiveFoliation make_projective(const Poly& A, const Poly& B, const Poly& C) {
  Validation v = validate(A, B, C);
  return {A, B, C, v.degree};
}

std::string to_string(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

Axis ProjectivePoint::chart() const {
  if (sgn(coords[2]) != 0) return Axis::Z;
  if (sgn(coords[1]) != 0) return Axis::Y;
  return Axis::X;
}

std::string ProjectivePoint::str() const {
  return "[" + coords[0].get_str() + ":" + coords[1].get_str() + ":" + coords[2].get_str() + "]";
}

ProjectivePoint make_point(const Rational& a, const Rational& b, const Rational& c) {
  ProjectivePoint p{{a, b, c}};
  if (sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0) throw InvalidInput("[0:0:0] is not a projective point");
  const Rational scale = p.coords[static_cast<int>(p.chart())];
  for (auto& q : p.coords) q /= scale;
  return p;
}

FoliationGerm chart(const ProjectiveFoliation& W, Axis which) {
  ProjectivePoint p{{0, 0, 0}};
  p.coords[static_cast<int>(which)] = 1;
  return germ_at(W, p, which);
}

FoliationGerm germ_at(const ProjectiveFoliation& W, const ProjectivePoint& p, std::optional<Axis> which) {
  const Axis axis = which.value_or(p.chart());
  auto images = chart_images(p, axis);
  auto coeffs = chart_coefficients(W, axis);
  return make_germ(coeffs[0]->substitute(images), coeffs[1]->substitute(images));
}

Poly curve_at(const Poly& f, const ProjectivePoint& p, std::optional<Axis> which) {
  auto images = chart_images(p, which.value_or(p.chart()));
  return f.substitute(images);
}

bool invariance_projective(const ProjectiveFoliation& W, const Poly& f) {
  if (f.is_zero()) throw InvalidInput("invariance test against the zero curve");
  const Poly fx = f.derivative(0), fy = f.derivative(1), fz = f.derivative(2);
  return divides(f, W.A * fy - W.B * fx) && divides(f, W.A * fz - W.C * fx) && divides(f, W.B * fz - W.C * fy);
}

CheckReport milnor_sum_certificate(const ProjectiveFoliation& W, const std::vector<ProjectivePoint>& points) {
  CheckReport r("milnor-sum");
  echo(r, W);
  r.input("points", points_str(points));
  PointMilnor pm = milnor_at_points(W, points);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < points.size(); ++i)
    rows.push_back({{"point", points[i].str()}, {"chart", to_string(points[i].chart())}, {"mu", pm.mu[i]}});
  r.detail("points", rows);
  r.set("d", static_cast<ll>(W.degree));
  r.set("mu_sum", pm.sum);
  r.set("d2_d_1", pm.expected);
  r.set("deficit", pm.expected - pm.sum);
  r.assertion("mu_sum_equals_d2_d_1", pm.sum == pm.expected);
  r.settle();
  if (pm.sum < pm.expected) r.reason("listed singular set is incomplete, deficit " + std::to_string(pm.expected - pm.sum));
  return r;
}

CheckReport check_global_bound(const ProjectiveFoliation& W, const Poly& curve, const std::vector<ProjectivePoint>& points) {
  CheckReport r("global-bound");
  echo(r, W);
  r.input("curve", curve.str());
  r.input("points", points_str(points));
  if (curve.arity() != 3 || curve.is_zero() || !curve.is_homogeneous() || curve.degree() < 1)
    throw InvalidInput("curve must be a nonconstant homogeneous polynomial in x, y, z");
  if (!is_squarefree(curve)) throw InvalidInput("curve " + curve.str() + " is not reduced");
  if (!invariance_projective(W, curve)) throw InvalidInput("curve " + curve.str() + " is not invariant");
  std::string off_curve;
  for (const auto& p : points)
    if (sgn(evaluate(curve, p)) != 0) off_curve += (off_curve.empty() ? "" : ", ") + p.str();
  if (!off_curve.empty()) throw InvalidInput("singular points off the curve: " + off_curve);

  PointMilnor pm = milnor_at_points(W, points);
  const std::size_t n = points.size();
  std::vector<ll> xi(n), tau_fc(n), tau_c(n);
  parallel_each(n, [&](std::size_t i) {
    FoliationGerm g = germ_at(W, points[i]);
    Poly f = curve_at(curve, points[i]);
    BalancedEquation B = make_balanced(g, f, std::nullopt);
    xi[i] = tangency_excess(g, B);
    tau_fc[i] = static_cast<ll>(tjurina_foliation(g, f));
    tau_c[i] = static_cast<ll>(tjurina_curve(f));
  });

  const ll d = W.degree;
  const ll m = curve.degree();
  ll gsv_sum = 0, tau_sum = 0;
  bool all_second = true;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    const ll gsv = tau_fc[i] - tau_c[i];
    gsv_sum += gsv;
    tau_sum += tau_c[i];
    all_second = all_second && xi[i] == 0;
    rows.push_back({{"point", points[i].str()},
                    {"mu", pm.mu[i]},
                    {"xi", xi[i]},
                    {"second_type", xi[i] == 0},
                    {"tau_F_C", tau_fc[i]},
                    {"tau_C", tau_c[i]},
                    {"gsv", gsv}});
  }
  r.detail("points", rows);

  const ll N = pm.expected;
  const ll lhs1 = ceil_half(N - 2 * gsv_sum);
  const ll lhs2 = ceil_half(N - 2 * (d + 2) * m + 2 * m * m);
  const ll gsv_formula = (d + 2) * m - m * m;
  r.set("d", d);
  r.set("deg_C", m);
  r.set("mu_sum", pm.sum);
  r.set("d2_d_1", N);
  r.set("deficit", N - pm.sum);
  r.set("all_second_type", all_second);
  r.set("gsv_sum", gsv_sum);
  r.set("gsv_sum_formula", gsv_formula);
  r.set("tau_C", tau_sum);
  r.set("bound_1", lhs1);
  r.set("bound_2", lhs2);
  r.set("bound_1_text", std::to_string(lhs1) + " ≤ " + std::to_string(tau_sum));
  r.set("bound_2_text", std::to_string(lhs2) + " ≤ " + std::to_string(tau_sum));
  r.assertion("mu_sum_equals_d2_d_1", pm.sum == N);
  r.assertion("gsv_sum_formula", gsv_sum == gsv_formula);
  r.assertion("bound_1_holds", lhs1 <= tau_sum);
  r.assertion("bound_2_holds", lhs2 <= tau_sum);
  r.settle();
  if (pm.sum != N) r.reason("listed singular set is incomplete, deficit " + std::to_string(N - pm.sum));
  if (!all_second) r.reason("some points are not of second type for the germ of C: bounds are observational");
  r.reason("the germ of C at each point is taken as the zero divisor of a balanced equation (user-asserted)");
  return r;
}

CheckReport validation_report(const ProjectiveFoliation& W, const std::optional<Poly>& curve,
                              const std::vector<ProjectivePoint>& points) {
  CheckReport r("projective-validate");
  echo(r, W);
  Validation v = validate(W.A, W.B, W.C);
  r.set("d", static_cast<ll>(v.degree));
  r.assertion("euler_identity", true);
  for (const auto& line : v.diagnostics) r.reason(line);
  if (curve) {
    r.input("curve", curve->str());
    r.set("deg_C", static_cast<ll>(curve->degree()));
    r.set("curve_reduced", is_squarefree(*curve));
    r.assertion("curve_invariant", invariance_projective(W, *curve));
  }
  if (!points.empty()) {
    CheckReport cert = milnor_sum_certificate(W, points);
    r.input("points", points_str(points));
    r.set("mu_sum", *cert.integer("mu_sum"));
    r.set("d2_d_1", *cert.integer("d2_d_1"));
    r.set("deficit", *cert.integer("deficit"));
    r.detail("points", cert.details()["points"]);
    r.assertion("mu_sum_equals_d2_d_1", *cert.assertion_holds("mu_sum_equals_d2_d_1"));
  }
  r.settle();
  return r;
}

} // namespace folinv
