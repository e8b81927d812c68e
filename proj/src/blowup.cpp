#include "folinv/blowup.hpp"

#include <algorithm>
#include <functional>

namespace folinv {

namespace {

const Poly kX = Poly::variable(0, 2);
const Poly kY = Poly::variable(1, 2);

// Largest e with var^e dividing every term of both polynomials.
int common_power(const Poly& a, const Poly& b, int var) {
  int best = -1;
  for (const Poly* p : {&a, &b})
    for (const auto& [m, c] : p->terms()) best = best < 0 ? m.exp[var] : std::min(best, m.exp[var]);
  return std::max(best, 0);
}

Poly divide_power(const Poly& p, int var, int e) {
  Poly out(2);
  for (const auto& [m, c] : p.terms()) {
    Monomial q = m;
    q.exp[var] -= e;
    out.add_term(q, c);
  }
  return out;
}

UniPoly restrict_to_axis(const Poly& p, int fixed_var) {
  const int free_var = 1 - fixed_var;
  UniPoly out(std::max(p.degree_in(free_var), 0) + 1);
  for (const auto& [m, c] : p.terms())
    if (m.exp[fixed_var] == 0) out[m.exp[free_var]] += c;
  trim(out);
  return out;
}

Poly translate_y(const Poly& p, const Rational& c) {
  if (sgn(c) == 0) return p;
  Poly images[] = {kX, kY + Poly::constant(c)};
  return p.substitute(images);
}

bool axis_invariant(const FoliationGerm& F, int axis) {
  // {x = 0} invariant iff x | Q; {y = 0} invariant iff y | P.
  return axis == 0 ? divides(kX, F.Q) : divides(kY, F.P);
}

} // namespace

BlowupResult blowup(const FoliationGerm& F, const std::vector<ExceptionalMarker>& markers, int new_component) {
  if (!F.singular()) throw InvalidInput("blow-up center is not a singular point");
  const int nu = multiplicity(F);

  // Chart 1: x = x1, y = x1*y1.
  Poly c1[] = {kX, kX * kY};
  Poly P1 = F.P.substitute(c1), Q1 = F.Q.substitute(c1);
  Poly A1 = P1 + kY * Q1;
  Poly B1 = kX * Q1;
  // Chart 2: x = x2*y2, y = y2.
  Poly c2[] = {kX * kY, kY};
  Poly P2 = F.P.substitute(c2), Q2 = F.Q.substitute(c2);
  Poly A2 = kY * P2;
  Poly B2 = kX * P2 + Q2;

  const int power = common_power(A1, B1, 0);
  BlowupResult r;
  r.removed_power = power;
  r.epsilon = power > nu ? 1 : 0;

  r.chart1.coordinates = "x=x1, y=x1*y1";
  r.chart1.germ = {divide_power(A1, 0, power), divide_power(B1, 0, power)};
  r.chart1.exceptional.push_back({0, new_component});
  r.chart2.coordinates = "x=x2*y2, y=y2";
  r.chart2.germ = {divide_power(A2, 1, power), divide_power(B2, 1, power)};
  r.chart2.exceptional.push_back({1, new_component});
  for (const auto& m : markers) {
    if (m.axis == 1) r.chart1.exceptional.push_back({1, m.component});
    else r.chart2.exceptional.push_back({0, m.component});
  }
  return r;
}

std::vector<Rational> common_rational_roots(const UniPoly& a, const UniPoly& b) {
  UniPoly g = uni_gcd(a, b);
  if (g.empty()) throw NonIsolated("divisor consists of singular points");
  if (degree(g) == 0) return {};
  auto split = split_rational_roots(g);
  if (degree(split.residual) > 0) throw IrrationalSingularPoint(uni_str(split.residual, "t"));
  return split.roots;
}

std::vector<Rational> singular_points_on_divisor(const Chart& chart1) {
  return common_rational_roots(restrict_to_axis(chart1.germ.P, 0), restrict_to_axis(chart1.germ.Q, 0));
}

std::string to_string(SingularClass c) {
  switch (c) {
    case SingularClass::NondegenerateSimple: return "nondegenerate-simple";
    case SingularClass::SaddleNode: return "saddle-node";
    case SingularClass::NonSimple: return "non-simple";
  }
  return "?";
}

SingularRecord classify(const FoliationGerm& F, const std::vector<ExceptionalMarker>& exceptional) {
  if (!F.singular()) throw InvalidInput("classification of a regular point");
  SingularRecord rec;
  rec.exceptional = exceptional;
  const Monomial mx(1, 0), my(0, 1);
  // v = -Q d/dx + P d/dy
  const Rational a = -F.Q.coeff(mx), b = -F.Q.coeff(my);
  const Rational c = F.P.coeff(mx), d = F.P.coeff(my);
  rec.linear = {a, b, c, d};
  rec.trace = a + d;
  rec.det = a * d - b * c;

  if (sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0 && sgn(d) == 0) {
    rec.cls = SingularClass::NonSimple;
    rec.eigen = "zero linear part";
    return rec;
  }
  if (sgn(rec.det) != 0) {
    // The eigenvalue ratio r solves det*r^2 - (tr^2 - 2 det)*r + det = 0.
    UniPoly ratio_eq = {rec.det, -(rec.trace * rec.trace - 2 * rec.det), rec.det};
    auto split = split_rational_roots(ratio_eq);
    auto positive = std::find_if(split.roots.begin(), split.roots.end(), [](const Rational& r) { return sgn(r) > 0; });
    if (positive != split.roots.end()) {
      rec.cls = SingularClass::NonSimple;
      rec.eigen = "eigenvalue ratio " + positive->get_str() + " in Q+";
    } else {
      rec.cls = SingularClass::NondegenerateSimple;
      rec.eigen = split.roots.empty() ? "eigenvalue ratio irrational or non-real"
                                      : "eigenvalue ratio " + split.roots.front().get_str();
    }
    return rec;
  }
  if (sgn(rec.trace) == 0) {
    rec.cls = SingularClass::NonSimple;
    rec.eigen = "nilpotent linear part";
    return rec;
  }
  rec.cls = SingularClass::SaddleNode;
  // Kernel direction of the rank-one linear part.
  Rational kx, ky;
  if (sgn(a) != 0 || sgn(b) != 0) {
    kx = -b;
    ky = a;
  } else {
    kx = -d;
    ky = c;
  }
  rec.eigen = "eigenvalues " + rec.trace.get_str() + ", 0; zero direction (" + kx.get_str() + "," + ky.get_str() + ")";
  for (const auto& m : exceptional) {
    const bool along = m.axis == 0 ? sgn(kx) == 0 : sgn(ky) == 0;
    if (along && axis_invariant(F, m.axis)) rec.tangent = true;
  }
  return rec;
}

bool ReductionTree::dicriticals_separated() const {
  for (const auto& c : components) {
    if (!c.dicritical) continue;
    for (int n : c.neighbors)
      for (const auto& o : components)
        if (o.id == n && o.dicritical) return false;
  }
  return true;
}

ReductionTree reduce(const FoliationGerm& F, int max_blowups) {
  ReductionTree tree;
  auto component_of = [&](int id) -> Component& {
    for (auto& c : tree.components)
      if (c.id == id) return c;
    throw std::logic_error("unknown component");
  };

  std::function<void(const FoliationGerm&, const std::vector<ExceptionalMarker>&, const std::string&, int)> visit =
      [&](const FoliationGerm& G, const std::vector<ExceptionalMarker>& markers, const std::string& where, int parent) {
        SingularRecord rec = classify(G, markers);
        rec.location = where;
        if (rec.cls != SingularClass::NonSimple) {
          tree.leaves.push_back(rec);
          return;
        }
        if (static_cast<int>(tree.blowups.size()) >= max_blowups)
          throw ReductionLimit("reduction needs more than " + std::to_string(max_blowups) + " blow-ups");

        const int id = static_cast<int>(tree.blowups.size()) + 1;
        BlowupResult r = blowup(G, markers, id);
        tree.blowups.push_back({id, parent, where, multiplicity(G), r.epsilon, id});

        Component comp;
        comp.id = id;
        comp.dicritical = r.epsilon == 1;
        tree.components.push_back(comp);
        for (std::size_t i = 0; i < markers.size(); ++i)
          for (std::size_t j = i + 1; j < markers.size(); ++j) {
            component_of(markers[i].component).neighbors.erase(markers[j].component);
            component_of(markers[j].component).neighbors.erase(markers[i].component);
          }
        for (const auto& m : markers) {
          component_of(m.component).neighbors.insert(id);
          component_of(id).neighbors.insert(m.component);
        }

        const std::string prefix = "E" + std::to_string(id);
        for (const auto& t : singular_points_on_divisor(r.chart1)) {
          FoliationGerm moved{translate_y(r.chart1.germ.P, t), translate_y(r.chart1.germ.Q, t)};
          std::vector<ExceptionalMarker> here;
          for (const auto& m : r.chart1.exceptional)
            if (m.axis == 0 || sgn(t) == 0) here.push_back(m);
          visit(moved, here, prefix + ".chart1(0," + t.get_str() + ")", id);
        }
        if (r.chart2.germ.singular()) visit(r.chart2.germ, r.chart2.exceptional, prefix + ".chart2(0,0)", id);
      };

  if (F.singular()) visit(F, {}, "origin", -1);
  return tree;
}

bool second_type_verdict(const ReductionTree& t) {
  return std::none_of(t.leaves.begin(), t.leaves.end(),
                      [](const SingularRecord& r) { return r.cls == SingularClass::SaddleNode && r.tangent; });
}

bool generalized_curve_verdict(const ReductionTree& t) {
  return std::none_of(t.leaves.begin(), t.leaves.end(),
                      [](const SingularRecord& r) { return r.cls == SingularClass::SaddleNode; });
}

std::vector<DicriticalEntry> dicritical_report(const ReductionTree& t) {
  std::vector<DicriticalEntry> out;
  for (const auto& c : t.components)
    if (c.dicritical) out.push_back({c.id, c.valence(), 2 - c.valence()});
  return out;
}

long long h1_dimension(int nu, int epsilon) {
  const long long n = nu - epsilon;
  if (n <= 2) return 0;
  return (n - 1) * (n - 2) / 2;
}

} // namespace folinv
