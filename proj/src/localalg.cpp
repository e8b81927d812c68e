#include "folinv/localalg.hpp"

#include <algorithm>
#include <map>

namespace folinv {

namespace {

void require_plane(const Poly& p) {
  if (p.arity() != 2) throw std::invalid_argument("local algebra works in two variables");
}

const std::pair<const Monomial, Rational>& leading_term(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
    if (LocalOrder::greater(it->first, best->first)) best = it;
  return *best;
}

// h - (LC(h)/LC(g)) * (LM(h)/LM(g)) * g, assuming LM(g) | LM(h).
Poly reduce_step(const Poly& h, const Poly& g) {
  const auto& [mh, ch] = leading_term(h);
  const auto& [mg, cg] = leading_term(g);
  return h - g.times_monomial(mh / mg, ch / cg);
}

Poly s_poly(const Poly& f, const Poly& g) {
  const auto& [mf, cf] = leading_term(f);
  const auto& [mg, cg] = leading_term(g);
  Monomial l = Monomial::lcm(mf, mg);
  return f.times_monomial(l / mf, 1 / cf) - g.times_monomial(l / mg, 1 / cg);
}

// bound > 0 means every monomial of that degree lies in the ideal, so such terms are dropped.
Poly mora_normal_form(const Poly& p, const std::vector<Poly>& basis, int bound) {
  Poly h = bound > 0 ? p.truncated(bound) : p;
  std::vector<Poly> reducers;
  for (const auto& g : basis)
    if (!g.is_zero()) reducers.push_back(g);
  std::vector<Monomial> leads;
  std::vector<int> ecarts;
  for (const auto& g : reducers) {
    leads.push_back(local_leading_monomial(g));
    ecarts.push_back(ecart(g));
  }
  while (!h.is_zero()) {
    const Monomial mh = local_leading_monomial(h);
    int chosen = -1;
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      if (!leads[i].divides(mh)) continue;
      if (chosen < 0 || ecarts[i] < ecarts[chosen]) chosen = static_cast<int>(i);
    }
    if (chosen < 0) break;
    const int eh = ecart(h);
    Poly next = reduce_step(h, reducers[chosen]);
    if (bound > 0) next = next.truncated(bound);
    if (ecarts[chosen] > eh) {
      reducers.push_back(h);
      leads.push_back(mh);
      ecarts.push_back(eh);
    }
    h = std::move(next);
  }
  return h;
}

// One past the largest degree of a standard monomial, once the leading
// monomials contain pure powers of both variables; 0 otherwise.
int corner_bound(const std::vector<Monomial>& leads) {
  int xp = -1, yp = -1;
  for (const auto& m : leads) {
    if (m.exp[1] == 0 && (xp < 0 || m.exp[0] < xp)) xp = m.exp[0];
    if (m.exp[0] == 0 && (yp < 0 || m.exp[1] < yp)) yp = m.exp[1];
  }
  if (xp < 0 || yp < 0) return 0;
  int top = -1;
  for (int i = 0; i < xp; ++i)
    for (int j = 0; j < yp; ++j) {
      Monomial m(i, j);
      if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); }))
        top = std::max(top, i + j);
    }
  return top + 1;
}

struct Pair {
  std::size_t i, j;
  int lcm_degree;
  std::size_t serial;
};

} // namespace

Monomial local_leading_monomial(const Poly& p) { return leading_term(p).first; }
Rational local_leading_coeff(const Poly& p) { return leading_term(p).second; }
int ecart(const Poly& p) { return p.degree() - local_leading_monomial(p).degree(); }

bool StandardBasis::in_leading_ideal(const Monomial& m) const {
  return std::any_of(leading_.begin(), leading_.end(), [&](const Monomial& l) { return l.divides(m); });
}

StandardBasis standard_basis(std::vector<Poly> gens) {
  std::erase_if(gens, [](const Poly& p) { return p.is_zero(); });
  if (gens.empty()) throw std::invalid_argument("standard basis of the zero ideal");
  for (const auto& g : gens) require_plane(g);

  std::vector<Poly> basis = gens;
  std::vector<Monomial> current;
  for (const auto& g : basis) current.push_back(local_leading_monomial(g));
  int bound = corner_bound(current);
  std::vector<Pair> queue;
  std::size_t serial = 0;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].is_zero()) continue;
      Monomial l = Monomial::lcm(local_leading_monomial(basis[i]), local_leading_monomial(basis[j]));
      queue.push_back({i, j, l.degree(), serial++});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), [](const Pair& a, const Pair& b) {
      return a.lcm_degree != b.lcm_degree ? a.lcm_degree < b.lcm_degree : a.serial < b.serial;
    });
    Pair pr = *best;
    queue.erase(best);
    if (basis[pr.i].is_zero() || basis[pr.j].is_zero()) continue;
    Poly h = mora_normal_form(s_poly(basis[pr.i], basis[pr.j]), basis, bound);
    if (h.is_zero()) continue;
    basis.push_back(normalized(h));
    current.push_back(local_leading_monomial(h));
    push_pairs(basis.size() - 1);
    const int corner = corner_bound(current);
    if (corner > 0 && (bound == 0 || corner < bound)) {
      bound = corner;
      for (auto& g : basis) g = g.truncated(bound);
    }
  }
  std::erase_if(basis, [](const Poly& g) { return g.is_zero(); });
  if (bound > 0)
    for (int i = 0; i <= bound; ++i) basis.push_back(Poly::term(Monomial(i, bound - i), 1));

  StandardBasis sb;
  sb.truncation_ = bound;
  // Keep only elements whose leading monomial is not divisible by an earlier kept one.
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(local_leading_monomial(g));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !leads[j].divides(leads[i])) continue;
      redundant = !(leads[j] == leads[i]) || j < i;
    }
    if (!redundant) {
      sb.gens_.push_back(basis[i]);
      sb.leading_.push_back(leads[i]);
    }
  }

  int x_power = -1, y_power = -1;
  for (const auto& m : sb.leading_) {
    if (m.exp[1] == 0 && (x_power < 0 || m.exp[0] < x_power)) x_power = m.exp[0];
    if (m.exp[0] == 0 && (y_power < 0 || m.exp[1] < y_power)) y_power = m.exp[1];
  }
  sb.finite_ = x_power >= 0 && y_power >= 0;
  if (sb.finite_) {
    for (int i = 0; i < x_power; ++i)
      for (int j = 0; j < y_power; ++j) {
        Monomial m(i, j);
        if (!sb.in_leading_ideal(m)) sb.basis_.push_back(m);
      }
    std::sort(sb.basis_.begin(), sb.basis_.end(), LocalOrder::greater);
    int top = -1;
    for (const auto& m : sb.basis_) top = std::max(top, m.degree());
    sb.vanishing_degree_ = top + 1;
  }
  return sb;
}

Poly normal_form(const Poly& p, const StandardBasis& sb) {
  require_plane(p);
  return mora_normal_form(p, sb.generators(), sb.truncation_);
}

Poly reduced_normal_form(const Poly& p, const StandardBasis& sb) {
  require_plane(p);
  if (!sb.is_finite()) throw std::domain_error("reduced normal form needs a finite quotient");
  const int bound = sb.vanishing_degree();
  Poly h = p.truncated(bound);
  Poly result(2);
  while (!h.is_zero()) {
    const auto [m, c] = leading_term(h);
    if (!sb.in_leading_ideal(m)) {
      result.add_term(m, c);
      h.add_term(m, -c);
      continue;
    }
    const Poly* reducer = nullptr;
    for (std::size_t i = 0; i < sb.generators().size(); ++i) {
      if (sb.leading_ideal()[i].divides(m)) {
        reducer = &sb.generators()[i];
        break;
      }
    }
    h = reduce_step(h, *reducer).truncated(bound);
  }
  return result;
}

std::optional<std::size_t> quotient_dim(const StandardBasis& sb) {
  if (!sb.is_finite()) return std::nullopt;
  return sb.quotient_basis().size();
}

QuotientOperator mult_operator(const StandardBasis& sb, const Poly& f) {
  if (!sb.is_finite()) throw std::domain_error("multiplication operator on an infinite quotient");
  QuotientOperator op;
  op.basis = sb.quotient_basis();
  const std::size_t n = op.basis.size();
  op.matrix = RationalMatrix(n, n);
  std::map<Monomial, std::size_t, DegLexFirst> index;
  for (std::size_t i = 0; i < n; ++i) index[op.basis[i]] = i;
  for (std::size_t j = 0; j < n; ++j) {
    Poly image = reduced_normal_form(f.times_monomial(op.basis[j], 1), sb);
    for (const auto& [m, c] : image.terms()) op.matrix(index.at(m), j) = c;
  }
  return op;
}

KernelRank kernel_rank(const QuotientOperator& op) {
  const std::size_t r = rank(op.matrix);
  return {op.matrix.cols() - r, r};
}

// ---------------------------------------------------------------- truncation oracle

namespace {

std::vector<Monomial> monomials_below(int bound) {
  std::vector<Monomial> out;
  for (int d = 0; d < bound; ++d)
    for (int i = d; i >= 0; --i) out.emplace_back(i, d - i);
  return out;
}

std::size_t column_of(const Monomial& m) {
  const int d = m.degree();
  return static_cast<std::size_t>(d * (d + 1) / 2 + (d - m.exp[0]));
}

} // namespace

RationalMatrix macaulay_matrix(std::span<const Poly> gens, int bound) {
  const auto columns = monomials_below(bound);
  struct RowSpec {
    const Poly* g;
    Monomial m;
  };
  std::vector<RowSpec> specs;
  for (const auto& g : gens) {
    require_plane(g);
    if (g.is_zero() || g.order() >= bound) continue;
    for (const auto& m : columns)
      if (m.degree() + g.order() < bound) specs.push_back({&g, m});
  }
  RationalMatrix mat(specs.size(), columns.size());
  const long count = static_cast<long>(specs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long r = 0; r < count; ++r) {
    const auto& s = specs[static_cast<std::size_t>(r)];
    for (const auto& [m, c] : s.g->terms()) {
      Monomial prod = m * s.m;
      if (prod.degree() < bound) mat(static_cast<std::size_t>(r), column_of(prod)) = c;
    }
  }
  return mat;
}

std::size_t macaulay_dim(std::span<const Poly> gens, int bound) {
  if (bound < 1) throw std::invalid_argument("truncation bound must be positive");
  RationalMatrix mat = macaulay_matrix(gens, bound);
  return mat.cols() - bareiss_rank_parallel(integer_rows(mat));
}

std::size_t macaulay_dim_serial(std::span<const Poly> gens, int bound) {
  if (bound < 1) throw std::invalid_argument("truncation bound must be positive");
  RationalMatrix mat = macaulay_matrix(gens, bound);
  return mat.cols() - bareiss_rank_serial(integer_rows(mat));
}

MacaulayRun stabilized_macaulay_dim(std::span<const Poly> gens, int cap) {
  int maxdeg = 0;
  for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
  MacaulayRun run;
  int bound = std::max(4, 2 * maxdeg + 2);
  std::optional<std::size_t> previous;
  for (; bound <= cap; bound += 2) {
    std::size_t d = macaulay_dim(gens, bound);
    run.history.emplace_back(bound, d);
    if (previous && *previous == d) {
      run.dim = d;
      run.bound = bound;
      return run;
    }
    previous = d;
  }
  throw NotStabilized("truncated dimension did not stabilize below degree " + std::to_string(cap));
}

} // namespace folinv
