#include "corpus.hpp"

#include "folinv/blowup.hpp"
#include "folinv/projective.hpp"
#include "folinv/theorems.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace folinv;
using corpus::P2;
using corpus::P3;

namespace {

// Collects the first few failed expectations of a criterion.
struct Tally {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    if (actual == expected) return;
    std::ostringstream os;
    os << what << " = " << actual << ", expected " << expected;
    expect(false, os.str());
  }
};

template <class T>
T value(const std::optional<T>& v) {
  if (!v) throw std::runtime_error("missing report value");
  return *v;
}

BalancedEquation balanced(const FoliationGerm& F, const char* zero, const char* pole = nullptr) {
  return make_balanced(F, P2(zero), pole ? std::optional<Poly>(P2(pole)) : std::nullopt);
}

void radial(Tally& t) {
  auto F = corpus::radial();
  auto B = balanced(F, "x*y*(x-y)", "x+y");
  auto r = check_cota(F, B);
  t.equal(value(r.integer("nu_B0")), 3, "nu(B0)");
  t.equal(value(r.integer("nu_Binf")), 1, "nu(Binf)");
  t.equal(value(r.integer("i_polar_Binf")), 1, "i(polar,Binf)");
  t.equal(value(r.integer("tau")), 1, "tau(F,B0)");
  t.equal(value(r.integer("i_B0_Binf")), 3, "i(B0,Binf)");
  t.equal(value(r.integer("mu")), 1, "mu(F)");
  t.equal(value(r.integer("lower_bound")), 1, "doubled lower bound");
  t.equal(value(r.integer("two_tau")), 2, "2 tau");
  t.expect(value(r.boolean("equality_star")), "equality (*)");
  t.expect(r.verdict() == Verdict::Pass, "polar bound verdict");
  auto s = check_second_type(F, B);
  t.expect(value(r.boolean("second_type_criterion")), "second type by criterion");
  t.expect(value(s.boolean("second_type_reduction")), "second type by reduction");
  t.expect(s.verdict() == Verdict::Pass, "routes agree");
}

void briancon_skoda_failure(Tally& t) {
  auto F = corpus::fk(5);
  auto r = check_briancon_skoda(F, balanced(F, "x*y"));
  t.expect(!value(r.assertion_holds("f2_in_jacobian_ideal")), "(xy)^2 in the Jacobian ideal");
  t.expect(value(r.text("f2_normal_form")) != "0", "nonzero normal form");
  t.equal(value(r.integer("nu_F")), 5, "nu(F)");
  t.expect(!value(r.boolean("second_type_criterion")), "not second type");
}

void fk_family(Tally& t) {
  for (int k = 3; k <= 7; ++k) {
    auto F = corpus::fk(k);
    const long long tau = static_cast<long long>(tjurina_foliation(F, P2("x*y")));
    const long long nu = multiplicity(F);
    const std::string tag = "k=" + std::to_string(k);
    t.equal(tau, 3 * k - 2, tag + " tau");
    t.equal(nu, k, tag + " nu");
    t.expect((nu * nu <= 2 * tau) == (k <= 5), tag + " nu^2/2 <= tau pattern");
  }
}

void global_bound(Tally& t) {
  ParamMap p{{"l", Rational(2)}};
  auto W = make_projective(P3("y*z", p), P3("l*x*z", p), P3("-(l+1)*x*y", p));
  auto r = check_global_bound(W, P3("x*y*z"), {make_point(1, 0, 0), make_point(0, 1, 0), make_point(0, 0, 1)});
  t.equal(value(r.integer("d")), 1, "d");
  t.equal(value(r.integer("mu_sum")), 3, "sum of mu");
  t.equal(value(r.integer("d2_d_1")), 3, "d^2+d+1");
  t.equal(value(r.integer("tau_C")), 3, "tau(C)");
  t.equal(value(r.integer("bound_2")), 2, "ceil(3/2)");
  t.equal(value(r.text("bound_2_text")), std::string("2 ≤ 3"), "bound text");
  t.equal(value(r.integer("gsv_sum")), 0, "GSV sum");
  t.equal(value(r.integer("gsv_sum_formula")), 0, "(d+2)m - m^2");
  t.expect(r.verdict() == Verdict::Pass, "global bound verdict");
}

void oracle_equivalence(Tally& t) {
  auto germs = corpus::random_germs(2024, 25);
  for (std::size_t i = 0; i < germs.size(); ++i) {
    std::vector<Poly> gens = {germs[i].P, germs[i].Q};
    auto sb = quotient_dim(standard_basis(gens));
    auto mac = stabilized_macaulay_dim(gens);
    t.expect(sb.has_value(), "germ " + std::to_string(i) + " has finite colength");
    if (sb) t.equal(*sb, mac.dim, "germ " + std::to_string(i) + " colength");
  }
}

void operator_form(Tally& t) {
  auto fs = corpus::random_hamiltonians(606, 10);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto F = corpus::hamiltonian(fs[i]);
    auto B = make_balanced(F, fs[i], std::nullopt);
    auto bs = check_briancon_skoda(F, B);
    auto ker = check_kernel_identity(F, B);
    const std::string tag = "hamiltonian " + std::to_string(i);
    t.expect(value(bs.boolean("second_type_criterion")), tag + " second type");
    t.expect(value(bs.assertion_holds("sigma_squared_zero")), tag + " sigma^2 = 0");
    t.expect(value(bs.assertion_holds("rank_sigma_equals_mu_minus_tau")), tag + " rank = mu - tau");
    t.expect(value(ker.assertion_holds("kernel_dim_equals_tau")), tag + " dim ker = tau");
  }
}

void cusp_resolution(Tally& t) {
  auto F = corpus::cusp();
  auto tree = reduce(F);
  t.equal(tree.blowup_count(), std::size_t{3}, "blow-ups");
  t.expect(!tree.leaves.empty(), "leaves present");
  for (const auto& leaf : tree.leaves) t.expect(leaf.cls == SingularClass::NondegenerateSimple, "leaf class");
  t.expect(second_type_verdict(tree), "second type");
  t.expect(generalized_curve_verdict(tree), "generalized curve");
  auto s = check_second_type(F, balanced(F, "y^2 - x^3"));
  t.expect(value(s.assertion_holds("routes_agree")), "routes agree");
}

void semihomogeneous(Tally& t) {
  Poly f = P2("x*y*(x-y)");
  t.equal(milnor_curve(f), std::size_t{4}, "mu(xy(x-y))");
  t.expect(is_semihomogeneous(f), "xy(x-y) semi-homogeneous");
  for (const auto& g : corpus::random_non_semihomogeneous(808, 10)) {
    const long long n = g.order();
    t.expect((n - 1) * (n - 1) <= static_cast<long long>(milnor_curve(g)), "(nu-1)^2 <= mu for " + g.str());
  }
}

std::string found_equality;

void liu(Tally& t) {
  struct Case {
    std::string name;
    FoliationGerm F;
    BalancedEquation B;
  };
  std::vector<Case> cases;
  auto rad = corpus::radial();
  cases.push_back({"radial", rad, balanced(rad, "x*y*(x-y)", "x+y")});
  auto cusp = corpus::cusp();
  cases.push_back({"cusp", cusp, balanced(cusp, "y^2 - x^3")});
  for (const auto& f : corpus::random_hamiltonians(606, 10)) {
    auto H = corpus::hamiltonian(f);
    cases.push_back({"d(" + f.str() + ")", H, make_balanced(H, f, std::nullopt)});
  }
  for (const auto& c : cases) {
    auto r = check_liu(c.F, c.B);
    t.expect(value(r.boolean("second_type_criterion")), c.name + " second type");
    t.expect(r.verdict() == Verdict::Pass, c.name + " tau <= mu <= 2 tau");
    if (value(r.boolean("mu_equals_2tau")) && found_equality.empty()) found_equality = c.name;
  }
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
      {"radial example", radial},
      {"Briancon-Skoda failure for F_5", briancon_skoda_failure},
      {"F_k family k=3..7", fk_family},
      {"global Tjurina bound", global_bound},
      {"standard basis vs truncation oracle", oracle_equivalence},
      {"operator form on hamiltonians", operator_form},
      {"cusp resolution", cusp_resolution},
      {"semi-homogeneous equality", semihomogeneous},
      {"Liu sandwich", liu},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << "  " << criteria[i].first << "  ("
              << std::fixed << std::setprecision(3) << secs << " s)\n";
    for (const auto& f : t.failures) std::cout << "      " << f << "\n";
  }
  std::cout << "mu = 2 tau instance: " << (found_equality.empty() ? "none found" : found_equality) << "\n";
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
