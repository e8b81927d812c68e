#include "folinv/theorems.hpp"

namespace folinv {

SecondTypeMode parse_mode(const std::string& text) {
  if (text == "criterion") return SecondTypeMode::Criterion;
  if (text == "reduction") return SecondTypeMode::Reduction;
  if (text == "both") return SecondTypeMode::Both;
  throw InvalidInput("unknown mode '" + text + "' (criterion|reduction|both)");
}

namespace {

using ll = long long;

void echo(CheckReport& r, const FoliationGerm& F, const BalancedEquation* B) {
  r.input("P", F.P.str());
  r.input("Q", F.Q.str());
  if (B) {
    r.input("zero", B->zero.f.str());
    r.input("pole", B->pole ? B->pole->f.str() : "(none)");
  }
}

struct Hypothesis {
  ll xi = 0;
  bool second_type = false;
};

// Second type by the multiplicity criterion, recorded with its ingredients.
Hypothesis record_hypothesis(CheckReport& r, const FoliationGerm& F, const BalancedEquation& B) {
  Hypothesis h;
  h.xi = tangency_excess(F, B);
  h.second_type = h.xi == 0;
  r.set("nu_F", static_cast<ll>(multiplicity(F)));
  r.set("nu_B0", static_cast<ll>(B.zero_multiplicity()));
  r.set("nu_Binf", static_cast<ll>(B.pole_multiplicity()));
  r.set("nu_B_signed", static_cast<ll>(B.signed_multiplicity()));
  r.set("nu_B_unsigned", static_cast<ll>(B.zero_multiplicity() + B.pole_multiplicity()));
  r.set("xi", h.xi);
  r.set("second_type_criterion", h.second_type);
  return h;
}

void close_with_hypothesis(CheckReport& r, const Hypothesis& h) {
  r.settle();
  if (!h.second_type) {
    r.reason("second-type hypothesis not met (xi = " + std::to_string(h.xi) +
             "): conclusion not guaranteed, values are observational");
  } else if (r.verdict() == Verdict::Fail) {
    r.reason("contradiction: an asserted relation fails on a second-type germ");
  }
}

struct Operator {
  StandardBasis jacobian;
  ll mu = 0;
  QuotientOperator sigma;
  KernelRank kr;
};

Operator milnor_operator(const FoliationGerm& F, const Poly& f) {
  Operator op;
  op.jacobian = standard_basis({F.P, F.Q});
  auto mu = quotient_dim(op.jacobian);
  if (!mu) throw NonIsolated("Milnor number: non-isolated singularity (infinite quotient)");
  op.mu = static_cast<ll>(*mu);
  op.sigma = mult_operator(op.jacobian, f);
  op.kr = kernel_rank(op.sigma);
  return op;
}

struct ReductionOutcome {
  std::optional<ReductionTree> tree;
  std::string error;
};

ReductionOutcome try_reduce(const FoliationGerm& F, int max_blowups) {
  ReductionOutcome out;
  try {
    out.tree = reduce(F, max_blowups);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

nlohmann::ordered_json polar_table(const PolarResult& p) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : p.table) {
    nlohmann::ordered_json j;
    j["probe"] = row.probe.str();
    j["polar"] = row.polar.str();
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      if (row.values[i]) j[p.value_names[i]] = *row.values[i];
      else j[p.value_names[i]] = "infinite";
    }
    rows.push_back(j);
  }
  return rows;
}

} // namespace

CheckReport check_briancon_skoda(const FoliationGerm& F, const BalancedEquation& B, const CheckOptions&) {
  CheckReport r("briancon-skoda");
  echo(r, F, &B);
  Hypothesis h = record_hypothesis(r, F, B);
  const Poly& f = B.zero.f;

  Operator op = milnor_operator(F, f);
  const ll tau = static_cast<ll>(tjurina_foliation(F, f));
  const Poly nf = normal_form(f.pow(2), op.jacobian);
  const RationalMatrix square = multiply(op.sigma.matrix, op.sigma.matrix);

  r.set("mu", op.mu);
  r.set("tau", tau);
  r.set("f2_normal_form", nf.str());
  r.set("sigma_rank", static_cast<ll>(op.kr.rank));
  r.set("sigma_kernel_dim", static_cast<ll>(op.kr.kernel_dim));
  r.set("mu_minus_tau", op.mu - tau);
  r.assertion("f2_in_jacobian_ideal", nf.is_zero());
  r.assertion("sigma_squared_zero", is_zero(square));
  r.assertion("rank_sigma_equals_mu_minus_tau", static_cast<ll>(op.kr.rank) == op.mu - tau);
  close_with_hypothesis(r, h);
  return r;
}

CheckReport check_kernel_identity(const FoliationGerm& F, const BalancedEquation& B, const CheckOptions&) {
  CheckReport r("kernel-identity");
  echo(r, F, &B);
  Operator op = milnor_operator(F, B.zero.f);
  const ll tau = static_cast<ll>(tjurina_foliation(F, B.zero.f));
  r.set("mu", op.mu);
  r.set("tau", tau);
  r.set("sigma_kernel_dim", static_cast<ll>(op.kr.kernel_dim));
  r.set("sigma_rank", static_cast<ll>(op.kr.rank));
  r.assertion("kernel_dim_equals_tau", static_cast<ll>(op.kr.kernel_dim) == tau);
  r.settle();
  return r;
}

CheckReport check_liu(const FoliationGerm& F, const BalancedEquation& B, const CheckOptions&) {
  CheckReport r("liu-sandwich");
  echo(r, F, &B);
  Hypothesis h = record_hypothesis(r, F, B);
  Operator op = milnor_operator(F, B.zero.f);
  const ll tau = static_cast<ll>(tjurina_foliation(F, B.zero.f));
  const bool extreme = op.mu == 2 * tau;
  const RationalMatrix kernel = kernel_basis(op.sigma.matrix);
  const bool ker_is_image = same_column_space(kernel, op.sigma.matrix);

  r.set("mu", op.mu);
  r.set("tau", tau);
  r.set("two_tau", 2 * tau);
  r.set("mu_equals_2tau", extreme);
  r.set("ker_sigma_equals_ideal_f", ker_is_image);
  r.assertion("tau_le_mu", tau <= op.mu);
  r.assertion("mu_le_2tau", op.mu <= 2 * tau);
  r.assertion("equality_iff_ker_sigma_is_ideal_f", extreme == ker_is_image);
  close_with_hypothesis(r, h);
  if (extreme) r.reason("instance attains mu = 2 tau");
  return r;
}

CheckReport check_cota(const FoliationGerm& F, const BalancedEquation& B, const CheckOptions& opts) {
  CheckReport r("polar-bound");
  echo(r, F, &B);
  Hypothesis h = record_hypothesis(r, F, B);
  const Poly& f = B.zero.f;

  PolarResult polar = generic_polar(F, opts.probes, &B);
  r.set("polar", polar.polar.str());
  r.set("polar_probe", polar.probe.str());
  r.set("polar_certified", polar.certified);
  r.detail("polar_probes", polar_table(polar));
  if (!polar.certified) r.reason("warning: genericity not certified (no repeated minimum among probes)");

  const ll nu_f = multiplicity(F);
  const ll nu_b0 = B.zero_multiplicity();
  const ll nu_binf = B.pole_multiplicity();
  const ll i_polar_b0 = static_cast<ll>(intersection_multiplicity(polar.polar, f));
  const ll i_polar_binf = B.pole ? static_cast<ll>(intersection_multiplicity(polar.polar, B.pole->f)) : 0;
  const ll i_b0_binf = B.pole ? static_cast<ll>(intersection_multiplicity(f, B.pole->f)) : 0;
  const ll mu = static_cast<ll>(milnor_foliation(F));
  const ll tau = static_cast<ll>(tjurina_foliation(F, f));
  const ll mu_b0 = static_cast<ll>(milnor_curve(f));
  const ll lhs = (nu_b0 - 1) * (nu_b0 - 1) + nu_binf - i_polar_binf - i_b0_binf;

  r.set("i_polar_B0", i_polar_b0);
  r.set("i_polar_Binf", i_polar_binf);
  r.set("i_B0_Binf", i_b0_binf);
  r.set("mu_B0", mu_b0);
  r.set("mu", mu);
  r.set("tau", tau);
  r.set("lower_bound", lhs);
  r.set("two_tau", 2 * tau);
  r.set("excess_polar", excess_polar(F, B, polar.polar));
  r.set("equality_star", lhs == mu);

  r.assertion("lower_bound_le_mu", lhs <= mu);
  r.assertion("mu_le_2tau", mu <= 2 * tau);
  if (!B.pole) {
    r.set("nu_F_squared", nu_f * nu_f);
    r.assertion("nu_sq_le_mu", nu_f * nu_f <= mu);
    r.assertion("nu_sq_le_2tau", nu_f * nu_f <= 2 * tau);
  }
  if (h.second_type) {
    // Polar identity derived for second-type germs.
    r.assertion("polar_identity", i_polar_b0 == i_polar_binf + mu + nu_f);
  }

  const bool semi = is_semihomogeneous(f);
  r.set("B0_semihomogeneous", semi);
  ReductionOutcome red = try_reduce(F, opts.max_blowups);
  if (red.tree) {
    const bool gc = generalized_curve_verdict(*red.tree);
    r.set("generalized_curve", gc);
    if (gc && semi) r.assertion("equality_star_for_gc_semihomogeneous", lhs == mu);
  } else {
    r.set("generalized_curve", std::string("unknown"));
    r.reason("reduction unavailable: " + red.error);
  }
  close_with_hypothesis(r, h);
  return r;
}

CheckReport check_second_type(const FoliationGerm& F, const BalancedEquation& B, const CheckOptions& opts) {
  CheckReport r("second-type");
  echo(r, F, &B);
  Hypothesis h = record_hypothesis(r, F, B);
  SecondTypeMode mode = opts.mode;
  r.set("xi_nonnegative", h.xi >= 0);

  std::optional<bool> by_reduction;
  if (mode != SecondTypeMode::Criterion) {
    ReductionOutcome red = try_reduce(F, opts.max_blowups);
    if (red.tree) {
      by_reduction = second_type_verdict(*red.tree);
      r.set("second_type_reduction", *by_reduction);
      r.set("generalized_curve", generalized_curve_verdict(*red.tree));
      r.set("blowups", static_cast<ll>(red.tree->blowup_count()));
      r.detail("reduction", to_json(*red.tree));
    } else {
      r.reason("warning: reduction aborted (" + red.error + "); falling back to the criterion");
      if (mode == SecondTypeMode::Reduction) throw InvalidInput("reduction route unavailable: " + red.error);
      mode = SecondTypeMode::Criterion;
    }
  }
  switch (mode) {
    case SecondTypeMode::Criterion:
      r.set("mode", std::string("criterion"));
      r.assertion("second_type", h.second_type);
      break;
    case SecondTypeMode::Reduction:
      r.set("mode", std::string("reduction"));
      r.assertion("second_type", *by_reduction);
      break;
    case SecondTypeMode::Both:
      r.set("mode", std::string("both"));
      r.assertion("routes_agree", h.second_type == *by_reduction);
      r.assertion("second_type", h.second_type && *by_reduction);
      break;
  }
  r.settle();
  return r;
}

CheckReport invariants_report(const FoliationGerm& F, const std::optional<BalancedEquation>& B,
                              const CheckOptions& opts, int truncation_cap) {
  CheckReport r("invariants");
  echo(r, F, B ? &*B : nullptr);
  r.set("nu_F", static_cast<ll>(multiplicity(F)));
  r.set("singular", F.singular());
  const ll mu = static_cast<ll>(milnor_foliation(F));
  r.set("mu", mu);
  std::vector<Poly> gens{F.P, F.Q};
  try {
    MacaulayRun run = stabilized_macaulay_dim(gens, truncation_cap);
    r.set("mu_truncation_oracle", static_cast<ll>(run.dim));
    r.set("oracle_bound", static_cast<ll>(run.bound));
    r.assertion("mu_matches_oracle", static_cast<ll>(run.dim) == mu);
  } catch (const NotStabilized& e) {
    r.set("mu_truncation_oracle", std::string("not stabilized"));
    r.reason(e.what());
  }

  if (B) {
    const Poly& f = B->zero.f;
    record_hypothesis(r, F, *B);
    PolarResult polar = generic_polar(F, opts.probes, &*B);
    r.set("polar", polar.polar.str());
    r.set("polar_probe", polar.probe.str());
    r.set("polar_certified", polar.certified);
    r.detail("polar_probes", polar_table(polar));
    r.set("tau", static_cast<ll>(tjurina_foliation(F, f)));
    r.set("mu_B0", static_cast<ll>(milnor_curve(f)));
    r.set("tau_B0", static_cast<ll>(tjurina_curve(f)));
    r.set("i_polar_B0", static_cast<ll>(intersection_multiplicity(polar.polar, f)));
    if (B->pole) {
      r.set("i_polar_Binf", static_cast<ll>(intersection_multiplicity(polar.polar, B->pole->f)));
      r.set("i_B0_Binf", static_cast<ll>(intersection_multiplicity(f, B->pole->f)));
    }
    r.set("excess_polar", excess_polar(F, *B, polar.polar));
    r.set("gsv", gsv_index(F, f));
    r.set("B0_semihomogeneous", is_semihomogeneous(f));
  }
  r.settle();
  return r;
}

CheckReport reduction_report(const FoliationGerm& F, const CheckOptions& opts) {
  CheckReport r("reduction");
  echo(r, F, nullptr);
  ReductionTree tree = reduce(F, opts.max_blowups);
  r.set("blowups", static_cast<ll>(tree.blowup_count()));
  r.set("leaves", static_cast<ll>(tree.leaves.size()));
  r.set("second_type", second_type_verdict(tree));
  r.set("generalized_curve", generalized_curve_verdict(tree));
  r.set("dicriticals_separated", tree.dicriticals_separated());
  nlohmann::ordered_json dic = nlohmann::ordered_json::array();
  for (const auto& d : dicritical_report(tree))
    dic.push_back({{"component", d.component}, {"valence", d.valence}, {"budget", d.budget}});
  r.detail("dicritical", dic);
  r.detail("tree", to_json(tree));
  r.settle();
  return r;
}

nlohmann::ordered_json to_json(const ReductionTree& tree) {
  nlohmann::ordered_json j;
  j["blowups"] = nlohmann::ordered_json::array();
  for (const auto& b : tree.blowups) {
    j["blowups"].push_back({{"id", b.id},
                            {"parent", b.parent},
                            {"center", b.center},
                            {"multiplicity", b.multiplicity},
                            {"epsilon", b.epsilon},
                            {"h1", h1_dimension(b.multiplicity, b.epsilon)}});
  }
  j["components"] = nlohmann::ordered_json::array();
  for (const auto& c : tree.components) {
    j["components"].push_back({{"id", c.id},
                               {"dicritical", c.dicritical},
                               {"valence", c.valence()},
                               {"neighbors", std::vector<int>(c.neighbors.begin(), c.neighbors.end())}});
  }
  j["leaves"] = nlohmann::ordered_json::array();
  for (const auto& leaf : tree.leaves) {
    nlohmann::ordered_json ex = nlohmann::ordered_json::array();
    for (const auto& m : leaf.exceptional) ex.push_back({{"axis", m.axis == 0 ? "x=0" : "y=0"}, {"component", m.component}});
    nlohmann::ordered_json lin = nlohmann::ordered_json::array();
    for (const auto& v : leaf.linear) lin.push_back(v.get_str());
    j["leaves"].push_back({{"location", leaf.location},
                           {"class", to_string(leaf.cls)},
                           {"tangent", leaf.tangent},
                           {"trace", leaf.trace.get_str()},
                           {"det", leaf.det.get_str()},
                           {"linear_part", lin},
                           {"eigen", leaf.eigen},
                           {"exceptional", ex}});
  }
  return j;
}

} // namespace folinv
