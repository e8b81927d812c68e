#pragma once

#include "folinv/blowup.hpp"
#include "folinv/germ.hpp"
#include "folinv/report.hpp"

#include <optional>
#include <vector>

namespace folinv {

enum class SecondTypeMode { Criterion, Reduction, Both };
SecondTypeMode parse_mode(const std::string& text);

struct CheckOptions {
  int max_blowups = 24;
  std::vector<Probe> probes = default_probes();
  SecondTypeMode mode = SecondTypeMode::Both;
};

// Every check below records its verdict from the exact values it observes. When
// the second-type hypothesis fails the values are observational: a failure is
// expected to be possible and is noted as such. A failure on a second-type germ
// is flagged as a contradiction.

/// f^2 in (P, Q); sigma^2 = 0 on the Milnor algebra; rank(sigma) = mu - tau.
CheckReport check_briancon_skoda(const FoliationGerm& F, const BalancedEquation& B, const CheckOptions& opts = {});

/// dim Ker sigma = tau(F, B0).
CheckReport check_kernel_identity(const FoliationGerm& F, const BalancedEquation& B, const CheckOptions& opts = {});

/// tau <= mu <= 2 tau, and mu = 2 tau exactly when Ker sigma is the ideal generated by f.
CheckReport check_liu(const FoliationGerm& F, const BalancedEquation& B, const CheckOptions& opts = {});

/// Polar lower bound (nu(B0)-1)^2 + nu(B_inf) - i(P, B_inf) - i(B0, B_inf) <= mu <= 2 tau.
CheckReport check_cota(const FoliationGerm& F, const BalancedEquation& B, const CheckOptions& opts = {});

/// Criterion nu(F) = nu(B0) - nu(B_inf) - 1 against the reduction (no tangent saddle-nodes).
CheckReport check_second_type(const FoliationGerm& F, const BalancedEquation& B, const CheckOptions& opts = {});

/// Every local invariant the engine computes for a germ, with an optional divisor.
CheckReport invariants_report(const FoliationGerm& F, const std::optional<BalancedEquation>& B,
                              const CheckOptions& opts = {}, int truncation_cap = 64);

/// Reduction tree, verdicts and dicritical budgets.
CheckReport reduction_report(const FoliationGerm& F, const CheckOptions& opts = {});

nlohmann::ordered_json to_json(const ReductionTree& tree);

} // namespace folinv
