#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "lotto/coalition_model.h"

namespace lotto {

// Brute-force best responses used as ground truth for the closed forms.
// Everything here is grid search over lotto_payoff; nothing reuses the case
// analysis.
struct OracleConfig {
  std::size_t split_resolution = 2001;
  std::size_t t_resolution = 101;
  std::size_t refine_rounds = 2;

  // Resolutions must be odd and at least 11.
  void validate() const;
};

struct OracleSplit {
  double x_a1 = 0.0;
  double x_a2 = 0.0;
  double adversary_payoff = 0.0;
};

// Maximizes the adversary's total payoff over splits of `budget` between
// front 1 (player budget x1) and front 2 (player budget x2). Each refinement
// round rescans the two neighbouring cells of the best point at ten times
// the resolution.
OracleSplit oracle_split(double x1, double x2, double phi1, double phi2,
                         const OracleConfig& cfg, double budget = 1.0);
OracleSplit oracle_split(const CoalitionGame& game, const OracleConfig& cfg);

// Call and fold branches each searched over the split of what the adversary
// has left. Ties go to Call; the call branch is unavailable for t >= 1.
CommitOutcome3P oracle_adversary_3p(const CoalitionGame& game, double v_b,
                                    double t, const OracleConfig& cfg);

struct Profitability {
  bool profitable = false;
  double delta = 0.0;  // commit_payoff - baseline_payoff
  double commit_payoff = 0.0;
  double baseline_payoff = 0.0;
  Decision decision = Decision::kCall;
  double t = 0.0;
};

// Whether committing t to a battlefield worth v_b strictly beats playing
// without commitment, both sides judged by the oracle.
Profitability oracle_profitability(const CoalitionGame& game, double v_b,
                                   double t, const OracleConfig& cfg);

// oracle_profitability at the commitment in {0, x1/(n-1), ..., x1} with the
// largest delta, n = t_resolution.
Profitability oracle_best_commitment(const CoalitionGame& game, double v_b,
                                     const OracleConfig& cfg);

struct OracleAgreementReport {
  std::size_t instances = 0;
  std::array<std::size_t, 4> per_case{};  // sampled instances per case
  std::size_t violations = 0;
  // oracle maximum minus the payoff of the closed-form split
  double max_gap = 0.0;
  double min_gap = 0.0;
  double worst_x1 = 0.0, worst_x2 = 0.0, worst_phi1 = 0.0, worst_phi2 = 0.0;
  double tolerance_factor = 1e-3;  // violation when |gap| > factor (phi1+phi2)

  bool passed() const { return violations == 0; }
};

// Compares classify_case against oracle_split on `per_case` random instances
// of each of the four cases. Cases 1 to 3 are drawn by rejection on budgets
// in (0.05, 2) and values in (0.2, 5); Case 4 instances are built on the
// equal-ratio line with x1 + x2 >= 1.
OracleAgreementReport verify_oracle_agreement(std::size_t per_case,
                                              std::uint64_t seed,
                                              const OracleConfig& cfg);

}  // namespace lotto
