#include "lotto/oracle.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace lotto {

namespace {

constexpr std::size_t kRefinePoints = 21;

double adversary_total(double a1, double budget, double x1, double x2,
                       double phi1, double phi2) {
  const double a2 = std::max(0.0, budget - a1);
  return lotto_payoff(a1, x1, phi1, Role::kAdversary) +
         lotto_payoff(a2, x2, phi2, Role::kAdversary);
}

struct BranchSearch {
  OracleSplit split;
  double player1 = 0.0;
  double player2 = 0.0;
};

BranchSearch search_branch(double y1, double y2, double phi1, double phi2,
                           double budget, const OracleConfig& cfg) {
  BranchSearch out;
  out.split = oracle_split(y1, y2, phi1, phi2, cfg, budget);
  out.player1 = lotto_payoff(y1, out.split.x_a1, phi1);
  out.player2 = lotto_payoff(y2, out.split.x_a2, phi2);
  return out;
}

}  // namespace

void OracleConfig::validate() const {
  for (std::size_t n : {split_resolution, t_resolution}) {
    if (n < 11 || n % 2 == 0) {
      throw std::domain_error("oracle resolutions must be odd and >= 11, got " +
                              std::to_string(n));
    }
  }
}

OracleSplit oracle_split(double x1, double x2, double phi1, double phi2,
                         const OracleConfig& cfg, double budget) {
  cfg.validate();
  if (!(budget >= 0.0)) {
    throw std::domain_error("oracle budget must be non-negative");
  }
  const std::size_t n = cfg.split_resolution;
  double step = budget / static_cast<double>(n - 1);
  double best_a = 0.0;
  double best_value = adversary_total(0.0, budget, x1, x2, phi1, phi2);
  for (std::size_t k = 1; k < n; ++k) {
    const double a = k + 1 == n ? budget : step * static_cast<double>(k);
    const double value = adversary_total(a, budget, x1, x2, phi1, phi2);
    if (value > best_value) {
      best_value = value;
      best_a = a;
    }
  }
  for (std::size_t round = 0; round < cfg.refine_rounds; ++round) {
    const double lo = std::max(0.0, best_a - step);
    const double hi = std::min(budget, best_a + step);
    const double fine = (hi - lo) / static_cast<double>(kRefinePoints - 1);
    for (std::size_t k = 0; k < kRefinePoints; ++k) {
      const double a = lo + fine * static_cast<double>(k);
      const double value = adversary_total(a, budget, x1, x2, phi1, phi2);
      if (value > best_value) {
        best_value = value;
        best_a = a;
      }
    }
    step /= 10.0;
  }
  return {best_a, budget - best_a, best_value};
}

OracleSplit oracle_split(const CoalitionGame& game, const OracleConfig& cfg) {
  return oracle_split(game.x1(), game.x2(), game.phi1(), game.phi2(), cfg);
}

CommitOutcome3P oracle_adversary_3p(const CoalitionGame& game, double v_b,
                                    double t, const OracleConfig& cfg) {
  if (!(v_b > 0.0 && v_b < game.phi1())) {
    throw std::domain_error("v_b must lie in (0, phi1)");
  }
  if (!(t >= 0.0 && t <= game.x1())) {
    throw std::domain_error("t must lie in [0, x1]");
  }
  const double rest = game.phi1() - v_b;
  const double kept = game.x1() - t;

  // Fold: full budget, the committed battlefield goes to player 1.
  const BranchSearch fold =
      search_branch(kept, game.x2(), rest, game.phi2(), 1.0, cfg);
  const double fold_value = fold.split.adversary_payoff - v_b;

  CommitOutcome3P out;
  out.oracle_derived = true;
  out.fold_value = fold_value;
  out.decision = Decision::kFold;
  out.split_front1 = fold.split.x_a1;
  out.split_front2 = fold.split.x_a2;
  out.payoff_player1 = fold.player1 + v_b;
  out.payoff_player2 = fold.player2;
  out.payoff_adversary = fold_value;

  if (t < 1.0) {
    // Call: t is matched on the battlefield, the rest is split in original
    // units without any rescaling.
    const BranchSearch call =
        search_branch(kept, game.x2(), rest, game.phi2(), 1.0 - t, cfg);
    const double call_value = call.split.adversary_payoff + v_b;
    out.call_value = call_value;
    if (approx_ge(call_value, fold_value)) {
      out.decision = Decision::kCall;
      out.split_front1 = call.split.x_a1;
      out.split_front2 = call.split.x_a2;
      out.payoff_player1 = call.player1 - v_b;
      out.payoff_player2 = call.player2;
      out.payoff_adversary = call_value;
    }
  }
  return out;
}

Profitability oracle_profitability(const CoalitionGame& game, double v_b,
                                   double t, const OracleConfig& cfg) {
  const OracleSplit base = oracle_split(game, cfg);
  const CommitOutcome3P outcome = oracle_adversary_3p(game, v_b, t, cfg);
  Profitability out;
  out.t = t;
  out.decision = outcome.decision;
  out.baseline_payoff = lotto_payoff(game.x1(), base.x_a1, game.phi1());
  out.commit_payoff = outcome.payoff_player1;
  out.delta = out.commit_payoff - out.baseline_payoff;
  out.profitable = out.delta > 0.0;
  return out;
}

Profitability oracle_best_commitment(const CoalitionGame& game, double v_b,
                                     const OracleConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.t_resolution;
  Profitability best;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = k + 1 == n ? game.x1()
                                : game.x1() * static_cast<double>(k) /
                                      static_cast<double>(n - 1);
    const Profitability p = oracle_profitability(game, v_b, t, cfg);
    if (k == 0 || p.delta > best.delta) best = p;
  }
  return best;
}

OracleAgreementReport verify_oracle_agreement(std::size_t per_case,
                                              std::uint64_t seed,
                                              const OracleConfig& cfg) {
  OracleAgreementReport report;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> budget(0.05, 2.0);
  std::uniform_real_distribution<double> value(0.2, 5.0);

  auto check = [&](double x1, double x2, double phi1, double phi2) {
    const SplitDecision split = classify_case(x1, x2, phi1, phi2);
    const double closed =
        lotto_payoff(split.x_a1, x1, phi1, Role::kAdversary) +
        lotto_payoff(split.x_a2, x2, phi2, Role::kAdversary);
    const double found = oracle_split(x1, x2, phi1, phi2, cfg).adversary_payoff;
    const double gap = found - closed;
    if (report.instances == 0 || gap > report.max_gap) report.max_gap = gap;
    if (report.instances == 0 || gap < report.min_gap) report.min_gap = gap;
    if (std::abs(gap) > report.tolerance_factor * (phi1 + phi2)) {
      ++report.violations;
      report.worst_x1 = x1;
      report.worst_x2 = x2;
      report.worst_phi1 = phi1;
      report.worst_phi2 = phi2;
    }
    ++report.instances;
  };

  const SplitCase strata[] = {SplitCase::kCase1, SplitCase::kCase2,
                              SplitCase::kCase3};
  for (std::size_t s = 0; s < 3; ++s) {
    while (report.per_case[s] < per_case) {
      const double x1 = budget(rng), x2 = budget(rng);
      const double phi1 = value(rng), phi2 = value(rng);
      if (classify_case(x1, x2, phi1, phi2).label != strata[s]) continue;
      check(x1, x2, phi1, phi2);
      ++report.per_case[s];
    }
  }
  while (report.per_case[3] < per_case) {
    const double x1 = budget(rng), x2 = budget(rng);
    if (x1 + x2 < 1.0) continue;
    const double phi1 = value(rng);
    check(x1, x2, phi1, phi1 * x2 / x1);
    ++report.per_case[3];
  }
  return report;
}

}  // namespace lotto
