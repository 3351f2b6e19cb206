#include "lotto/coalition_model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lotto/oracle.h"

namespace lotto {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double scale_of(double a, double b) {
  return std::max({1.0, std::abs(a), std::abs(b)});
}
bool gt(double a, double b, double tol) {
  return tol == 0.0 ? a > b : a > b - tol * scale_of(a, b);
}
bool ge(double a, double b, double tol) {
  return a >= b - tol * scale_of(a, b);
}
bool le(double a, double b, double tol) { return ge(b, a, tol); }
bool eq(double a, double b, double tol) {
  return std::abs(a - b) <= tol * scale_of(a, b);
}

void check_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(name) + " must be positive, got " +
                            std::to_string(value));
  }
}

void check_committed_value(const CoalitionGame& game, double v_b) {
  if (!(v_b > 0.0 && v_b < game.phi1())) {
    throw std::domain_error("v_b must lie in (0, phi1), got " +
                            std::to_string(v_b));
  }
}

struct BranchResult {
  SplitDecision split;
  double adversary = 0.0;
  double player1 = 0.0;
  double player2 = 0.0;
};

// One General Lotto stage over both fronts after the commitment has been
// settled. `bonus` is the adversary's gain on the committed battlefield.
BranchResult play_fronts(double y1, double y2, double phi1, double phi2,
                         double bonus) {
  BranchResult r;
  r.split = best_split(y1, y2, phi1, phi2);
  r.adversary = lotto_payoff(r.split.x_a1, y1, phi1, Role::kAdversary) +
                lotto_payoff(r.split.x_a2, y2, phi2, Role::kAdversary) + bonus;
  r.player1 = lotto_payoff(y1, r.split.x_a1, phi1) - bonus;
  r.player2 = lotto_payoff(y2, r.split.x_a2, phi2);
  return r;
}

}  // namespace

double default_tstar_delta(double x1) {
  return kTstarOffset * std::max(1.0, x1);
}

CoalitionGame::CoalitionGame(double x1, double x2, BattlefieldFront front1,
                             BattlefieldFront front2)
    : x1_(x1), x2_(x2), front1_(std::move(front1)), front2_(std::move(front2)) {
  check_positive(x1, "x1");
  check_positive(x2, "x2");
}

std::string case_name(SplitCase label, int side) {
  switch (label) {
    case SplitCase::kCase1:
      return "case1_i" + std::to_string(side);
    case SplitCase::kCase2:
      return "case2_i" + std::to_string(side);
    case SplitCase::kCase3:
      return "case3";
    case SplitCase::kCase4:
      return "case4";
  }
  return "unknown";
}

ClassificationError::ClassificationError(double x1_, double x2_, double phi1_,
                                         double phi2_)
    : std::runtime_error("no split case matches x1=" + std::to_string(x1_) +
                         " x2=" + std::to_string(x2_) +
                         " phi1=" + std::to_string(phi1_) +
                         " phi2=" + std::to_string(phi2_)),
      x1(x1_),
      x2(x2_),
      phi1(phi1_),
      phi2(phi2_) {}

bool satisfies_case(SplitCase label, int side, double x1, double x2,
                    double phi1, double phi2, double tol) {
  const bool first = side == 1;
  const double xi = first ? x1 : x2;
  const double xo = first ? x2 : x1;
  const double pi = first ? phi1 : phi2;
  const double po = first ? phi2 : phi1;
  const double ratio = pi / po;
  const double slack = 1.0 - std::sqrt(pi * xi * xo / po);
  switch (label) {
    case SplitCase::kCase1:
      return gt(ratio, std::max(xi * xi, 1.0) / (xi * xo), tol);
    case SplitCase::kCase2:
      return gt(ratio, xi / xo, tol) && gt(slack, 0.0, tol) &&
             le(slack, xo, tol);
    case SplitCase::kCase3:
      return ge(ratio, xi / xo, tol) && gt(slack, xo, tol);
    case SplitCase::kCase4:
      return eq(ratio, xi / xo, tol) && ge(xi + xo, 1.0, tol);
  }
  return false;
}

SplitDecision case_split(SplitCase label, int side, double x1, double x2,
                         double phi1, double phi2) {
  SplitDecision out;
  out.label = label;
  out.side = side;
  double favoured = 0.0;  // adversary force on front `side`
  switch (label) {
    case SplitCase::kCase1:
      favoured = 1.0;
      break;
    case SplitCase::kCase2: {
      const bool first = side == 1;
      const double xi = first ? x1 : x2;
      const double xo = first ? x2 : x1;
      const double pi = first ? phi1 : phi2;
      const double po = first ? phi2 : phi1;
      favoured = std::clamp(std::sqrt(pi * xi * xo / po), 0.0, 1.0);
      break;
    }
    case SplitCase::kCase3: {
      const double w1 = std::sqrt(x1 * phi1);
      const double w2 = std::sqrt(x2 * phi2);
      favoured = (side == 1 ? w1 : w2) / (w1 + w2);
      break;
    }
    case SplitCase::kCase4:
      favoured = (side == 1 ? x1 : x2) / (x1 + x2);
      break;
  }
  if (side == 1) {
    out.x_a1 = favoured;
    out.x_a2 = 1.0 - favoured;
  } else {
    out.x_a2 = favoured;
    out.x_a1 = 1.0 - favoured;
  }
  return out;
}

SplitDecision classify_case(double x1, double x2, double phi1, double phi2) {
  check_positive(x1, "x1");
  check_positive(x2, "x2");
  check_positive(phi1, "phi1");
  check_positive(phi2, "phi2");
  for (double tol : {0.0, kCaseTolerance}) {
    for (SplitCase label : {SplitCase::kCase1, SplitCase::kCase2,
                            SplitCase::kCase3, SplitCase::kCase4}) {
      for (int side : {1, 2}) {
        if (satisfies_case(label, side, x1, x2, phi1, phi2, tol)) {
          return case_split(label, side, x1, x2, phi1, phi2);
        }
      }
    }
  }
  throw ClassificationError(x1, x2, phi1, phi2);
}

SplitDecision best_split(double x1, double x2, double phi1, double phi2) {
  return best_split(x1, x2, phi1, phi2, OracleConfig{});
}

SplitDecision best_split(double x1, double x2, double phi1, double phi2,
                         const OracleConfig& fallback) {
  if (x1 < 0.0 || x2 < 0.0) {
    throw std::domain_error("budgets must be non-negative");
  }
  // A front facing a zero budget is won on the tie without spending.
  if (x1 == 0.0 || x2 == 0.0) {
    const int side = x1 == 0.0 && x2 != 0.0 ? 2 : 1;
    return case_split(SplitCase::kCase1, side, x1, x2, phi1, phi2);
  }
  try {
    return classify_case(x1, x2, phi1, phi2);
  } catch (const ClassificationError&) {
    const OracleSplit found = oracle_split(x1, x2, phi1, phi2, fallback);
    SplitDecision out;
    out.label = SplitCase::kCase3;
    out.side = found.x_a1 >= found.x_a2 ? 1 : 2;
    out.x_a1 = found.x_a1;
    out.x_a2 = found.x_a2;
    out.from_oracle = true;
    return out;
  }
}

CoalitionGame renormalize_after_call(const CoalitionGame& game,
                                     const Commitment& commit) {
  const double t = commit.t;
  if (!(t >= 0.0) || t >= 1.0 || t >= game.x1()) {
    throw std::domain_error("t must lie in [0, min(x1, 1)), got " +
                            std::to_string(t));
  }
  check_committed_value(game, commit.v_b);
  const double scale = 1.0 - t;
  return CoalitionGame((game.x1() - t) / scale, game.x2() / scale,
                       game.front1().without(commit.v_b), game.front2());
}

double discard_response(const CoalitionGame& game, double t) {
  if (!(t >= 0.0 && t <= game.x1())) {
    throw std::domain_error("t must lie in [0, x1], got " + std::to_string(t));
  }
  const double kept = game.x1() - t;
  const SplitDecision split =
      best_split(kept, game.x2(), game.phi1(), game.phi2());
  return lotto_payoff(kept, split.x_a1, game.phi1());
}

double tstar(const CoalitionGame& game, double v_b) {
  check_committed_value(game, v_b);
  return game.x1() - (game.phi1() - v_b) / game.phi2() * game.x2();
}

double player1_payoff_nocommit(const CoalitionGame& game) {
  const double x1 = game.x1();
  const double x2 = game.x2();
  const double phi1 = game.phi1();
  const double phi2 = game.phi2();
  const SplitDecision split = best_split(x1, x2, phi1, phi2);
  if (!split.from_oracle && split.side == 1) {
    if (split.label == SplitCase::kCase1 && x1 <= 1.0) {
      return phi1 * (x1 - 1.0);
    }
    if (split.label == SplitCase::kCase2) {
      return phi1 * (x1 / std::sqrt(phi1 * x1 * x2 / phi2) - 1.0);
    }
  }
  return lotto_payoff(x1, split.x_a1, phi1);
}

double player1_payoff_commit_call(const CoalitionGame& game, double v_b,
                                  double t) {
  check_committed_value(game, v_b);
  if (!(t > 0.0) || t >= std::min(game.x1(), 1.0)) {
    throw std::domain_error("t must lie in (0, min(x1, 1)), got " +
                            std::to_string(t));
  }
  const double rest = game.phi1() - v_b;
  const double phi2 = game.phi2();
  const double y1 = (game.x1() - t) / (1.0 - t);
  const double y2 = game.x2() / (1.0 - t);
  if (!satisfies_case(SplitCase::kCase2, 2, y1, y2, rest, phi2,
                      kCaseTolerance)) {
    throw CaseMismatch(
        "renormalized budgets are not in Case 2 (i=2); use "
        "adversary_best_response_3p");
  }
  return rest * (1.0 - (1.0 - std::sqrt(phi2 * y1 * y2 / rest)) / y1) - v_b;
}

CommitOutcome3P adversary_best_response_3p(const CoalitionGame& game,
                                           double v_b, double t) {
  check_committed_value(game, v_b);
  if (!(t >= 0.0 && t <= game.x1())) {
    throw std::domain_error("t must lie in [0, x1], got " + std::to_string(t));
  }
  const double rest = game.phi1() - v_b;
  const double phi2 = game.phi2();

  const BranchResult fold =
      play_fronts(game.x1() - t, game.x2(), rest, phi2, -v_b);

  std::optional<BranchResult> call;
  if (t < 1.0) {
    const double scale = 1.0 - t;
    call = play_fronts((game.x1() - t) / scale, game.x2() / scale, rest, phi2,
                       v_b);
    call->split.x_a1 *= scale;
    call->split.x_a2 *= scale;
  }

  CommitOutcome3P out;
  out.fold_value = fold.adversary;
  const bool calls = call && approx_ge(call->adversary, fold.adversary);
  if (call) out.call_value = call->adversary;
  const BranchResult& chosen = calls ? *call : fold;
  out.decision = calls ? Decision::kCall : Decision::kFold;
  out.split_front1 = chosen.split.x_a1;
  out.split_front2 = chosen.split.x_a2;
  out.payoff_player1 = chosen.player1;
  out.payoff_player2 = chosen.player2;
  out.payoff_adversary = chosen.adversary;
  out.oracle_derived = chosen.split.from_oracle;
  return out;
}

Theorem3Report theorem3_membership(const CoalitionGame& game, double v_b,
                                   std::optional<double> delta) {
  Theorem3Report r;
  const double x1 = game.x1();
  const double x2 = game.x2();
  const double phi1 = game.phi1();
  const double phi2 = game.phi2();
  const double rest = phi1 - v_b;

  r.tstar = tstar(game, v_b);
  r.tstar_positive = r.tstar > 0.0;
  r.in_domain = x1 < 1.0 && x2 < 1.0;
  r.base_split = best_split(x1, x2, phi1, phi2);
  if (!r.base_split.from_oracle && r.base_split.side == 1) {
    if (r.base_split.label == SplitCase::kCase1) r.condition_set = 1;
    if (r.base_split.label == SplitCase::kCase2) r.condition_set = 2;
  }

  r.t_eval = r.tstar - delta.value_or(default_tstar_delta(x1));
  if (r.tstar_positive && r.t_eval > 0.0 && r.t_eval < 1.0) {
    const double t = r.t_eval;
    r.fold_pair_case2 = satisfies_case(SplitCase::kCase2, 2, x1 - t, x2, rest,
                                       phi2, kCaseTolerance);
    r.call_pair_case2 =
        satisfies_case(SplitCase::kCase2, 2, (x1 - t) / (1.0 - t),
                       x2 / (1.0 - t), rest, phi2, kCaseTolerance);
  }

  const double lhs = phi2 * (x1 + x2 - 1.0);
  double rhs = kNaN;
  if (r.condition_set == 1) {
    rhs = rest * x2 * (x1 - 1.0) + v_b * x1 * x2;
  } else if (r.condition_set == 2) {
    rhs = std::sqrt(phi1 * phi2 * x1 * x2) - rest * x2;
  }
  r.margin_profit = lhs - rhs;
  r.profit_holds = r.condition_set.has_value() && approx_ge(lhs, rhs);

  const double call_rhs = r.tstar * phi2 / x2;
  r.margin_call = 2.0 * v_b - call_rhs;
  r.call_holds = approx_ge(2.0 * v_b, call_rhs);

  r.member = r.tstar_positive && r.in_domain && r.fold_pair_case2 &&
             r.call_pair_case2 && r.profit_holds && r.call_holds;
  return r;
}

Theorem2Report verify_theorem2(const Theorem2Resolution& res, double phi1,
                               double phi2, double extent,
                               double slope_tolerance) {
  if (res.x1 < 2 || res.x2 < 2 || res.t < 2) {
    throw std::domain_error("theorem 2 grid needs at least 2 points per axis");
  }
  Theorem2Report report;
  report.slope_tolerance = slope_tolerance;
  report.max_slope = -std::numeric_limits<double>::infinity();
  const GridAxis x1_axis{0.0, extent, res.x1};
  const GridAxis x2_axis{0.0, extent, res.x2};
  for (std::size_t i = 0; i < res.x1; ++i) {
    for (std::size_t j = 0; j < res.x2; ++j) {
      const CoalitionGame game(x1_axis.center(i), x2_axis.center(j), phi1,
                               phi2);
      const double step = game.x1() / static_cast<double>(res.t - 1);
      double prev = discard_response(game, 0.0);
      for (std::size_t k = 1; k < res.t; ++k) {
        const double t = k + 1 == res.t ? game.x1() : step * k;
        const double next = discard_response(game, t);
        const double slope = (next - prev) / step;
        ++report.points;
        if (slope > slope_tolerance) ++report.violations;
        if (slope > report.max_slope) {
          report.max_slope = slope;
          report.worst_x1 = game.x1();
          report.worst_x2 = game.x2();
          report.worst_t = step * (k - 1);
        }
        prev = next;
      }
    }
  }
  return report;
}

CoalitionRegionGrid region_map_coalition(double phi1, double phi2, double v_b,
                                         std::size_t x1_cells,
                                         std::size_t x2_cells,
                                         std::optional<double> delta) {
  CoalitionRegionGrid grid(GridAxis{0.0, 1.0, x1_cells},
                           GridAxis{0.0, 1.0, x2_cells});
  for (std::size_t j = 0; j < x2_cells; ++j) {
    for (std::size_t i = 0; i < x1_cells; ++i) {
      CoalitionCell& cell = grid.at(i, j);
      cell.x1 = grid.x.center(i);
      cell.x2 = grid.y.center(j);
      const CoalitionGame game(cell.x1, cell.x2, phi1, phi2);
      const Theorem3Report report = theorem3_membership(game, v_b, delta);
      cell.base = report.base_split;
      cell.tstar = report.tstar;
      cell.member = report.member;
      cell.margin_a = report.margin_profit;
      cell.margin_b = report.margin_call;
    }
  }
  return grid;
}

}  // namespace lotto
