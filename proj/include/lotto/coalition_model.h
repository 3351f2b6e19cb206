#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "lotto/core_model.h"
#include "lotto/region_grid.h"

namespace lotto {

struct OracleConfig;

// Offset below t* at which the committed subgame is evaluated. At t* itself
// the reduced budgets sit exactly on the equal-ratio boundary of the
// subgame, so every t* evaluation uses the left limit t* - delta.
inline constexpr double kTstarOffset = 1e-9;

double default_tstar_delta(double x1);

// Three-player game: the adversary (budget normalized to 1) against player 1
// on front 1 and player 2 on front 2.
class CoalitionGame {
 public:
  CoalitionGame(double x1, double x2, BattlefieldFront front1,
                BattlefieldFront front2);
  CoalitionGame(double x1, double x2, double phi1, double phi2)
      : CoalitionGame(x1, x2, BattlefieldFront::aggregate(phi1),
                      BattlefieldFront::aggregate(phi2)) {}

  double x1() const { return x1_; }
  double x2() const { return x2_; }
  double phi1() const { return front1_.phi(); }
  double phi2() const { return front2_.phi(); }
  const BattlefieldFront& front1() const { return front1_; }
  const BattlefieldFront& front2() const { return front2_; }
  static constexpr double adversary_budget() { return 1.0; }

 private:
  double x1_;
  double x2_;
  BattlefieldFront front1_;
  BattlefieldFront front2_;
};

// The adversary's split regimes. Cases 1 and 2 depend on which front is
// favoured (side 1 or 2); Cases 3 and 4 split the same way for either side.
enum class SplitCase { kCase1, kCase2, kCase3, kCase4 };

std::string case_name(SplitCase label, int side);

struct SplitDecision {
  SplitCase label = SplitCase::kCase3;
  int side = 1;
  double x_a1 = 0.0;
  double x_a2 = 0.0;
  // Set when no closed-form case matched and the split came from the oracle.
  bool from_oracle = false;
};

class ClassificationError : public std::runtime_error {
 public:
  ClassificationError(double x1, double x2, double phi1, double phi2);

  double x1, x2, phi1, phi2;
};

// Thrown when a closed-form payoff is requested outside the case it was
// derived for. Callers should use adversary_best_response_3p instead.
class CaseMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Whether (x1, x2) with front values (phi1, phi2) satisfies the conditions of
// `label` for `side`, adversary budget 1. Strict and non-strict inequalities
// alike accept a shortfall up to `tol` (relative); tol = 0 is exact.
bool satisfies_case(SplitCase label, int side, double x1, double x2,
                    double phi1, double phi2, double tol);

// The closed-form split of `label` for `side`, without checking conditions.
SplitDecision case_split(SplitCase label, int side, double x1, double x2,
                         double phi1, double phi2);

// Tolerance used by classify_case.
inline constexpr double kCaseTolerance = 1e-12;

// Tests Case 1..4 in order, side 1 before side 2, and returns the first match
// with its split. An exact pass runs first; the kCaseTolerance pass only
// catches inputs that miss every case by rounding. Throws ClassificationError when nothing matches and
// std::domain_error for non-positive inputs.
SplitDecision classify_case(double x1, double x2, double phi1, double phi2);

// classify_case extended to zero budgets (the adversary leaves a front with
// a zero budget uncontested, winning it on the tie) and falling back to the
// oracle when no case matches.
SplitDecision best_split(double x1, double x2, double phi1, double phi2);
SplitDecision best_split(double x1, double x2, double phi1, double phi2,
                         const OracleConfig& fallback);

// Budgets after the adversary calls: the committed battlefield leaves front 1
// and every budget is rescaled by 1 / (1 - t).
CoalitionGame renormalize_after_call(const CoalitionGame& game,
                                     const Commitment& commit);

// Player 1's payoff after discarding t of its budget.
double discard_response(const CoalitionGame& game, double t);

// t* = x1 - ((phi1 - v_b) / phi2) x2.
double tstar(const CoalitionGame& game, double v_b);

// Player 1's payoff on front 1 in the game without commitment.
double player1_payoff_nocommit(const CoalitionGame& game);

// Player 1's payoff when the adversary calls a commitment of t to a
// battlefield worth v_b and the renormalized subgame is in Case 2 (side 2).
// Throws CaseMismatch otherwise.
double player1_payoff_commit_call(const CoalitionGame& game, double v_b,
                                  double t);

struct CommitOutcome3P {
  Decision decision = Decision::kCall;
  // Adversary force on front 1 without the committed battlefield, and on
  // front 2, in original budget units.
  double split_front1 = 0.0;
  double split_front2 = 0.0;
  double payoff_player1 = 0.0;
  double payoff_player2 = 0.0;
  double payoff_adversary = 0.0;
  // Adversary payoffs of both branches; call_value is nullopt when t >= 1.
  std::optional<double> call_value;
  double fold_value = 0.0;
  bool oracle_derived = false;
};

// The adversary's best response to a commitment of t to a battlefield worth
// v_b on front 1. Ties go to Call.
CommitOutcome3P adversary_best_response_3p(const CoalitionGame& game,
                                           double v_b, double t);

struct Theorem3Report {
  double tstar = 0.0;
  double t_eval = 0.0;
  bool tstar_positive = false;
  bool in_domain = false;  // 0 < x1, x2 < 1
  SplitDecision base_split;
  std::optional<int> condition_set;  // 1: Case 1 (side 1), 2: Case 2 (side 1)
  bool fold_pair_case2 = false;      // (x1 - t, x2) in Case 2 (side 2)
  bool call_pair_case2 = false;      // renormalized pair in Case 2 (side 2)
  double margin_profit = 0.0;        // payoff condition, LHS - RHS
  double margin_call = 0.0;          // calling condition, LHS - RHS
  bool profit_holds = false;
  bool call_holds = false;
  bool member = false;
};

// Checks the sufficient conditions under which committing t* to a
// battlefield worth v_b raises player 1's payoff. `delta` overrides the
// default offset below t*.
Theorem3Report theorem3_membership(const CoalitionGame& game, double v_b,
                                   std::optional<double> delta = std::nullopt);

struct Theorem2Resolution {
  std::size_t x1 = 50;
  std::size_t x2 = 50;
  std::size_t t = 20;
};

struct Theorem2Report {
  std::size_t points = 0;
  std::size_t violations = 0;
  double max_slope = 0.0;
  double worst_x1 = 0.0;
  double worst_x2 = 0.0;
  double worst_t = 0.0;
  double slope_tolerance = 0.0;

  bool passed() const { return violations == 0; }
};

// Forward differences of discard_response over t in [0, x1] at every cell
// center of (0, extent)^2.
Theorem2Report verify_theorem2(const Theorem2Resolution& res, double phi1,
                               double phi2, double extent = 2.0,
                               double slope_tolerance = 1e-8);

struct CoalitionCell {
  double x1 = 0.0;
  double x2 = 0.0;
  SplitDecision base;
  double tstar = 0.0;
  bool member = false;
  double margin_a = 0.0;  // NaN when the base game is in neither condition set
  double margin_b = 0.0;
};

using CoalitionRegionGrid = RegionGrid<CoalitionCell>;

// Membership map over (x1, x2) in (0, 1)^2 at cell centers.
CoalitionRegionGrid region_map_coalition(
    double phi1, double phi2, double v_b, std::size_t x1_cells,
    std::size_t x2_cells, std::optional<double> delta = std::nullopt);

}  // namespace lotto
