#pragma once

#include <span>
#include <vector>

namespace lotto {

// Relative tolerance used for every game-level comparison.
inline constexpr double kTolerance = 1e-9;

// |a - b| <= tol * max(1, |a|, |b|)
bool approx_equal(double a, double b, double tol = kTolerance);
// a >= b, accepting a shortfall within the relative tolerance.
bool approx_ge(double a, double b, double tol = kTolerance);

// Which side of a General Lotto game is asking for its payoff. Only matters
// when both budgets are zero: ties go to the adversary.
enum class Role { kTeam, kAdversary };

// Equilibrium payoff of a General Lotto game to the player holding `own`
// against `opp` on battlefields of total value `phi`.
//
//   phi * (own/opp - 1)   if 0 < own <= opp
//   phi * (1 - opp/own)   if own > opp
//
// Zero budgets extend the formula by its limits: a zero budget against a
// positive one loses everything. Zero against zero is won by the adversary.
// Throws std::domain_error on negative budgets or phi <= 0.
double lotto_payoff(double own, double opp, double phi,
                    Role role = Role::kTeam);

// A set of battlefields summarized by its values. The total is recomputed
// from the values on every call.
class BattlefieldFront {
 public:
  explicit BattlefieldFront(std::vector<double> values);

  // A front made of a single battlefield worth `phi`.
  static BattlefieldFront aggregate(double phi);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double phi() const;

  // The front without the committed battlefield of value `v_b`. A battlefield
  // with exactly that value is removed if present; otherwise the front is
  // collapsed to a single aggregate battlefield worth phi() - v_b.
  BattlefieldFront without(double v_b) const;

 private:
  std::vector<double> values_;
};

// Two-player game between the adversary A and the weaker player B.
class DuelGame {
 public:
  DuelGame(double x_a, double x_b, BattlefieldFront front);
  DuelGame(double x_a, double x_b, double phi)
      : DuelGame(x_a, x_b, BattlefieldFront::aggregate(phi)) {}

  double x_a() const { return x_a_; }
  double x_b() const { return x_b_; }
  double phi() const { return front_.phi(); }
  double gamma() const { return x_b_ / x_a_; }
  const BattlefieldFront& front() const { return front_; }

 private:
  double x_a_;
  double x_b_;
  BattlefieldFront front_;
};

// A public pre-commitment of force `t` to one battlefield worth `v_b`.
struct Commitment {
  double v_b = 0.0;
  double t = 0.0;
};

struct PayoffPair {
  double payoff_a = 0.0;
  double payoff_b = 0.0;
};

enum class Decision { kCall, kFold };

const char* to_string(Decision d);

struct ResponseOutcome {
  Decision decision = Decision::kCall;
  double call_payoff = 0.0;
  double fold_payoff = 0.0;
  PayoffPair payoffs;
};

// Adversary payoff when it matches the commitment and wins the battlefield.
double call_payoff(const DuelGame& duel, const Commitment& commit);

// Adversary payoff when it concedes the battlefield and keeps its budget.
double fold_payoff(const DuelGame& duel, const Commitment& commit);

// Best call/fold response of the adversary. Indifference resolves to Call.
ResponseOutcome adversary_response(const DuelGame& duel,
                                   const Commitment& commit);

// Change in B's payoff from making the commitment instead of playing the
// plain game over the whole front. Positive means profitable.
double delta_payoff(const DuelGame& duel, const Commitment& commit);

}  // namespace lotto
