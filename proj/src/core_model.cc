#include "lotto/core_model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lotto {

namespace {

double scale_of(double a, double b) {
  return std::max({1.0, std::abs(a), std::abs(b)});
}

void check_commitment(const DuelGame& duel, const Commitment& commit) {
  if (!(commit.v_b > 0.0) || !(commit.v_b < duel.phi())) {
    throw std::domain_error("v_b must lie in (0, phi), got " +
                            std::to_string(commit.v_b));
  }
  if (!(commit.t >= 0.0)) {
    throw std::domain_error("t must be non-negative, got " +
                            std::to_string(commit.t));
  }
  if (commit.t >= duel.x_a()) {
    throw std::domain_error("t must be below x_a, got " +
                            std::to_string(commit.t));
  }
  if (commit.t > duel.x_b()) {
    throw std::domain_error("t must not exceed x_b, got " +
                            std::to_string(commit.t));
  }
}

}  // namespace

bool approx_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * scale_of(a, b);
}

bool approx_ge(double a, double b, double tol) {
  return a >= b - tol * scale_of(a, b);
}

double lotto_payoff(double own, double opp, double phi, Role role) {
  if (own < 0.0 || opp < 0.0 || std::isnan(own) || std::isnan(opp)) {
    throw std::domain_error("budgets must be non-negative");
  }
  if (!(phi > 0.0)) {
    throw std::domain_error("phi must be positive, got " + std::to_string(phi));
  }
  if (own == 0.0 && opp == 0.0) {
    return role == Role::kAdversary ? phi : -phi;
  }
  if (own == 0.0) return -phi;
  if (opp == 0.0) return phi;
  if (own <= opp) return phi * (own / opp - 1.0);
  return phi * (1.0 - opp / own);
}

BattlefieldFront::BattlefieldFront(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::domain_error("a front needs at least one battlefield");
  }
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::domain_error("battlefield values must be positive, got " +
                              std::to_string(v));
    }
  }
}

BattlefieldFront BattlefieldFront::aggregate(double phi) {
  return BattlefieldFront({phi});
}

double BattlefieldFront::phi() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

BattlefieldFront BattlefieldFront::without(double v_b) const {
  const double total = phi();
  if (!(v_b > 0.0) || !(v_b < total)) {
    throw std::domain_error("committed value must lie in (0, phi), got " +
                            std::to_string(v_b));
  }
  auto it = std::find(values_.begin(), values_.end(), v_b);
  if (it != values_.end() && values_.size() > 1) {
    std::vector<double> rest = values_;
    rest.erase(rest.begin() + (it - values_.begin()));
    return BattlefieldFront(std::move(rest));
  }
  return aggregate(total - v_b);
}

DuelGame::DuelGame(double x_a, double x_b, BattlefieldFront front)
    : x_a_(x_a), x_b_(x_b), front_(std::move(front)) {
  if (!(x_a > 0.0) || !(x_b > 0.0)) {
    throw std::domain_error("duel budgets must be positive");
  }
  if (!(x_b < x_a)) {
    throw std::domain_error("duel requires x_b < x_a");
  }
}

const char* to_string(Decision d) {
  return d == Decision::kCall ? "call" : "fold";
}

double call_payoff(const DuelGame& duel, const Commitment& commit) {
  check_commitment(duel, commit);
  const double rest = duel.phi() - commit.v_b;
  const double t = commit.t;
  return rest * (1.0 - (duel.x_b() - t) / (duel.x_a() - t)) + commit.v_b;
}

double fold_payoff(const DuelGame& duel, const Commitment& commit) {
  check_commitment(duel, commit);
  const double rest = duel.phi() - commit.v_b;
  return rest * (1.0 - (duel.x_b() - commit.t) / duel.x_a()) - commit.v_b;
}

ResponseOutcome adversary_response(const DuelGame& duel,
                                   const Commitment& commit) {
  ResponseOutcome out;
  out.call_payoff = call_payoff(duel, commit);
  out.fold_payoff = fold_payoff(duel, commit);
  out.decision = approx_ge(out.call_payoff, out.fold_payoff) ? Decision::kCall
                                                             : Decision::kFold;
  out.payoffs.payoff_a = out.decision == Decision::kCall ? out.call_payoff
                                                         : out.fold_payoff;
  out.payoffs.payoff_b = -out.payoffs.payoff_a;
  return out;
}

double delta_payoff(const DuelGame& duel, const Commitment& commit) {
  const ResponseOutcome response = adversary_response(duel, commit);
  const double baseline = lotto_payoff(duel.x_b(), duel.x_a(), duel.phi());
  return response.payoffs.payoff_b - baseline;
}

}  // namespace lotto
