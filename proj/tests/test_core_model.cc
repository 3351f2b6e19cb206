#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "generators.h"
#include "lotto/core_model.h"

using namespace lotto;
using doctest::Approx;

TEST_CASE("lotto payoff on known budgets") {
  CHECK(lotto_payoff(0.3, 0.9, 2.0) == Approx(-4.0 / 3.0).epsilon(1e-12));
  CHECK(lotto_payoff(0.9, 0.3, 2.0) == Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(lotto_payoff(1.0, 1.0, 2.0) == 0.0);
  CHECK(lotto_payoff(2.0, 1.0, 1.0) == Approx(0.5));
  CHECK(lotto_payoff(1.0, 2.0, 1.0) == Approx(-0.5));
}

TEST_CASE("zero budgets") {
  CHECK(lotto_payoff(0.0, 0.5, 3.0) == -3.0);
  CHECK(lotto_payoff(0.5, 0.0, 3.0) == 3.0);
  CHECK(lotto_payoff(0.0, 0.0, 3.0, Role::kAdversary) == 3.0);
  CHECK(lotto_payoff(0.0, 0.0, 3.0, Role::kTeam) == -3.0);
}

TEST_CASE("lotto payoff rejects bad inputs") {
  CHECK_THROWS_AS(lotto_payoff(-0.1, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(lotto_payoff(1.0, -0.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(lotto_payoff(1.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("property: zero sum, scale invariance, linear in phi, monotone") {
  testing::Gen gen(11);
  for (int n = 0; n < 2000; ++n) {
    const double a = gen.uniform(0.01, 5.0), b = gen.uniform(0.01, 5.0);
    const double phi = gen.uniform(0.1, 10.0), k = gen.uniform(0.1, 10.0);
    const double p = lotto_payoff(a, b, phi);
    CHECK(p == Approx(-lotto_payoff(b, a, phi)).epsilon(1e-12));
    CHECK(lotto_payoff(k * a, k * b, phi) == Approx(p).epsilon(1e-10));
    CHECK(lotto_payoff(a, b, k * phi) == Approx(k * p).epsilon(1e-12));
    CHECK(std::abs(p) <= phi);
    CHECK(lotto_payoff(a * 1.01, b, phi) >= p);
  }
}

TEST_CASE("tolerant comparisons") {
  CHECK(approx_equal(1.0, 1.0 + 1e-10));
  CHECK_FALSE(approx_equal(1.0, 1.0 + 1e-8));
  CHECK(approx_equal(1e6, 1e6 + 1e-4));
  CHECK(approx_ge(1.0 - 1e-10, 1.0));
  CHECK_FALSE(approx_ge(1.0 - 1e-8, 1.0));
}

TEST_CASE("battlefield fronts") {
  const BattlefieldFront front({0.5, 1.0, 0.25});
  CHECK(front.phi() == Approx(1.75));
  CHECK(front.size() == 3);

  const BattlefieldFront rest = front.without(1.0);
  CHECK(rest.size() == 2);
  CHECK(rest.phi() == Approx(0.75));

  const BattlefieldFront collapsed = front.without(0.4);
  CHECK(collapsed.size() == 1);
  CHECK(collapsed.phi() == Approx(1.35));

  CHECK(BattlefieldFront::aggregate(2.0).phi() == 2.0);
  CHECK_THROWS_AS(BattlefieldFront({}), std::domain_error);
  CHECK_THROWS_AS(BattlefieldFront({1.0, -1.0}), std::domain_error);
  CHECK_THROWS_AS(front.without(1.75), std::domain_error);
}

TEST_CASE("duel construction") {
  CHECK_THROWS_AS(DuelGame(1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(DuelGame(1.0, 0.0, 1.0), std::domain_error);
  const DuelGame duel(2.0, 0.5, BattlefieldFront({0.4, 0.6}));
  CHECK(duel.gamma() == Approx(0.25));
  CHECK(duel.phi() == Approx(1.0));
}

TEST_CASE("call and fold payoffs") {
  const DuelGame duel(1.0, 0.9, 1.0);
  const Commitment commit{0.02, 0.3};
  CHECK(call_payoff(duel, commit) == Approx(0.98 * (1.0 - 0.6 / 0.7) + 0.02));
  CHECK(fold_payoff(duel, commit) == Approx(0.98 * 0.4 - 0.02));

  const ResponseOutcome r = adversary_response(duel, commit);
  CHECK(r.decision == Decision::kFold);
  CHECK(r.payoffs.payoff_a == Approx(0.372));
  CHECK(r.payoffs.payoff_b == Approx(-0.372));
  CHECK(delta_payoff(duel, commit) == Approx(-0.272));
  CHECK(std::string(to_string(Decision::kCall)) == "call");
  CHECK(std::string(to_string(Decision::kFold)) == "fold");
}

TEST_CASE("commitment domain") {
  const DuelGame duel(1.0, 0.5, 1.0);
  CHECK_THROWS_AS(call_payoff(duel, {0.0, 0.1}), std::domain_error);
  CHECK_THROWS_AS(call_payoff(duel, {1.0, 0.1}), std::domain_error);
  CHECK_THROWS_AS(call_payoff(duel, {0.2, -0.1}), std::domain_error);
  CHECK_THROWS_AS(call_payoff(duel, {0.2, 0.6}), std::domain_error);
  CHECK_NOTHROW(call_payoff(duel, {0.2, 0.5}));
}

TEST_CASE("ties go to call") {
  // Lower root of the calling polynomial for gamma = 0.9, v_b = 0.02.
  const DuelGame duel(1.0, 0.9, 1.0);
  const Commitment c{0.02, 0.0455934818617244};
  CHECK(call_payoff(duel, c) == Approx(fold_payoff(duel, c)).epsilon(1e-12));
  CHECK(adversary_response(duel, c).decision == Decision::kCall);
}

TEST_CASE("property: response is the better branch") {
  testing::Gen gen(12);
  for (int n = 0; n < 2000; ++n) {
    const DuelParams p = gen.duel();
    const DuelGame duel = p.game();
    const Commitment c{p.v_b, gen.uniform(0.0, p.x_b())};
    const ResponseOutcome r = adversary_response(duel, c);
    const double best = std::max(r.call_payoff, r.fold_payoff);
    CHECK(r.payoffs.payoff_a == Approx(best));
    CHECK(r.payoffs.payoff_b == Approx(-best));
    CHECK(delta_payoff(duel, c) ==
          Approx(-best - lotto_payoff(duel.x_b(), duel.x_a(), duel.phi())));
  }
}
