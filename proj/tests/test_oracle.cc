#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "generators.h"
#include "lotto/oracle.h"

using namespace lotto;
using doctest::Approx;

TEST_CASE("oracle finds the interior optimum") {
  const OracleSplit s = oracle_split(0.25, 1.1, 1.0, 1.0, OracleConfig{});
  CHECK(s.x_a1 == Approx(0.524404424085076).epsilon(1e-5));
  CHECK(s.x_a1 + s.x_a2 == Approx(1.0));
  CHECK(s.adversary_payoff ==
        Approx(lotto_payoff(s.x_a1, 0.25, 1.0, Role::kAdversary) +
               lotto_payoff(s.x_a2, 1.1, 1.0, Role::kAdversary)));
}

TEST_CASE("oracle on a custom budget") {
  const OracleSplit s = oracle_split(0.5, 0.5, 1.0, 1.0, OracleConfig{}, 3.0);
  CHECK(s.x_a1 + s.x_a2 == Approx(3.0));
  const OracleSplit none = oracle_split(0.5, 0.5, 1.0, 1.0, OracleConfig{}, 0.0);
  CHECK(none.x_a1 == 0.0);
  CHECK(none.adversary_payoff == Approx(-2.0));
  CHECK_THROWS_AS(oracle_split(0.5, 0.5, 1.0, 1.0, OracleConfig{}, -1.0),
                  std::domain_error);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(OracleConfig{}.validate());
  CHECK_THROWS_AS((OracleConfig{2000, 101, 2}.validate()), std::domain_error);
  CHECK_THROWS_AS((OracleConfig{9, 101, 2}.validate()), std::domain_error);
  CHECK_THROWS_AS((OracleConfig{2001, 100, 2}.validate()), std::domain_error);
}

TEST_CASE("property: refinement never lowers the maximum") {
  testing::Gen gen(41);
  const OracleConfig coarse{201, 101, 0};
  const OracleConfig fine{2001, 101, 0};
  const OracleConfig refined{2001, 101, 2};
  for (int n = 0; n < 300; ++n) {
    const auto c = gen.coalition();
    const double a = oracle_split(c.x1, c.x2, c.phi1, c.phi2, coarse).adversary_payoff;
    const double b = oracle_split(c.x1, c.x2, c.phi1, c.phi2, fine).adversary_payoff;
    const double r = oracle_split(c.x1, c.x2, c.phi1, c.phi2, refined).adversary_payoff;
    CHECK(b >= a - 1e-12);
    CHECK(r >= b - 1e-12);
  }
}

TEST_CASE("property: swapping the fronts") {
  testing::Gen gen(42);
  const OracleConfig cfg;
  for (int n = 0; n < 300; ++n) {
    const auto c = gen.coalition();
    const OracleSplit a = oracle_split(c.x1, c.x2, c.phi1, c.phi2, cfg);
    const OracleSplit b = oracle_split(c.x2, c.x1, c.phi2, c.phi1, cfg);
    CHECK(a.adversary_payoff ==
          Approx(b.adversary_payoff).epsilon(1e-6).scale(c.phi1 + c.phi2));
  }
}

TEST_CASE("property: closed form dominates the oracle") {
  testing::Gen gen(43);
  const OracleConfig cfg;
  for (int n = 0; n < 500; ++n) {
    const auto c = gen.coalition();
    const SplitDecision s = classify_case(c.x1, c.x2, c.phi1, c.phi2);
    const double closed = lotto_payoff(s.x_a1, c.x1, c.phi1, Role::kAdversary) +
                          lotto_payoff(s.x_a2, c.x2, c.phi2, Role::kAdversary);
    const double found =
        oracle_split(c.x1, c.x2, c.phi1, c.phi2, cfg).adversary_payoff;
    CHECK(found <= closed + 1e-12 * (c.phi1 + c.phi2));
    CHECK(closed - found <= 1e-3 * (c.phi1 + c.phi2));
  }
}

TEST_CASE("profitability at a known member") {
  const CoalitionGame game(0.9, 0.8, 1.5, 1.0);
  const OracleConfig cfg;
  const Profitability p = oracle_profitability(game, 0.5, 0.1 - 1e-9, cfg);
  CHECK(p.profitable);
  CHECK(p.decision == Decision::kCall);
  CHECK(p.baseline_payoff == Approx(-0.15).epsilon(1e-5));
  CHECK(p.commit_payoff == Approx(0.375).epsilon(1e-5));
  CHECK(p.delta == Approx(0.525).epsilon(1e-5));

  const Profitability best = oracle_best_commitment(game, 0.5, OracleConfig{2001, 21, 2});
  CHECK(best.profitable);
  CHECK(best.delta >= oracle_profitability(game, 0.5, 0.0, cfg).delta);
  CHECK(best.delta >= oracle_profitability(game, 0.5, 0.9, cfg).delta);
}

TEST_CASE("fold-only branch when t reaches the adversary budget") {
  const CoalitionGame game(1.5, 0.5, 2.0, 1.0);
  const CommitOutcome3P out = oracle_adversary_3p(game, 0.5, 1.2, OracleConfig{});
  CHECK(out.decision == Decision::kFold);
  CHECK_FALSE(out.call_value);
  CHECK(out.oracle_derived);
  CHECK_THROWS_AS(oracle_adversary_3p(game, 2.0, 0.1, OracleConfig{}),
                  std::domain_error);
}

TEST_CASE("agreement report") {
  const OracleAgreementReport a = verify_oracle_agreement(15, 7, OracleConfig{});
  CHECK(a.instances == 60);
  for (std::size_t n : a.per_case) CHECK(n == 15);
  CHECK(a.passed());
  CHECK(a.max_gap <= 1e-9);
  const OracleAgreementReport b = verify_oracle_agreement(15, 7, OracleConfig{});
  CHECK(a.min_gap == b.min_gap);
  CHECK(a.worst_x1 == b.worst_x1);
}
