#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <stdexcept>

#include "generators.h"
#include "lotto/duel_analysis.h"

using namespace lotto;
using doctest::Approx;

namespace {

// Q as a quadratic in v_b, written out independently (x_a = 1).
double q_expanded(double gamma, double v, double phi) {
  const double rest = phi - v;
  const double lead = v + rest * gamma / 2.0;
  return lead * lead - 2.0 * v * rest;
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("reference instance gamma 0.9, v_b 0.02") {
  const DuelParams p{0.9, 0.02, 1.0, 1.0};
  CHECK(commit_vertex(p) == Approx(0.470408163265306).epsilon(1e-13));
  CHECK(discriminant_q(p) == Approx(0.173321).epsilon(1e-12));
  const auto roots = commit_roots(p);
  REQUIRE(roots);
  CHECK(roots->first == Approx(0.0455934818617244).epsilon(1e-12));
  CHECK(roots->second == Approx(0.895222844668888).epsilon(1e-12));

  const PrecommitClassification cls = classify_precommit(p);
  CHECK(cls.kind == PrecommitKind::kFoldsOnInterval);
  REQUIRE(cls.fold_interval);
  CHECK(cls.fold_interval->second == Approx(0.895222844668888));
  CHECK(folds_at(cls, 0.3));
  CHECK_FALSE(folds_at(cls, 0.01));
  CHECK_FALSE(folds_at(cls, 0.9));
}

TEST_CASE("negative discriminant has no roots") {
  const DuelParams p{0.5, 0.25, 1.0, 1.0};
  CHECK(discriminant_q(p) == Approx(-0.18359375));
  CHECK_FALSE(commit_roots(p));
  CHECK(classify_precommit(p).kind == PrecommitKind::kAlwaysCalls);
  CHECK_FALSE(classify_precommit(p).fold_interval);
}

TEST_CASE("root bounds and vertex threshold") {
  const RootBounds half = root_bounds(0.5, 1.0);
  CHECK(half.v_minus == Approx(0.0411290610003717).epsilon(1e-13));
  CHECK(half.v_plus == Approx(0.593017280463043).epsilon(1e-13));
  const RootBounds high = root_bounds(0.9, 1.0);
  CHECK(high.v_minus == Approx(0.189477626051319).epsilon(1e-13));
  CHECK(high.v_plus == Approx(0.464159724654436).epsilon(1e-13));
  CHECK(vertex_threshold(0.9, 1.0) == Approx(0.310344827586207).epsilon(1e-13));

  const RootBounds zero = root_bounds(0.0, 3.0);
  CHECK(zero.v_minus == Approx(0.0));
  CHECK(zero.v_plus == Approx(2.0));
  const RootBounds one = root_bounds(1.0, 3.0);
  CHECK(one.v_minus == Approx(1.0));
  CHECK(one.v_plus == Approx(1.0));
  CHECK(vertex_threshold(1.0, 3.0) == Approx(1.0));

  CHECK_THROWS_AS(root_bounds(1.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(root_bounds(0.5, 0.0), std::domain_error);
}

TEST_CASE("property: root bounds are the zeros of Q in v_b") {
  testing::Gen gen(21);
  for (int n = 0; n < 500; ++n) {
    const double gamma = gen.uniform(0.001, 0.999);
    const double phi = gen.uniform(0.2, 5.0);
    const RootBounds rb = root_bounds(gamma, phi);
    const double h = vertex_threshold(gamma, phi);
    auto q = [&](double v) { return q_expanded(gamma, v, phi); };
    CHECK(rb.v_minus == Approx(bisect(q, 0.0, h)).epsilon(1e-10));
    CHECK(rb.v_plus == Approx(bisect(q, h, phi)).epsilon(1e-10));
    CHECK(rb.v_minus < h);
    CHECK(h < rb.v_plus);
  }
}

TEST_CASE("property: discriminant matches its expansion") {
  testing::Gen gen(22);
  for (int n = 0; n < 2000; ++n) {
    DuelParams p = gen.duel();
    p.x_a = 1.0;
    CHECK(discriminant_q(p) ==
          Approx(q_expanded(p.gamma, p.v_b, p.phi)).epsilon(1e-10).scale(p.phi * p.phi));
  }
}

TEST_CASE("property: calling polynomial is the scaled call margin") {
  testing::Gen gen(23);
  for (int n = 0; n < 2000; ++n) {
    const DuelParams p = gen.duel();
    const double t = gen.uniform(0.0, p.x_b());
    const DuelGame duel = p.game();
    const Commitment c{p.v_b, t};
    const double direct =
        (call_payoff(duel, c) - fold_payoff(duel, c)) * (p.x_a - t) / p.x_a;
    CHECK(call_margin(p, t) == Approx(direct).scale(p.phi).epsilon(1e-10));
  }
}

TEST_CASE("property: roots zero the polynomial and scale with x_a") {
  testing::Gen gen(24);
  int with_roots = 0;
  for (int n = 0; n < 2000; ++n) {
    DuelParams p = gen.duel();
    p.v_b = p.phi * gen.uniform(0.001, 0.3);
    const auto roots = commit_roots(p);
    if (!roots) continue;
    ++with_roots;
    CHECK(roots->first <= roots->second);
    CHECK(commit_vertex(p) == Approx(0.5 * (roots->first + roots->second)));
    // Evaluate C from its coefficients; roots may lie beyond x_b.
    auto c = [&](double t) {
      const double r = p.phi_rest(), xa = p.x_a;
      return r / (xa * xa) * t * t - t / xa * (2.0 * p.v_b + r * p.gamma) +
             2.0 * p.v_b;
    };
    CHECK(std::abs(c(roots->first)) < 1e-9 * std::max(1.0, 2.0 * p.v_b));
    CHECK(std::abs(c(roots->second)) < 1e-9 * std::max(1.0, 2.0 * p.v_b));

    DuelParams unit = p;
    unit.x_a = 1.0;
    const auto unit_roots = commit_roots(unit);
    REQUIRE(unit_roots);
    CHECK(roots->first == Approx(p.x_a * unit_roots->first));
    CHECK(roots->second == Approx(p.x_a * unit_roots->second));
  }
  CHECK(with_roots > 100);
}

TEST_CASE("property: fold interval iff v_b below v_minus") {
  testing::Gen gen(25);
  for (int n = 0; n < 4000; ++n) {
    const DuelParams p = gen.duel();
    const double v_minus = root_bounds(p.gamma, p.phi).v_minus;
    if (std::abs(p.v_b - v_minus) < 1e-6 * p.phi) continue;
    const bool folds = classify_precommit(p).kind == PrecommitKind::kFoldsOnInterval;
    CHECK(folds == (p.v_b < v_minus));
  }
}

TEST_CASE("property: classification predicts the direct decision") {
  testing::Gen gen(26);
  for (int n = 0; n < 2000; ++n) {
    DuelParams p = gen.duel();
    p.v_b = p.phi * gen.uniform(0.001, 0.25);
    const PrecommitClassification cls = classify_precommit(p);
    for (int k = 0; k < 10; ++k) {
      const double t = gen.uniform(0.0, p.x_b());
      if (std::abs(call_margin(p, t)) < 1e-8 * p.phi) continue;
      const Decision d = adversary_response(p.game(), {p.v_b, t}).decision;
      CHECK(folds_at(cls, t) == (d == Decision::kFold));
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((DuelParams{0.0, 0.1, 1.0, 1.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((DuelParams{1.0, 0.1, 1.0, 1.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((DuelParams{0.5, 1.0, 1.0, 1.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((DuelParams{0.5, 0.1, 1.0, 0.0}.validate()), std::domain_error);
  CHECK_THROWS_AS(call_margin(DuelParams{0.5, 0.1, 1.0, 1.0}, 0.6),
                  std::domain_error);
  CHECK(std::string(to_string(PrecommitKind::kAlwaysCalls)) == "always_calls");
  CHECK(std::string(to_string(PrecommitKind::kFoldsOnInterval)) ==
        "folds_on_interval");
}

TEST_CASE("theorem 1 sweep at small resolution") {
  for (double phi : {1.0, 2.5}) {
    const Theorem1Report r = verify_theorem1({30, 30, 30}, phi);
    CHECK(r.cells == 27000);
    CHECK(r.passed());
    CHECK(r.max_delta < 0.0);
    CHECK(r.fold_cells > 0);
  }
  CHECK_THROWS_AS(verify_theorem1({1, 30, 30}), std::domain_error);
}

TEST_CASE("duel region map") {
  const DuelRegionGrid grid = region_map_duel(40, 20, 2.0);
  CHECK(grid.cells.size() == 800);
  CHECK(grid.at(0, 0).gamma == Approx(0.0125));
  CHECK(grid.at(0, 0).v_b == Approx(0.05));
  CHECK(grid.at(39, 19).v_b == Approx(1.95));
  const BoundaryDeviation dev = boundary_deviation(grid);
  CHECK(dev.cell_height == Approx(0.1));
  CHECK(dev.max_deviation < dev.cell_height);
  CHECK_THROWS_AS(region_map_duel(1, 20), std::domain_error);
}
