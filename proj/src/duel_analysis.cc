#include "lotto/duel_analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lotto {

namespace {

void check_ratio(double gamma, double phi) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::domain_error("gamma must lie in [0, 1], got " +
                            std::to_string(gamma));
  }
  if (!(phi > 0.0)) {
    throw std::domain_error("phi must be positive, got " + std::to_string(phi));
  }
}

}  // namespace

void DuelParams::validate() const {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::domain_error("gamma must lie in (0, 1), got " +
                            std::to_string(gamma));
  }
  if (!(phi > 0.0)) {
    throw std::domain_error("phi must be positive, got " + std::to_string(phi));
  }
  if (!(v_b > 0.0 && v_b < phi)) {
    throw std::domain_error("v_b must lie in (0, phi), got " +
                            std::to_string(v_b));
  }
  if (!(x_a > 0.0)) {
    throw std::domain_error("x_a must be positive, got " + std::to_string(x_a));
  }
}

const char* to_string(PrecommitKind kind) {
  return kind == PrecommitKind::kAlwaysCalls ? "always_calls"
                                             : "folds_on_interval";
}

double call_margin(const DuelParams& params, double t) {
  params.validate();
  if (!(t >= 0.0 && t <= params.x_b())) {
    throw std::domain_error("t must lie in [0, x_b], got " + std::to_string(t));
  }
  const double rest = params.phi_rest();
  const double s = t / params.x_a;
  return rest * s * s - s * (2.0 * params.v_b + rest * params.gamma) +
         2.0 * params.v_b;
}

double commit_vertex(const DuelParams& params) {
  params.validate();
  return params.v_b / params.phi_rest() * params.x_a + 0.5 * params.x_b();
}

double discriminant_q(const DuelParams& params) {
  const double t_m = commit_vertex(params);
  const double rest = params.phi_rest();
  const double scaled = rest * t_m / params.x_a;
  return scaled * scaled - 2.0 * params.v_b * rest;
}

std::optional<std::pair<double, double>> commit_roots(
    const DuelParams& params) {
  const double q = discriminant_q(params);
  if (q < 0.0) return std::nullopt;
  const double t_m = commit_vertex(params);
  const double half_width = params.x_a / params.phi_rest() * std::sqrt(q);
  return std::make_pair(t_m - half_width, t_m + half_width);
}

RootBounds root_bounds(double gamma, double phi) {
  check_ratio(gamma, phi);
  const double centre = 2.0 - gamma + 0.5 * gamma * gamma;
  const double spread = 2.0 * std::sqrt(1.0 - gamma);
  const double denom = 3.0 - gamma + 0.25 * gamma * gamma;
  return {0.5 * phi * (centre - spread) / denom,
          0.5 * phi * (centre + spread) / denom};
}

double vertex_threshold(double gamma, double phi) {
  check_ratio(gamma, phi);
  return phi * (0.5 * gamma) / (1.0 + 0.5 * gamma);
}

PrecommitClassification classify_precommit(const DuelParams& params) {
  PrecommitClassification out;
  const double x_b = params.x_b();
  const double t_m = commit_vertex(params);
  // C(0) and C(x_b) are both positive, so a vertex at or past x_b means C
  // stays positive on the whole range.
  if (t_m >= x_b) return out;
  // Tangent discriminant: the fold set is a single point and ties call.
  const double q = discriminant_q(params);
  if (q <= kTolerance * params.phi * params.phi) return out;
  const auto roots = commit_roots(params);
  const double lo = std::clamp(roots->first, 0.0, x_b);
  const double hi = std::clamp(roots->second, 0.0, x_b);
  if (!(lo < hi)) return out;
  out.kind = PrecommitKind::kFoldsOnInterval;
  out.fold_interval = std::make_pair(lo, hi);
  return out;
}

bool folds_at(const PrecommitClassification& cls, double t) {
  if (cls.kind != PrecommitKind::kFoldsOnInterval) return false;
  return t >= cls.fold_interval->first && t <= cls.fold_interval->second;
}

Theorem1Report verify_theorem1(const Theorem1Resolution& res, double phi) {
  if (res.gamma < 2 || res.v_b < 2 || res.t < 2) {
    throw std::domain_error("theorem 1 grid needs at least 2 points per axis");
  }
  Theorem1Report report;
  report.max_delta = -std::numeric_limits<double>::infinity();
  const GridAxis gamma_axis{0.0, 1.0, res.gamma};
  const GridAxis v_axis{0.0, phi, res.v_b};
  const double tie_band = 10.0 * kTolerance * std::max(1.0, phi);

  for (std::size_t i = 0; i < res.gamma; ++i) {
    const double gamma = gamma_axis.center(i);
    for (std::size_t j = 0; j < res.v_b; ++j) {
      const DuelParams params{gamma, v_axis.center(j), phi, 1.0};
      const DuelGame duel = params.game();
      const PrecommitClassification cls = classify_precommit(params);
      for (std::size_t k = 0; k < res.t; ++k) {
        const double t = k + 1 == res.t
                             ? duel.x_b()
                             : duel.x_b() * static_cast<double>(k) /
                                   static_cast<double>(res.t - 1);
        const Commitment commit{params.v_b, t};
        const ResponseOutcome response = adversary_response(duel, commit);
        const double delta =
            response.payoffs.payoff_b -
            lotto_payoff(duel.x_b(), duel.x_a(), duel.phi());
        ++report.cells;
        if (delta >= 0.0) ++report.violations;
        if (delta > report.max_delta) {
          report.max_delta = delta;
          report.worst_gamma = gamma;
          report.worst_v_b = params.v_b;
          report.worst_t = t;
        }
        const bool folded = response.decision == Decision::kFold;
        if (folded) ++report.fold_cells;
        if (folded != folds_at(cls, t) &&
            std::abs(call_margin(params, t)) > tie_band) {
          ++report.decision_mismatches;
        }
      }
    }
  }
  return report;
}

DuelRegionGrid region_map_duel(std::size_t gamma_cells, std::size_t v_b_cells,
                               double phi) {
  DuelRegionGrid grid(GridAxis{0.0, 1.0, gamma_cells},
                      GridAxis{0.0, phi, v_b_cells});
  for (std::size_t j = 0; j < v_b_cells; ++j) {
    for (std::size_t i = 0; i < gamma_cells; ++i) {
      DuelCell& cell = grid.at(i, j);
      cell.gamma = grid.x.center(i);
      cell.v_b = grid.y.center(j);
      cell.classification =
          classify_precommit(DuelParams{cell.gamma, cell.v_b, phi, 1.0});
    }
  }
  return grid;
}

BoundaryDeviation boundary_deviation(const DuelRegionGrid& grid) {
  BoundaryDeviation out;
  out.cell_height = grid.y.width();
  const double phi = grid.y.hi;
  for (std::size_t i = 0; i < grid.x.count; ++i) {
    std::size_t fold_rows = 0;
    for (std::size_t j = 0; j < grid.y.count; ++j) {
      if (grid.at(i, j).classification.kind ==
          PrecommitKind::kFoldsOnInterval) {
        fold_rows = j + 1;
      }
    }
    const double edge = grid.y.lo + static_cast<double>(fold_rows) *
                                        out.cell_height;
    const double gamma = grid.x.center(i);
    const double deviation = std::abs(edge - root_bounds(gamma, phi).v_minus);
    if (deviation > out.max_deviation) {
      out.max_deviation = deviation;
      out.worst_gamma = gamma;
    }
  }
  return out;
}

}  // namespace lotto
