#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "lotto/core_model.h"
#include "lotto/region_grid.h"

namespace lotto {

// Two-player instance in ratio form: gamma = x_b / x_a.
struct DuelParams {
  double gamma = 0.5;
  double v_b = 0.1;
  double phi = 1.0;
  double x_a = 1.0;

  // Throws std::domain_error unless gamma in (0,1), 0 < v_b < phi, x_a > 0.
  void validate() const;

  double x_b() const { return gamma * x_a; }
  double phi_rest() const { return phi - v_b; }
  DuelGame game() const { return DuelGame(x_a, x_b(), phi); }
};

enum class PrecommitKind { kAlwaysCalls, kFoldsOnInterval };

const char* to_string(PrecommitKind kind);

struct PrecommitClassification {
  PrecommitKind kind = PrecommitKind::kAlwaysCalls;
  // Present iff kind == kFoldsOnInterval; clipped to [0, x_b].
  std::optional<std::pair<double, double>> fold_interval;
};

// The calling polynomial
//   C(t) = (phi_rest / x_a^2) t^2 - (t / x_a)(2 v_b + phi_rest gamma) + 2 v_b.
// It equals (call - fold) * (x_a - t) / x_a, so its sign is the adversary's
// preference. Throws std::domain_error for t outside [0, x_b].
double call_margin(const DuelParams& params, double t);

// Minimizer of C over the reals: (v_b / phi_rest) x_a + x_b / 2.
double commit_vertex(const DuelParams& params);

// Discriminant Q = (phi_rest^2 / x_a^2) t_m^2 - 2 v_b phi_rest, evaluated from
// this definition rather than from its expansion in v_b.
double discriminant_q(const DuelParams& params);

// Roots t_m -/+ (x_a / phi_rest) sqrt(Q) when Q >= 0.
std::optional<std::pair<double, double>> commit_roots(const DuelParams& params);

struct RootBounds {
  double v_minus = 0.0;
  double v_plus = 0.0;
};

// Roots of Q as a quadratic in v_b for a fixed budget ratio.
RootBounds root_bounds(double gamma, double phi);

// H(gamma) = phi (gamma/2) / (1 + gamma/2); t_m < x_b iff v_b < H.
double vertex_threshold(double gamma, double phi);

PrecommitClassification classify_precommit(const DuelParams& params);

// True when the adversary folds at commitment t under `cls`.
bool folds_at(const PrecommitClassification& cls, double t);

struct Theorem1Resolution {
  std::size_t gamma = 100;
  std::size_t v_b = 100;
  std::size_t t = 100;
};

struct Theorem1Report {
  std::size_t cells = 0;
  std::size_t violations = 0;  // cells with delta >= 0
  double max_delta = 0.0;
  double worst_gamma = 0.0;
  double worst_v_b = 0.0;
  double worst_t = 0.0;
  std::size_t fold_cells = 0;
  // Cells where the direct call/fold comparison disagrees with the fold
  // interval from classify_precommit, outside the tie band around C(t) = 0.
  std::size_t decision_mismatches = 0;

  bool passed() const { return violations == 0 && decision_mismatches == 0; }
};

// Sweeps gamma and v_b / phi over cell centers of (0,1) and t / x_b over the
// closed grid {0, 1/(n-1), ..., 1}.
Theorem1Report verify_theorem1(const Theorem1Resolution& res,
                               double phi = 1.0);

struct DuelCell {
  double gamma = 0.0;
  double v_b = 0.0;
  PrecommitClassification classification;
};

using DuelRegionGrid = RegionGrid<DuelCell>;

// Grid over (gamma, v_b) in (0,1) x (0,phi) at cell centers.
DuelRegionGrid region_map_duel(std::size_t gamma_cells, std::size_t v_b_cells,
                               double phi = 1.0);

struct BoundaryDeviation {
  double max_deviation = 0.0;
  double cell_height = 0.0;
  double worst_gamma = 0.0;
};

// Compares, per gamma column, the top edge of the fold region with v_-(gamma).
BoundaryDeviation boundary_deviation(const DuelRegionGrid& grid);

}  // namespace lotto
