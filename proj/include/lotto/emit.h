#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lotto/coalition_model.h"
#include "lotto/duel_analysis.h"

namespace lotto {

// Numbers are written with 12 significant digits; NaN becomes an empty field.
std::string format_number(double value);

// Header: gamma,v_b,decision,t_minus,t_plus
std::string region2p_csv(const DuelRegionGrid& grid);

// Header: x1,x2,case_label,tstar,member,margin_a,margin_b
std::string region3p_csv(const CoalitionRegionGrid& grid);

struct Polyline {
  std::vector<std::pair<double, double>> points;
  bool dashed = false;
};

// Two-color heatmap of a region CSV produced by region2p_csv or
// region3p_csv. Cells are placed from the CSV values alone; `overlays` are
// drawn on top in data coordinates over [0, x_max] x [0, y_max].
std::string render_svg(std::string_view csv, const std::vector<Polyline>& overlays,
                       double x_max = 1.0, double y_max = 1.0);

// v_-(gamma) sampled at `samples` points of [0, 1].
std::vector<Polyline> duel_overlays(double phi, std::size_t samples = 256);

// Case boundaries of the game (phi1, phi2) drawn solid and of the committed
// subgame (phi1 - v_b, phi2) drawn dashed, clipped to the unit square.
std::vector<Polyline> coalition_overlays(double phi1, double phi2, double v_b,
                                         std::size_t samples = 256);

}  // namespace lotto
