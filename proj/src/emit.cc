#include "lotto/emit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lotto {

namespace {

constexpr double kWidth = 480.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 40.0;

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

// Samples a curve given as the function `f` of a free coordinate over (0, 1]
// and cuts it wherever it leaves the unit square.
void add_curve(std::vector<Polyline>& out, bool dashed, bool free_is_x,
               const std::function<double(double)>& f, std::size_t samples) {
  Polyline current;
  current.dashed = dashed;
  for (std::size_t k = 0; k < samples; ++k) {
    const double s = static_cast<double>(k + 1) / static_cast<double>(samples);
    const double v = f(s);
    const bool inside = std::isfinite(v) && v >= 0.0 && v <= 1.0;
    if (inside) {
      current.points.emplace_back(free_is_x ? s : v, free_is_x ? v : s);
    } else if (!current.points.empty()) {
      if (current.points.size() > 1) out.push_back(current);
      current.points.clear();
    }
  }
  if (current.points.size() > 1) out.push_back(current);
}

void add_case_curves(std::vector<Polyline>& out, double p1, double p2,
                     bool dashed, std::size_t samples) {
  // Equal budget-to-value ratio (Case 4 line).
  add_curve(out, dashed, true, [=](double x1) { return p2 / p1 * x1; },
            samples);
  // Case 1 boundaries.
  add_curve(
      out, dashed, true,
      [=](double x1) { return p2 * std::max(x1 * x1, 1.0) / (p1 * x1); },
      samples);
  add_curve(
      out, dashed, false,
      [=](double x2) { return p1 * std::max(x2 * x2, 1.0) / (p2 * x2); },
      samples);
  // Case 2 / Case 3 boundaries.
  add_curve(
      out, dashed, false,
      [=](double x2) { return (1.0 - x2) * (1.0 - x2) * p2 / (p1 * x2); },
      samples);
  add_curve(
      out, dashed, true,
      [=](double x1) { return (1.0 - x1) * (1.0 - x1) * p1 / (p2 * x1); },
      samples);
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string region2p_csv(const DuelRegionGrid& grid) {
  std::string out = "gamma,v_b,decision,t_minus,t_plus\n";
  for (std::size_t j = 0; j < grid.y.count; ++j) {
    for (std::size_t i = 0; i < grid.x.count; ++i) {
      const DuelCell& cell = grid.at(i, j);
      const auto& interval = cell.classification.fold_interval;
      out += format_number(cell.gamma) + ',' + format_number(cell.v_b) + ',' +
             to_string(cell.classification.kind) + ',' +
             (interval ? format_number(interval->first) : "") + ',' +
             (interval ? format_number(interval->second) : "") + '\n';
    }
  }
  return out;
}

std::string region3p_csv(const CoalitionRegionGrid& grid) {
  std::string out = "x1,x2,case_label,tstar,member,margin_a,margin_b\n";
  for (std::size_t j = 0; j < grid.y.count; ++j) {
    for (std::size_t i = 0; i < grid.x.count; ++i) {
      const CoalitionCell& cell = grid.at(i, j);
      const std::string label = cell.base.from_oracle
                                    ? std::string("oracle")
                                    : case_name(cell.base.label, cell.base.side);
      out += format_number(cell.x1) + ',' + format_number(cell.x2) + ',' +
             label + ',' + format_number(cell.tstar) + ',' +
             (cell.member ? "1" : "0") + ',' + format_number(cell.margin_a) +
             ',' + format_number(cell.margin_b) + '\n';
    }
  }
  return out;
}

std::string render_svg(std::string_view csv,
                       const std::vector<Polyline>& overlays, double x_max,
                       double y_max) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  const std::vector<std::string> header = split_fields(line);

  // region2p marks fold cells, region3p marks members.
  std::size_t x_col = 0, y_col = 1, flag_col = 0;
  std::string flag_value;
  if (header.size() == 5 && header[0] == "gamma") {
    flag_col = 2;
    flag_value = "folds_on_interval";
  } else if (header.size() == 7 && header[0] == "x1") {
    flag_col = 4;
    flag_value = "1";
  } else {
    throw std::invalid_argument("unrecognized region CSV header: " + line);
  }

  struct Cell {
    double x, y;
    bool on;
  };
  std::vector<Cell> cells;
  std::set<double> xs, ys;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_fields(line);
    if (f.size() != header.size()) {
      throw std::invalid_argument("ragged CSV row: " + line);
    }
    const double x = std::stod(f[x_col]);
    const double y = std::stod(f[y_col]);
    cells.push_back({x, y, f[flag_col] == flag_value});
    xs.insert(x);
    ys.insert(y);
  }

  const double plot_w = kWidth - 2.0 * kMargin;
  const double plot_h = kHeight - 2.0 * kMargin;
  const double cw = plot_w / static_cast<double>(std::max<std::size_t>(1, xs.size()));
  const double ch = plot_h / static_cast<double>(std::max<std::size_t>(1, ys.size()));
  auto px = [&](double x) { return kMargin + x / x_max * plot_w; };
  auto py = [&](double y) { return kHeight - kMargin - y / y_max * plot_h; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         format_number(kWidth) + "\" height=\"" + format_number(kHeight) +
         "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + format_number(kWidth) +
         "\" height=\"" + format_number(kHeight) + "\" fill=\"#ffffff\"/>\n";
  out += "<g shape-rendering=\"crispEdges\" fill=\"#9e9e9e\">\n";
  for (const Cell& c : cells) {
    if (!c.on) continue;
    out += "<rect x=\"" + format_number(px(c.x) - 0.5 * cw) + "\" y=\"" +
           format_number(py(c.y) - 0.5 * ch) + "\" width=\"" +
           format_number(cw) + "\" height=\"" + format_number(ch) + "\"/>\n";
  }
  out += "</g>\n";
  out += "<rect x=\"" + format_number(kMargin) + "\" y=\"" +
         format_number(kMargin) + "\" width=\"" + format_number(plot_w) +
         "\" height=\"" + format_number(plot_h) +
         "\" fill=\"none\" stroke=\"#000000\"/>\n";
  for (const Polyline& p : overlays) {
    out += "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"1.2\"";
    if (p.dashed) out += " stroke-dasharray=\"4,3\"";
    out += " points=\"";
    for (std::size_t k = 0; k < p.points.size(); ++k) {
      if (k) out += ' ';
      out += format_number(px(p.points[k].first)) + ',' +
             format_number(py(p.points[k].second));
    }
    out += "\"/>\n";
  }
  out += "<text x=\"" + format_number(kWidth / 2.0) + "\" y=\"" +
         format_number(kHeight - 10.0) + "\" text-anchor=\"middle\">" +
         header[x_col] + "</text>\n";
  out += "<text x=\"12\" y=\"" + format_number(kHeight / 2.0) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 12 " +
         format_number(kHeight / 2.0) + ")\">" + header[y_col] + "</text>\n";
  out += "</svg>\n";
  return out;
}

std::vector<Polyline> duel_overlays(double phi, std::size_t samples) {
  Polyline curve;
  for (std::size_t k = 0; k < samples; ++k) {
    const double gamma =
        static_cast<double>(k) / static_cast<double>(samples - 1);
    curve.points.emplace_back(gamma, root_bounds(gamma, phi).v_minus);
  }
  return {curve};
}

std::vector<Polyline> coalition_overlays(double phi1, double phi2, double v_b,
                                         std::size_t samples) {
  std::vector<Polyline> out;
  add_case_curves(out, phi1, phi2, false, samples);
  add_case_curves(out, phi1 - v_b, phi2, true, samples);
  return out;
}

}  // namespace lotto
