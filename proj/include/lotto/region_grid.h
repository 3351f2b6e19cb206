#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lotto {

// Open interval (lo, hi) sampled at the centers of `count` equal cells.
struct GridAxis {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t count = 2;

  double width() const { return (hi - lo) / static_cast<double>(count); }
  double center(std::size_t i) const {
    return lo + (static_cast<double>(i) + 0.5) * width();
  }
  // Index of the cell containing x, clamped to the axis.
  std::size_t index_of(double x) const {
    if (x <= lo) return 0;
    const auto i = static_cast<std::size_t>((x - lo) / width());
    return i >= count ? count - 1 : i;
  }
};

// Rectangular parameter grid, row-major with x varying fastest.
template <class Cell>
struct RegionGrid {
  GridAxis x;
  GridAxis y;
  std::vector<Cell> cells;

  RegionGrid(GridAxis x_axis, GridAxis y_axis)
      : x(x_axis), y(y_axis), cells(x_axis.count * y_axis.count) {
    if (x.count < 2 || y.count < 2) {
      throw std::domain_error("region grids need at least 2x2 cells");
    }
  }

  Cell& at(std::size_t i, std::size_t j) { return cells[j * x.count + i]; }
  const Cell& at(std::size_t i, std::size_t j) const {
    return cells[j * x.count + i];
  }
};

}  // namespace lotto
