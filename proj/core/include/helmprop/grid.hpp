#pragma once

#include <cstdint>
#include <vector>

#include "helmprop/types.hpp"

namespace helmprop {

/// Uniform axis-aligned sampling grid in d dimensions (d = 1 or 2 for
/// sampled fields). `origin[j]` is the coordinate of sample index 0 along
/// axis j; samples are stored row-major (last axis fastest).
struct Grid {
  std::vector<std::int64_t> n;
  std::vector<double> spacing;
  std::vector<double> origin;

  Grid() = default;
  Grid(std::vector<std::int64_t> n_, std::vector<double> spacing_,
       std::vector<double> origin_);

  /// Centered 1D grid: N samples of step dx with x = 0 in the middle.
  static Grid centered_1d(std::int64_t n, double half_width);
  /// Centered square 2D grid.
  static Grid centered_2d(std::int64_t n, double half_width);

  int dim() const { return static_cast<int>(n.size()); }
  std::int64_t size() const;

  double coord(int axis, std::int64_t index) const {
    return origin[axis] + spacing[axis] * static_cast<double>(index);
  }
  double max_coord(int axis) const { return coord(axis, n[axis] - 1); }

  /// Cell volume used as the Riemann quadrature weight.
  double cell_volume() const;

  /// Row-major linear index.
  std::int64_t index(std::int64_t i) const { return i; }
  std::int64_t index(std::int64_t i, std::int64_t j) const {
    return i * n[1] + j;
  }

  bool same_layout(const Grid& other) const;
};

void validate(const Grid& grid);

}  // namespace helmprop
