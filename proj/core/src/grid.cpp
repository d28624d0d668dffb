#include "helmprop/grid.hpp"

#include <cmath>
#include <limits>

namespace helmprop {

Grid::Grid(std::vector<std::int64_t> n_, std::vector<double> spacing_,
           std::vector<double> origin_)
    : n(std::move(n_)), spacing(std::move(spacing_)), origin(std::move(origin_)) {
  validate(*this);
}

Grid Grid::centered_1d(std::int64_t n, double half_width) {
  const double dx = 2.0 * half_width / static_cast<double>(n);
  return Grid({n}, {dx}, {-half_width});
}

Grid Grid::centered_2d(std::int64_t n, double half_width) {
  const double dx = 2.0 * half_width / static_cast<double>(n);
  return Grid({n, n}, {dx, dx}, {-half_width, -half_width});
}

std::int64_t Grid::size() const {
  std::int64_t total = 1;
  for (auto nj : n) total *= nj;
  return total;
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (auto s : spacing) v *= s;
  return v;
}

bool Grid::same_layout(const Grid& other) const {
  if (n != other.n) return false;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (spacing[j] != other.spacing[j] || origin[j] != other.origin[j])
      return false;
  }
  return true;
}

void validate(const Grid& grid) {
  const int d = grid.dim();
  if (d < 1 || d > 2)
    throw Error(ErrorKind::Shape,
                "grid dimension must be 1 or 2, got " + std::to_string(d));
  if (grid.spacing.size() != grid.n.size() || grid.origin.size() != grid.n.size())
    throw Error(ErrorKind::Shape, "grid field lengths disagree");
  std::int64_t total = 1;
  for (int j = 0; j < d; ++j) {
    if (grid.n[j] < 2)
      throw Error(ErrorKind::Shape, "grid needs at least 2 samples per axis");
    if (!(grid.spacing[j] > 0.0) || !std::isfinite(grid.spacing[j]))
      throw Error(ErrorKind::Shape, "grid spacing must be positive and finite");
    if (!std::isfinite(grid.origin[j]))
      throw Error(ErrorKind::Shape, "grid origin must be finite");
    if (total > std::numeric_limits<std::int64_t>::max() / grid.n[j])
      throw Error(ErrorKind::Shape, "grid sample count overflows");
    total *= grid.n[j];
  }
}

}  // namespace helmprop
