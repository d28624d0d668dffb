#include "helmprop/states.hpp"

#include <cmath>
#include <numbers>

namespace helmprop {

namespace {

void require_coverage_1d(const Grid& grid, int axis, double lo, double hi,
                         const char* what) {
  if (grid.origin[axis] > lo || grid.max_coord(axis) < hi)
    throw Error(ErrorKind::Coverage,
                std::string(what) + " does not fit the grid: needs [" +
                    std::to_string(lo) + ", " + std::to_string(hi) +
                    "] on axis " + std::to_string(axis));
}

}  // namespace

SampledField coherent_state(const Grid& grid, double hbar,
                            const PhasePoint& center, bool normalize) {
  if (center.dim() != grid.dim())
    throw Error(ErrorKind::Shape, "phase point dimension does not match grid");
  const double margin = 5.0 * std::sqrt(hbar);
  for (int axis = 0; axis < grid.dim(); ++axis)
    require_coverage_1d(grid, axis, center.x(axis) - margin,
                        center.x(axis) + margin, "coherent state");

  SampledField f(grid, hbar);
  const double amp =
      normalize ? std::pow(std::numbers::pi * hbar, -grid.dim() / 4.0) : 1.0;

  if (grid.dim() == 1) {
    const double x0 = center.x(0), xi0 = center.xi(0);
    for (std::int64_t i = 0; i < grid.n[0]; ++i) {
      const double x = grid.coord(0, i);
      const double dx = x - x0;
      f.at(i) = amp * std::exp(-dx * dx / (2.0 * hbar)) *
                std::exp(kImag * (x * xi0 / hbar));
    }
  } else {
    for (std::int64_t i = 0; i < grid.n[0]; ++i) {
      const double x0c = grid.coord(0, i);
      for (std::int64_t j = 0; j < grid.n[1]; ++j) {
        const double x1c = grid.coord(1, j);
        const double dx0 = x0c - center.x(0), dx1 = x1c - center.x(1);
        const double phase = (x0c * center.xi(0) + x1c * center.xi(1)) / hbar;
        f.at(grid.index(i, j)) =
            amp * std::exp(-(dx0 * dx0 + dx1 * dx1) / (2.0 * hbar)) *
            std::exp(kImag * phase);
      }
    }
  }
  return f;
}

SampledField hermite_state(const Grid& grid, double hbar, int index) {
  if (grid.dim() != 1)
    throw Error(ErrorKind::Shape, "hermite_state is 1D only");
  if (index < 0) throw Error(ErrorKind::Domain, "hermite index must be >= 0");

  const double radius = std::sqrt((2.0 * index + 1.0) * hbar);
  require_coverage_1d(grid, 0, -radius - 3.0 * std::sqrt(hbar),
                      radius + 3.0 * std::sqrt(hbar), "hermite ellipse");

  SampledField f(grid, hbar);
  const double scale = 1.0 / std::sqrt(hbar);
  // Normalized Hermite functions h_n(y) = H_n(y) exp(-y^2/2) / sqrt(2^n n! sqrt(pi))
  // by the stable two-term recurrence; then psi(x) = h_n(x/sqrt(h)) / h^(1/4).
  const double norm_x = std::pow(hbar, -0.25);
  for (std::int64_t i = 0; i < grid.n[0]; ++i) {
    const double y = grid.coord(0, i) * scale;
    double hm1 = 0.0;
    double h = std::pow(std::numbers::pi, -0.25) * std::exp(-y * y / 2.0);
    for (int n = 0; n < index; ++n) {
      const double hp1 = y * std::sqrt(2.0 / (n + 1.0)) * h -
                         std::sqrt(n / (n + 1.0)) * hm1;
      hm1 = h;
      h = hp1;
    }
    f.at(i) = norm_x * h;
  }
  return f;
}

SampledField plane_wave(const Grid& grid, double hbar,
                        const Eigen::VectorXd& xi0) {
  if (xi0.size() != grid.dim())
    throw Error(ErrorKind::Shape, "xi0 dimension does not match grid");
  SampledField f(grid, hbar);
  if (grid.dim() == 1) {
    for (std::int64_t i = 0; i < grid.n[0]; ++i)
      f.at(i) = std::exp(kImag * (grid.coord(0, i) * xi0(0) / hbar));
  } else {
    for (std::int64_t i = 0; i < grid.n[0]; ++i)
      for (std::int64_t j = 0; j < grid.n[1]; ++j)
        f.at(grid.index(i, j)) = std::exp(
            kImag *
            ((grid.coord(0, i) * xi0(0) + grid.coord(1, j) * xi0(1)) / hbar));
  }
  return f;
}

}  // namespace helmprop
