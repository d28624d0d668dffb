#pragma once

#include <Eigen/Core>
#include <vector>

#include "helmprop/grid.hpp"
#include "helmprop/types.hpp"

namespace helmprop {

/// A point (x, xi) of the reduced phase space. The frequency xi lives in the
/// open unit ball in the physical (propagating) region.
struct PhasePoint {
  Eigen::VectorXd x;
  Eigen::VectorXd xi;

  PhasePoint() = default;
  PhasePoint(Eigen::VectorXd x_, Eigen::VectorXd xi_)
      : x(std::move(x_)), xi(std::move(xi_)) {}
  /// 1D convenience.
  PhasePoint(double x_, double xi_) : x(1), xi(1) {
    x(0) = x_;
    xi(0) = xi_;
  }

  int dim() const { return static_cast<int>(x.size()); }
  bool physical() const { return xi.norm() < 1.0; }
};

/// Complex samples of a hologram (or of a spectrum) on a uniform grid.
/// The semiclassical parameter travels with the data so that every
/// downstream operation reads one consistent value.
struct SampledField {
  Grid grid;
  double hbar = 0.0;
  std::vector<Complex> samples;

  SampledField() = default;
  SampledField(Grid g, double hbar_);

  Complex& at(std::int64_t i) { return samples[static_cast<std::size_t>(i)]; }
  const Complex& at(std::int64_t i) const {
    return samples[static_cast<std::size_t>(i)];
  }

  Eigen::Map<Eigen::VectorXcd> vector() {
    return {samples.data(), static_cast<Eigen::Index>(samples.size())};
  }
  Eigen::Map<const Eigen::VectorXcd> vector() const {
    return {samples.data(), static_cast<Eigen::Index>(samples.size())};
  }
};

/// Riemann-sum approximation of the L2 pairing; conjugate-linear in the
/// FIRST argument: <a,b> = sum conj(a) * b * cell_volume.
Complex inner_product(const SampledField& a, const SampledField& b);

double norm_l2(const SampledField& f);
double norm_sq(const SampledField& f);

/// Throws a Shape error unless both fields share grid layout and hbar.
void require_compatible(const SampledField& a, const SampledField& b);

}  // namespace helmprop
