#pragma once

#include "helmprop/field.hpp"

namespace helmprop {

/// Gaussian wave packet exp(-|x-x0|^2 / 2h) * exp(i<x,xi0>/h), evaluated
/// exactly at every grid node. Un-normalized by default; with
/// normalize = true the samples are divided by the analytic L2 norm
/// (pi*h)^(d/4).
SampledField coherent_state(const Grid& grid, double hbar,
                            const PhasePoint& center, bool normalize = false);

/// Index-th Hermite function in semiclassical scaling (argument x/sqrt(h)),
/// L2-normalized. 1D only; its classical energy circle has radius
/// sqrt((2*index+1)*h) and must fit the grid.
SampledField hermite_state(const Grid& grid, double hbar, int index);

/// Plane wave exp(i<x,xi0>/h) truncated to the grid (unit modulus samples).
SampledField plane_wave(const Grid& grid, double hbar,
                        const Eigen::VectorXd& xi0);

}  // namespace helmprop
