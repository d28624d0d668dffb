#include "helmprop/field.hpp"

#include <cmath>

namespace helmprop {

SampledField::SampledField(Grid g, double hbar_)
    : grid(std::move(g)), hbar(hbar_) {
  validate(grid);
  if (!(hbar > 0.0) || !std::isfinite(hbar))
    throw Error(ErrorKind::Domain, "hbar must be positive and finite");
  samples.assign(static_cast<std::size_t>(grid.size()), Complex{0.0, 0.0});
}

void require_compatible(const SampledField& a, const SampledField& b) {
  if (!a.grid.same_layout(b.grid))
    throw Error(ErrorKind::Shape, "fields live on different grids");
  if (a.hbar != b.hbar)
    throw Error(ErrorKind::Shape, "fields carry different hbar values");
}

Complex inner_product(const SampledField& a, const SampledField& b) {
  require_compatible(a, b);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.samples.size(); ++i)
    acc += std::conj(a.samples[i]) * b.samples[i];
  return acc * a.grid.cell_volume();
}

double norm_sq(const SampledField& f) {
  double acc = 0.0;
  for (const auto& s : f.samples) acc += std::norm(s);
  return acc * f.grid.cell_volume();
}

double norm_l2(const SampledField& f) { return std::sqrt(norm_sq(f)); }

}  // namespace helmprop
