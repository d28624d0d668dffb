#pragma once

#include <string>

#include "helmprop/field.hpp"

namespace helmprop {

/// HLF1 field file format (little-endian, no padding):
///   magic "HLF1"; u32 d; u32 n[d]; f64 spacing[d]; f64 origin[d]; f64 hbar;
///   then n[0]*...*n[d-1] samples as (f64 real, f64 imag) pairs, row-major.
/// Round-trips are bit-exact.
void save_field(const SampledField& f, const std::string& path);
SampledField load_field(const std::string& path);

}  // namespace helmprop
