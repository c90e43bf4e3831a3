#pragma once

#include <span>
#include <vector>

#include "scs/core.hpp"

namespace scs::detail {

/// Unnormalized DFT: out_k = Σ_j in_j e^{sign·2πi jk/L}, sign = ±1.
/// Backed by FFTW; works for any length.
std::vector<Complex> fft(std::span<const Complex> in, int sign);

}  // namespace scs::detail
