#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gaussreg::fft {

// Unnormalized forward DFT: out[k] = sum_n x[n] e^{-2 pi i k n / D}.
void forward(std::span<const double> x, std::vector<std::complex<double>>& out);

// Unnormalized inverse image: out[n] = sum_k w[k] e^{+2 pi i k n / D}
// (no 1/D factor). This is the adjoint of the forward transform.
void inverse(std::span<const std::complex<double>> w, std::vector<std::complex<double>>& out);

}  // namespace gaussreg::fft
