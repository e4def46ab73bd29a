#pragma once

#include <cstddef>
#include <vector>

#include "gaussreg/latent.hpp"
#include "gaussreg/loss.hpp"

namespace gaussreg {

// Normalized DFT magnitudes |x_hat_k| / sqrt(D), k = 0..D-1.
struct Spectrum {
    std::vector<double> magnitudes;
    std::size_t dim() const { return magnitudes.size(); }
};

struct SpectralBatchConfig {
    std::size_t batch_size = 16;    // |B|
    double target_mean = 0.875;     // mu_power, approximates E[chi_2/sqrt(2)]
    bool include_dc_nyquist = true; // keep k = 0 and k = D/2 in the batches
};

Spectrum power_spectrum(const Latent& latent);

// Sum over all D frequencies of -log(2|x_hat_i|/sqrt(D)) + |x_hat_i|^2/D.
// Every bin must have |x_hat_i| > eps_mag; the per-frequency NLL is singular
// at zero magnitude.
LossEval spectral_nll_loss(const Latent& latent);

// Frequencies are shuffled by the seed and partitioned into consecutive
// batches of batch_size; value is the mean over batches of
// |mean_{k in B} |x_hat_k|/sqrt(D) - target_mean|. Gradient via the DFT
// adjoint of the sign-weighted phase spectrum. Deterministic per seed.
LossEval power_loss(const Latent& latent, const SpectralBatchConfig& config, RngSeed seed);

// Exact E[chi_2/sqrt(2)] = sqrt(pi)/2, for diagnostics; the loss itself uses
// config.target_mean.
double expected_chi2_over_sqrt2_mean();

}  // namespace gaussreg
