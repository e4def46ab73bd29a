#pragma once

#include <set>

#include "gaussreg/latent.hpp"
#include "gaussreg/loss.hpp"
#include "gaussreg/spectral_losses.hpp"

namespace gaussreg {

struct RegConfig {
    std::set<unsigned> moment_orders = {1, 2};  // K
    double lambda_power = 25.0;
    SpectralBatchConfig spectral;
    bool permute_each_eval = true;
};

// L = sum_{n in K} L_n(x) + lambda_power * L_power(pi(x)).
//
// One seed drives both sub-streams: stream 0 draws the element permutation pi
// (identity when permute_each_eval is false), stream 1 seeds the frequency
// shuffle inside the power loss. Moment terms are evaluated on the unpermuted
// latent (they are permutation-invariant); the spectral gradient is scattered
// through pi^{-1} so the total gradient lives in original coordinates.
LossEval gaussian_reg_loss(const Latent& latent, const RegConfig& config, RngSeed seed);

}  // namespace gaussreg
