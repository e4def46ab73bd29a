#pragma once

#include <cstddef>
#include <vector>

#include "gaussreg/latent.hpp"
#include "gaussreg/loss.hpp"

namespace gaussreg {

// Reshape view: D = block_count * subvector_dim contiguous blocks.
struct BlockView {
    std::size_t subvector_dim = 4;  // k
    std::size_t block_count = 0;    // m; 0 means derive from the latent dim

    std::size_t blocks_for(std::size_t dim) const;
};

// M1 = || (1/m) sum_i x_i ||.
double mean_deviation_m1(const Latent& latent, const BlockView& view);

// M2 = || (1/m) sum_i x_i x_i^T - I_k ||_op (largest singular value).
double covariance_deviation_m2(const Latent& latent, const BlockView& view);

// Tail bounds capped at 1 (the paper's max{., 1} is implemented as min: an
// upper tail bound cannot exceed 1).
double prob_bound_p1(double m1, const BlockView& view);
double prob_bound_p2(double m2, const BlockView& view);

// C(r)/D with C(r) = sum_l x_l x_{(l+r) mod D}, computed via the spectrum in
// O(D log D).
std::vector<double> circular_autocorrelation(const Latent& latent);

// PRNO-style covariance-matching baseline:
//   w1 * M1^2 + w2 * || (1/m) sum x_i x_i^T - I_k ||_F^2
// (Frobenius form for smooth gradients; the reported M2 indicator uses the
// operator norm).
LossEval prno_loss(const Latent& latent, const BlockView& view, double w1 = 1.0,
                   double w2 = 1.0);

}  // namespace gaussreg
