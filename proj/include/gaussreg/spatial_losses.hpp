#pragma once

#include <span>

#include "gaussreg/latent.hpp"
#include "gaussreg/loss.hpp"

namespace gaussreg {

// n-th moment of N(0,1): 0 for odd n, (2k)!/(2^k k!) = (2k-1)!! for n = 2k.
double theoretical_moment(unsigned n);

// L_n = | |m_n|^{1/n} - mu_n^{1/n} | with m_n the empirical n-th moment.
// Exact gradient; the subgradient at the outer |.| kink is the zero vector.
// Throws SingularityError when n > 1 and |m_n| <= eps_mom.
LossEval moment_loss(const Latent& latent, unsigned n);

// L_KL = 1/2 (mu^2 + var - log var - 1), population (divide-by-D) variance.
LossEval kl_loss(const Latent& latent);

// L_kurt = ((1/D) sum ((x_i - mu)/sigma)^4 - 3)^2, gradient through the
// normalization.
LossEval kurtosis_loss(const Latent& latent);

// L_norm = ||x||^2/2 - (D-1) log ||x|| (the constant c is dropped).
// Gradient x (1 - (D-1)/||x||^2); vanishes at ||x||^2 = D-1.
LossEval norm_loss(const Latent& latent);

namespace detail {
// Span-level cores: same math, no Latent dimension constraints. The Latent
// overloads above forward here.
LossEval moment_loss_core(std::span<const double> x, unsigned n);
LossEval kl_loss_core(std::span<const double> x);
LossEval kurtosis_loss_core(std::span<const double> x);
LossEval norm_loss_core(std::span<const double> x);
double empirical_moment(std::span<const double> x, unsigned n);
}  // namespace detail

}  // namespace gaussreg
