#pragma once

#include <vector>

namespace gaussreg {

// Scalar loss value paired with its gradient w.r.t. the input latent.
struct LossEval {
    double value = 0.0;
    std::vector<double> gradient;
};

inline constexpr double kEpsVar = 1e-12;  // degenerate-variance guard
inline constexpr double kEpsMom = 1e-12;  // |m_n|^{1/n} singularity guard
inline constexpr double kEpsMag = 1e-12;  // |x_hat| denominators in spectral gradients

}  // namespace gaussreg
