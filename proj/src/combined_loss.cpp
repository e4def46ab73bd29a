#include "gaussreg/combined_loss.hpp"

#include "gaussreg/errors.hpp"
#include "gaussreg/spatial_losses.hpp"

namespace gaussreg {

LossEval gaussian_reg_loss(const Latent& latent, const RegConfig& config, RngSeed seed) {
    if (config.moment_orders.empty()) {
        throw ConfigError("gaussian_reg_loss: moment_orders must be nonempty");
    }
    if (config.lambda_power < 0.0) {
        throw ConfigError("gaussian_reg_loss: lambda_power must be >= 0");
    }

    LossEval total;
    total.gradient.assign(latent.dim(), 0.0);
    for (unsigned n : config.moment_orders) {
        LossEval e = moment_loss(latent, n);
        total.value += e.value;
        for (std::size_t i = 0; i < total.gradient.size(); ++i) {
            total.gradient[i] += e.gradient[i];
        }
    }

    if (config.lambda_power > 0.0) {
        const RngSeed perm_seed = split_seed(seed, 0);
        const RngSeed freq_seed = split_seed(seed, 1);
        if (config.permute_each_eval) {
            Permutation perm = random_permutation(latent.dim(), perm_seed);
            Latent shuffled = apply_permutation(latent, perm);
            LossEval p = power_loss(shuffled, config.spectral, freq_seed);
            std::vector<double> g = unpermute_gradient(p.gradient, perm);
            total.value += config.lambda_power * p.value;
            for (std::size_t i = 0; i < total.gradient.size(); ++i) {
                total.gradient[i] += config.lambda_power * g[i];
            }
        } else {
            LossEval p = power_loss(latent, config.spectral, freq_seed);
            total.value += config.lambda_power * p.value;
            for (std::size_t i = 0; i < total.gradient.size(); ++i) {
                total.gradient[i] += config.lambda_power * p.gradient[i];
            }
        }
    }
    return total;
}

}  // namespace gaussreg
