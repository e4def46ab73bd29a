#include "gaussreg/spectral_losses.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "gaussreg/errors.hpp"
#include "gaussreg/fft.hpp"

namespace gaussreg {

Spectrum power_spectrum(const Latent& latent) {
    const std::size_t d = latent.dim();
    std::vector<std::complex<double>> xhat;
    fft::forward(latent.span(), xhat);
    Spectrum s;
    s.magnitudes.resize(d);
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k) s.magnitudes[k] = std::abs(xhat[k]) * inv_sqrt_d;
    return s;
}

LossEval spectral_nll_loss(const Latent& latent) {
    const std::size_t d = latent.dim();
    const double dd = static_cast<double>(d);
    std::vector<std::complex<double>> xhat;
    fft::forward(latent.span(), xhat);

    double value = 0.0;
    std::vector<std::complex<double>> w(d);
    const double sqrt_d = std::sqrt(dd);
    for (std::size_t k = 0; k < d; ++k) {
        const double mag = std::abs(xhat[k]);
        if (mag <= kEpsMag) {
            throw SingularityError("spectral_nll_loss: |x_hat| vanishes at frequency " +
                                   std::to_string(k));
        }
        value += -std::log(2.0 * mag / sqrt_d) + mag * mag / dd;
        // log-term gradient weight: -x_hat_k / |x_hat_k|^2
        w[k] = -xhat[k] / (mag * mag);
    }

    std::vector<std::complex<double>> adj;
    fft::inverse(w, adj);
    LossEval out;
    out.value = value;
    out.gradient.resize(d);
    for (std::size_t n = 0; n < d; ++n) {
        // |x_hat|^2 part sums to exactly 2 x_n by the inversion identity.
        out.gradient[n] = 2.0 * latent[n] + adj[n].real();
    }
    return out;
}

LossEval power_loss(const Latent& latent, const SpectralBatchConfig& config, RngSeed seed) {
    const std::size_t d = latent.dim();
    if (config.batch_size < 1) throw ConfigError("power_loss: batch_size must be >= 1");
    if (config.include_dc_nyquist && d % config.batch_size != 0) {
        throw ConfigError("power_loss: batch_size " + std::to_string(config.batch_size) +
                          " does not divide D " + std::to_string(d));
    }

    std::vector<std::complex<double>> xhat;
    fft::forward(latent.span(), xhat);
    const double sqrt_d = std::sqrt(static_cast<double>(d));
    std::vector<double> mag(d);
    for (std::size_t k = 0; k < d; ++k) mag[k] = std::abs(xhat[k]) / sqrt_d;

    // Seeded shuffle of the frequency indices, then consecutive chunks. With
    // DC/Nyquist excluded the trailing batch may be short.
    Permutation shuffle = random_permutation(d, seed);
    std::vector<std::size_t> order;
    order.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t k = shuffle[i];
        if (!config.include_dc_nyquist && (k == 0 || k == d / 2)) continue;
        order.push_back(k);
    }

    const std::size_t nbatches = (order.size() + config.batch_size - 1) / config.batch_size;
    std::vector<double> alpha(d, 0.0);  // per-frequency adjoint weight
    double value = 0.0;
    for (std::size_t b = 0; b < nbatches; ++b) {
        const std::size_t lo = b * config.batch_size;
        const std::size_t hi = std::min(lo + config.batch_size, order.size());
        double mean = 0.0;
        for (std::size_t i = lo; i < hi; ++i) mean += mag[order[i]];
        mean /= static_cast<double>(hi - lo);
        const double dev = mean - config.target_mean;
        value += std::abs(dev);
        const double s = dev > 0.0 ? 1.0 : (dev < 0.0 ? -1.0 : 0.0);
        const double coef = s / (static_cast<double>(nbatches) *
                                 static_cast<double>(hi - lo) * sqrt_d);
        for (std::size_t i = lo; i < hi; ++i) alpha[order[i]] = coef;
    }
    value /= static_cast<double>(nbatches);

    std::vector<std::complex<double>> w(d, {0.0, 0.0});
    for (std::size_t k = 0; k < d; ++k) {
        const double m = std::abs(xhat[k]);
        if (m > kEpsMag) w[k] = alpha[k] * xhat[k] / m;  // zero-magnitude bins contribute 0
    }
    std::vector<std::complex<double>> adj;
    fft::inverse(w, adj);

    LossEval out;
    out.value = value;
    out.gradient.resize(d);
    for (std::size_t n = 0; n < d; ++n) out.gradient[n] = adj[n].real();
    return out;
}

double expected_chi2_over_sqrt2_mean() { return std::sqrt(std::numbers::pi) / 2.0; }

}  // namespace gaussreg
