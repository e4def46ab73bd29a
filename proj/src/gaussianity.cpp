#include "gaussreg/gaussianity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaussreg/errors.hpp"
#include "gaussreg/spatial_losses.hpp"
#include "gaussreg/spectral_losses.hpp"

namespace gaussreg {

double standard_normal_cdf(double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }

double chi2_over_sqrt2_cdf(double r) {
    if (r <= 0.0) return 0.0;
    return -std::expm1(-r * r);
}

double chi1_cdf(double r) {
    if (r <= 0.0) return 0.0;
    return std::erf(r / std::sqrt(2.0));
}

double ks_distance(std::span<const double> sample, double (*target_cdf)(double)) {
    if (sample.empty()) throw InsufficientDataError("ks_distance: empty sample");
    std::vector<double> s(sample.begin(), sample.end());
    std::sort(s.begin(), s.end());
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double f = target_cdf(s[i]);
        d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
        d = std::max(d, f - static_cast<double>(i) / n);
    }
    return d;
}

double spatial_ks(const Latent& latent) {
    return ks_distance(latent.span(), &standard_normal_cdf);
}

double spectral_ks(const Latent& latent) {
    const std::size_t d = latent.dim();
    if (d < 8) throw DimensionError("spectral_ks: dim must be >= 8");
    Spectrum s = power_spectrum(latent);
    std::vector<double> mags;
    mags.reserve(d - 2);
    for (std::size_t k = 0; k < d; ++k) {
        if (k == 0 || k == d / 2) continue;
        mags.push_back(s.magnitudes[k]);
    }
    return ks_distance(mags, &chi2_over_sqrt2_cdf);
}

GaussianityReport evaluate(const Latent& latent, const BlockView& view) {
    GaussianityReport r;
    r.spatial_ks = spatial_ks(latent);
    r.spectral_ks = spectral_ks(latent);
    r.spectral_count = latent.dim() - 2;
    for (unsigned n = 1; n <= 4; ++n) {
        r.moment_errors[n] =
            std::abs(detail::empirical_moment(latent.span(), n) - theoretical_moment(n));
    }
    std::vector<double> acf = circular_autocorrelation(latent);
    double peak = 0.0;
    for (std::size_t i = 1; i < acf.size(); ++i) peak = std::max(peak, std::abs(acf[i]));
    r.autocorr_peak_offdiag = peak;

    BlockView resolved = view;
    if (resolved.block_count == 0) resolved.block_count = resolved.blocks_for(latent.dim());
    r.m1 = mean_deviation_m1(latent, resolved);
    r.m2 = covariance_deviation_m2(latent, resolved);
    r.p1 = prob_bound_p1(r.m1, resolved);
    r.p2 = prob_bound_p2(r.m2, resolved);
    return r;
}

double monte_carlo_lemma_check(std::size_t dim, std::size_t trials, std::size_t freq_index,
                               RngSeed seed) {
    if (freq_index >= dim) {
        throw DimensionError("monte_carlo_lemma_check: freq_index " + std::to_string(freq_index) +
                             " out of range for dim " + std::to_string(dim));
    }
    if (trials < 1) throw InsufficientDataError("monte_carlo_lemma_check: trials must be >= 1");
    std::vector<double> mags(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        Latent z = sample_standard_gaussian(dim, split_seed(seed, t));
        mags[t] = power_spectrum(z).magnitudes[freq_index];
    }
    const bool chi1_bin = (freq_index == 0 || freq_index == dim / 2);
    return ks_distance(mags, chi1_bin ? &chi1_cdf : &chi2_over_sqrt2_cdf);
}

}  // namespace gaussreg
