#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "gaussreg/latent.hpp"
#include "gaussreg/prno.hpp"

namespace gaussreg {

// Standard normal CDF, |error| < 1e-10.
double standard_normal_cdf(double t);

// CDF of chi_2/sqrt(2): 1 - e^{-r^2} for r > 0 (density 2 r e^{-r^2}).
double chi2_over_sqrt2_cdf(double r);

// CDF of chi_1: erf(r/sqrt(2)) for r > 0.
double chi1_cdf(double r);

// Exact two-sided Kolmogorov-Smirnov distance between a sample and a target
// CDF, computed over the order statistics (both one-sided gaps).
double ks_distance(std::span<const double> sample, double (*target_cdf)(double));

// sup_t |F_emp(t) - Phi(t)|.
double spatial_ks(const Latent& latent);

// KS distance of {|x_hat_k|/sqrt(D) : k not in {0, D/2}} from chi_2/sqrt(2).
// Requires even dim >= 8.
double spectral_ks(const Latent& latent);

struct GaussianityReport {
    double spatial_ks = 0.0;
    double spectral_ks = 0.0;
    std::map<unsigned, double> moment_errors;  // |m_n - mu_n| for n = 1..4
    double autocorr_peak_offdiag = 0.0;        // max_{r != 0} |C(r)/D|
    double m1 = 0.0;
    double m2 = 0.0;
    double p1 = 1.0;
    double p2 = 1.0;
    std::size_t spectral_count = 0;  // D-2: bins used by spectral_ks
    std::size_t excluded_bins = 2;   // k = 0 and k = D/2 (chi_1 law, not chi_2/sqrt(2))
};

// Full report; the block view sizes m1/m2/p1/p2.
GaussianityReport evaluate(const Latent& latent, const BlockView& view);

// Draw `trials` independent Gaussian latents (per-trial seeds split from
// `seed`), collect magnitudes[freq_index], and return the KS distance to the
// law Lemma-prescribed for that bin: chi_1 at k in {0, D/2}, chi_2/sqrt(2)
// elsewhere.
double monte_carlo_lemma_check(std::size_t dim, std::size_t trials, std::size_t freq_index,
                               RngSeed seed);

}  // namespace gaussreg
