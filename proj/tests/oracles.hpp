#pragma once

// Independent oracles for the test suites. These stay deliberately naive:
// central finite differences for every analytic gradient, the O(D^2) DFT
// straight from its definition, and direct quadrature/simulation for the
// distributional targets. Nothing here may call into the implementation paths
// it is checking.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "gaussreg/latent.hpp"

namespace oracles {

// Central finite differences with per-coordinate step h*max(1, |x_i|).
std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> x,
    double h = 1e-6);

// Relative L2 error ||a - b|| / max(||b||, floor).
double relative_l2_error(const std::vector<double>& a, const std::vector<double>& b,
                         double floor = 1e-300);

// Brute-force unnormalized DFT: out[k] = sum_n x[n] e^{-2 pi i k n / D}.
std::vector<std::complex<double>> dft_direct(const std::vector<double>& x);

// Brute-force circular autocorrelation C(r)/D.
std::vector<double> autocorrelation_direct(const std::vector<double>& x);

// Mean of `n` draws of chi_2/sqrt(2) simulated from pairs of Gaussians.
double chi2_over_sqrt2_mc_mean(std::size_t n, gaussreg::RngSeed seed);

// Trapezoid integral of the chi_2/sqrt(2) density 2 r e^{-r^2} over [0, r].
double chi2_density_quadrature(double r, std::size_t steps = 20000);

}  // namespace oracles
