#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace oracles {

std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> x,
    double h) {
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double step = h * std::max(1.0, std::abs(x[i]));
        const double keep = x[i];
        x[i] = keep + step;
        const double fp = f(x);
        x[i] = keep - step;
        const double fm = f(x);
        x[i] = keep;
        grad[i] = (fp - fm) / (2.0 * step);
    }
    return grad;
}

double relative_l2_error(const std::vector<double>& a, const std::vector<double>& b,
                         double floor) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (a[i] - b[i]) * (a[i] - b[i]);
        den += b[i] * b[i];
    }
    return std::sqrt(num) / std::max(std::sqrt(den), floor);
}

std::vector<std::complex<double>> dft_direct(const std::vector<double>& x) {
    const std::size_t d = x.size();
    std::vector<std::complex<double>> out(d);
    for (std::size_t k = 0; k < d; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t n = 0; n < d; ++n) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) *
                               static_cast<double>(n) / static_cast<double>(d);
            acc += x[n] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

std::vector<double> autocorrelation_direct(const std::vector<double>& x) {
    const std::size_t d = x.size();
    std::vector<double> out(d, 0.0);
    for (std::size_t r = 0; r < d; ++r) {
        double acc = 0.0;
        for (std::size_t l = 0; l < d; ++l) acc += x[l] * x[(l + r) % d];
        out[r] = acc / static_cast<double>(d);
    }
    return out;
}

double chi2_over_sqrt2_mc_mean(std::size_t n, gaussreg::RngSeed seed) {
    gaussreg::Rng rng(seed);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = rng.next_gaussian();
        const double b = rng.next_gaussian();
        acc += std::sqrt((a * a + b * b) / 2.0);
    }
    return acc / static_cast<double>(n);
}

double chi2_density_quadrature(double r, std::size_t steps) {
    if (r <= 0.0) return 0.0;
    auto density = [](double t) { return 2.0 * t * std::exp(-t * t); };
    const double dx = r / static_cast<double>(steps);
    double acc = 0.5 * (density(0.0) + density(r));
    for (std::size_t i = 1; i < steps; ++i) acc += density(dx * static_cast<double>(i));
    return acc * dx;
}

}  // namespace oracles
