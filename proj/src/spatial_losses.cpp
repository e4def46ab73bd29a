#include "gaussreg/spatial_losses.hpp"

#include <cmath>
#include <string>

#include "gaussreg/errors.hpp"

namespace gaussreg {

double theoretical_moment(unsigned n) {
    if (n == 0) return 1.0;
    if (n % 2 == 1) return 0.0;
    double m = 1.0;  // (n-1)!! = 1*3*...*(n-1)
    for (unsigned f = 1; f < n; f += 2) m *= static_cast<double>(f);
    return m;
}

namespace detail {

double empirical_moment(std::span<const double> x, unsigned n) {
    double acc = 0.0;
    for (double v : x) acc += std::pow(v, static_cast<double>(n));
    return acc / static_cast<double>(x.size());
}

namespace {
double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }
}  // namespace

LossEval moment_loss_core(std::span<const double> x, unsigned n) {
    if (n < 1) throw ConfigError("moment_loss: order n must be >= 1");
    const double d = static_cast<double>(x.size());
    const double m = empirical_moment(x, n);
    const double inv_n = 1.0 / static_cast<double>(n);
    if (n > 1 && std::abs(m) <= kEpsMom) {
        throw SingularityError("moment_loss: empirical moment of order " + std::to_string(n) +
                               " is degenerate (|m| <= eps), |m|^{1/n} gradient is singular");
    }
    const double target_root = std::pow(theoretical_moment(n), inv_n);
    const double inner = std::pow(std::abs(m), inv_n) - target_root;

    LossEval out;
    out.value = std::abs(inner);
    out.gradient.assign(x.size(), 0.0);
    const double outer_sign = sign_of(inner);
    if (outer_sign != 0.0) {
        // d|m|^{1/n}/dm = (1/n)|m|^{1/n-1} sign(m); dm/dx_i = (n/D) x_i^{n-1}
        const double coef = outer_sign * sign_of(m) * std::pow(std::abs(m), inv_n - 1.0) / d;
        for (std::size_t i = 0; i < x.size(); ++i) {
            out.gradient[i] = coef * std::pow(x[i], static_cast<double>(n - 1));
        }
    }
    return out;
}

LossEval kl_loss_core(std::span<const double> x) {
    const double d = static_cast<double>(x.size());
    double mu = 0.0;
    for (double v : x) mu += v;
    mu /= d;
    double var = 0.0;
    for (double v : x) var += (v - mu) * (v - mu);
    var /= d;
    if (var <= kEpsVar) {
        throw DegenerateVarianceError("kl_loss: empirical variance is degenerate");
    }
    LossEval out;
    out.value = 0.5 * (mu * mu + var - std::log(var) - 1.0);
    out.gradient.resize(x.size());
    const double vcoef = (1.0 - 1.0 / var) / d;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.gradient[i] = mu / d + vcoef * (x[i] - mu);
    }
    return out;
}

LossEval kurtosis_loss_core(std::span<const double> x) {
    const double d = static_cast<double>(x.size());
    double mu = 0.0;
    for (double v : x) mu += v;
    mu /= d;
    double var = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double c = v - mu;
        const double c2 = c * c;
        var += c2;
        m3 += c2 * c;
        m4 += c2 * c2;
    }
    var /= d;
    m3 /= d;
    m4 /= d;
    if (var <= kEpsVar) {
        throw DegenerateVarianceError("kurtosis_loss: empirical variance is degenerate");
    }
    const double kurt = m4 / (var * var);
    LossEval out;
    out.value = (kurt - 3.0) * (kurt - 3.0);
    out.gradient.resize(x.size());
    const double pre = 2.0 * (kurt - 3.0) * 4.0 / d;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double c = x[i] - mu;
        out.gradient[i] = pre * ((c * c * c - m3) / (var * var) - kurt * c / var);
    }
    return out;
}

LossEval norm_loss_core(std::span<const double> x) {
    const double d = static_cast<double>(x.size());
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    if (r2 <= 0.0) {
        throw SingularityError("norm_loss: zero vector (log ||x|| undefined)");
    }
    LossEval out;
    out.value = 0.5 * r2 - 0.5 * (d - 1.0) * std::log(r2);
    out.gradient.resize(x.size());
    const double coef = 1.0 - (d - 1.0) / r2;
    for (std::size_t i = 0; i < x.size(); ++i) out.gradient[i] = x[i] * coef;
    return out;
}

}  // namespace detail

LossEval moment_loss(const Latent& latent, unsigned n) {
    return detail::moment_loss_core(latent.span(), n);
}
LossEval kl_loss(const Latent& latent) { return detail::kl_loss_core(latent.span()); }
LossEval kurtosis_loss(const Latent& latent) { return detail::kurtosis_loss_core(latent.span()); }
LossEval norm_loss(const Latent& latent) { return detail::norm_loss_core(latent.span()); }

}  // namespace gaussreg
