#include "gaussreg/prno.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

#include "gaussreg/errors.hpp"
#include "gaussreg/fft.hpp"

namespace gaussreg {

namespace {

using RowMajorMap =
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

RowMajorMap blocks_of(const Latent& latent, const BlockView& view, std::size_t& m_out) {
    const std::size_t k = view.subvector_dim;
    if (k == 0) throw ConfigError("block view: subvector_dim must be >= 1");
    const std::size_t m = view.block_count != 0 ? view.block_count : latent.dim() / k;
    if (m * k != latent.dim()) {
        throw ConfigError("block view: m*k = " + std::to_string(m * k) +
                          " does not match latent dim " + std::to_string(latent.dim()));
    }
    m_out = m;
    return RowMajorMap(latent.values().data(), static_cast<Eigen::Index>(m),
                       static_cast<Eigen::Index>(k));
}

}  // namespace

std::size_t BlockView::blocks_for(std::size_t dim) const {
    if (subvector_dim == 0 || dim % subvector_dim != 0) {
        throw ConfigError("block view: subvector_dim must divide dim");
    }
    return dim / subvector_dim;
}

double mean_deviation_m1(const Latent& latent, const BlockView& view) {
    std::size_t m = 0;
    auto xb = blocks_of(latent, view, m);
    Eigen::VectorXd mu = xb.colwise().mean();
    return mu.norm();
}

double covariance_deviation_m2(const Latent& latent, const BlockView& view) {
    std::size_t m = 0;
    auto xb = blocks_of(latent, view, m);
    Eigen::MatrixXd dev = (xb.transpose() * xb) / static_cast<double>(m);
    dev.diagonal().array() -= 1.0;
    // dev is symmetric, so the operator norm is the largest |eigenvalue|.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dev, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double prob_bound_p1(double m1, const BlockView& view) {
    const double m = static_cast<double>(view.block_count);
    const double k = static_cast<double>(view.subvector_dim);
    if (m <= 0.0) throw ConfigError("prob_bound_p1: block_count must be set");
    return std::min(2.0 * std::exp(-m * m1 * m1 / (2.0 * k)), 1.0);
}

double prob_bound_p2(double m2, const BlockView& view) {
    const double m = static_cast<double>(view.block_count);
    const double k = static_cast<double>(view.subvector_dim);
    if (m <= 0.0) throw ConfigError("prob_bound_p2: block_count must be set");
    const double inner = std::max(std::sqrt(1.0 + m2) - 1.0 - std::sqrt(k / m), 0.0);
    return std::min(2.0 * std::exp(-0.5 * m * inner * inner), 1.0);
}

std::vector<double> circular_autocorrelation(const Latent& latent) {
    const std::size_t d = latent.dim();
    std::vector<std::complex<double>> xhat;
    fft::forward(latent.span(), xhat);
    std::vector<std::complex<double>> power(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double m = std::abs(xhat[k]);
        power[k] = m * m;
    }
    std::vector<std::complex<double>> acf;
    fft::inverse(power, acf);  // sum_k |x_hat_k|^2 e^{+2 pi i k r / D} = D * C(r)
    std::vector<double> out(d);
    const double dd = static_cast<double>(d);
    for (std::size_t r = 0; r < d; ++r) out[r] = acf[r].real() / (dd * dd);
    return out;
}

LossEval prno_loss(const Latent& latent, const BlockView& view, double w1, double w2) {
    std::size_t m = 0;
    auto xb = blocks_of(latent, view, m);
    const double md = static_cast<double>(m);

    Eigen::VectorXd mu = xb.colwise().mean();
    Eigen::MatrixXd dev = (xb.transpose() * xb) / md;
    dev.diagonal().array() -= 1.0;

    LossEval out;
    out.value = w1 * mu.squaredNorm() + w2 * dev.squaredNorm();

    // grad over block i: w1 * (2/m) mu + w2 * (4/m) (C - I) x_i
    Eigen::MatrixXd grad = ((4.0 * w2 / md) * (xb * dev)).eval();
    grad.rowwise() += (2.0 * w1 / md) * mu.transpose();
    out.gradient.resize(latent.dim());
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        out.gradient.data(), grad.rows(), grad.cols()) = grad;
    return out;
}

}  // namespace gaussreg
