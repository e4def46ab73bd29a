#include "gaussreg/latent.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "gaussreg/errors.hpp"

namespace gaussreg {

double Rng::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = next_unit_open0();
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Latent::Latent(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 4 || values_.size() % 2 != 0) {
        throw DimensionError("latent dim must be even and >= 4, got " +
                             std::to_string(values_.size()));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw DimensionError("latent contains a non-finite value");
    }
}

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (std::size_t idx : mapping_) {
        if (idx >= mapping_.size() || seen[idx]) {
            throw ConfigError("permutation mapping is not a bijection on [0, D)");
        }
        seen[idx] = true;
    }
}

Permutation Permutation::identity(std::size_t dim) {
    std::vector<std::size_t> m(dim);
    for (std::size_t i = 0; i < dim; ++i) m[i] = i;
    return Permutation(std::move(m));
}

Latent sample_standard_gaussian(std::size_t dim, RngSeed seed) {
    if (dim < 4 || dim % 2 != 0) {
        throw DimensionError("sample_standard_gaussian: dim must be even and >= 4, got " +
                             std::to_string(dim));
    }
    Rng rng(seed);
    std::vector<double> v(dim);
    for (double& x : v) x = rng.next_gaussian();
    return Latent(std::move(v));
}

Latent make_checkerboard(std::size_t dim, std::size_t period, double amplitude) {
    if (period == 0 || period % 2 != 0) {
        throw ConfigError("checkerboard period must be positive and even");
    }
    if (dim % period != 0) {
        throw ConfigError("checkerboard period " + std::to_string(period) +
                          " does not divide dim " + std::to_string(dim));
    }
    std::size_t half = period / 2;
    std::vector<double> v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = ((i / half) % 2 == 0) ? amplitude : -amplitude;
    }
    return Latent(std::move(v));
}

Latent make_zero(std::size_t dim) { return Latent(std::vector<double>(dim, 0.0)); }

Permutation random_permutation(std::size_t dim, RngSeed seed) {
    if (dim < 1) throw DimensionError("random_permutation: dim must be >= 1");
    std::vector<std::size_t> m(dim);
    for (std::size_t i = 0; i < dim; ++i) m[i] = i;
    Rng rng(seed);
    for (std::size_t i = dim - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
        std::swap(m[i], m[j]);
    }
    return Permutation(std::move(m));
}

Latent apply_permutation(const Latent& latent, const Permutation& perm) {
    if (perm.dim() != latent.dim()) {
        throw DimensionError("apply_permutation: permutation length " +
                             std::to_string(perm.dim()) + " != latent dim " +
                             std::to_string(latent.dim()));
    }
    std::vector<double> out(latent.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = latent[perm[i]];
    return Latent(std::move(out));
}

std::vector<double> unpermute_gradient(const std::vector<double>& grad_permuted,
                                       const Permutation& perm) {
    if (perm.dim() != grad_permuted.size()) {
        throw DimensionError("unpermute_gradient: length mismatch");
    }
    std::vector<double> out(grad_permuted.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[perm[i]] = grad_permuted[i];
    return out;
}

}  // namespace gaussreg
