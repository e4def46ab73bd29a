#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gaussreg/rng.hpp"

namespace gaussreg {

// A latent vector x = (x_1, ..., x_D). D is even and >= 4 (the spectral
// losses need it) and every entry is finite; both are enforced on
// construction.
class Latent {
public:
    explicit Latent(std::vector<double> values);

    std::size_t dim() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    std::span<const double> span() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
};

// Bijection on {0, ..., D-1}; output[i] = input[mapping[i]].
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> mapping);

    std::size_t dim() const { return mapping_.size(); }
    const std::vector<std::size_t>& mapping() const { return mapping_; }
    std::size_t operator[](std::size_t i) const { return mapping_[i]; }

    static Permutation identity(std::size_t dim);

private:
    std::vector<std::size_t> mapping_;
};

// i.i.d. N(0,1) draw of the given (even, >= 4) dimension. Deterministic per seed.
Latent sample_standard_gaussian(std::size_t dim, RngSeed seed);

// Block-alternating pattern: +amplitude while floor(i / (period/2)) is even,
// -amplitude otherwise. period must be even and divide dim.
Latent make_checkerboard(std::size_t dim, std::size_t period, double amplitude);

Latent make_zero(std::size_t dim);

// Uniform random bijection (Fisher-Yates with unbiased draws), deterministic per seed.
Permutation random_permutation(std::size_t dim, RngSeed seed);

// output[i] = latent[perm[i]].
Latent apply_permutation(const Latent& latent, const Permutation& perm);

// Scatter a gradient taken w.r.t. permuted coordinates back to original ones:
// out[perm[i]] = grad_permuted[i].
std::vector<double> unpermute_gradient(const std::vector<double>& grad_permuted,
                                       const Permutation& perm);

}  // namespace gaussreg
