#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gaussreg/combined_loss.hpp"
#include "gaussreg/optimizer.hpp"
#include "gaussreg/prno.hpp"

namespace gaussreg {

// S x S grid of real pixels, row-major; S^2 = D of the source latent.
struct ToyImage {
    std::vector<double> pixels;
    std::size_t side = 0;

    double mean() const;
};

enum class RewardKind { lightness, darkness };
enum class RegularizerKind { none, kl, kurtosis, norm, prno, ours };

RewardKind parse_reward(const std::string& name);
RegularizerKind parse_regularizer(const std::string& name);
std::string to_string(RewardKind r);
std::string to_string(RegularizerKind r);

struct AlignmentConfig {
    RewardKind reward = RewardKind::lightness;
    RegularizerKind regularizer = RegularizerKind::ours;
    OptimizerConfig optimizer;
    RegConfig reg;        // used when regularizer == ours
    BlockView prno_view;  // used when regularizer == prno
    double prno_w1 = 1.0;
    double prno_w2 = 1.0;
};

// Reshape row-major and apply one pass of a fixed circular 3x3 smoothing
// kernel (center 0.5, the 4-neighborhood 0.125 each; weights sum to 1).
// Linear, self-adjoint.
ToyImage toy_generator(const Latent& latent, std::size_t side);

// Adjoint of toy_generator: pixel-space gradient back to latent space.
std::vector<double> toy_generator_adjoint(const std::vector<double>& pixel_grad,
                                          std::size_t side);

// value = mean of pixels; gradient 1/S^2 per pixel.
std::pair<double, std::vector<double>> lightness_reward(const ToyImage& image);
// Negation of lightness_reward.
std::pair<double, std::vector<double>> darkness_reward(const ToyImage& image);

// Reward alignment loop per the optimizer protocol: at each lookahead point,
// reward gradient through the generator, regularizer gradient scaled to the
// reward gradient's magnitude, total descent gradient
// -reward_grad + reg_coefficient * scaled_reg_grad, clip, step.
Trajectory align_reward(const AlignmentConfig& config, const Latent& init, RngSeed seed);

// Max over recorded reports of (spatial_ks + spectral_ks) minus the same sum
// at iteration 0. Needs at least two reports.
double hacking_drift(const Trajectory& traj);

}  // namespace gaussreg
