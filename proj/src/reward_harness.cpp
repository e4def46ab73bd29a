#include "gaussreg/reward_harness.hpp"

#include <cmath>

#include "gaussreg/errors.hpp"
#include "gaussreg/spatial_losses.hpp"

namespace gaussreg {

double ToyImage::mean() const {
    double s = 0.0;
    for (double p : pixels) s += p;
    return pixels.empty() ? 0.0 : s / static_cast<double>(pixels.size());
}

RewardKind parse_reward(const std::string& name) {
    if (name == "lightness") return RewardKind::lightness;
    if (name == "darkness") return RewardKind::darkness;
    throw ConfigError("unknown reward: " + name);
}

RegularizerKind parse_regularizer(const std::string& name) {
    if (name == "none") return RegularizerKind::none;
    if (name == "kl") return RegularizerKind::kl;
    if (name == "kurtosis") return RegularizerKind::kurtosis;
    if (name == "norm") return RegularizerKind::norm;
    if (name == "prno") return RegularizerKind::prno;
    if (name == "ours") return RegularizerKind::ours;
    throw ConfigError("unknown regularizer: " + name);
}

std::string to_string(RewardKind r) {
    return r == RewardKind::lightness ? "lightness" : "darkness";
}

std::string to_string(RegularizerKind r) {
    switch (r) {
        case RegularizerKind::none: return "none";
        case RegularizerKind::kl: return "kl";
        case RegularizerKind::kurtosis: return "kurtosis";
        case RegularizerKind::norm: return "norm";
        case RegularizerKind::prno: return "prno";
        case RegularizerKind::ours: return "ours";
    }
    return "?";
}

namespace {

// One circular smoothing pass; the kernel is symmetric so this is its own
// adjoint.
std::vector<double> smooth(const std::vector<double>& in, std::size_t s) {
    std::vector<double> out(in.size());
    for (std::size_t r = 0; r < s; ++r) {
        const std::size_t up = (r + s - 1) % s, dn = (r + 1) % s;
        for (std::size_t c = 0; c < s; ++c) {
            const std::size_t lf = (c + s - 1) % s, rt = (c + 1) % s;
            out[r * s + c] = 0.5 * in[r * s + c] +
                             0.125 * (in[up * s + c] + in[dn * s + c] + in[r * s + lf] +
                                      in[r * s + rt]);
        }
    }
    return out;
}

std::size_t check_side(std::size_t dim, std::size_t side) {
    if (side == 0 || side * side != dim) {
        throw DimensionError("toy_generator: dim " + std::to_string(dim) +
                             " is not side^2 with side " + std::to_string(side));
    }
    return side;
}

}  // namespace

ToyImage toy_generator(const Latent& latent, std::size_t side) {
    check_side(latent.dim(), side);
    ToyImage img;
    img.side = side;
    img.pixels = smooth(latent.values(), side);
    return img;
}

std::vector<double> toy_generator_adjoint(const std::vector<double>& pixel_grad,
                                          std::size_t side) {
    check_side(pixel_grad.size(), side);
    return smooth(pixel_grad, side);
}

std::pair<double, std::vector<double>> lightness_reward(const ToyImage& image) {
    const double n = static_cast<double>(image.pixels.size());
    return {image.mean(), std::vector<double>(image.pixels.size(), 1.0 / n)};
}

std::pair<double, std::vector<double>> darkness_reward(const ToyImage& image) {
    const double n = static_cast<double>(image.pixels.size());
    return {-image.mean(), std::vector<double>(image.pixels.size(), -1.0 / n)};
}

Trajectory align_reward(const AlignmentConfig& config, const Latent& init, RngSeed seed) {
    const std::size_t side = static_cast<std::size_t>(std::llround(std::sqrt(
        static_cast<double>(init.dim()))));
    check_side(init.dim(), side);
    const double coeff = config.optimizer.reg_coefficient;

    Objective objective = [&config, side, coeff](const std::vector<double>& pos, RngSeed s) {
        Latent z(pos);
        ToyImage img = toy_generator(z, side);
        auto [reward, pix_grad] = config.reward == RewardKind::lightness
                                      ? lightness_reward(img)
                                      : darkness_reward(img);
        std::vector<double> reward_grad = toy_generator_adjoint(pix_grad, side);

        double reg_value = 0.0;
        std::vector<double> reg_grad(pos.size(), 0.0);
        switch (config.regularizer) {
            case RegularizerKind::none:
                break;
            case RegularizerKind::kl: {
                LossEval e = kl_loss(z);
                reg_value = e.value;
                reg_grad = std::move(e.gradient);
                break;
            }
            case RegularizerKind::kurtosis: {
                LossEval e = kurtosis_loss(z);
                reg_value = e.value;
                reg_grad = std::move(e.gradient);
                break;
            }
            case RegularizerKind::norm: {
                LossEval e = norm_loss(z);
                reg_value = e.value;
                reg_grad = std::move(e.gradient);
                break;
            }
            case RegularizerKind::prno: {
                LossEval e = prno_loss(z, config.prno_view, config.prno_w1, config.prno_w2);
                reg_value = e.value;
                reg_grad = std::move(e.gradient);
                break;
            }
            case RegularizerKind::ours: {
                LossEval e = gaussian_reg_loss(z, config.reg, s);
                reg_value = e.value;
                reg_grad = std::move(e.gradient);
                break;
            }
        }

        ObjectiveEval out;
        out.reward = reward;
        out.reg = reg_value;
        out.value = -reward + coeff * reg_value;
        if (config.regularizer == RegularizerKind::none) {
            out.gradient.resize(pos.size());
            for (std::size_t i = 0; i < pos.size(); ++i) out.gradient[i] = -reward_grad[i];
        } else {
            std::vector<double> scaled = scale_reg_gradient(std::move(reg_grad), reward_grad);
            out.gradient.resize(pos.size());
            for (std::size_t i = 0; i < pos.size(); ++i) {
                out.gradient[i] = -reward_grad[i] + coeff * scaled[i];
            }
        }
        return out;
    };

    return optimize(objective, init, config.optimizer, seed);
}

double hacking_drift(const Trajectory& traj) {
    std::vector<double> sums;
    for (const auto& r : traj.records) {
        if (r.report) sums.push_back(r.report->spatial_ks + r.report->spectral_ks);
    }
    if (sums.size() < 2) {
        throw InsufficientDataError("hacking_drift: needs at least two recorded reports");
    }
    double peak = sums[0];
    for (double s : sums) peak = std::max(peak, s);
    return peak - sums[0];
}

}  // namespace gaussreg
