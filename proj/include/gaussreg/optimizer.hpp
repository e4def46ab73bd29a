#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gaussreg/gaussianity.hpp"
#include "gaussreg/latent.hpp"

namespace gaussreg {

struct OptimizerConfig {
    double learning_rate = 0.1;
    double momentum = 0.9;
    double clip_norm = 0.01;
    std::size_t iterations = 500;
    double reg_coefficient = 2.0;
    std::size_t eval_every = 100;

    void validate() const;
};

struct OptimizerState {
    std::vector<double> position;
    std::vector<double> velocity;
    std::size_t iteration = 0;
};

// What the optimizer asks of an objective at a lookahead point. reward/reg
// stay NaN for plain losses; the alignment harness fills them.
struct ObjectiveEval {
    double value = 0.0;
    std::vector<double> gradient;
    double reward = std::numeric_limits<double>::quiet_NaN();
    double reg = std::numeric_limits<double>::quiet_NaN();
};

using Objective =
    std::function<ObjectiveEval(const std::vector<double>& position, RngSeed eval_seed)>;

struct TrajectoryRecord {
    std::size_t iteration = 0;
    double objective_value = 0.0;
    // 10-seed average of the objective at the current position; only filled on
    // report iterations (stochastic losses plot smoother this way).
    double objective_avg10 = std::numeric_limits<double>::quiet_NaN();
    double reward_value = std::numeric_limits<double>::quiet_NaN();
    double reg_value = std::numeric_limits<double>::quiet_NaN();
    std::optional<GaussianityReport> report;
    double wall_time_ms = 0.0;
};

struct Trajectory {
    std::vector<TrajectoryRecord> records;
    std::vector<double> final_position;
    bool aborted = false;
    std::size_t abort_iteration = 0;
    std::string abort_message;
};

// If ||grad|| > clip_norm, rescale to norm clip_norm; direction preserved.
std::vector<double> clip_gradient(std::vector<double> grad, double clip_norm);

// reg_grad * (||reward_grad|| / ||reg_grad||). Zero reg_grad stays zero; zero
// reward_grad leaves reg_grad unscaled (scaling to zero would freeze the
// regularizer exactly when the reward plateaus).
std::vector<double> scale_reg_gradient(std::vector<double> reg_grad,
                                       const std::vector<double>& reward_grad);

// velocity' = momentum * velocity - lr * grad_at_lookahead;
// position' = position + velocity'. The gradient must have been evaluated at
// position + momentum * velocity.
OptimizerState nesterov_step(const OptimizerState& state,
                             const std::vector<double>& grad_at_lookahead,
                             const OptimizerConfig& config);

// Called at every report iteration with the current position (snapshots,
// progress printing).
using ReportHook = std::function<void(std::size_t iteration, const std::vector<double>& position)>;

// Minimization loop: lookahead -> objective -> clip -> step. Records scalars
// every iteration and a full GaussianityReport every eval_every iterations
// (and at iteration 0 and the last iteration). Aborts with a diagnostic
// record if the objective returns a non-finite value or gradient.
// Deterministic per seed: iteration t evaluates with split_seed(seed, t).
Trajectory optimize(const Objective& objective, const Latent& init, const OptimizerConfig& config,
                    RngSeed seed, const ReportHook& hook = {});

// Wrap a pure loss (value+gradient as a function of the latent and seed) as an
// Objective whose reg field mirrors the value.
Objective loss_objective(std::function<LossEval(const Latent&, RngSeed)> loss);

}  // namespace gaussreg
