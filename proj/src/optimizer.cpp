#include "gaussreg/optimizer.hpp"

#include <chrono>
#include <cmath>

#include "gaussreg/errors.hpp"
#include "gaussreg/loss.hpp"

namespace gaussreg {

void OptimizerConfig::validate() const {
    if (learning_rate <= 0.0) throw ConfigError("optimizer: learning_rate must be > 0");
    if (momentum < 0.0 || momentum >= 1.0) throw ConfigError("optimizer: momentum must be in [0,1)");
    if (clip_norm <= 0.0) throw ConfigError("optimizer: clip_norm must be > 0");
    if (eval_every == 0) throw ConfigError("optimizer: eval_every must be >= 1");
}

namespace {

double l2_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

BlockView report_view(std::size_t dim) {
    BlockView v;
    v.subvector_dim = (dim % 4 == 0) ? 4 : 2;
    v.block_count = dim / v.subvector_dim;
    return v;
}

}  // namespace

std::vector<double> clip_gradient(std::vector<double> grad, double clip_norm) {
    const double n = l2_norm(grad);
    if (n > clip_norm && n > 0.0) {
        const double s = clip_norm / n;
        for (double& g : grad) g *= s;
    }
    return grad;
}

std::vector<double> scale_reg_gradient(std::vector<double> reg_grad,
                                       const std::vector<double>& reward_grad) {
    const double rn = l2_norm(reg_grad);
    if (rn == 0.0) return reg_grad;
    const double wn = l2_norm(reward_grad);
    if (wn == 0.0) return reg_grad;
    const double s = wn / rn;
    for (double& g : reg_grad) g *= s;
    return reg_grad;
}

OptimizerState nesterov_step(const OptimizerState& state,
                             const std::vector<double>& grad_at_lookahead,
                             const OptimizerConfig& config) {
    if (grad_at_lookahead.size() != state.position.size()) {
        throw DimensionError("nesterov_step: gradient length != position dim");
    }
    OptimizerState next;
    next.position.resize(state.position.size());
    next.velocity.resize(state.position.size());
    for (std::size_t i = 0; i < state.position.size(); ++i) {
        next.velocity[i] =
            config.momentum * state.velocity[i] - config.learning_rate * grad_at_lookahead[i];
        next.position[i] = state.position[i] + next.velocity[i];
    }
    next.iteration = state.iteration + 1;
    return next;
}

Trajectory optimize(const Objective& objective, const Latent& init, const OptimizerConfig& config,
                    RngSeed seed, const ReportHook& hook) {
    config.validate();
    using Clock = std::chrono::steady_clock;
    const auto t0 = Clock::now();
    const BlockView view = report_view(init.dim());

    Trajectory traj;
    OptimizerState state;
    state.position = init.values();
    state.velocity.assign(init.dim(), 0.0);

    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    };

    auto avg10 = [&](const std::vector<double>& pos, RngSeed at) {
        double acc = 0.0;
        for (std::uint64_t j = 0; j < 10; ++j) {
            acc += objective(pos, split_seed(at, 1000 + j)).value;
        }
        return acc / 10.0;
    };

    auto record = [&](std::size_t iter, const ObjectiveEval& eval, bool with_report, RngSeed at) {
        TrajectoryRecord r;
        r.iteration = iter;
        r.objective_value = eval.value;
        r.reward_value = eval.reward;
        r.reg_value = eval.reg;
        if (with_report) {
            r.report = evaluate(Latent(state.position), view);
            r.objective_avg10 = avg10(state.position, at);
        }
        r.wall_time_ms = elapsed_ms();
        traj.records.push_back(std::move(r));
    };

    {
        const RngSeed s0 = split_seed(seed, 0);
        ObjectiveEval e0 = objective(state.position, s0);
        record(0, e0, true, s0);
        if (hook) hook(0, state.position);
    }

    for (std::size_t t = 1; t <= config.iterations; ++t) {
        std::vector<double> lookahead(state.position.size());
        for (std::size_t i = 0; i < lookahead.size(); ++i) {
            lookahead[i] = state.position[i] + config.momentum * state.velocity[i];
        }
        const RngSeed st = split_seed(seed, t);
        ObjectiveEval eval = objective(lookahead, st);
        if (!std::isfinite(eval.value) || !all_finite(eval.gradient)) {
            traj.aborted = true;
            traj.abort_iteration = t;
            traj.abort_message = "non-finite objective at iteration " + std::to_string(t);
            TrajectoryRecord r;
            r.iteration = t;
            r.objective_value = eval.value;
            r.wall_time_ms = elapsed_ms();
            traj.records.push_back(std::move(r));
            break;
        }
        std::vector<double> g = clip_gradient(std::move(eval.gradient), config.clip_norm);
        OptimizerState next;
        next.position.resize(state.position.size());
        next.velocity.resize(state.position.size());
        for (std::size_t i = 0; i < state.position.size(); ++i) {
            next.velocity[i] = config.momentum * state.velocity[i] - config.learning_rate * g[i];
            next.position[i] = state.position[i] + next.velocity[i];
        }
        next.iteration = t;
        state = std::move(next);
        eval.gradient.clear();
        const bool report = (t % config.eval_every == 0) || t == config.iterations;
        record(t, eval, report, st);
        if (report && hook) hook(t, state.position);
    }

    traj.final_position = state.position;
    return traj;
}

Objective loss_objective(std::function<LossEval(const Latent&, RngSeed)> loss) {
    return [loss = std::move(loss)](const std::vector<double>& pos, RngSeed s) {
        LossEval e = loss(Latent(pos), s);
        ObjectiveEval out;
        out.value = e.value;
        out.gradient = std::move(e.gradient);
        out.reg = out.value;
        return out;
    };
}

}  // namespace gaussreg
