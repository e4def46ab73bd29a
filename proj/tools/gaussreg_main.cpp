// gaussreg command line: generate latents, evaluate Gaussianity, run
// regularized optimizations and reward-alignment experiments, and emit
// CSV/JSON/SVG artifacts. All randomness flows from --seed; sub-streams are
// derived with the SplitMix64 splitter.

#include <CLI11.hpp>

#include <filesystem>
#include <future>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gaussreg/combined_loss.hpp"
#include "gaussreg/errors.hpp"
#include "gaussreg/gaussianity.hpp"
#include "gaussreg/io.hpp"
#include "gaussreg/optimizer.hpp"
#include "gaussreg/prno.hpp"
#include "gaussreg/reward_harness.hpp"
#include "gaussreg/spatial_losses.hpp"
#include "gaussreg/spectral_losses.hpp"

namespace fs = std::filesystem;
using namespace gaussreg;

namespace {

struct CommonOpts {
    std::uint64_t seed = 0;
    std::size_t dim = 4096;
    std::string out = "out";
    bool emit_timing = false;
};

struct RegOpts {
    std::string reg = "ours";
    double lambda_power = 25.0;
    std::string moments = "1,2";
    std::size_t batch_size = 16;
    double target_mean = 0.875;
    bool exclude_dc_nyquist = false;
    bool fixed_order = false;  // disable the per-eval permutation
    std::size_t prno_k = 4;
    double prno_w1 = 1.0;
    double prno_w2 = 1.0;
};

struct OptOpts {
    std::size_t iters = 500;
    double lr = 0.1;
    double momentum = 0.9;
    double clip_norm = 0.01;
    double reg_coeff = 2.0;
    std::size_t eval_every = 100;
};

std::set<unsigned> parse_moments(const std::string& s) {
    std::set<unsigned> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v = std::stoi(tok);
        if (v < 1) throw ConfigError("--moments entries must be >= 1");
        out.insert(static_cast<unsigned>(v));
    }
    if (out.empty()) throw ConfigError("--moments must name at least one order");
    return out;
}

RegConfig make_reg_config(const RegOpts& r) {
    RegConfig cfg;
    cfg.moment_orders = parse_moments(r.moments);
    cfg.lambda_power = r.lambda_power;
    cfg.spectral.batch_size = r.batch_size;
    cfg.spectral.target_mean = r.target_mean;
    cfg.spectral.include_dc_nyquist = !r.exclude_dc_nyquist;
    cfg.permute_each_eval = !r.fixed_order;
    return cfg;
}

OptimizerConfig make_opt_config(const OptOpts& o) {
    OptimizerConfig cfg;
    cfg.learning_rate = o.lr;
    cfg.momentum = o.momentum;
    cfg.clip_norm = o.clip_norm;
    cfg.iterations = o.iters;
    cfg.reg_coefficient = o.reg_coeff;
    cfg.eval_every = o.eval_every;
    return cfg;
}

Latent make_init(const std::string& init, std::size_t dim, std::size_t period, double amplitude,
                 RngSeed seed) {
    if (init == "gaussian") return sample_standard_gaussian(dim, seed);
    if (init == "checkerboard") return make_checkerboard(dim, period, amplitude);
    if (init == "zero") return make_zero(dim);
    return io::read_latent_blob(init);
}

Objective make_loss_objective(const std::string& reg, const RegConfig& rc, const BlockView& view,
                              double w1, double w2) {
    if (reg == "ours") {
        return loss_objective(
            [rc](const Latent& z, RngSeed s) { return gaussian_reg_loss(z, rc, s); });
    }
    if (reg == "kl") return loss_objective([](const Latent& z, RngSeed) { return kl_loss(z); });
    if (reg == "kurtosis") {
        return loss_objective([](const Latent& z, RngSeed) { return kurtosis_loss(z); });
    }
    if (reg == "norm") {
        return loss_objective([](const Latent& z, RngSeed) { return norm_loss(z); });
    }
    if (reg == "prno") {
        return loss_objective([view, w1, w2](const Latent& z, RngSeed) {
            return prno_loss(z, view, w1, w2);
        });
    }
    throw ConfigError("optimize: --reg must be one of kl|kurtosis|norm|prno|ours, got " + reg);
}

void write_eval_artifacts(const Latent& z, std::size_t prno_k, const fs::path& dir) {
    BlockView view;
    view.subvector_dim = prno_k;
    view.block_count = view.blocks_for(z.dim());
    GaussianityReport rep = evaluate(z, view);
    io::write_report_json(dir / "report.json", rep);

    io::write_cdf_curve_csv(dir / "cdf_spatial.csv", z.values(), &standard_normal_cdf);
    io::plot_cdf(dir / "cdf_spatial.csv", io::TargetCdf::normal, dir / "cdf_spatial.svg");

    Spectrum sp = power_spectrum(z);
    io::write_spectrum_csv(dir / "spectrum.csv", sp);
    std::vector<double> mags;
    for (std::size_t k = 0; k < sp.magnitudes.size(); ++k) {
        if (k == 0 || k == z.dim() / 2) continue;
        mags.push_back(sp.magnitudes[k]);
    }
    io::write_cdf_curve_csv(dir / "cdf_spectral.csv", mags, &chi2_over_sqrt2_cdf);
    io::plot_cdf(dir / "cdf_spectral.csv", io::TargetCdf::chi2_over_sqrt2,
                 dir / "cdf_spectral.svg");
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Gaussianity regularization toolbox"};
    app.require_subcommand(1);

    CommonOpts common;
    RegOpts rego;
    OptOpts opto;
    std::string kind = "gaussian";
    std::size_t period = 2;
    double amplitude = 1.0;
    std::string init = "gaussian";
    std::string in_path;
    std::string reward = "lightness";
    std::size_t trials = 20000;
    std::size_t freq = 3;
    std::string curve_csv;
    std::string target_cdf = "normal";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", common.seed, "base RNG seed");
        cmd->add_option("--out", common.out, "output directory");
        cmd->add_flag("--emit-timing", common.emit_timing,
                      "write real wall times into trajectory files (off by default so "
                      "repeated runs are byte-identical)");
    };
    auto add_reg = [&](CLI::App* cmd) {
        cmd->add_option("--reg", rego.reg, "none|kl|kurtosis|norm|prno|ours");
        cmd->add_option("--lambda-power", rego.lambda_power, "spectral weight in Eq-7 loss");
        cmd->add_option("--moments", rego.moments, "comma list of moment orders");
        cmd->add_option("--batch-size", rego.batch_size, "spectral batch size |B|");
        cmd->add_option("--target-mean", rego.target_mean, "spectral batch target mean");
        cmd->add_flag("--exclude-dc-nyquist", rego.exclude_dc_nyquist,
                      "drop k=0 and k=D/2 from spectral batches");
        cmd->add_flag("--fixed-order", rego.fixed_order,
                      "evaluate the spectral loss on the unpermuted latent");
        cmd->add_option("--prno-k", rego.prno_k, "PRNO block dimension");
        cmd->add_option("--prno-w1", rego.prno_w1, "PRNO mean-term weight");
        cmd->add_option("--prno-w2", rego.prno_w2, "PRNO covariance-term weight");
    };
    auto add_opt = [&](CLI::App* cmd) {
        cmd->add_option("--iters", opto.iters, "optimization iterations");
        cmd->add_option("--lr", opto.lr, "learning rate");
        cmd->add_option("--momentum", opto.momentum, "Nesterov momentum coefficient");
        cmd->add_option("--clip-norm", opto.clip_norm, "gradient L2 clip");
        cmd->add_option("--reg-coeff", opto.reg_coeff, "regularization coefficient");
        cmd->add_option("--eval-every", opto.eval_every, "report interval");
    };

    auto* gen = app.add_subcommand("gen", "generate a latent blob");
    gen->add_option("--kind", kind, "gaussian|checkerboard|zero");
    gen->add_option("--dim", common.dim, "latent dimension");
    gen->add_option("--period", period, "checkerboard period");
    gen->add_option("--amplitude", amplitude, "checkerboard amplitude");
    add_common(gen);

    auto* eval_cmd = app.add_subcommand("eval", "Gaussianity report + CDF curves for a latent");
    eval_cmd->add_option("--in", in_path, "latent blob path")->required();
    eval_cmd->add_option("--prno-k", rego.prno_k, "block dimension for M1/M2");
    add_common(eval_cmd);

    auto* opt_cmd = app.add_subcommand("optimize", "minimize a regularization loss");
    opt_cmd->add_option("--init", init, "gaussian|checkerboard|zero|<blob path>");
    opt_cmd->add_option("--dim", common.dim, "latent dimension for generated inits");
    opt_cmd->add_option("--period", period, "checkerboard period");
    opt_cmd->add_option("--amplitude", amplitude, "checkerboard amplitude");
    add_reg(opt_cmd);
    add_opt(opt_cmd);
    add_common(opt_cmd);

    auto* cmp = app.add_subcommand("compare", "reward alignment across all regularizers");
    cmp->add_option("--reward", reward, "lightness|darkness");
    cmp->add_option("--init", init, "gaussian|checkerboard|zero|<blob path>");
    cmp->add_option("--dim", common.dim, "latent dimension");
    cmp->add_option("--period", period, "checkerboard period");
    cmp->add_option("--amplitude", amplitude, "checkerboard amplitude");
    add_reg(cmp);
    add_opt(cmp);
    add_common(cmp);

    auto* lemma = app.add_subcommand("lemma-check", "Monte Carlo check of the DFT magnitude law");
    lemma->add_option("--dim", common.dim, "latent dimension");
    lemma->add_option("--trials", trials, "number of Gaussian draws");
    lemma->add_option("--freq", freq, "frequency index");
    add_common(lemma);

    auto* align = app.add_subcommand("align", "reward alignment with one regularizer");
    align->add_option("--reward", reward, "lightness|darkness");
    align->add_option("--init", init, "gaussian|checkerboard|zero|<blob path>");
    align->add_option("--dim", common.dim, "latent dimension");
    align->add_option("--period", period, "checkerboard period");
    align->add_option("--amplitude", amplitude, "checkerboard amplitude");
    add_reg(align);
    add_opt(align);
    add_common(align);

    auto* plot = app.add_subcommand("plot-cdf", "render a CDF curve CSV as SVG");
    plot->add_option("--curve", curve_csv, "curve csv path")->required();
    plot->add_option("--target", target_cdf, "normal|chi2s|chi1");
    add_common(plot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits 0; any parse failure is a usage error
    }

    const fs::path dir(common.out);
    fs::create_directories(dir);

    if (gen->parsed()) {
        Latent z = make_init(kind, common.dim, period, amplitude, RngSeed{common.seed});
        io::write_latent_blob(dir / "latent.bin", z, common.seed, kind);
        std::cout << "wrote " << (dir / "latent.bin").string() << " (dim " << z.dim() << ")\n";
        return 0;
    }

    if (eval_cmd->parsed()) {
        Latent z = io::read_latent_blob(in_path);
        write_eval_artifacts(z, rego.prno_k, dir);
        std::cout << "wrote " << (dir / "report.json").string() << "\n";
        return 0;
    }

    if (opt_cmd->parsed()) {
        Latent z0 = make_init(init, common.dim, period, amplitude,
                              split_seed(RngSeed{common.seed}, 100));
        RegConfig rc = make_reg_config(rego);
        BlockView view;
        view.subvector_dim = rego.prno_k;
        view.block_count = view.blocks_for(z0.dim());
        Objective obj = make_loss_objective(rego.reg, rc, view, rego.prno_w1, rego.prno_w2);
        Trajectory traj = optimize(obj, z0, make_opt_config(opto), RngSeed{common.seed});
        io::write_trajectory_csv(dir / "trajectory.csv", traj, common.emit_timing);
        io::write_trajectory_json(dir / "trajectory.json", traj, common.emit_timing);
        if (!traj.aborted) {
            io::write_latent_blob(dir / "final.bin", Latent(traj.final_position), common.seed,
                                  "optimized");
        }
        if (traj.aborted) {
            std::cerr << "aborted: " << traj.abort_message << "\n";
            return 4;
        }
        std::cout << "wrote " << (dir / "trajectory.csv").string() << "\n";
        return 0;
    }

    if (lemma->parsed()) {
        double ks = monte_carlo_lemma_check(common.dim, trials, freq, RngSeed{common.seed});
        nlohmann::ordered_json j;
        j["dim"] = common.dim;
        j["trials"] = trials;
        j["freq_index"] = freq;
        j["target"] = (freq == 0 || freq == common.dim / 2) ? "chi1" : "chi2_over_sqrt2";
        j["ks"] = ks;
        std::ofstream f(dir / "ks.json");
        f << j.dump(2) << "\n";
        std::cout << "ks = " << io::format_double(ks) << "\n";
        return 0;
    }

    auto run_alignment = [&](RegularizerKind rk, RngSeed seed, const Latent& z0,
                             const fs::path& subdir, bool snapshots) {
        AlignmentConfig ac;
        ac.reward = parse_reward(reward);
        ac.regularizer = rk;
        ac.optimizer = make_opt_config(opto);
        ac.reg = make_reg_config(rego);
        ac.prno_view.subvector_dim = rego.prno_k;
        ac.prno_view.block_count = ac.prno_view.blocks_for(z0.dim());
        ac.prno_w1 = rego.prno_w1;
        ac.prno_w2 = rego.prno_w2;
        fs::create_directories(subdir);
        const std::size_t side =
            static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(z0.dim()))));
        Trajectory traj = align_reward(ac, z0, seed);
        io::write_trajectory_csv(subdir / "trajectory.csv", traj, common.emit_timing);
        io::write_trajectory_json(subdir / "trajectory.json", traj, common.emit_timing);
        if (snapshots && !traj.aborted) {
            io::write_image_pgm16(subdir / "image_initial.pgm", toy_generator(z0, side));
            io::write_image_pgm16(subdir / "image_final.pgm",
                                  toy_generator(Latent(traj.final_position), side));
        }
        return traj;
    };

    if (align->parsed()) {
        Latent z0 = make_init(init, common.dim, period, amplitude,
                              split_seed(RngSeed{common.seed}, 100));
        Trajectory traj = run_alignment(parse_regularizer(rego.reg), RngSeed{common.seed}, z0,
                                        dir, true);
        if (traj.aborted) {
            std::cerr << "aborted: " << traj.abort_message << "\n";
            return 4;
        }
        std::cout << "wrote " << (dir / "trajectory.csv").string() << "\n";
        return 0;
    }

    if (cmp->parsed()) {
        Latent z0 = make_init(init, common.dim, period, amplitude,
                              split_seed(RngSeed{common.seed}, 100));
        const RegularizerKind kinds[] = {RegularizerKind::none,     RegularizerKind::kl,
                                         RegularizerKind::kurtosis, RegularizerKind::norm,
                                         RegularizerKind::prno,     RegularizerKind::ours};
        std::vector<std::future<Trajectory>> futs;
        for (std::size_t i = 0; i < 6; ++i) {
            RegularizerKind rk = kinds[i];
            RngSeed s = split_seed(RngSeed{common.seed}, 200 + i);
            futs.push_back(std::async(std::launch::async, [&, rk, s, i] {
                return run_alignment(rk, s, z0, dir / to_string(kinds[i]), false);
            }));
        }
        std::vector<io::CompareRow> rows;
        for (std::size_t i = 0; i < 6; ++i) {
            Trajectory traj = futs[i].get();
            for (const auto& rec : traj.records) {
                if (!rec.report) continue;
                io::CompareRow row;
                row.regularizer = to_string(kinds[i]);
                row.iteration = rec.iteration;
                row.reward = rec.reward_value;
                row.reg = rec.reg_value;
                row.objective = rec.objective_value;
                row.spatial_ks = rec.report->spatial_ks;
                row.spectral_ks = rec.report->spectral_ks;
                row.m1 = rec.report->m1;
                row.m2 = rec.report->m2;
                row.p1 = rec.report->p1;
                row.p2 = rec.report->p2;
                rows.push_back(std::move(row));
            }
        }
        io::write_compare_csv(dir / "matrix.csv", rows);
        std::cout << "wrote " << (dir / "matrix.csv").string() << "\n";
        return 0;
    }

    if (plot->parsed()) {
        fs::path svg = dir / (fs::path(curve_csv).stem().string() + ".svg");
        io::plot_cdf(curve_csv, io::parse_target_cdf(target_cdf), svg);
        std::cout << "wrote " << svg.string() << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const SingularityError& e) {
        std::cerr << "numerical abort: " << e.what() << "\n";
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const DimensionError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const InsufficientDataError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
