#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gaussreg/gaussianity.hpp"
#include "gaussreg/latent.hpp"
#include "gaussreg/optimizer.hpp"
#include "gaussreg/reward_harness.hpp"

namespace gaussreg::io {

// Binary latent blob: 8-byte little-endian uint64 header holding D, then D
// little-endian float64 values. A JSON sidecar {dim, seed, kind} is written
// next to it as <path>.json.
void write_latent_blob(const std::filesystem::path& path, const Latent& latent,
                       std::uint64_t seed, const std::string& kind);
Latent read_latent_blob(const std::filesystem::path& path);

// CSV with columns k,magnitude.
void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& spectrum);

// CDF curve CSV with columns t,F_emp,F_target over the sorted sample.
void write_cdf_curve_csv(const std::filesystem::path& path, std::vector<double> sample,
                         double (*target_cdf)(double));

enum class TargetCdf { normal, chi2_over_sqrt2, chi1 };
TargetCdf parse_target_cdf(const std::string& name);

// Static SVG overlaying the empirical and target CDF curves from a curve CSV,
// with the KS statistic (max |F_emp - F_target| over the rows) printed.
void plot_cdf(const std::filesystem::path& curve_csv, TargetCdf target,
              const std::filesystem::path& svg_path);

std::string report_to_json(const GaussianityReport& report);
void write_report_json(const std::filesystem::path& path, const GaussianityReport& report);

// Trajectory CSV columns:
// iteration,objective,reward,reg,spatial_ks,spectral_ks,m2,wall_time_ms.
// Report-less rows leave the report columns as nan. Wall time is written as 0
// unless emit_timing is set, so default outputs are byte-stable across runs.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj,
                          bool emit_timing);
void write_trajectory_json(const std::filesystem::path& path, const Trajectory& traj,
                           bool emit_timing);

// One row per (regularizer, recorded iteration).
struct CompareRow {
    std::string regularizer;
    std::size_t iteration = 0;
    double reward = 0.0;
    double reg = 0.0;
    double objective = 0.0;
    double spatial_ks = 0.0;
    double spectral_ks = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
};
void write_compare_csv(const std::filesystem::path& path, const std::vector<CompareRow>& rows);

// 16-bit binary PGM (P5, maxval 65535, big-endian samples); pixel values are
// mapped linearly from [-4, 4] and clamped. A CSV of raw pixels is written
// alongside as <path>.csv.
void write_image_pgm16(const std::filesystem::path& path, const ToyImage& image);

// Shortest-round-trip decimal formatting used by every writer (deterministic).
std::string format_double(double v);

}  // namespace gaussreg::io
