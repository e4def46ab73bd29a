#include "gaussreg/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gaussreg/errors.hpp"

namespace gaussreg::io {

namespace {

using ordered_json = nlohmann::ordered_json;

static_assert(std::endian::native == std::endian::little,
              "blob io assumes a little-endian host");

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode) {
    std::ofstream f(path, mode);
    if (!f) throw ConfigError("cannot open for writing: " + path.string());
    return f;
}

double parse_double_field(const std::string& s, const std::filesystem::path& path) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("malformed numeric field '" + s + "' in " + path.string());
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_latent_blob(const std::filesystem::path& path, const Latent& latent,
                       std::uint64_t seed, const std::string& kind) {
    auto f = open_out(path, std::ios::binary);
    const std::uint64_t d = latent.dim();
    f.write(reinterpret_cast<const char*>(&d), sizeof(d));
    f.write(reinterpret_cast<const char*>(latent.values().data()),
            static_cast<std::streamsize>(d * sizeof(double)));
    if (!f) throw ConfigError("short write: " + path.string());
    f.close();

    ordered_json side;
    side["dim"] = d;
    side["seed"] = seed;
    side["kind"] = kind;
    auto js = open_out(path.string() + ".json", std::ios::out);
    js << side.dump(2) << "\n";
}

Latent read_latent_blob(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open latent blob: " + path.string());
    std::uint64_t d = 0;
    f.read(reinterpret_cast<char*>(&d), sizeof(d));
    if (!f || d == 0 || d > (1ULL << 32)) {
        throw ConfigError("bad latent blob header: " + path.string());
    }
    std::vector<double> v(d);
    f.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(d * sizeof(double)));
    if (!f) throw ConfigError("truncated latent blob: " + path.string());
    return Latent(std::move(v));
}

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& spectrum) {
    auto f = open_out(path, std::ios::out);
    f << "k,magnitude\n";
    for (std::size_t k = 0; k < spectrum.magnitudes.size(); ++k) {
        f << k << "," << format_double(spectrum.magnitudes[k]) << "\n";
    }
}

void write_cdf_curve_csv(const std::filesystem::path& path, std::vector<double> sample,
                         double (*target_cdf)(double)) {
    if (sample.empty()) throw InsufficientDataError("write_cdf_curve_csv: empty sample");
    std::sort(sample.begin(), sample.end());
    auto f = open_out(path, std::ios::out);
    f << "t,F_emp,F_target\n";
    const double n = static_cast<double>(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        f << format_double(sample[i]) << "," << format_double((i + 1.0) / n) << ","
          << format_double(target_cdf(sample[i])) << "\n";
    }
}

TargetCdf parse_target_cdf(const std::string& name) {
    if (name == "normal") return TargetCdf::normal;
    if (name == "chi2s" || name == "chi2_over_sqrt2") return TargetCdf::chi2_over_sqrt2;
    if (name == "chi1") return TargetCdf::chi1;
    throw ConfigError("unknown target cdf: " + name);
}

void plot_cdf(const std::filesystem::path& curve_csv, TargetCdf target,
              const std::filesystem::path& svg_path) {
    std::ifstream f(curve_csv);
    if (!f) throw ConfigError("cannot open curve csv: " + curve_csv.string());
    std::string line;
    if (!std::getline(f, line) || line != "t,F_emp,F_target") {
        throw ConfigError("curve csv missing 't,F_emp,F_target' header: " + curve_csv.string());
    }
    std::vector<double> t, femp, ftgt;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string a, b, c;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c)) {
            throw ConfigError("malformed curve csv row: " + line);
        }
        t.push_back(parse_double_field(a, curve_csv));
        femp.push_back(parse_double_field(b, curve_csv));
        ftgt.push_back(parse_double_field(c, curve_csv));
    }
    if (t.empty()) throw ConfigError("curve csv has no data rows: " + curve_csv.string());

    double ks = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        ks = std::max(ks, std::abs(femp[i] - ftgt[i]));
        if (i > 0) ks = std::max(ks, std::abs(femp[i - 1] - ftgt[i]));  // gap below the jump
    }

    const double w = 640, h = 480, ml = 60, mr = 20, mt = 40, mb = 40;
    const double tmin = t.front(), tmax = t.back();
    const double span = (tmax > tmin) ? (tmax - tmin) : 1.0;
    auto sx = [&](double v) { return ml + (v - tmin) / span * (w - ml - mr); };
    auto sy = [&](double p) { return h - mb - p * (h - mt - mb); };

    const char* label = target == TargetCdf::normal      ? "N(0,1)"
                        : target == TargetCdf::chi1      ? "chi_1"
                                                         : "chi_2/sqrt(2)";
    auto f2 = open_out(svg_path, std::ios::out);
    f2 << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
       << h - mb << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
       << "\" stroke=\"black\"/>\n";
    auto polyline = [&](const std::vector<double>& ys, const char* color) {
        f2 << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < t.size(); ++i) {
            f2 << sx(t[i]) << "," << sy(ys[i]) << " ";
        }
        f2 << "\"/>\n";
    };
    polyline(femp, "#1f77b4");
    polyline(ftgt, "#d62728");
    f2 << "<text x=\"" << ml + 8 << "\" y=\"" << mt - 12
       << "\" font-family=\"monospace\" font-size=\"14\">KS = " << format_double(ks)
       << "  (target: " << label << ")</text>\n"
       << "<text x=\"" << ml + 8 << "\" y=\"" << mt + 8
       << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#1f77b4\">empirical</text>\n"
       << "<text x=\"" << ml + 8 << "\" y=\"" << mt + 24
       << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#d62728\">target</text>\n"
       << "</svg>\n";
}

namespace {

ordered_json report_json(const GaussianityReport& r) {
    ordered_json j;
    j["spatial_ks"] = r.spatial_ks;
    j["spectral_ks"] = r.spectral_ks;
    ordered_json me;
    for (const auto& [n, e] : r.moment_errors) me[std::to_string(n)] = e;
    j["moment_errors"] = me;
    j["autocorr_peak_offdiag"] = r.autocorr_peak_offdiag;
    j["m1"] = r.m1;
    j["m2"] = r.m2;
    j["p1"] = r.p1;
    j["p2"] = r.p2;
    j["spectral_count"] = r.spectral_count;
    j["excluded_bins"] = r.excluded_bins;
    return j;
}

}  // namespace

std::string report_to_json(const GaussianityReport& report) {
    return report_json(report).dump(2);
}

void write_report_json(const std::filesystem::path& path, const GaussianityReport& report) {
    auto f = open_out(path, std::ios::out);
    f << report_to_json(report) << "\n";
}

namespace {

const char* kTrajHeader = "iteration,objective,reward,reg,spatial_ks,spectral_ks,m2,wall_time_ms";

}  // namespace

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj,
                          bool emit_timing) {
    auto f = open_out(path, std::ios::out);
    f << kTrajHeader << "\n";
    for (const auto& r : traj.records) {
        const double sks = r.report ? r.report->spatial_ks : std::nan("");
        const double fks = r.report ? r.report->spectral_ks : std::nan("");
        const double m2 = r.report ? r.report->m2 : std::nan("");
        f << r.iteration << "," << format_double(r.objective_value) << ","
          << format_double(r.reward_value) << "," << format_double(r.reg_value) << ","
          << format_double(sks) << "," << format_double(fks) << "," << format_double(m2) << ","
          << format_double(emit_timing ? r.wall_time_ms : 0.0) << "\n";
    }
}

void write_trajectory_json(const std::filesystem::path& path, const Trajectory& traj,
                           bool emit_timing) {
    ordered_json j;
    j["aborted"] = traj.aborted;
    if (traj.aborted) {
        j["abort_iteration"] = traj.abort_iteration;
        j["abort_message"] = traj.abort_message;
    }
    ordered_json recs = ordered_json::array();
    for (const auto& r : traj.records) {
        ordered_json e;
        e["iteration"] = r.iteration;
        e["objective"] = r.objective_value;
        e["objective_avg10"] = r.objective_avg10;
        e["reward"] = r.reward_value;
        e["reg"] = r.reg_value;
        if (r.report) e["report"] = report_json(*r.report);
        e["wall_time_ms"] = emit_timing ? r.wall_time_ms : 0.0;
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    auto f = open_out(path, std::ios::out);
    f << j.dump(2) << "\n";
}

void write_compare_csv(const std::filesystem::path& path, const std::vector<CompareRow>& rows) {
    auto f = open_out(path, std::ios::out);
    f << "regularizer,iteration,reward,reg,objective,spatial_ks,spectral_ks,m1,m2,p1,p2\n";
    for (const auto& r : rows) {
        f << r.regularizer << "," << r.iteration << "," << format_double(r.reward) << ","
          << format_double(r.reg) << "," << format_double(r.objective) << ","
          << format_double(r.spatial_ks) << "," << format_double(r.spectral_ks) << ","
          << format_double(r.m1) << "," << format_double(r.m2) << "," << format_double(r.p1)
          << "," << format_double(r.p2) << "\n";
    }
}

void write_image_pgm16(const std::filesystem::path& path, const ToyImage& image) {
    auto f = open_out(path, std::ios::binary);
    f << "P5\n" << image.side << " " << image.side << "\n65535\n";
    for (double v : image.pixels) {
        const double clamped = std::clamp((v + 4.0) / 8.0, 0.0, 1.0);
        const auto q = static_cast<std::uint16_t>(std::lround(clamped * 65535.0));
        const char bytes[2] = {static_cast<char>(q >> 8), static_cast<char>(q & 0xFF)};
        f.write(bytes, 2);
    }

    auto c = open_out(path.string() + ".csv", std::ios::out);
    c << "row,col,value\n";
    for (std::size_t r = 0; r < image.side; ++r) {
        for (std::size_t col = 0; col < image.side; ++col) {
            c << r << "," << col << "," << format_double(image.pixels[r * image.side + col])
              << "\n";
        }
    }
}

}  // namespace gaussreg::io
