// Command-line surface of the standing-wave toolkit. Exit codes: 0 success,
// 1 computation/domain failure, 2 usage error.

#include <cnls/model.hpp>
#include <cnls/report.hpp>
#include <cnls/solve.hpp>
#include <cnls/specfun.hpp>
#include <cnls/stability.hpp>
#include <cnls/verify.hpp>
#include <cnls/waves.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Printer {
    bool records = false;
    void field(const std::string& key, const std::string& value) const {
        if (records)
            std::cout << key << "=" << value << "\n";
        else
            std::cout << key << " = " << value << "\n";
    }
    void field(const std::string& key, double value) const { field(key, fmt12(value)); }
};

std::pair<double, double> parse_range(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--range", "expected the form lo:hi");
    try {
        const double lo = std::stod(s.substr(0, colon));
        const double hi = std::stod(s.substr(colon + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--range", "expected numeric lo:hi");
    }
}

const char* verdict_name(cnls::StabilityVerdict v) {
    return v == cnls::StabilityVerdict::Stable ? "Stable" : "Unstable";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Standing waves of the 2D Schroedinger equation with a point-concentrated "
                 "nonlinearity: closed-form families, critical constants, spectral stability, "
                 "ground states, and figure data"};
    app.require_subcommand(1);
    app.fallthrough();

    double sigma = 0.0, beta = 0.0;
    std::string format = "plain";
    app.add_option("--sigma", sigma, "nonlinearity power (> 0)")->required();
    app.add_option("--beta", beta, "coupling; < 0 focusing, > 0 defocusing")->required();
    app.add_option("--format", format, "output style")
        ->check(CLI::IsMember({"plain", "records"}));

    auto* cmd_constants = app.add_subcommand("constants", "critical constants of the family");

    double omega = 0.0;
    auto* cmd_classify = app.add_subcommand("classify", "orbital stability verdict at a frequency");
    cmd_classify->add_option("--omega", omega, "standing-wave frequency")->required();

    auto* cmd_spectrum = app.add_subcommand("spectrum", "linearization spectrum at a frequency");
    cmd_spectrum->add_option("--omega", omega, "standing-wave frequency")->required();

    double mu = 0.0;
    auto* cmd_ground = app.add_subcommand("ground-state", "defocusing ground state of mass mu");
    cmd_ground->add_option("--mu", mu, "mass (> 0)")->required();

    auto* cmd_invert = app.add_subcommand("mass-invert", "the two focusing waves of mass mu");
    cmd_invert->add_option("--mu", mu, "mass in (0, mu_bar)")->required();

    long n = 1;
    auto* cmd_escape = app.add_subcommand("escape", "energy of the fixed-mass escape sequence");
    cmd_escape->add_option("--mu", mu, "mass (> 0)")->required();
    cmd_escape->add_option("--n", n, "sequence index (>= 1)")->required();

    double omega1 = 0.0, omega2 = 0.0, lambda_ref = 1.0;
    auto* cmd_vnorm = app.add_subcommand("vnorm-dist", "energy-space distance of two waves");
    cmd_vnorm->add_option("--omega1", omega1, "first frequency")->required();
    cmd_vnorm->add_option("--omega2", omega2, "second frequency")->required();
    cmd_vnorm->add_option("--lambda-ref", lambda_ref, "reference spectral parameter");

    std::string curve, range_str, spacing_str = "lin", out_path, script_path;
    int points = 200;
    auto* cmd_curves = app.add_subcommand("curves", "sample a curve and write its data table");
    cmd_curves->add_option("--curve", curve,
                           "one of: q-of-omega e-of-omega m-of-omega log-omega-of-q omega-of-q "
                           "e-of-q m-of-q")
        ->required();
    cmd_curves->add_option("--range", range_str, "sampling range lo:hi")->required();
    cmd_curves->add_option("--points", points, "number of samples (>= 2)");
    cmd_curves->add_option("--spacing", spacing_str, "sample spacing")
        ->check(CLI::IsMember({"lin", "log"}));
    cmd_curves->add_option("--out", out_path, "table destination")->required();
    cmd_curves->add_option("--plot-script", script_path, "also emit a gnuplot script here");

    auto* cmd_verify = app.add_subcommand("verify", "run the invariant and oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Printer pr{format == "records"};
    try {
        const cnls::ModelParams p = cnls::make_params(sigma, beta);

        if (*cmd_constants) {
            const cnls::CriticalConstants cc = cnls::critical_constants(p);
            pr.field("regime", p.regime == cnls::Regime::Focusing ? "focusing" : "defocusing");
            pr.field("omega_tilde", cc.omega_tilde);
            if (cc.omega_bar) {
                pr.field("omega_bar", *cc.omega_bar);
                pr.field("q_bar", *cc.q_bar);
                pr.field("lambda", *cc.lambda_threshold);
                pr.field("mu_bar", *cc.mu_bar);
            }
            if (!p.wellposed)
                pr.field("warning", "sigma below the well-posedness threshold 1/2");
        } else if (*cmd_classify) {
            pr.field("verdict", verdict_name(cnls::classify_stability(p, omega)));
        } else if (*cmd_spectrum) {
            const cnls::SpectrumReport r = cnls::linearization_spectrum(p, omega);
            pr.field("omega", r.omega);
            pr.field("alpha1", r.alpha1);
            pr.field("alpha2", r.alpha2);
            pr.field("isolated_point", r.isolated_point);
            if (r.negative_eigenvalue)
                pr.field("negative_eigenvalue", *r.negative_eigenvalue);
            pr.field("zero_mode", r.zero_mode_present ? "yes" : "no");
            pr.field("essential_threshold", r.essential_threshold);
            pr.field("vk_slope_sign", static_cast<double>(r.vk_slope_sign));
            if (r.verdict)
                pr.field("verdict", verdict_name(*r.verdict));
        } else if (*cmd_ground) {
            const cnls::GroundStateResult r = cnls::ground_state_frequency(p, mu);
            pr.field("mu", r.mu);
            pr.field("omega_mu", r.omega_mu);
            pr.field("charge", r.charge);
            pr.field("energy", r.energy);
            pr.field("residual", r.residual);
        } else if (*cmd_invert) {
            const cnls::MassInversionResult r = cnls::invert_mass_focusing(p, mu);
            pr.field("mu", r.mu);
            pr.field("omega_low", r.omega_low);
            pr.field("omega_low_verdict", verdict_name(cnls::classify_stability(p, r.omega_low)));
            pr.field("omega_high", r.omega_high);
            pr.field("omega_high_verdict", verdict_name(cnls::classify_stability(p, r.omega_high)));
            pr.field("residual_low", r.residual_low);
            pr.field("residual_high", r.residual_high);
        } else if (*cmd_escape) {
            pr.field("energy", cnls::escape_sequence_energy(p, mu, n));
        } else if (*cmd_vnorm) {
            const cnls::StandingWave w1 = cnls::standing_wave(p, omega1);
            const cnls::StandingWave w2 = cnls::standing_wave(p, omega2);
            pr.field("distance", cnls::vnorm_distance(p, w1, w2, lambda_ref));
        } else if (*cmd_curves) {
            const auto [lo, hi] = parse_range(range_str);
            const cnls::CurveTable t =
                cnls::sample_curve(cnls::curve_from_name(curve), p, lo, hi, points,
                                   spacing_str == "log" ? cnls::Spacing::Log : cnls::Spacing::Linear);
            cnls::write_table(t, out_path);
            pr.field("table", out_path);
            if (!script_path.empty()) {
                cnls::write_plot_script({t}, {std::filesystem::path(out_path).filename().string()},
                                        script_path);
                pr.field("plot_script", script_path);
            }
        } else if (*cmd_verify) {
            bool all_ok = true;
            for (const cnls::CheckResult& c : cnls::run_verification_suite(p)) {
                std::cout << (c.pass ? "ok   " : "FAIL ") << c.name << " -- " << c.detail << "\n";
                all_ok = all_ok && c.pass;
            }
            if (!all_ok)
                return 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
