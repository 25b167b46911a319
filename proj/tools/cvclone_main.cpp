// cvclone: command-line driver for the coherent-state cloning simulator.
//
// Subcommands: clone, oracle-check, estimate, noamp, overlap. Reports are
// JSON by default (CSV for the noamp grid and the estimate sweep) and are
// byte-identical for identical flag sets.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvclone/clone_engine.hpp"
#include "cvclone/estimation.hpp"
#include "cvclone/fock.hpp"
#include "cvclone/report.hpp"
#include "cvclone/states.hpp"
#include "cvclone/version.hpp"

namespace {

using cvclone::ComplexAmplitude;
using cvclone::report::Json;

constexpr int kExitPass = 0;
constexpr int kExitSciFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

double parse_double_strict(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw CLI::ValidationError("expected a number, got '" + std::string(s) + "'");
    }
    return v;
}

// Complex literals use the form a+bi / a-bi with no spaces; pure-real and
// pure-imaginary forms ("2", "-0.5i", "i") are also accepted. Parsing is
// locale-independent.
ComplexAmplitude parse_complex(const std::string& text) {
    if (text.empty()) {
        throw CLI::ValidationError("empty complex literal");
    }
    const char last = text.back();
    if (last != 'i' && last != 'I') {
        return ComplexAmplitude(parse_double_strict(text), 0.0);
    }
    const std::string_view body(text.data(), text.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    double re = 0.0;
    std::string_view im_str = body;
    if (split != std::string_view::npos) {
        re = parse_double_strict(body.substr(0, split));
        im_str = body.substr(split);
    }
    double im = 0.0;
    if (im_str.empty() || im_str == "+") {
        im = 1.0;
    } else if (im_str == "-") {
        im = -1.0;
    } else {
        im = parse_double_strict(im_str);
    }
    return ComplexAmplitude(re, im);
}

std::vector<ComplexAmplitude> parse_label_list(const std::string& text) {
    std::vector<ComplexAmplitude> labels;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = (comma == std::string::npos) ? text.size() : comma;
        labels.push_back(parse_complex(text.substr(start, end - start)));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return labels;
}

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
    bool timing = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--output", opts.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write the report to this file instead of stdout");
    cmd->add_flag("--timing", opts.timing,
                  "Include wall-clock duration_ms in the report (breaks byte-identical output)");
}

void write_report(const OutputOptions& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) {
        throw CLI::ValidationError("cannot open output file '" + opts.out_path + "'");
    }
    out << payload;
}

std::string finish_json(Json config, Json result, const OutputOptions& opts,
                        std::chrono::steady_clock::time_point started) {
    Json doc = Json::object();
    doc.set("config", std::move(config));
    doc.set("result", std::move(result));
    doc.set("version", Json::string(cvclone::kVersion));
    if (opts.timing) {
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started)
                              .count();
        doc.set("duration_ms", Json::number(ms));
    }
    return doc.dump();
}

std::string fmt(double v) { return cvclone::report::format_double(v); }

// ---------------------------------------------------------------- clone ---

struct CloneArgs {
    std::string alpha = "0";
    std::string beta = "0";
    int n_clones = 1;
    std::string alpha_ref = "0";
    std::string beta_ref = "0";
    OutputOptions out;
};

int run_clone(const CloneArgs& args) {
    const auto started = std::chrono::steady_clock::now();
    if (args.out.format == "csv") {
        throw CLI::ValidationError("clone only supports --output json");
    }
    const ComplexAmplitude alpha = parse_complex(args.alpha);
    const ComplexAmplitude beta = parse_complex(args.beta);
    const ComplexAmplitude alpha_ref = parse_complex(args.alpha_ref);
    const ComplexAmplitude beta_ref = parse_complex(args.beta_ref);

    const auto gen = cvclone::build_generator(args.n_clones);
    const auto rotation = cvclone::exponentiate(gen);
    const auto psi = cvclone::ProductCoherentState::cloning_input(alpha, beta, args.n_clones);
    const auto mapped = cvclone::apply_clone_map(psi, rotation);
    const auto reference =
        cvclone::ProductCoherentState::cloning_input(alpha_ref, beta_ref, args.n_clones);
    const auto check = cvclone::verify_overlap_preservation(psi, reference, rotation);

    Json config = Json::object();
    config.set("command", Json::string("clone"));
    config.set("alpha", Json::complex_label(alpha));
    config.set("beta", Json::complex_label(beta));
    config.set("n_clones", Json::integer(args.n_clones));
    config.set("alpha_ref", Json::complex_label(alpha_ref));
    config.set("beta_ref", Json::complex_label(beta_ref));
    config.set("output", Json::string(args.out.format));

    Json preservation = Json::object();
    preservation.set("reference_labels", Json::label_list(reference.labels));
    preservation.set("before", Json::number(check.before));
    preservation.set("after", Json::number(check.after));
    preservation.set("abs_diff", Json::number(check.abs_diff));

    Json result = Json::object();
    result.set("input_labels", Json::label_list(psi.labels));
    result.set("output_labels", Json::label_list(mapped.labels));
    result.set("attenuation_factor", Json::number(cvclone::attenuation_factor(args.n_clones)));
    result.set("mode0_amplification_factor",
               Json::number(std::sqrt(static_cast<double>(args.n_clones))));
    result.set("overlap_preservation", std::move(preservation));

    write_report(args.out, finish_json(std::move(config), std::move(result), args.out, started));
    return kExitPass;
}

// --------------------------------------------------------- oracle-check ---

struct OracleArgs {
    std::string alpha = "0";
    std::string beta = "0";
    int n_clones = 1;
    int cutoff = 24;
    double tolerance = 1e-5;
    OutputOptions out;
};

// Commutator residuals are computed per tensor factor: a single-mode space
// for [a, a^dag] - 1 below the cutoff edge, a two-mode space for the
// cross-mode commutators. Tensoring with identities cannot change them.
Json commutator_report(int cutoff) {
    const cvclone::FockSpace single(cutoff, 1);
    const Eigen::MatrixXcd a = cvclone::annihilation_matrix(single, 0);
    const Eigen::MatrixXcd number_comm =
        a * a.adjoint() - a.adjoint() * a - Eigen::MatrixXcd::Identity(cutoff, cutoff);
    double number_residual = 0.0;
    for (int r = 0; r + 1 < cutoff; ++r) {
        for (int c = 0; c + 1 < cutoff; ++c) {
            number_residual = std::max(number_residual, std::abs(number_comm(r, c)));
        }
    }

    const cvclone::FockSpace pair(cutoff, 2);
    const Eigen::MatrixXcd a0 = cvclone::annihilation_matrix(pair, 0);
    const Eigen::MatrixXcd b1 = cvclone::annihilation_matrix(pair, 1);
    const double cross = (a0 * b1 - b1 * a0).cwiseAbs().maxCoeff();
    const double cross_adjoint =
        (a0.adjoint() * b1 - b1 * a0.adjoint()).cwiseAbs().maxCoeff();

    Json j = Json::object();
    j.set("number_residual_below_edge", Json::number(number_residual));
    j.set("cross_mode_residual", Json::number(cross));
    j.set("cross_mode_adjoint_residual", Json::number(cross_adjoint));
    return j;
}

Json unitarity_report(const cvclone::FockSpace& space, const cvclone::CloneGenerator& gen) {
    Json j = Json::object();
    if (space.dim() <= 1024) {
        const Eigen::MatrixXcd u = cvclone::build_unitary(space, gen);
        const double residual =
            (u.adjoint() * u - Eigen::MatrixXcd::Identity(space.dim(), space.dim()))
                .cwiseAbs()
                .maxCoeff();
        j.set("method", Json::string("dense"));
        j.set("residual", Json::number(residual));
        return j;
    }
    // Too large for a dense exponential: probe U^dag U on seeded random states.
    double residual = 0.0;
    constexpr int kProbes = 8;
    constexpr std::uint64_t kProbeSeed = 0x9e3779b97f4a7c15ull;
    for (int p = 0; p < kProbes; ++p) {
        cvclone::GaussianStream stream(kProbeSeed, static_cast<std::uint64_t>(p));
        Eigen::VectorXcd v(space.dim());
        for (std::int64_t i = 0; i < space.dim(); ++i) {
            const auto [re, im] = stream.next_pair();
            v[i] = ComplexAmplitude(re, im);
        }
        v /= v.norm();
        const cvclone::StateVector probe{space, v};
        const auto forward = cvclone::apply_unitary(space, gen, probe);
        const auto back = cvclone::apply_unitary(space, gen, forward, /*inverse=*/true);
        residual = std::max(residual, (back.amplitudes - v).cwiseAbs().maxCoeff());
    }
    j.set("method", Json::string("probe"));
    j.set("probes", Json::integer(8));
    j.set("residual", Json::number(residual));
    return j;
}

int run_oracle_check(const OracleArgs& args) {
    const auto started = std::chrono::steady_clock::now();
    if (args.out.format == "csv") {
        throw CLI::ValidationError("oracle-check only supports --output json");
    }
    const ComplexAmplitude alpha = parse_complex(args.alpha);
    const ComplexAmplitude beta = parse_complex(args.beta);

    const cvclone::FockSpace space(args.cutoff, args.n_clones + 1);
    const auto gen = cvclone::build_generator(args.n_clones);
    const auto input = cvclone::ProductCoherentState::cloning_input(alpha, beta, args.n_clones);
    const auto predicted = cvclone::apply_clone_map(input, cvclone::exponentiate(gen));

    const auto psi_in = cvclone::coherent_vector(space, input.labels);
    const auto psi_out = cvclone::apply_unitary(space, gen, psi_in);
    const auto psi_pred = cvclone::coherent_vector(space, predicted.labels);
    const double fid = cvclone::fidelity(psi_out, psi_pred);
    const double threshold = 1.0 - args.tolerance;
    const bool pass = fid >= threshold;

    Json config = Json::object();
    config.set("command", Json::string("oracle-check"));
    config.set("alpha", Json::complex_label(alpha));
    config.set("beta", Json::complex_label(beta));
    config.set("n_clones", Json::integer(args.n_clones));
    config.set("cutoff", Json::integer(args.cutoff));
    config.set("tolerance", Json::number(args.tolerance));
    config.set("output", Json::string(args.out.format));

    Json fidelity_block = Json::object();
    fidelity_block.set("value", Json::number(fid));
    fidelity_block.set("threshold", Json::number(threshold));
    fidelity_block.set("pass", Json::boolean(pass));

    Json result = Json::object();
    result.set("dim", Json::integer(space.dim()));
    result.set("input_labels", Json::label_list(input.labels));
    result.set("predicted_labels", Json::label_list(predicted.labels));
    result.set("commutator", commutator_report(args.cutoff));
    result.set("unitarity", unitarity_report(space, gen));
    result.set("fidelity", std::move(fidelity_block));
    result.set("norm_after_apply", Json::number(psi_out.norm()));
    result.set("truncation_warning",
               Json::boolean(cvclone::truncation_suspect(space, input.labels) ||
                             cvclone::truncation_suspect(space, predicted.labels)));

    write_report(args.out, finish_json(std::move(config), std::move(result), args.out, started));
    return pass ? kExitPass : kExitSciFail;
}

// ------------------------------------------------------------- estimate ---

struct EstimateArgs {
    std::string alpha = "0";
    int n_clones = 1;
    std::int64_t n_trials = 100000;
    std::uint64_t seed = 0;
    double tolerance = 0.02;
    OutputOptions out;
};

std::vector<int> sweep_points(int n_clones) {
    std::vector<int> ns = {1, 4, 16, 64};
    if (std::find(ns.begin(), ns.end(), n_clones) == ns.end()) {
        ns.push_back(n_clones);
        std::sort(ns.begin(), ns.end());
    }
    return ns;
}

int run_estimate(const EstimateArgs& args) {
    const auto started = std::chrono::steady_clock::now();
    const ComplexAmplitude alpha = parse_complex(args.alpha);
    const double target = 1.0 / std::numbers::sqrt2;

    const auto stats = cvclone::run_trials(alpha, args.n_clones, args.n_trials, args.seed);
    const auto control =
        cvclone::run_control_trials(alpha, args.n_clones, args.n_trials, args.seed);

    const double mean_bound = 5.0 * target / std::sqrt(static_cast<double>(args.n_trials));
    const bool mean_ok = std::abs(stats.mean_est.real() - alpha.real()) < mean_bound &&
                         std::abs(stats.mean_est.imag() - alpha.imag()) < mean_bound;
    const bool std_ok = std::abs(stats.std_re - target) <= args.tolerance * target &&
                        std::abs(stats.std_im - target) <= args.tolerance * target;
    const bool pass = mean_ok && std_ok;

    struct SweepRow {
        int n;
        cvclone::TrialStatistics cloning;
        cvclone::TrialStatistics control;
        double control_expected;
    };
    std::vector<SweepRow> sweep;
    for (const int n : sweep_points(args.n_clones)) {
        sweep.push_back({n, cvclone::run_trials(alpha, n, args.n_trials, args.seed),
                         cvclone::run_control_trials(alpha, n, args.n_trials, args.seed),
                         target / std::sqrt(static_cast<double>(n))});
    }

    Json config = Json::object();
    config.set("command", Json::string("estimate"));
    config.set("alpha", Json::complex_label(alpha));
    config.set("n_clones", Json::integer(args.n_clones));
    config.set("n_trials", Json::integer(args.n_trials));
    config.set("seed", Json::integer(static_cast<std::int64_t>(args.seed)));
    config.set("tolerance", Json::number(args.tolerance));
    config.set("output", Json::string(args.out.format));

    if (args.out.format == "csv") {
        std::string csv = cvclone::report::csv_row(
            {"n_clones", "cloning_std_re", "cloning_std_im", "cloning_target_std",
             "control_std_re", "control_std_im", "control_expected_std"});
        for (const auto& row : sweep) {
            csv += cvclone::report::csv_row(
                {std::to_string(row.n), fmt(row.cloning.std_re), fmt(row.cloning.std_im),
                 fmt(target), fmt(row.control.std_re), fmt(row.control.std_im),
                 fmt(row.control_expected)});
        }
        write_report(args.out, csv);
        return pass ? kExitPass : kExitSciFail;
    }

    Json estimator = Json::object();
    estimator.set("spread_definition",
                  Json::string("per-quadrature sample std over repeated trials"));
    estimator.set("mean_est", Json::complex_label(stats.mean_est));
    estimator.set("std_re", Json::number(stats.std_re));
    estimator.set("std_im", Json::number(stats.std_im));
    estimator.set("target_std", Json::number(target));
    estimator.set("mean_bound", Json::number(mean_bound));
    estimator.set("mean_within_bound", Json::boolean(mean_ok));
    estimator.set("std_within_tolerance", Json::boolean(std_ok));
    estimator.set("pass", Json::boolean(pass));

    Json control_block = Json::object();
    control_block.set("std_re", Json::number(control.std_re));
    control_block.set("std_im", Json::number(control.std_im));
    control_block.set("expected_std",
                      Json::number(target / std::sqrt(static_cast<double>(args.n_clones))));

    Json sweep_json = Json::array();
    for (const auto& row : sweep) {
        Json r = Json::object();
        r.set("n_clones", Json::integer(row.n));
        r.set("cloning_std_re", Json::number(row.cloning.std_re));
        r.set("cloning_std_im", Json::number(row.cloning.std_im));
        r.set("control_std_re", Json::number(row.control.std_re));
        r.set("control_std_im", Json::number(row.control.std_im));
        r.set("control_expected_std", Json::number(row.control_expected));
        sweep_json.push(std::move(r));
    }

    Json result = Json::object();
    result.set("estimator", std::move(estimator));
    result.set("control", std::move(control_block));
    result.set("sweep", std::move(sweep_json));
    result.set("low_sample_warning", Json::boolean(args.n_trials < 1000));

    write_report(args.out, finish_json(std::move(config), std::move(result), args.out, started));
    return pass ? kExitPass : kExitSciFail;
}

// ---------------------------------------------------------------- noamp ---

struct NoampArgs {
    std::string alpha = "1";
    std::string beta = "0";
    std::vector<double> mods = {0.25, 0.5, 0.9, 1.0, 1.1, 2.0, 4.0};
    std::vector<double> phases = {0.0, std::numbers::pi / 4.0, std::numbers::pi / 2.0};
    OutputOptions out;
};

int run_noamp(const NoampArgs& args) {
    const auto started = std::chrono::steady_clock::now();
    const ComplexAmplitude alpha = parse_complex(args.alpha);
    const ComplexAmplitude beta = parse_complex(args.beta);
    const bool degenerate = (alpha == beta);

    struct Row {
        double mod;
        double phase;
        ComplexAmplitude lambda;
        double discrepancy;
        bool expect_zero;
    };
    std::vector<Row> rows;
    double unit_max = 0.0;
    for (const double mod : args.mods) {
        for (const double phase : args.phases) {
            const ComplexAmplitude lambda = std::polar(mod, phase);
            const double disc = cvclone::scaling_overlap_discrepancy(lambda, alpha, beta);
            const bool unit = std::abs(mod - 1.0) < 1e-15;
            if (unit) {
                unit_max = std::max(unit_max, disc);
            }
            rows.push_back({mod, phase, lambda, disc, unit});
        }
    }
    const bool pass = degenerate || unit_max < 1e-14;

    Json config = Json::object();
    config.set("command", Json::string("noamp"));
    config.set("alpha", Json::complex_label(alpha));
    config.set("beta", Json::complex_label(beta));
    Json mods_json = Json::array();
    for (const double m : args.mods) {
        mods_json.push(Json::number(m));
    }
    Json phases_json = Json::array();
    for (const double p : args.phases) {
        phases_json.push(Json::number(p));
    }
    config.set("lambda_mods", std::move(mods_json));
    config.set("lambda_phases", std::move(phases_json));
    config.set("output", Json::string(args.out.format));

    if (args.out.format == "csv") {
        std::string csv = cvclone::report::csv_row(
            {"lambda_mod", "lambda_phase", "lambda_re", "lambda_im", "discrepancy",
             "expect_zero"});
        for (const auto& row : rows) {
            csv += cvclone::report::csv_row({fmt(row.mod), fmt(row.phase),
                                             fmt(row.lambda.real()), fmt(row.lambda.imag()),
                                             fmt(row.discrepancy),
                                             row.expect_zero ? "true" : "false"});
        }
        write_report(args.out, csv);
        return pass ? kExitPass : kExitSciFail;
    }

    Json grid = Json::array();
    for (const auto& row : rows) {
        Json r = Json::object();
        r.set("lambda_mod", Json::number(row.mod));
        r.set("lambda_phase", Json::number(row.phase));
        r.set("lambda", Json::complex_label(row.lambda));
        r.set("discrepancy", Json::number(row.discrepancy));
        r.set("expect_zero", Json::boolean(row.expect_zero));
        grid.push(std::move(r));
    }

    Json result = Json::object();
    result.set("degenerate_input", Json::boolean(degenerate));
    result.set("grid", std::move(grid));
    result.set("unit_modulus_max_discrepancy", Json::number(unit_max));
    result.set("pass", Json::boolean(pass));

    write_report(args.out, finish_json(std::move(config), std::move(result), args.out, started));
    if (degenerate) {
        std::cerr << "cvclone noamp: alpha == beta, discrepancy is identically zero "
                     "(no conclusion)\n";
    }
    return pass ? kExitPass : kExitSciFail;
}

// -------------------------------------------------------------- overlap ---

struct OverlapArgs {
    std::string psi;
    std::string psi_prime;
    OutputOptions out;
};

bool cloning_shaped(const cvclone::ProductCoherentState& s) {
    if (s.n_modes() < 2) {
        return false;
    }
    for (std::size_t k = 2; k < s.labels.size(); ++k) {
        if (s.labels[k] != s.labels[1]) {
            return false;
        }
    }
    return true;
}

int run_overlap(const OverlapArgs& args) {
    const auto started = std::chrono::steady_clock::now();
    if (args.out.format == "csv") {
        throw CLI::ValidationError("overlap only supports --output json");
    }
    const cvclone::ProductCoherentState psi(parse_label_list(args.psi));
    const cvclone::ProductCoherentState psi_prime(parse_label_list(args.psi_prime));
    if (psi.n_modes() != psi_prime.n_modes()) {
        throw CLI::ValidationError("states must have the same number of modes");
    }
    if (psi.n_modes() < 2) {
        throw CLI::ValidationError("need at least two modes (one ancilla)");
    }

    const auto rotation = cvclone::exponentiate(cvclone::build_generator(psi.n_ancillas()));
    const auto check = cvclone::verify_overlap_preservation(psi, psi_prime, rotation);

    Json config = Json::object();
    config.set("command", Json::string("overlap"));
    config.set("psi", Json::label_list(psi.labels));
    config.set("psi_prime", Json::label_list(psi_prime.labels));
    config.set("output", Json::string(args.out.format));

    Json result = Json::object();
    result.set("n_clones", Json::integer(psi.n_ancillas()));
    result.set("before", Json::number(check.before));
    result.set("after", Json::number(check.after));
    result.set("abs_diff", Json::number(check.abs_diff));

    // For cloning-shaped pairs also print the closed forms, including the
    // alternative reading where the merged-mode label is -N*beta instead of
    // -sqrt(N)*beta; the exponents only agree for the sqrt(N) reading.
    if (cloning_shaped(psi) && cloning_shaped(psi_prime)) {
        const double n = static_cast<double>(psi.n_ancillas());
        const double da = std::norm(psi.labels[0] - psi_prime.labels[0]);
        const double db = std::norm(psi.labels[1] - psi_prime.labels[1]);
        Json closed = Json::object();
        closed.set("direct", Json::number(std::exp(-da - n * db)));
        closed.set("mapped_sqrt_n_reading", Json::number(std::exp(-n * db - da)));
        closed.set("mapped_linear_n_reading", Json::number(std::exp(-n * n * db - da)));
        result.set("closed_forms", std::move(closed));
    }

    write_report(args.out, finish_json(std::move(config), std::move(result), args.out, started));
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherent-state information-cloning simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", cvclone::kVersion);

    CloneArgs clone_args;
    auto* clone_cmd =
        app.add_subcommand("clone", "Apply the cloning map to labels (exact label arithmetic)");
    clone_cmd->add_option("--alpha", clone_args.alpha, "Unknown-mode label")
        ->capture_default_str();
    clone_cmd->add_option("--beta", clone_args.beta, "Ancilla label")->capture_default_str();
    clone_cmd->add_option("--n", clone_args.n_clones, "Number of clones")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    clone_cmd->add_option("--alpha-ref", clone_args.alpha_ref,
                          "Unknown-mode label of the overlap comparison state")
        ->capture_default_str();
    clone_cmd->add_option("--beta-ref", clone_args.beta_ref,
                          "Ancilla label of the overlap comparison state")
        ->capture_default_str();
    add_output_flags(clone_cmd, clone_args.out);

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand(
        "oracle-check", "Validate the label map against a truncated Fock-space simulation");
    oracle_cmd->add_option("--alpha", oracle_args.alpha, "Unknown-mode label")
        ->capture_default_str();
    oracle_cmd->add_option("--beta", oracle_args.beta, "Ancilla label")->capture_default_str();
    oracle_cmd->add_option("--n", oracle_args.n_clones, "Number of clones")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    oracle_cmd->add_option("--cutoff", oracle_args.cutoff, "Fock levels per mode")
        ->check(CLI::Range(2, 1 << 20))
        ->capture_default_str();
    oracle_cmd
        ->add_option("--tolerance", oracle_args.tolerance,
                     "Fail when fidelity drops below 1 - tolerance")
        ->capture_default_str();
    add_output_flags(oracle_cmd, oracle_args.out);

    EstimateArgs estimate_args;
    auto* estimate_cmd = app.add_subcommand(
        "estimate", "Monte Carlo heterodyne estimation statistics on the clones");
    estimate_cmd->add_option("--alpha", estimate_args.alpha, "True label to estimate")
        ->capture_default_str();
    estimate_cmd->add_option("--n", estimate_args.n_clones, "Number of clones")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    estimate_cmd->add_option("--trials", estimate_args.n_trials, "Number of repeated trials")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40))
        ->capture_default_str();
    estimate_cmd->add_option("--seed", estimate_args.seed, "Random seed")
        ->capture_default_str();
    estimate_cmd
        ->add_option("--tolerance", estimate_args.tolerance,
                     "Relative tolerance on the 1/sqrt(2) target")
        ->capture_default_str();
    add_output_flags(estimate_cmd, estimate_args.out);

    NoampArgs noamp_args;
    auto* noamp_cmd = app.add_subcommand(
        "noamp", "Tabulate the overlap discrepancy of a universal scaling map");
    noamp_cmd->add_option("--alpha", noamp_args.alpha, "First label")->capture_default_str();
    noamp_cmd->add_option("--beta", noamp_args.beta, "Second label")->capture_default_str();
    noamp_cmd->add_option("--mods", noamp_args.mods, "Scale moduli grid");
    noamp_cmd->add_option("--phases", noamp_args.phases, "Scale phases grid (radians)");
    add_output_flags(noamp_cmd, noamp_args.out);

    OverlapArgs overlap_args;
    auto* overlap_cmd = app.add_subcommand(
        "overlap", "Squared product overlap of two states before/after the cloning map");
    overlap_cmd
        ->add_option("--psi", overlap_args.psi, "Comma-separated labels of the first state")
        ->required();
    overlap_cmd
        ->add_option("--psi-prime", overlap_args.psi_prime,
                     "Comma-separated labels of the second state")
        ->required();
    add_output_flags(overlap_cmd, overlap_args.out);

    try {
        app.parse(argc, argv);
        if (clone_cmd->parsed()) {
            return run_clone(clone_args);
        }
        if (oracle_cmd->parsed()) {
            return run_oracle_check(oracle_args);
        }
        if (estimate_cmd->parsed()) {
            return run_estimate(estimate_args);
        }
        if (noamp_cmd->parsed()) {
            return run_noamp(noamp_args);
        }
        if (overlap_cmd->parsed()) {
            return run_overlap(overlap_args);
        }
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const cvclone::ResourceError& e) {
        std::cerr << "cvclone: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "cvclone: " << e.what() << "\n";
        return kExitUsage;
    }
}
