#include "cvclone/estimation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cvclone {

namespace {

// Control trials draw from the top half of the stream-id space so the two
// experiments never share noise.
constexpr std::uint64_t kControlStreamBit = std::uint64_t{1} << 63;

void require_trial_args(ComplexAmplitude alpha, int n_clones, std::int64_t n_trials) {
    if (!is_finite(alpha)) {
        throw std::domain_error("run_trials: alpha must be finite");
    }
    if (n_clones < 1) {
        throw std::domain_error("run_trials: n_clones must be >= 1");
    }
    if (n_trials < 2) {
        throw std::domain_error("run_trials: need n_trials >= 2 for a standard deviation");
    }
}

// Sequential two-pass mean/std over per-trial estimates; the fixed reduction
// order keeps results bit-identical for a given seed.
TrialStatistics summarize(const std::vector<ComplexAmplitude>& estimates) {
    const auto n = static_cast<std::int64_t>(estimates.size());
    ComplexAmplitude sum = 0.0;
    for (const auto& e : estimates) {
        sum += e;
    }
    const ComplexAmplitude mean = sum / static_cast<double>(n);
    double var_re = 0.0;
    double var_im = 0.0;
    for (const auto& e : estimates) {
        const ComplexAmplitude d = e - mean;
        var_re += d.real() * d.real();
        var_im += d.imag() * d.imag();
    }
    const double denom = static_cast<double>(n - 1);
    return TrialStatistics{n, mean, std::sqrt(var_re / denom), std::sqrt(var_im / denom)};
}

}  // namespace

HeterodyneSample sample_heterodyne(ComplexAmplitude mu, GaussianStream& rng) {
    if (!is_finite(mu)) {
        throw std::domain_error("sample_heterodyne: mu must be finite");
    }
    const auto [g_re, g_im] = rng.next_pair();
    const double s = std::sqrt(0.5);
    return HeterodyneSample{mu + ComplexAmplitude(s * g_re, s * g_im)};
}

ComplexAmplitude estimate_alpha(const std::vector<HeterodyneSample>& samples, int n_clones) {
    if (samples.empty()) {
        throw std::domain_error("estimate_alpha: no samples");
    }
    if (static_cast<int>(samples.size()) != n_clones) {
        throw std::invalid_argument("estimate_alpha: got " + std::to_string(samples.size()) +
                                    " samples for " + std::to_string(n_clones) + " clones");
    }
    ComplexAmplitude sum = 0.0;
    for (const auto& s : samples) {
        sum += s.z;
    }
    return std::sqrt(static_cast<double>(n_clones)) * sum / static_cast<double>(n_clones);
}

TrialStatistics run_trials(ComplexAmplitude alpha, int n_clones, std::int64_t n_trials,
                           std::uint64_t seed) {
    require_trial_args(alpha, n_clones, n_trials);
    const double root_n = std::sqrt(static_cast<double>(n_clones));
    const ComplexAmplitude clone_label = alpha / root_n;

    std::vector<ComplexAmplitude> estimates(static_cast<std::size_t>(n_trials));
    for (std::int64_t t = 0; t < n_trials; ++t) {
        GaussianStream stream(seed, static_cast<std::uint64_t>(t));
        ComplexAmplitude sum = 0.0;
        for (int k = 0; k < n_clones; ++k) {
            sum += sample_heterodyne(clone_label, stream).z;
        }
        estimates[static_cast<std::size_t>(t)] = root_n * sum / static_cast<double>(n_clones);
    }
    return summarize(estimates);
}

TrialStatistics run_control_trials(ComplexAmplitude alpha, int n_copies,
                                   std::int64_t n_trials, std::uint64_t seed) {
    require_trial_args(alpha, n_copies, n_trials);

    std::vector<ComplexAmplitude> estimates(static_cast<std::size_t>(n_trials));
    for (std::int64_t t = 0; t < n_trials; ++t) {
        GaussianStream stream(seed, static_cast<std::uint64_t>(t) | kControlStreamBit);
        ComplexAmplitude sum = 0.0;
        for (int k = 0; k < n_copies; ++k) {
            sum += sample_heterodyne(alpha, stream).z;
        }
        estimates[static_cast<std::size_t>(t)] = sum / static_cast<double>(n_copies);
    }
    return summarize(estimates);
}

}  // namespace cvclone
