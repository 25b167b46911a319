#pragma once

#include <cstdint>
#include <vector>

#include "cvclone/rng.hpp"
#include "cvclone/states.hpp"

namespace cvclone {

/// One heterodyne outcome on a single mode.
struct HeterodyneSample {
    ComplexAmplitude z;
};

/// Per-quadrature summary of repeated estimation trials.
struct TrialStatistics {
    std::int64_t n_trials;
    ComplexAmplitude mean_est;
    double std_re;
    double std_im;

    bool operator==(const TrialStatistics&) const = default;
};

/// Simultaneous-quadrature measurement of a mode with label mu: the outcome
/// is mu plus Gaussian noise of variance 1/2 per quadrature, i.e. it is
/// distributed as the Husimi density of |mu>.
HeterodyneSample sample_heterodyne(ComplexAmplitude mu, GaussianStream& rng);

/// sqrt(N) times the sample mean. Unbiased for the original label when every
/// outcome comes from a clone with label alpha/sqrt(N).
ComplexAmplitude estimate_alpha(const std::vector<HeterodyneSample>& samples, int n_clones);

/// Repeats the clone-and-measure experiment n_trials times: each trial draws
/// one heterodyne outcome per clone at label alpha/sqrt(N) and forms the
/// estimate. The per-quadrature standard deviation of the estimates is
/// 1/sqrt(2) regardless of N. Identical (alpha, n_clones, n_trials, seed)
/// give bit-identical results.
TrialStatistics run_trials(ComplexAmplitude alpha, int n_clones, std::int64_t n_trials,
                           std::uint64_t seed);

/// Control experiment: n_copies full-strength copies of |alpha> and a plain
/// sample-mean estimator. Here the per-quadrature error does shrink, as
/// (1/sqrt(2))/sqrt(N).
TrialStatistics run_control_trials(ComplexAmplitude alpha, int n_copies,
                                   std::int64_t n_trials, std::uint64_t seed);

}  // namespace cvclone
