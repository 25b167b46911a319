#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cvclone {

/// Coherent-state label: a dimensionless complex mode amplitude.
using ComplexAmplitude = std::complex<double>;

/// True when neither component is NaN or infinite.
bool is_finite(ComplexAmplitude a);

/// Multi-mode product coherent state, stored as its ordered label vector.
/// Mode 0 carries the unknown state; modes 1..M-1 are ancillas.
struct ProductCoherentState {
    std::vector<ComplexAmplitude> labels;

    explicit ProductCoherentState(std::vector<ComplexAmplitude> labels);

    /// The standard cloning input: mode 0 = alpha, n_clones ancillas all = beta.
    static ProductCoherentState cloning_input(ComplexAmplitude alpha,
                                              ComplexAmplitude beta,
                                              int n_clones);

    std::size_t n_modes() const { return labels.size(); }
    int n_ancillas() const { return static_cast<int>(labels.size()) - 1; }
};

/// Squared overlap of two coherent states: |<mu|nu>|^2 = exp(-|mu - nu|^2).
double overlap_sq(ComplexAmplitude mu, ComplexAmplitude nu);

/// Product of per-mode squared overlaps; states must have equal mode counts.
double product_overlap_sq(const ProductCoherentState& psi,
                          const ProductCoherentState& psi_prime);

/// |exp(-|alpha-beta|^2) - exp(-|lambda|^2 |alpha-beta|^2)|.
///
/// Measures how badly a universal label-scaling map by lambda would break
/// overlap invariance. Zero exactly when |lambda| = 1 or alpha = beta, so a
/// scaling map can preserve overlaps only up to a phase.
double scaling_overlap_discrepancy(ComplexAmplitude lambda,
                                   ComplexAmplitude alpha,
                                   ComplexAmplitude beta);

/// Alias of product_overlap_sq used by validation reports.
double fidelity_to(const ProductCoherentState& psi,
                   const ProductCoherentState& psi_prime);

}  // namespace cvclone
