#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cvclone/clone_engine.hpp"
#include "cvclone/states.hpp"

namespace cvclone {

/// Thrown when a requested truncated-space object exceeds the memory guards.
class ResourceError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Truncated multi-mode Fock space with per-mode levels 0..cutoff-1.
///
/// Basis index is lexicographic in the occupations with mode 0 slowest
/// varying: index = n_0 * D^(M-1) + n_1 * D^(M-2) + ... + n_{M-1}. This
/// ordering is fixed so state vectors are comparable across runs.
struct FockSpace {
    /// State vectors are capped at 2^20 amplitudes.
    static constexpr std::int64_t kMaxStateDim = std::int64_t{1} << 20;
    /// Dense operator matrices (dim x dim) are capped much lower.
    static constexpr std::int64_t kMaxDenseDim = 4096;

    FockSpace(int cutoff, int n_modes, std::int64_t max_amplitudes = kMaxStateDim);

    std::int64_t dim() const { return dim_; }
    std::int64_t mode_stride(int mode) const;
    int occupation(std::int64_t index, int mode) const;

    int cutoff;
    int n_modes;

private:
    std::int64_t dim_;
};

/// Explicit amplitude vector over a FockSpace basis.
struct StateVector {
    FockSpace space;
    Eigen::VectorXcd amplitudes;

    double norm() const { return amplitudes.norm(); }
};

/// Dense lowering operator for one mode, tensored with identities elsewhere.
Eigen::MatrixXcd annihilation_matrix(const FockSpace& space, int mode);

/// Adjoint of annihilation_matrix.
Eigen::MatrixXcd creation_matrix(const FockSpace& space, int mode);

/// Dense anti-Hermitian exponent of the cloning unitary,
/// -(pi/(2 sqrt(N))) * (a^dag Sum_j r_j b_j - a Sum_j r_j b_j^dag),
/// in the truncated space. Requires space.n_modes == gen.n_clones + 1.
Eigen::MatrixXcd generator_matrix(const FockSpace& space, const CloneGenerator& gen);

/// Normalized truncated product coherent state with the given labels.
/// Truncation is accurate when cutoff >= |mu|^2 + 10|mu| + 10 per mode.
StateVector coherent_vector(const FockSpace& space,
                            const std::vector<ComplexAmplitude>& labels);

/// Dense cloning unitary exp(generator_matrix). Only available while the
/// space dimension stays at or below FockSpace::kMaxDenseDim.
Eigen::MatrixXcd build_unitary(const FockSpace& space, const CloneGenerator& gen);

/// Applies the cloning unitary (or its inverse) to a state without forming
/// the dense matrix: exp(X) v via substepped Taylor series with matrix-free
/// application of the exponent. Works at any dimension within the state
/// guard and preserves the norm to ~1e-12.
StateVector apply_unitary(const FockSpace& space, const CloneGenerator& gen,
                          const StateVector& psi, bool inverse = false);

/// |<v|w>|^2 for equal-dimension state vectors.
double fidelity(const StateVector& v, const StateVector& w);

/// Squared-amplitude fraction the cutoff keeps of the ideal single-mode
/// coherent state |mu> (1 minus the truncated tail mass).
double coherent_truncation_weight(ComplexAmplitude mu, int cutoff);

/// True when any label is large enough (|mu|^2 > cutoff/4) that truncation
/// error may be significant at this cutoff.
bool truncation_suspect(const FockSpace& space,
                        const std::vector<ComplexAmplitude>& labels);

}  // namespace cvclone
