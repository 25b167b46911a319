#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "cvclone/states.hpp"

namespace cvclone {

/// Real antisymmetric (N+1)x(N+1) generator of the cloning map in label
/// space. Row/column 0 couples the unknown mode to ancilla j with strength
/// (pi / (2 sqrt(N))) * r_j; all other entries vanish.
struct CloneGenerator {
    int n_clones;
    std::vector<double> weights;
    Eigen::MatrixXd matrix;
};

/// Orthogonal label rotation obtained by exponentiating a CloneGenerator.
/// Acts on label vectors; R^T R = I and det R = +1.
struct LabelRotation {
    Eigen::MatrixXd matrix;

    int n_modes() const { return static_cast<int>(matrix.rows()); }
};

/// Squared product overlap of a state pair before and after the same rotation.
struct OverlapCheck {
    double before;
    double after;
    double abs_diff;
};

/// Builds the generator for n_clones ancillas. Default weights are all 1,
/// which is the assignment that maps identical ancillas to identical clones.
CloneGenerator build_generator(int n_clones,
                               std::optional<std::vector<double>> weights = std::nullopt);

/// Matrix exponential of the generator; always orthogonal.
LabelRotation exponentiate(const CloneGenerator& gen);

/// Applies the label rotation: output labels = R * input labels.
///
/// For a cloning-shaped input (alpha, beta, ..., beta) with unit weights the
/// output is exactly (-sqrt(N) beta, alpha/sqrt(N), ..., alpha/sqrt(N)).
ProductCoherentState apply_clone_map(const ProductCoherentState& psi,
                                     const LabelRotation& rotation);

/// Evaluates the squared product overlap of (psi, psi_prime) before and after
/// rotating both states. The rotation is orthogonal, so abs_diff is zero up
/// to roundoff for every input pair.
OverlapCheck verify_overlap_preservation(const ProductCoherentState& psi,
                                         const ProductCoherentState& psi_prime,
                                         const LabelRotation& rotation);

/// c(N) = 1/sqrt(N): the known scale relating each clone label to the input.
double attenuation_factor(int n_clones);

}  // namespace cvclone
