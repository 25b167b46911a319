#include "cvclone/clone_engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cvclone/expm.hpp"

namespace cvclone {

CloneGenerator build_generator(int n_clones, std::optional<std::vector<double>> weights) {
    if (n_clones < 1) {
        throw std::domain_error("build_generator: n_clones must be >= 1");
    }
    std::vector<double> r = weights.value_or(std::vector<double>(n_clones, 1.0));
    if (static_cast<int>(r.size()) != n_clones) {
        throw std::invalid_argument("build_generator: expected " + std::to_string(n_clones) +
                                    " weights, got " + std::to_string(r.size()));
    }
    for (double w : r) {
        if (!std::isfinite(w)) {
            throw std::domain_error("build_generator: weights must be finite");
        }
    }

    const double coupling = std::numbers::pi / (2.0 * std::sqrt(static_cast<double>(n_clones)));
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n_clones + 1, n_clones + 1);
    for (int j = 1; j <= n_clones; ++j) {
        // Sign fixed so the N=1 map sends (alpha, beta) -> (-beta, alpha).
        g(0, j) = -coupling * r[j - 1];
        g(j, 0) = +coupling * r[j - 1];
    }
    return CloneGenerator{n_clones, std::move(r), std::move(g)};
}

LabelRotation exponentiate(const CloneGenerator& gen) {
    return LabelRotation{matrix_exp<double>(gen.matrix)};
}

ProductCoherentState apply_clone_map(const ProductCoherentState& psi,
                                     const LabelRotation& rotation) {
    const int m = rotation.n_modes();
    if (static_cast<int>(psi.n_modes()) != m) {
        throw std::invalid_argument("apply_clone_map: state has " +
                                    std::to_string(psi.n_modes()) + " modes, rotation expects " +
                                    std::to_string(m));
    }
    const Eigen::Map<const Eigen::VectorXcd> in(psi.labels.data(), m);
    const Eigen::VectorXcd out =
        (rotation.matrix * in.real()).cast<ComplexAmplitude>() +
        ComplexAmplitude(0.0, 1.0) * (rotation.matrix * in.imag()).cast<ComplexAmplitude>();
    return ProductCoherentState(std::vector<ComplexAmplitude>(out.data(), out.data() + m));
}

OverlapCheck verify_overlap_preservation(const ProductCoherentState& psi,
                                         const ProductCoherentState& psi_prime,
                                         const LabelRotation& rotation) {
    const double before = product_overlap_sq(psi, psi_prime);
    const double after = product_overlap_sq(apply_clone_map(psi, rotation),
                                            apply_clone_map(psi_prime, rotation));
    return OverlapCheck{before, after, std::abs(before - after)};
}

double attenuation_factor(int n_clones) {
    if (n_clones < 1) {
        throw std::domain_error("attenuation_factor: n_clones must be >= 1");
    }
    return 1.0 / std::sqrt(static_cast<double>(n_clones));
}

}  // namespace cvclone
