#include "cvclone/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cvclone {

bool is_finite(ComplexAmplitude a) {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
}

namespace {

void require_finite(ComplexAmplitude a, const char* where) {
    if (!is_finite(a)) {
        throw std::domain_error(std::string(where) + ": labels must be finite");
    }
}

}  // namespace

ProductCoherentState::ProductCoherentState(std::vector<ComplexAmplitude> ls)
    : labels(std::move(ls)) {
    if (labels.empty()) {
        throw std::invalid_argument("ProductCoherentState: need at least one mode");
    }
    for (const auto& a : labels) {
        require_finite(a, "ProductCoherentState");
    }
}

ProductCoherentState ProductCoherentState::cloning_input(ComplexAmplitude alpha,
                                                         ComplexAmplitude beta,
                                                         int n_clones) {
    if (n_clones < 1) {
        throw std::domain_error("cloning_input: n_clones must be >= 1");
    }
    std::vector<ComplexAmplitude> ls(static_cast<std::size_t>(n_clones) + 1, beta);
    ls[0] = alpha;
    return ProductCoherentState(std::move(ls));
}

double overlap_sq(ComplexAmplitude mu, ComplexAmplitude nu) {
    require_finite(mu, "overlap_sq");
    require_finite(nu, "overlap_sq");
    return std::exp(-std::norm(mu - nu));
}

double product_overlap_sq(const ProductCoherentState& psi,
                          const ProductCoherentState& psi_prime) {
    if (psi.labels.size() != psi_prime.labels.size()) {
        throw std::invalid_argument(
            "product_overlap_sq: mode count mismatch (" +
            std::to_string(psi.labels.size()) + " vs " +
            std::to_string(psi_prime.labels.size()) + ")");
    }
    double p = 1.0;
    for (std::size_t k = 0; k < psi.labels.size(); ++k) {
        p *= overlap_sq(psi.labels[k], psi_prime.labels[k]);
    }
    return p;
}

double scaling_overlap_discrepancy(ComplexAmplitude lambda,
                                   ComplexAmplitude alpha,
                                   ComplexAmplitude beta) {
    require_finite(lambda, "scaling_overlap_discrepancy");
    require_finite(alpha, "scaling_overlap_discrepancy");
    require_finite(beta, "scaling_overlap_discrepancy");
    const double d = std::norm(alpha - beta);
    return std::abs(std::exp(-d) - std::exp(-std::norm(lambda) * d));
}

double fidelity_to(const ProductCoherentState& psi,
                   const ProductCoherentState& psi_prime) {
    return product_overlap_sq(psi, psi_prime);
}

}  // namespace cvclone
