#include "cvclone/fock.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cvclone/expm.hpp"

namespace cvclone {

namespace {

std::int64_t checked_dim(int cutoff, int n_modes, std::int64_t max_amplitudes) {
    if (cutoff < 2) {
        throw std::domain_error("FockSpace: cutoff must be >= 2");
    }
    if (n_modes < 1) {
        throw std::domain_error("FockSpace: n_modes must be >= 1");
    }
    std::int64_t dim = 1;
    for (int m = 0; m < n_modes; ++m) {
        if (dim > max_amplitudes / cutoff) {
            throw ResourceError("FockSpace: dimension " + std::to_string(cutoff) + "^" +
                                std::to_string(n_modes) + " exceeds the guard of " +
                                std::to_string(max_amplitudes) + " amplitudes");
        }
        dim *= cutoff;
    }
    return dim;
}

void require_mode(const FockSpace& space, int mode) {
    if (mode < 0 || mode >= space.n_modes) {
        throw std::out_of_range("mode index " + std::to_string(mode) + " out of range for " +
                                std::to_string(space.n_modes) + " modes");
    }
}

void require_compatible(const FockSpace& space, const CloneGenerator& gen) {
    if (space.n_modes != gen.n_clones + 1) {
        throw std::invalid_argument("space has " + std::to_string(space.n_modes) +
                                    " modes but the generator needs " +
                                    std::to_string(gen.n_clones + 1));
    }
}

std::vector<double> sqrt_table(int cutoff) {
    std::vector<double> s(static_cast<std::size_t>(cutoff) + 1);
    for (int n = 0; n <= cutoff; ++n) {
        s[static_cast<std::size_t>(n)] = std::sqrt(static_cast<double>(n));
    }
    return s;
}

// out += X * in, where X is the anti-Hermitian cloning exponent. Matrix-free:
// the term a^dag b_j moves one quantum from ancilla j to mode 0, its adjoint
// moves it back with opposite sign.
void accumulate_generator_apply(const FockSpace& space, const CloneGenerator& gen,
                                const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
    const int d = space.cutoff;
    const std::int64_t dim = space.dim();
    const std::int64_t stride0 = space.mode_stride(0);
    const double kappa =
        std::numbers::pi / (2.0 * std::sqrt(static_cast<double>(gen.n_clones)));
    static thread_local std::vector<double> sq;
    if (static_cast<int>(sq.size()) != d + 1) {
        sq = sqrt_table(d);
    }

    for (int j = 1; j <= gen.n_clones; ++j) {
        const double c = kappa * gen.weights[static_cast<std::size_t>(j - 1)];
        if (c == 0.0) {
            continue;
        }
        const std::int64_t stridej = space.mode_stride(j);
        for (std::int64_t idx = 0; idx < dim; ++idx) {
            const ComplexAmplitude amp = in[idx];
            if (amp == ComplexAmplitude{}) {
                continue;
            }
            const int n0 = static_cast<int>(idx / stride0);  // mode 0 is slowest
            const int nj = static_cast<int>((idx / stridej) % d);
            if (n0 + 1 < d && nj >= 1) {
                // -kappa a^dag b_j
                out[idx + stride0 - stridej] -= c * sq[n0 + 1] * sq[nj] * amp;
            }
            if (n0 >= 1 && nj + 1 < d) {
                // +kappa a b_j^dag
                out[idx - stride0 + stridej] += c * sq[n0] * sq[nj + 1] * amp;
            }
        }
    }
}

// Upper bound on the spectral norm of the exponent; loose but cheap.
double generator_norm_bound(const FockSpace& space, const CloneGenerator& gen) {
    double weight_sum = 0.0;
    for (double w : gen.weights) {
        weight_sum += std::abs(w);
    }
    const double kappa =
        std::numbers::pi / (2.0 * std::sqrt(static_cast<double>(gen.n_clones)));
    return 2.0 * kappa * weight_sum * static_cast<double>(space.cutoff - 1);
}

}  // namespace

FockSpace::FockSpace(int cutoff_, int n_modes_, std::int64_t max_amplitudes)
    : cutoff(cutoff_), n_modes(n_modes_), dim_(checked_dim(cutoff_, n_modes_, max_amplitudes)) {}

std::int64_t FockSpace::mode_stride(int mode) const {
    require_mode(*this, mode);
    std::int64_t stride = 1;
    for (int m = n_modes - 1; m > mode; --m) {
        stride *= cutoff;
    }
    return stride;
}

int FockSpace::occupation(std::int64_t index, int mode) const {
    return static_cast<int>((index / mode_stride(mode)) % cutoff);
}

Eigen::MatrixXcd annihilation_matrix(const FockSpace& space, int mode) {
    require_mode(space, mode);
    const std::int64_t dim = space.dim();
    if (dim > FockSpace::kMaxDenseDim) {
        throw ResourceError("annihilation_matrix: dense operators need dim <= " +
                            std::to_string(FockSpace::kMaxDenseDim) + ", got " +
                            std::to_string(dim));
    }
    const std::int64_t stride = space.mode_stride(mode);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        const int n = space.occupation(idx, mode);
        if (n >= 1) {
            a(idx - stride, idx) = std::sqrt(static_cast<double>(n));
        }
    }
    return a;
}

Eigen::MatrixXcd creation_matrix(const FockSpace& space, int mode) {
    return annihilation_matrix(space, mode).adjoint();
}

Eigen::MatrixXcd generator_matrix(const FockSpace& space, const CloneGenerator& gen) {
    require_compatible(space, gen);
    const std::int64_t dim = space.dim();
    if (dim > FockSpace::kMaxDenseDim) {
        throw ResourceError("generator_matrix: dense operators need dim <= " +
                            std::to_string(FockSpace::kMaxDenseDim) + ", got " +
                            std::to_string(dim));
    }
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
    Eigen::VectorXcd column = Eigen::VectorXcd::Zero(dim);
    for (std::int64_t k = 0; k < dim; ++k) {
        basis[k] = 1.0;
        column.setZero();
        accumulate_generator_apply(space, gen, basis, column);
        x.col(k) = column;
        basis[k] = 0.0;
    }
    return x;
}

StateVector coherent_vector(const FockSpace& space,
                            const std::vector<ComplexAmplitude>& labels) {
    if (static_cast<int>(labels.size()) != space.n_modes) {
        throw std::invalid_argument("coherent_vector: got " + std::to_string(labels.size()) +
                                    " labels for " + std::to_string(space.n_modes) + " modes");
    }
    for (const auto& mu : labels) {
        if (!is_finite(mu)) {
            throw std::domain_error("coherent_vector: labels must be finite");
        }
    }

    // Per-mode expansion coefficients mu^n / sqrt(n!) times e^{-|mu|^2/2}.
    const int d = space.cutoff;
    Eigen::MatrixXcd coeff(space.n_modes, d);
    for (int m = 0; m < space.n_modes; ++m) {
        const ComplexAmplitude mu = labels[static_cast<std::size_t>(m)];
        const double gauss = std::exp(-0.5 * std::norm(mu));
        ComplexAmplitude c = gauss;
        coeff(m, 0) = c;
        for (int n = 1; n < d; ++n) {
            c *= mu / std::sqrt(static_cast<double>(n));
            coeff(m, n) = c;
        }
    }

    const std::int64_t dim = space.dim();
    Eigen::VectorXcd amps(dim);
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        ComplexAmplitude v = 1.0;
        std::int64_t rest = idx;
        for (int m = space.n_modes - 1; m >= 0; --m) {
            v *= coeff(m, static_cast<int>(rest % d));
            rest /= d;
        }
        amps[idx] = v;
    }
    amps /= amps.norm();  // renormalize after truncation
    return StateVector{space, std::move(amps)};
}

Eigen::MatrixXcd build_unitary(const FockSpace& space, const CloneGenerator& gen) {
    require_compatible(space, gen);
    const std::int64_t dim = space.dim();
    if (dim > FockSpace::kMaxDenseDim) {
        throw ResourceError("build_unitary: dense exponentials need dim <= " +
                            std::to_string(FockSpace::kMaxDenseDim) + ", got " +
                            std::to_string(dim) + "; use apply_unitary instead");
    }
    return matrix_exp<ComplexAmplitude>(generator_matrix(space, gen));
}

StateVector apply_unitary(const FockSpace& space, const CloneGenerator& gen,
                          const StateVector& psi, bool inverse) {
    require_compatible(space, gen);
    if (psi.amplitudes.size() != space.dim()) {
        throw std::invalid_argument("apply_unitary: state dimension " +
                                    std::to_string(psi.amplitudes.size()) +
                                    " does not match space dimension " +
                                    std::to_string(space.dim()));
    }

    // exp(X) v with X split into unit-norm substeps, each summed by Taylor
    // series until the terms fall below relative machine precision.
    const double bound = generator_norm_bound(space, gen);
    const int steps = std::max(1, static_cast<int>(std::ceil(bound)));
    const double h = (inverse ? -1.0 : 1.0) / static_cast<double>(steps);

    Eigen::VectorXcd v = psi.amplitudes;
    Eigen::VectorXcd term = v;
    Eigen::VectorXcd next(v.size());
    for (int s = 0; s < steps; ++s) {
        term = v;
        for (int k = 1; k <= 64; ++k) {
            next.setZero();
            accumulate_generator_apply(space, gen, term, next);
            term = next * (h / static_cast<double>(k));
            v += term;
            if (term.norm() <= 1e-17 * v.norm()) {
                break;
            }
        }
    }
    return StateVector{space, std::move(v)};
}

double fidelity(const StateVector& v, const StateVector& w) {
    if (v.amplitudes.size() != w.amplitudes.size()) {
        throw std::invalid_argument("fidelity: dimension mismatch (" +
                                    std::to_string(v.amplitudes.size()) + " vs " +
                                    std::to_string(w.amplitudes.size()) + ")");
    }
    // roundoff can push |<v|w>|^2 for unit vectors a few ulps past 1
    return std::min(1.0, std::norm(v.amplitudes.dot(w.amplitudes)));
}

double coherent_truncation_weight(ComplexAmplitude mu, int cutoff) {
    const double nsq = std::norm(mu);
    double term = std::exp(-nsq);
    double kept = term;
    for (int n = 1; n < cutoff; ++n) {
        term *= nsq / static_cast<double>(n);
        kept += term;
    }
    return kept;
}

bool truncation_suspect(const FockSpace& space,
                        const std::vector<ComplexAmplitude>& labels) {
    for (const auto& mu : labels) {
        if (std::norm(mu) > static_cast<double>(space.cutoff) / 4.0) {
            return true;
        }
    }
    return false;
}

}  // namespace cvclone
