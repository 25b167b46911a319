#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "cvclone/fock.hpp"

using cvclone::ComplexAmplitude;
using cvclone::FockSpace;
using cvclone::ProductCoherentState;

namespace {

ComplexAmplitude random_label(std::mt19937_64& rng, double box) {
    std::uniform_real_distribution<double> u(-box, box);
    return {u(rng), u(rng)};
}

}  // namespace

TEST_CASE("FockSpace dimension guard and indexing") {
    CHECK(FockSpace(2, 20).dim() == (std::int64_t{1} << 20));
    CHECK_THROWS_AS(FockSpace(2, 21), cvclone::ResourceError);
    CHECK_THROWS_AS(FockSpace(1, 2), std::domain_error);
    CHECK_THROWS_AS(FockSpace(4, 0), std::domain_error);

    const FockSpace s(3, 2);
    CHECK(s.dim() == 9);
    CHECK(s.mode_stride(0) == 3);
    CHECK(s.mode_stride(1) == 1);
    CHECK(s.occupation(5, 0) == 1);
    CHECK(s.occupation(5, 1) == 2);
    CHECK_THROWS_AS(s.mode_stride(2), std::out_of_range);
}

TEST_CASE("annihilation_matrix at the smallest truncation") {
    const FockSpace s(2, 1);
    const Eigen::MatrixXcd a = cvclone::annihilation_matrix(s, 0);
    CHECK(a(0, 0) == ComplexAmplitude{0, 0});
    CHECK(a(0, 1) == ComplexAmplitude{1, 0});
    CHECK(a(1, 0) == ComplexAmplitude{0, 0});
    CHECK(a(1, 1) == ComplexAmplitude{0, 0});
}

TEST_CASE("commutation relations hold exactly in the truncated space") {
    const FockSpace s(6, 2);
    const Eigen::MatrixXcd a = cvclone::annihilation_matrix(s, 0);
    const Eigen::MatrixXcd b = cvclone::annihilation_matrix(s, 1);

    // [a, a^dag] = 1 on every basis state below the cutoff edge of mode 0.
    // The entries are IEEE square roots, so products like sqrt(2)^2 carry a
    // couple of ulps; anything beyond that floor would be a structural bug.
    const Eigen::MatrixXcd number_comm =
        a * a.adjoint() - a.adjoint() * a - Eigen::MatrixXcd::Identity(s.dim(), s.dim());
    for (std::int64_t r = 0; r < s.dim(); ++r) {
        for (std::int64_t c = 0; c < s.dim(); ++c) {
            if (s.occupation(r, 0) <= s.cutoff - 2 && s.occupation(c, 0) <= s.cutoff - 2) {
                CHECK(std::abs(number_comm(r, c)) < 1e-14);
            } else if (r == c) {
                // the edge diagonal picks up the truncation defect -(D-1)
                CHECK(std::abs(number_comm(r, c) + static_cast<double>(s.cutoff)) < 1e-12);
            }
        }
    }

    // operators on distinct modes commute as exact matrices (the products
    // coincide term by term, so the difference is bitwise zero)
    CHECK((a * b - b * a).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.adjoint() * b - b * a.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("coherent_vector vacuum and single-mode amplitudes") {
    const FockSpace s(8, 3);
    const auto vac = cvclone::coherent_vector(s, {{0, 0}, {0, 0}, {0, 0}});
    CHECK(std::abs(vac.amplitudes[0] - ComplexAmplitude{1, 0}) < 1e-15);
    CHECK(vac.amplitudes.tail(s.dim() - 1).cwiseAbs().maxCoeff() == 0.0);

    const FockSpace single(20, 1);
    const auto one = cvclone::coherent_vector(single, {{1, 0}});
    CHECK(std::abs(one.amplitudes[0] - ComplexAmplitude{0.6065306597126334, 0}) < 1e-10);
    CHECK(std::abs(one.norm() - 1.0) < 1e-12);
}

TEST_CASE("coherent state overlaps match the closed form") {
    const FockSpace s(24, 1);
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        const auto mu = random_label(rng, 0.7);
        const auto nu = random_label(rng, 0.7);
        const auto v = cvclone::coherent_vector(s, {mu});
        const auto w = cvclone::coherent_vector(s, {nu});
        CHECK(std::abs(cvclone::fidelity(v, w) - std::exp(-std::norm(mu - nu))) < 1e-8);
    }
}

TEST_CASE("truncation keeps the stated weight") {
    for (const double mag : {0.5, 1.0, 1.5, 2.0}) {
        const int needed = static_cast<int>(std::ceil(mag * mag + 10.0 * mag + 10.0));
        CHECK(cvclone::coherent_truncation_weight({mag, 0}, needed) >= 1.0 - 1e-10);
    }
    const FockSpace s(8, 1);
    CHECK(cvclone::truncation_suspect(s, {{2, 0}}));       // |mu|^2 = 4 > 8/4
    CHECK(!cvclone::truncation_suspect(s, {{1, 0}}));      // |mu|^2 = 1 < 2
}

TEST_CASE("build_unitary with zero weights is the identity") {
    const FockSpace s(4, 2);
    const auto gen = cvclone::build_generator(1, std::vector<double>{0.0});
    const Eigen::MatrixXcd u = cvclone::build_unitary(s, gen);
    CHECK((u - Eigen::MatrixXcd::Identity(s.dim(), s.dim())).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("build_unitary is unitary") {
    const FockSpace s(10, 2);
    const auto gen = cvclone::build_generator(1);
    const Eigen::MatrixXcd u = cvclone::build_unitary(s, gen);
    const double residual =
        (u.adjoint() * u - Eigen::MatrixXcd::Identity(s.dim(), s.dim())).cwiseAbs().maxCoeff();
    CHECK(residual < 1e-12);
}

TEST_CASE("dense unitary swaps vacuum-ancilla labels at N=1") {
    const FockSpace s(16, 2);
    const auto gen = cvclone::build_generator(1);
    const Eigen::MatrixXcd u = cvclone::build_unitary(s, gen);

    const auto in = cvclone::coherent_vector(s, {{0, 0}, {1, 0}});
    const cvclone::StateVector out{s, u * in.amplitudes};
    const auto predicted = cvclone::coherent_vector(s, {{-1, 0}, {0, 0}});
    CHECK(cvclone::fidelity(out, predicted) > 1.0 - 1e-6);
}

TEST_CASE("apply_unitary agrees with the dense exponential") {
    std::mt19937_64 rng(67);
    for (const auto& [cutoff, n_clones] : std::vector<std::pair<int, int>>{{12, 1}, {8, 2}}) {
        const FockSpace s(cutoff, n_clones + 1);
        const auto gen = cvclone::build_generator(n_clones);
        const Eigen::MatrixXcd u = cvclone::build_unitary(s, gen);
        std::vector<ComplexAmplitude> labels;
        for (int m = 0; m <= n_clones; ++m) {
            labels.push_back(random_label(rng, 0.5));
        }
        const auto in = cvclone::coherent_vector(s, labels);
        const auto fast = cvclone::apply_unitary(s, gen, in);
        const Eigen::VectorXcd dense = u * in.amplitudes;
        CHECK((fast.amplitudes - dense).cwiseAbs().maxCoeff() < 1e-11);

        // and the inverse really inverts
        const auto back = cvclone::apply_unitary(s, gen, fast, /*inverse=*/true);
        CHECK((back.amplitudes - in.amplitudes).cwiseAbs().maxCoeff() < 1e-11);
    }
}

TEST_CASE("Fock evolution matches the label-space prediction at N=2") {
    const FockSpace s(12, 3);
    const auto gen = cvclone::build_generator(2);
    const auto input = ProductCoherentState::cloning_input({0.5, 0}, {0.3, 0}, 2);
    const auto predicted =
        cvclone::apply_clone_map(input, cvclone::exponentiate(gen));

    const auto psi_in = cvclone::coherent_vector(s, input.labels);
    const auto psi_out = cvclone::apply_unitary(s, gen, psi_in);
    const auto psi_pred = cvclone::coherent_vector(s, predicted.labels);

    CHECK(std::abs(psi_out.norm() - 1.0) < 1e-9);
    CHECK(cvclone::fidelity(psi_out, psi_pred) > 1.0 - 1e-6);
}

TEST_CASE("oracle agreement improves along the cutoff ladder") {
    std::mt19937_64 rng(71);
    for (const int n : {1, 2}) {
        const auto gen = cvclone::build_generator(n);
        const auto rot = cvclone::exponentiate(gen);
        for (int trial = 0; trial < 3; ++trial) {
            const auto alpha = random_label(rng, 0.8 / std::sqrt(2.0));
            const auto beta = random_label(rng, 0.8 / std::sqrt(2.0));
            const auto input = ProductCoherentState::cloning_input(alpha, beta, n);
            const auto predicted = cvclone::apply_clone_map(input, rot);
            double prev_deficit = 2.0;
            for (const int d : {8, 12, 16, 20, 24}) {
                const FockSpace space(d, n + 1);
                const auto evolved = cvclone::apply_unitary(
                    space, gen, cvclone::coherent_vector(space, input.labels));
                const double fid = cvclone::fidelity(
                    evolved, cvclone::coherent_vector(space, predicted.labels));
                if (d >= 16) {
                    CHECK(fid > 1.0 - 1e-5);
                }
                // non-increasing deficit, up to the roundoff floor once the
                // truncation error drops below machine precision
                CHECK(1.0 - fid <= prev_deficit + 1e-12);
                prev_deficit = 1.0 - fid;
            }
        }
    }
}

TEST_CASE("fidelity basics") {
    const FockSpace s(4, 1);
    const auto v = cvclone::coherent_vector(s, {{0.4, 0.1}});
    CHECK(cvclone::fidelity(v, v) == doctest::Approx(1.0).epsilon(1e-12));

    cvclone::StateVector e0{s, Eigen::VectorXcd::Zero(4)};
    cvclone::StateVector e1{s, Eigen::VectorXcd::Zero(4)};
    e0.amplitudes[0] = 1.0;
    e1.amplitudes[1] = 1.0;
    CHECK(cvclone::fidelity(e0, e1) == 0.0);

    const FockSpace s24(24, 1);
    const auto a = cvclone::coherent_vector(s24, {{1, 0}});
    const auto b = cvclone::coherent_vector(s24, {{0, 0}});
    CHECK(std::abs(cvclone::fidelity(a, b) - 0.36787944117144233) < 1e-8);
}

TEST_CASE("resource and dimension errors") {
    // state guard passes but dense operators refuse
    const FockSpace big(40, 3);  // dim 64000 > kMaxDenseDim
    CHECK_THROWS_AS(cvclone::annihilation_matrix(big, 0), cvclone::ResourceError);
    CHECK_THROWS_AS(cvclone::build_unitary(big, cvclone::build_generator(2)),
                    cvclone::ResourceError);

    const FockSpace s(6, 2);
    CHECK_THROWS_AS(cvclone::annihilation_matrix(s, 2), std::out_of_range);
    CHECK_THROWS_AS(cvclone::coherent_vector(s, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(cvclone::build_unitary(s, cvclone::build_generator(2)),
                    std::invalid_argument);

    const auto v = cvclone::coherent_vector(s, {{0, 0}, {0, 0}});
    const FockSpace other(6, 3);
    const auto w = cvclone::coherent_vector(other, {{0, 0}, {0, 0}, {0, 0}});
    CHECK_THROWS_AS(cvclone::fidelity(v, w), std::invalid_argument);
}
