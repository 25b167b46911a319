#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "cvclone/states.hpp"

using cvclone::ComplexAmplitude;
using cvclone::ProductCoherentState;

namespace {

constexpr double kExpMinus1 = 0.36787944117144233;
constexpr double kExpMinus2 = 0.1353352832366127;

ComplexAmplitude random_label(std::mt19937_64& rng, double box = 2.0) {
    std::uniform_real_distribution<double> u(-box, box);
    return {u(rng), u(rng)};
}

}  // namespace

TEST_CASE("overlap_sq identity and closed-form values") {
    CHECK(cvclone::overlap_sq({0, 0}, {0, 0}) == 1.0);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto mu = random_label(rng);
        CHECK(cvclone::overlap_sq(mu, mu) == 1.0);
    }
    CHECK(std::abs(cvclone::overlap_sq({1, 0}, {0, 0}) - kExpMinus1) < 1e-12);
}

TEST_CASE("overlap_sq is symmetric and bounded") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto mu = random_label(rng);
        const auto nu = random_label(rng);
        const double ab = cvclone::overlap_sq(mu, nu);
        const double ba = cvclone::overlap_sq(nu, mu);
        CHECK(ab == ba);
        CHECK(ab > 0.0);
        CHECK(ab <= 1.0);
        if (std::abs(mu - nu) > 1e-6) {
            CHECK(ab < 1.0);
        }
    }
}

TEST_CASE("overlap_sq rejects non-finite labels") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(cvclone::overlap_sq({nan, 0}, {0, 0}), std::domain_error);
    CHECK_THROWS_AS(cvclone::overlap_sq({0, 0}, {0, inf}), std::domain_error);
}

TEST_CASE("product_overlap_sq on cloning-shaped states") {
    const auto psi = ProductCoherentState::cloning_input({1, 0}, {0, 0}, 3);
    const auto psi_prime = ProductCoherentState::cloning_input({0, 0}, {0, 0}, 3);
    CHECK(cvclone::product_overlap_sq(psi, psi) == 1.0);
    CHECK(std::abs(cvclone::product_overlap_sq(psi, psi_prime) - kExpMinus1) < 1e-12);

    const auto chi = ProductCoherentState::cloning_input({0, 0}, {1, 0}, 2);
    const auto chi_prime = ProductCoherentState::cloning_input({0, 0}, {0, 0}, 2);
    CHECK(std::abs(cvclone::product_overlap_sq(chi, chi_prime) - kExpMinus2) < 1e-12);
}

TEST_CASE("product_overlap_sq factorizes over modes") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        std::vector<ComplexAmplitude> a;
        std::vector<ComplexAmplitude> b;
        for (int m = 0; m < 6; ++m) {
            a.push_back(random_label(rng));
            b.push_back(random_label(rng));
        }
        double per_mode = 1.0;
        for (int m = 0; m < 6; ++m) {
            per_mode *= cvclone::overlap_sq(a[m], b[m]);
        }
        const double joint =
            cvclone::product_overlap_sq(ProductCoherentState(a), ProductCoherentState(b));
        CHECK(std::abs(joint - per_mode) < 1e-15);
    }
}

TEST_CASE("product_overlap_sq rejects mode-count mismatch") {
    const ProductCoherentState two(std::vector<ComplexAmplitude>{{0, 0}, {1, 0}});
    const ProductCoherentState three(std::vector<ComplexAmplitude>{{0, 0}, {1, 0}, {0, 0}});
    CHECK_THROWS_AS(cvclone::product_overlap_sq(two, three), std::invalid_argument);
}

TEST_CASE("scaling_overlap_discrepancy vanishes only at unit modulus") {
    std::mt19937_64 rng(17);
    const ComplexAmplitude alpha{1, 0};
    const ComplexAmplitude beta{0, 0};

    CHECK(cvclone::scaling_overlap_discrepancy({1, 0}, alpha, beta) == 0.0);

    // any pure phase preserves |lambda| = 1
    for (int k = 0; k < 100; ++k) {
        const double theta = 2.0 * M_PI * k / 100.0;
        const ComplexAmplitude lambda = std::polar(1.0, theta);
        CHECK(std::abs(cvclone::scaling_overlap_discrepancy(lambda, alpha, beta)) < 1e-14);
    }

    for (const double mod : {0.5, 0.9, 1.1, 2.0}) {
        CHECK(cvclone::scaling_overlap_discrepancy({mod, 0}, alpha, beta) > 0.0);
        const auto a = random_label(rng);
        auto b = random_label(rng);
        while (a == b) {
            b = random_label(rng);
        }
        CHECK(cvclone::scaling_overlap_discrepancy({mod, 0}, a, b) > 0.0);
    }

    // alpha == beta gives zero for every scale
    for (int i = 0; i < 20; ++i) {
        const auto a = random_label(rng);
        const auto lambda = random_label(rng);
        CHECK(cvclone::scaling_overlap_discrepancy(lambda, a, a) == 0.0);
    }
}

TEST_CASE("scaling_overlap_discrepancy closed-form value") {
    const double v = cvclone::scaling_overlap_discrepancy({2, 0}, {1, 0}, {0, 0});
    CHECK(std::abs(v - 0.34956380228270817) < 1e-12);
}

TEST_CASE("fidelity_to matches product_overlap_sq") {
    const ProductCoherentState one(std::vector<ComplexAmplitude>{{1, 0}});
    const ProductCoherentState zero(std::vector<ComplexAmplitude>{{0, 0}});
    CHECK(cvclone::fidelity_to(one, one) == 1.0);
    CHECK(std::abs(cvclone::fidelity_to(one, zero) - kExpMinus1) < 1e-12);

    const ProductCoherentState a(std::vector<ComplexAmplitude>{{0, 0}, {1, 0}});
    const ProductCoherentState b(std::vector<ComplexAmplitude>{{0, 0}, {0, 0}});
    CHECK(std::abs(cvclone::fidelity_to(a, b) - kExpMinus1) < 1e-12);
}

TEST_CASE("ProductCoherentState validates its labels") {
    CHECK_THROWS_AS(ProductCoherentState(std::vector<ComplexAmplitude>{}),
                    std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ProductCoherentState(std::vector<ComplexAmplitude>{{nan, 0}}), std::domain_error);
    CHECK_THROWS_AS(ProductCoherentState::cloning_input({1, 0}, {0, 0}, 0),
                    std::domain_error);

    const auto psi = ProductCoherentState::cloning_input({1, 1}, {2, 0}, 3);
    CHECK(psi.n_modes() == 4);
    CHECK(psi.n_ancillas() == 3);
    CHECK(psi.labels[0] == ComplexAmplitude{1, 1});
    CHECK(psi.labels[3] == ComplexAmplitude{2, 0});
}
