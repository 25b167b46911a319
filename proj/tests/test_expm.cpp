#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "cvclone/expm.hpp"

namespace {

// Independent route: plain Taylor series after halving the matrix until its
// norm is small, then repeated squaring. No Pade machinery involved.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> taylor_exp(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    int halvings = 0;
    while (a.cwiseAbs().colwise().sum().maxCoeff() > 0.25) {
        a /= Scalar(2);
        ++halvings;
    }
    Matrix sum = Matrix::Identity(a.rows(), a.cols());
    Matrix term = sum;
    for (int k = 1; k <= 30; ++k) {
        term = (term * a) / Scalar(k);
        sum += term;
    }
    for (int i = 0; i < halvings; ++i) {
        sum = sum * sum;
    }
    return sum;
}

}  // namespace

TEST_CASE("matrix_exp of zero is the identity") {
    const Eigen::MatrixXd z = Eigen::MatrixXd::Zero(5, 5);
    const Eigen::MatrixXd e = cvclone::matrix_exp<double>(z);
    CHECK((e - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("matrix_exp matches the 2x2 rotation closed form") {
    for (int i = 0; i <= 40; ++i) {
        const double c = -M_PI + i * (2.0 * M_PI / 40.0);
        Eigen::MatrixXd g(2, 2);
        g << 0, -c, c, 0;
        Eigen::MatrixXd expected(2, 2);
        expected << std::cos(c), -std::sin(c), std::sin(c), std::cos(c);
        const Eigen::MatrixXd e = cvclone::matrix_exp<double>(g);
        CHECK((e - expected).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("matrix_exp of antisymmetric matrices is orthogonal with det 1") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const int n : {3, 9, 33, 65}) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
        for (int r = 0; r < n; ++r) {
            for (int c = r + 1; c < n; ++c) {
                g(r, c) = u(rng);
                g(c, r) = -g(r, c);
            }
        }
        const Eigen::MatrixXd e = cvclone::matrix_exp<double>(g);
        const double orth =
            (e.transpose() * e - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
        CHECK(orth < 1e-12);
        CHECK(std::abs(e.determinant() - 1.0) < 1e-10);
    }
}

TEST_CASE("matrix_exp agrees with an independent Taylor route") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-1.0, 1.0);

    Eigen::MatrixXd a(12, 12);
    for (int r = 0; r < 12; ++r) {
        for (int c = 0; c < 12; ++c) {
            a(r, c) = u(rng);
        }
    }
    CHECK((cvclone::matrix_exp<double>(a) - taylor_exp<double>(a)).cwiseAbs().maxCoeff() <
          1e-12);

    Eigen::MatrixXcd b(10, 10);
    for (int r = 0; r < 10; ++r) {
        for (int c = 0; c < 10; ++c) {
            b(r, c) = std::complex<double>(u(rng), u(rng));
        }
    }
    const Eigen::MatrixXcd anti = b - b.adjoint();
    CHECK((cvclone::matrix_exp<std::complex<double>>(anti) -
           taylor_exp<std::complex<double>>(anti))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
}

TEST_CASE("matrix_exp of anti-Hermitian input is unitary") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    Eigen::MatrixXcd b(16, 16);
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
            b(r, c) = std::complex<double>(u(rng), u(rng));
        }
    }
    const Eigen::MatrixXcd anti = b - b.adjoint();
    const Eigen::MatrixXcd e = cvclone::matrix_exp<std::complex<double>>(anti);
    CHECK((e.adjoint() * e - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("matrix_exp rejects non-square input") {
    const Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(3, 4);
    CHECK_THROWS_AS(cvclone::matrix_exp<double>(bad), std::invalid_argument);
}
