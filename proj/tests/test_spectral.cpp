#include <catch2/catch_amalgamated.hpp>

#include "heatctl/spectral.hpp"

#include <cmath>
#include <random>

using namespace heatctl;
using Catch::Approx;

namespace {
const double kPi = spectral::kPi;
}

TEST_CASE("eigenvalues are n^2 pi^2", "[spectral]") {
    CHECK(spectral::eigenvalue(0) == 0.0);
    CHECK(spectral::eigenvalue(1) == Approx(kPi * kPi).epsilon(1e-14));
    CHECK(spectral::eigenvalue(3) == Approx(9.0 * kPi * kPi).epsilon(1e-14));
    for (int n = 1; n < 20; ++n)
        CHECK(spectral::eigenvalue(n) > spectral::eigenvalue(n - 1));
}

TEST_CASE("eigenfunction values", "[spectral]") {
    CHECK(spectral::eigenfunction(0, 0.37) == 1.0);
    CHECK(spectral::eigenfunction(1, 0.0) == Approx(std::sqrt(2.0)));
    CHECK(spectral::eigenfunction(2, 0.5) == Approx(-std::sqrt(2.0)));
    CHECK_THROWS_AS(spectral::eigenfunction(1, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(spectral::eigenfunction(1, 1.1), std::invalid_argument);
}

TEST_CASE("actuation shape psi", "[spectral]") {
    CHECK(spectral::actuation_shape(0.0) == Approx(-2.0 / kPi));
    CHECK(spectral::actuation_shape(1.0) == Approx(0.0).margin(1e-15));
    CHECK(spectral::actuation_shape_derivative(0.0) == Approx(0.0).margin(1e-15));
    CHECK(spectral::actuation_shape_derivative(1.0) == Approx(1.0));

    // ||psi||^2 = 2/pi^2 by quadrature
    auto psi = spectral::sample([](double x) { return spectral::actuation_shape(x); }, 2000);
    Eigen::VectorXd sq = psi.values.array().square();
    CHECK(spectral::trapezoid(sq, psi.dx()) == Approx(2.0 / (kPi * kPi)).epsilon(1e-7));
}

TEST_CASE("input coefficients", "[spectral]") {
    CHECK(spectral::input_coefficient(0) == Approx(4.0 / (kPi * kPi)).epsilon(1e-14));
    CHECK(spectral::input_coefficient(1) == Approx(4.0 * std::sqrt(2.0) / (3.0 * kPi * kPi)).epsilon(1e-14));
    CHECK(spectral::input_coefficient(2) == Approx(-4.0 * std::sqrt(2.0) / (15.0 * kPi * kPi)).epsilon(1e-14));
    // alternating sign for n >= 1
    for (int n = 1; n <= 12; ++n) {
        const double expected_sign = (n % 2 == 1) ? 1.0 : -1.0;
        CHECK(spectral::input_coefficient(n) * expected_sign > 0.0);
    }
}

TEST_CASE("tail bound xi_{N+1}", "[spectral]") {
    CHECK(spectral::tail_bound(4) == Approx(std::pow(1.0 + 1.0 / 99.0, 2) / 4.0).epsilon(1e-14));
    CHECK(spectral::tail_bound(1) == Approx(std::pow(1.0 + 1.0 / 15.0, 2)).epsilon(1e-14));
    CHECK_THROWS_AS(spectral::tail_bound(0), std::invalid_argument);
}

TEST_CASE("tail bound dominates the lambda_n b_n^2 series", "[spectral]") {
    // Partial-sum oracle: sum_{n=N+1}^{1e6} lambda_n b_n^2 <= 2 xi_{N+1} / pi^2.
    for (int N = 1; N <= 10; ++N) {
        double partial = 0.0;
        for (int n = 1000000; n > N; --n) {
            const double bn = spectral::input_coefficient(n);
            partial += spectral::eigenvalue(n) * bn * bn;
        }
        const double bound = 2.0 * spectral::tail_bound(N) / (kPi * kPi);
        CHECK(partial <= bound);
        // the bound is tight to within a factor ~2
        CHECK(partial > 0.3 * bound);
    }
}

TEST_CASE("kappa_n", "[spectral]") {
    CHECK(spectral::kappa(0, 1.0) == Approx(2.0));
    CHECK(spectral::kappa(1, 1.0) == Approx(2.0 + kPi * kPi));
    CHECK(spectral::kappa(5, 2.0) == Approx(3.0 + 25.0 * kPi * kPi / 2.0));
    CHECK_THROWS_AS(spectral::kappa(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(spectral::kappa(1, -1.0), std::invalid_argument);
}

TEST_CASE("projection onto eigenfunctions", "[spectral]") {
    auto phi2 = spectral::sample([](double x) { return spectral::eigenfunction(2, x); }, 2000);
    CHECK(spectral::project(phi2, 2) == Approx(1.0).margin(1e-8));
    CHECK(spectral::project(phi2, 3) == Approx(0.0).margin(1e-8));

    // <psi, phi_1> = -b_1: the modal ODE coefficient is b_n = -<psi, phi_n>.
    auto psi = spectral::sample([](double x) { return spectral::actuation_shape(x); }, 2000);
    CHECK(spectral::project(psi, 1) == Approx(-spectral::input_coefficient(1)).margin(1e-6));
}

TEST_CASE("synthesize_field reproduces basis elements", "[spectral]") {
    auto nodes = spectral::uniform_nodes(400);

    Eigen::VectorXd c0 = Eigen::VectorXd::Zero(5);
    c0[0] = 1.0;
    auto f0 = spectral::synthesize_field(c0, nodes);
    CHECK((f0.values.array() - 1.0).abs().maxCoeff() < 1e-14);

    Eigen::VectorXd c2 = Eigen::VectorXd::Zero(5);
    c2[2] = 1.0;
    auto f2 = spectral::synthesize_field(c2, nodes);
    for (int i = 0; i < f2.node_count(); i += 37)
        CHECK(f2.values[i] == Approx(spectral::eigenfunction(2, f2.nodes[i])).margin(1e-14));
}

TEST_CASE("project/synthesize round trip", "[spectral]") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXd c(8);
    for (int i = 0; i < c.size(); ++i) c[i] = dist(rng);

    auto f = spectral::synthesize_field(c, spectral::uniform_nodes(4000));
    for (int n = 0; n < c.size(); ++n)
        CHECK(spectral::project(f, n) == Approx(c[n]).margin(1e-8));
}

TEST_CASE("orthonormality on a 4001-node grid", "[spectral]") {
    const int intervals = 4000;
    auto nodes = spectral::uniform_nodes(intervals);
    const double dx = nodes[1] - nodes[0];
    for (int m = 0; m <= 12; ++m) {
        for (int n = m; n <= 12; ++n) {
            Eigen::VectorXd prod(nodes.size());
            for (Eigen::Index i = 0; i < nodes.size(); ++i)
                prod[i] = spectral::eigenfunction(m, nodes[i]) * spectral::eigenfunction(n, nodes[i]);
            const double ip = spectral::trapezoid(prod, dx);
            CHECK(ip == Approx(m == n ? 1.0 : 0.0).margin(1e-8));
        }
    }
}

TEST_CASE("coefficient consistency <psi, phi_n> = -b_n", "[spectral]") {
    auto psi = spectral::sample([](double x) { return spectral::actuation_shape(x); }, 4000);
    for (int n = 0; n <= 12; ++n)
        CHECK(spectral::project(psi, n) == Approx(-spectral::input_coefficient(n)).margin(1e-6));
}

TEST_CASE("H1 identity: ||h'||^2 = sum lambda_n h_n^2", "[spectral]") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int modes = 12;
    auto nodes = spectral::uniform_nodes(4000);
    const double dx = nodes[1] - nodes[0];

    for (int trial = 0; trial < 5; ++trial) {
        Eigen::VectorXd h(modes + 1);
        for (int i = 0; i <= modes; ++i) h[i] = dist(rng);

        double parseval = 0.0;
        for (int n = 0; n <= modes; ++n) parseval += spectral::eigenvalue(n) * h[n] * h[n];

        // analytic derivative of the truncated series, squared, by quadrature
        Eigen::VectorXd dsq(nodes.size());
        for (Eigen::Index i = 0; i < nodes.size(); ++i) {
            double d = 0.0;
            for (int n = 1; n <= modes; ++n)
                d += -h[n] * std::sqrt(2.0) * n * kPi * std::sin(n * kPi * nodes[i]);
            dsq[i] = d * d;
        }
        CHECK(spectral::trapezoid(dsq, dx) == Approx(parseval).epsilon(1e-6));
    }
}

TEST_CASE("Sobolev inequality for truncated series", "[spectral]") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int modes = 12;
    auto nodes = spectral::uniform_nodes(2000);

    for (int trial = 0; trial < 100; ++trial) {
        Eigen::VectorXd h(modes + 1);
        for (int i = 0; i <= modes; ++i) h[i] = dist(rng);

        double norm_sq = 0.0, dnorm_sq = 0.0;
        for (int n = 0; n <= modes; ++n) {
            norm_sq += h[n] * h[n];
            dnorm_sq += spectral::eigenvalue(n) * h[n] * h[n];
        }
        auto f = spectral::synthesize_field(h, nodes);
        const double max_sq = f.values.array().square().maxCoeff();

        for (double Gamma : {0.5, 1.0, 2.0})
            CHECK(max_sq <= (1.0 + Gamma) * norm_sq + dnorm_sq / Gamma + 1e-12);
    }
}
