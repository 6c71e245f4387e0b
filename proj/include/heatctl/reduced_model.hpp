#pragma once

// Finite-dimensional reduced models of the modal dynamics: the matrices
// (A0~, B0~, C0, C0~, C1, A1, B1) that drive gain synthesis, the stability
// LMIs and the closed-loop assembly.

#include "heatctl/spectral.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace heatctl {

struct AssumptionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Smallest N0 with -lambda_n + sigma < -delta for all n > N0.
inline int minimal_controller_dimension(double sigma, double delta) {
    if (sigma < 0.0) throw std::invalid_argument("minimal_controller_dimension: sigma must be >= 0");
    if (delta <= 0.0) throw std::invalid_argument("minimal_controller_dimension: delta must be > 0");
    int n0 = 0;
    while (-spectral::eigenvalue(n0 + 1) + sigma >= -delta) ++n0;
    return n0;
}

// State ordering convention throughout: the u-component comes first, so
// A0~ = diag{-mu, A0}, B0~ = col{1, B0}, C0~ = [psi(x_*), C0].
// Zero test for Assumption 1/2: exact zeros of cos land on rounding noise,
// so anything below this threshold counts as a structural zero.
inline constexpr double kAssumptionZeroTol = 1e-12;

struct ReducedModel {
    int N0 = 0;          // controller modes 0..N0
    int N = 0;           // observer modes 0..N
    double x_star = 0.0; // measurement point
    double mu = spectral::kMu;

    Eigen::MatrixXd A0;        // (N0+1) diag{-lambda_n}
    Eigen::MatrixXd A0_tilde;  // (N0+2) diag{-mu, A0}
    Eigen::VectorXd B0;        // (N0+1)
    Eigen::VectorXd B0_tilde;  // (N0+2) col{1, B0}
    Eigen::RowVectorXd C0;       // (N0+1) phi_n(x_*)
    Eigen::RowVectorXd C0_tilde; // (N0+2) [psi(x_*), C0]
    Eigen::RowVectorXd C1;       // (N-N0) phi_n(x_*), n = N0+1..N
    Eigen::MatrixXd A1;          // (N-N0) diag{-lambda_n}
    Eigen::VectorXd B1;          // (N-N0)

    int dim_ctrl() const { return N0 + 2; }   // u-extended controller block
    int dim_tail() const { return N - N0; }   // modes N0+1..N
};

// Populates all blocks and checks Assumption 1 (c_n != 0 for n <= N0);
// with for_delayed also Assumption 2 (psi(x_*) != 0).
inline ReducedModel build_reduced_model(int N0, int N, double x_star, bool for_delayed = false) {
    if (N0 < 0 || N < N0) throw std::invalid_argument("build_reduced_model: need 0 <= N0 <= N");
    if (x_star < 0.0 || x_star > 1.0) throw std::invalid_argument("build_reduced_model: x_star outside [0,1]");

    ReducedModel m;
    m.N0 = N0;
    m.N = N;
    m.x_star = x_star;

    m.A0 = Eigen::MatrixXd::Zero(N0 + 1, N0 + 1);
    m.B0.resize(N0 + 1);
    m.C0.resize(N0 + 1);
    for (int n = 0; n <= N0; ++n) {
        m.A0(n, n) = -spectral::eigenvalue(n);
        m.B0[n] = spectral::input_coefficient(n);
        m.C0[n] = spectral::eigenfunction(n, x_star);
        if (std::abs(m.C0[n]) < kAssumptionZeroTol)
            throw AssumptionViolated("Assumption 1 fails: phi_" + std::to_string(n) +
                                     "(x_*) = 0 at x_* = " + std::to_string(x_star));
    }

    const double psi_star = spectral::actuation_shape(x_star);
    if (for_delayed && std::abs(psi_star) < kAssumptionZeroTol)
        throw AssumptionViolated("Assumption 2 fails: psi(x_*) = 0 at x_* = " + std::to_string(x_star));

    m.A0_tilde = Eigen::MatrixXd::Zero(N0 + 2, N0 + 2);
    m.A0_tilde(0, 0) = -m.mu;
    m.A0_tilde.bottomRightCorner(N0 + 1, N0 + 1) = m.A0;

    m.B0_tilde.resize(N0 + 2);
    m.B0_tilde[0] = 1.0;
    m.B0_tilde.tail(N0 + 1) = m.B0;

    m.C0_tilde.resize(N0 + 2);
    m.C0_tilde[0] = psi_star;
    m.C0_tilde.tail(N0 + 1) = m.C0;

    const int tail = N - N0;
    m.A1 = Eigen::MatrixXd::Zero(tail, tail);
    m.B1.resize(tail);
    m.C1.resize(tail);
    for (int k = 0; k < tail; ++k) {
        const int n = N0 + 1 + k;
        m.A1(k, k) = -spectral::eigenvalue(n);
        m.B1[k] = spectral::input_coefficient(n);
        m.C1[k] = spectral::eigenfunction(n, x_star);
    }
    return m;
}

}  // namespace heatctl
