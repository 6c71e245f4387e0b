#pragma once

// Eigenstructure of the Neumann Laplacian on [0,1], the actuation shape
// psi, modal input coefficients, tail bounds and projection quadrature.
// These are the exact closed forms the rest of the toolkit is built on.

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace heatctl::spectral {

inline constexpr double kPi = std::numbers::pi;

// mu = pi^2/4, the decay rate of the actuation-shape mode: psi'' = -mu psi.
inline constexpr double kMu = kPi * kPi / 4.0;

// lambda_n = n^2 pi^2 (lambda_0 = 0).
inline double eigenvalue(int n) {
    if (n < 0) throw std::invalid_argument("eigenvalue: n must be nonnegative");
    return static_cast<double>(n) * static_cast<double>(n) * kPi * kPi;
}

// phi_0 = 1, phi_n(x) = sqrt(2) cos(n pi x). Orthonormal in L2(0,1).
inline double eigenfunction(int n, double x) {
    if (n < 0) throw std::invalid_argument("eigenfunction: n must be nonnegative");
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("eigenfunction: x outside [0,1]");
    if (n == 0) return 1.0;
    return std::sqrt(2.0) * std::cos(n * kPi * x);
}

// psi(x) = -(2/pi) cos(pi x / 2); satisfies psi'(0)=0, psi'(1)=1, ||psi||^2 = 2/pi^2.
inline double actuation_shape(double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("actuation_shape: x outside [0,1]");
    return -(2.0 / kPi) * std::cos(0.5 * kPi * x);
}

inline double actuation_shape_derivative(double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("actuation_shape_derivative: x outside [0,1]");
    return std::sin(0.5 * kPi * x);
}

// b_0 = 4/pi^2, b_n = (-1)^{n+1} 4 sqrt(2) / (pi^2 (4n^2 - 1)).
// These are the coefficients of v(t) in the modal ODEs, b_n = -<psi, phi_n>.
inline double input_coefficient(int n) {
    if (n < 0) throw std::invalid_argument("input_coefficient: n must be nonnegative");
    if (n == 0) return 4.0 / (kPi * kPi);
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return sign * 4.0 * std::sqrt(2.0) / (kPi * kPi * (4.0 * static_cast<double>(n) * n - 1.0));
}

// xi_{N+1} = (1 + 1/(4(N+1)^2 - 1))^2 / N.  The tail series satisfies
// sum_{n>N} lambda_n b_n^2 <= 2 xi_{N+1} / pi^2.
inline double tail_bound(int N) {
    if (N < 1) throw std::invalid_argument("tail_bound: N must be >= 1");
    const double Np1 = static_cast<double>(N) + 1.0;
    const double f = 1.0 + 1.0 / (4.0 * Np1 * Np1 - 1.0);
    return f * f / static_cast<double>(N);
}

// kappa_n = 1 + Gamma + lambda_n / Gamma, the Sobolev-inequality constant
// used to dominate the truncation residual zeta(t).
inline double kappa(int n, double Gamma) {
    if (Gamma <= 0.0) throw std::invalid_argument("kappa: Gamma must be positive");
    return 1.0 + Gamma + eigenvalue(n) / Gamma;
}

// ---------------------------------------------------------------------------
// Modal basis bundle
// ---------------------------------------------------------------------------

struct ModalBasis {
    int max_mode = 0;
    Eigen::VectorXd eigenvalues;   // lambda_0 .. lambda_N
    Eigen::VectorXd input_coeffs;  // b_0 .. b_N
};

inline ModalBasis make_basis(int max_mode) {
    if (max_mode < 0) throw std::invalid_argument("make_basis: max_mode must be nonnegative");
    ModalBasis b;
    b.max_mode = max_mode;
    b.eigenvalues.resize(max_mode + 1);
    b.input_coeffs.resize(max_mode + 1);
    for (int n = 0; n <= max_mode; ++n) {
        b.eigenvalues[n] = eigenvalue(n);
        b.input_coeffs[n] = input_coefficient(n);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Grid functions and quadrature
// ---------------------------------------------------------------------------

// Samples of a function on the uniform grid x_i = i/Nx, i = 0..Nx.
struct GridFunction {
    Eigen::VectorXd nodes;
    Eigen::VectorXd values;

    int node_count() const { return static_cast<int>(nodes.size()); }
    double dx() const { return nodes[1] - nodes[0]; }
};

inline Eigen::VectorXd uniform_nodes(int intervals) {
    if (intervals < 2) throw std::invalid_argument("uniform_nodes: need at least 2 intervals");
    return Eigen::VectorXd::LinSpaced(intervals + 1, 0.0, 1.0);
}

template <typename F>
GridFunction sample(F&& f, int intervals) {
    GridFunction g;
    g.nodes = uniform_nodes(intervals);
    g.values.resize(g.nodes.size());
    for (int i = 0; i < g.nodes.size(); ++i) g.values[i] = f(g.nodes[i]);
    return g;
}

// Composite trapezoid integral of sampled values over [0,1].
inline double trapezoid(const Eigen::VectorXd& values, double dx) {
    const auto n = values.size();
    if (n < 2) throw std::invalid_argument("trapezoid: need at least 2 nodes");
    double s = 0.5 * (values[0] + values[n - 1]);
    for (Eigen::Index i = 1; i + 1 < n; ++i) s += values[i];
    return s * dx;
}

inline double integrate(const GridFunction& f) { return trapezoid(f.values, f.dx()); }

// <f, phi_n> by composite trapezoid on f's grid.
inline double project(const GridFunction& f, int n) {
    if (f.node_count() < 3) throw std::invalid_argument("project: grid must have >= 3 nodes");
    Eigen::VectorXd prod(f.values.size());
    for (Eigen::Index i = 0; i < f.values.size(); ++i)
        prod[i] = f.values[i] * eigenfunction(n, f.nodes[i]);
    return trapezoid(prod, f.dx());
}

// Pointwise sum_n coeffs[n] phi_n(x) on the given nodes.
inline GridFunction synthesize_field(const Eigen::VectorXd& coeffs, const Eigen::VectorXd& nodes) {
    GridFunction g;
    g.nodes = nodes;
    g.values = Eigen::VectorXd::Zero(nodes.size());
    for (int n = 0; n < coeffs.size(); ++n) {
        if (coeffs[n] == 0.0) continue;
        for (Eigen::Index i = 0; i < nodes.size(); ++i)
            g.values[i] += coeffs[n] * eigenfunction(n, nodes[i]);
    }
    return g;
}

// L2 norm by trapezoid quadrature.
inline double l2_norm(const GridFunction& f) {
    Eigen::VectorXd sq = f.values.array().square();
    return std::sqrt(trapezoid(sq, f.dx()));
}

}  // namespace heatctl::spectral
