#pragma once

// Affine matrix-inequality feasibility solving.
//
// A problem holds decision variables (symmetric matrix blocks, scalars,
// rectangular blocks) and constraints, each an affine symmetric-matrix-valued
// map of the variables required negative definite. Positivity requirements
// (P > 0, scalar > 0) are attached to variables and become -X < 0 constraints.
//
// The solver runs phase-I margin maximization: minimize t subject to
// G_j(x) <= t I for every constraint and a per-coordinate trust box, via a
// log-det barrier interior-point method with dense symmetric factorizations.
// A strictly negative optimal t yields a certificate; a provably nonnegative
// optimal t yields an Infeasible verdict. Stalls are reported as
// NumericalBreakdown, distinct from Infeasible, so bisection callers can
// trust infeasibility.
//
// Certificates are re-verified independently of the solver path by
// eigen-decomposition of every constraint (verify()).

#include <Eigen/Dense>

#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace heatctl::lmi {

enum class VarKind { Symmetric, Scalar, Rectangular };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Scalar;
    int rows = 1;
    int cols = 1;
    bool require_positive = false;  // P > 0 for Symmetric, x > 0 for Scalar
    int offset = 0;                 // first coordinate in the decision vector
    int count = 0;                  // number of scalar coordinates
    double box_lo = 0.0;            // per-coordinate trust box
    double box_hi = 0.0;
};

struct MatrixTerm {  // contributes L * X * R + (L * X * R)^T
    int var;
    Eigen::MatrixXd left;
    Eigen::MatrixXd right;
};

struct ScalarTerm {  // contributes x * S with S symmetric
    int var;
    Eigen::MatrixXd coeff;
};

struct Constraint {
    std::string name;
    int dim = 0;
    bool is_positivity = false;  // auto-generated -X < 0 constraint for variable `var`
    int var = -1;
    Eigen::MatrixXd constant;
    std::vector<MatrixTerm> matrix_terms;
    std::vector<ScalarTerm> scalar_terms;
};

enum class SolveStatus { Feasible, Infeasible, NumericalBreakdown };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::Infeasible: return "infeasible";
        default: return "numerical-breakdown";
    }
}

struct SolveOptions {
    double box_bound = 1e7;        // default |x_i| bound
    double tol_margin = 1e-9;      // strictness threshold for classification
    double feasible_exit = 1e-6;   // early exit once t < -feasible_exit
    bool maximize_margin = false;  // run to a small relative gap instead of exiting early
    double margin_rel_gap = 0.02;
    int max_newton_total = 4000;
    int max_outer = 80;
    double tau_multiplier = 12.0;
    double newton_tol = 1e-8;  // Newton decrement threshold per centering stage
    int verbosity = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::NumericalBreakdown;
    Eigen::VectorXd x;   // assignment of all variable coordinates
    double t_star = 0.0; // phase-I margin at exit (upper bound on the optimum)
    double gap = std::numeric_limits<double>::infinity();
    int newton_iters = 0;
};

struct ConstraintMargin {
    std::string name;
    bool is_positivity = false;
    // For definiteness constraints: max eigenvalue (must be < -tol).
    // For positivity constraints: min eigenvalue of the variable (must be > tol).
    double margin = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<ConstraintMargin> rows;
    bool all_pass = false;
};

class LmiProblem {
  public:
    // ---- variables -----------------------------------------------------
    int add_symmetric(const std::string& name, int dim, bool require_pd = true) {
        return add_var(name, VarKind::Symmetric, dim, dim, require_pd, dim * (dim + 1) / 2);
    }
    int add_scalar(const std::string& name, bool require_positive = true) {
        return add_var(name, VarKind::Scalar, 1, 1, require_positive, 1);
    }
    int add_rectangular(const std::string& name, int rows, int cols) {
        return add_var(name, VarKind::Rectangular, rows, cols, false, rows * cols);
    }
    void set_box(int var, double lo, double hi) {
        vars_.at(var).box_lo = lo;
        vars_.at(var).box_hi = hi;
        has_custom_box_ = true;
    }

    // ---- constraints (want G(x) < 0) ------------------------------------
    int add_constraint(const std::string& name, int dim) {
        Constraint c;
        c.name = name;
        c.dim = dim;
        c.constant = Eigen::MatrixXd::Zero(dim, dim);
        constraints_.push_back(std::move(c));
        return static_cast<int>(constraints_.size()) - 1;
    }
    void add_constant(int con, const Eigen::MatrixXd& M) {
        auto& c = constraints_.at(con);
        check_dims(M.rows() == c.dim && M.cols() == c.dim, "constant block");
        c.constant += M;
    }
    // += L X R + (L X R)^T
    void add_matrix_term(int con, int var, const Eigen::MatrixXd& L, const Eigen::MatrixXd& R) {
        auto& c = constraints_.at(con);
        const auto& v = vars_.at(var);
        check_dims(L.rows() == c.dim && L.cols() == v.rows && R.rows() == v.cols && R.cols() == c.dim,
                   "matrix term");
        c.matrix_terms.push_back({var, L, R});
    }
    // += x * S
    void add_scalar_term(int con, int var, const Eigen::MatrixXd& S) {
        auto& c = constraints_.at(con);
        const auto& v = vars_.at(var);
        check_dims(v.kind == VarKind::Scalar && S.rows() == c.dim && S.cols() == c.dim, "scalar term");
        c.scalar_terms.push_back({var, S});
    }

    // ---- introspection ---------------------------------------------------
    int num_coordinates() const { return total_coords_; }
    int num_variables() const { return static_cast<int>(vars_.size()); }
    int num_constraints() const { return static_cast<int>(constraints_.size()); }
    const Variable& variable(int v) const { return vars_.at(v); }
    int find_variable(const std::string& name) const {
        for (int i = 0; i < static_cast<int>(vars_.size()); ++i)
            if (vars_[i].name == name) return i;
        throw std::invalid_argument("unknown variable: " + name);
    }

    // ---- assignment access ----------------------------------------------
    Eigen::MatrixXd value(const Eigen::VectorXd& x, int var) const {
        const auto& v = vars_.at(var);
        check_assignment(x);
        Eigen::MatrixXd M(v.rows, v.cols);
        if (v.kind == VarKind::Symmetric) {
            int k = v.offset;
            for (int q = 0; q < v.rows; ++q)
                for (int p = 0; p <= q; ++p) {
                    M(p, q) = x[k];
                    M(q, p) = x[k];
                    ++k;
                }
        } else {
            for (int c = 0, k = v.offset; c < v.cols; ++c)
                for (int r = 0; r < v.rows; ++r, ++k) M(r, c) = x[k];
        }
        return M;
    }
    double scalar_value(const Eigen::VectorXd& x, int var) const {
        const auto& v = vars_.at(var);
        check_assignment(x);
        return x[v.offset];
    }
    void set_value(Eigen::VectorXd& x, int var, const Eigen::MatrixXd& M) const {
        const auto& v = vars_.at(var);
        check_assignment(x);
        check_dims(M.rows() == v.rows && M.cols() == v.cols, "set_value");
        if (v.kind == VarKind::Symmetric) {
            int k = v.offset;
            for (int q = 0; q < v.rows; ++q)
                for (int p = 0; p <= q; ++p) M(p, q), x[k++] = 0.5 * (M(p, q) + M(q, p));
        } else {
            for (int c = 0, k = v.offset; c < v.cols; ++c)
                for (int r = 0; r < v.rows; ++r, ++k) x[k] = M(r, c);
        }
    }

    // Evaluates constraint `con` at assignment x (term-wise, no solver machinery).
    Eigen::MatrixXd eval_constraint(int con, const Eigen::VectorXd& x) const {
        const auto& c = constraints_.at(con);
        check_assignment(x);
        Eigen::MatrixXd G = c.constant;
        for (const auto& t : c.matrix_terms) {
            Eigen::MatrixXd LXR = t.left * value(x, t.var) * t.right;
            G += LXR + LXR.transpose();
        }
        for (const auto& t : c.scalar_terms) G += x[vars_[t.var].offset] * t.coeff;
        return G;
    }

    // ---- solver -----------------------------------------------------------
    SolveResult solve(const SolveOptions& opts = {}, const Eigen::VectorXd* warm = nullptr) const;

    // Solver-independent re-verification by eigen-decomposition.
    VerifyReport verify(const Eigen::VectorXd& x, double tol_margin = 1e-9) const;

  private:
    int add_var(const std::string& name, VarKind kind, int rows, int cols, bool pos, int count) {
        Variable v;
        v.name = name;
        v.kind = kind;
        v.rows = rows;
        v.cols = cols;
        v.require_positive = pos;
        v.offset = total_coords_;
        v.count = count;
        v.box_lo = std::numeric_limits<double>::quiet_NaN();  // default box applied later
        v.box_hi = std::numeric_limits<double>::quiet_NaN();
        vars_.push_back(std::move(v));
        total_coords_ += count;
        return static_cast<int>(vars_.size()) - 1;
    }
    static void check_dims(bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("lmi: dimension mismatch in ") + what);
    }
    void check_assignment(const Eigen::VectorXd& x) const {
        if (x.size() != total_coords_)
            throw std::invalid_argument("lmi: assignment has wrong number of coordinates");
    }

    struct Compiled;
    Compiled compile() const;

    std::vector<Variable> vars_;
    std::vector<Constraint> constraints_;
    int total_coords_ = 0;
    bool has_custom_box_ = false;

    friend struct CompiledAccess;
};

// ---------------------------------------------------------------------------
// Compilation: per-coordinate derivative matrices of every constraint
// ---------------------------------------------------------------------------

struct LmiProblem::Compiled {
    struct Con {
        std::string name;
        int dim = 0;
        bool is_positivity = false;
        int var = -1;
        Eigen::MatrixXd constant;
        std::vector<int> coords;              // global coordinate indices touched
        std::vector<Eigen::MatrixXd> deriv;   // dG/dx_coord, symmetric, dim x dim
    };
    std::vector<Con> cons;
    int m = 0;
    Eigen::VectorXd lo, hi;
};

inline LmiProblem::Compiled LmiProblem::compile() const {
    Compiled cp;
    cp.m = total_coords_;

    for (const auto& c : constraints_) {
        Compiled::Con cc;
        cc.name = c.name;
        cc.dim = c.dim;
        cc.constant = 0.5 * (c.constant + c.constant.transpose());

        std::unordered_map<int, int> local;  // global coord -> index in cc.coords
        auto slot = [&](int coord) -> Eigen::MatrixXd& {
            auto it = local.find(coord);
            if (it == local.end()) {
                local.emplace(coord, static_cast<int>(cc.coords.size()));
                cc.coords.push_back(coord);
                cc.deriv.emplace_back(Eigen::MatrixXd::Zero(c.dim, c.dim));
                return cc.deriv.back();
            }
            return cc.deriv[it->second];
        };

        for (const auto& t : c.matrix_terms) {
            const auto& v = vars_[t.var];
            if (v.kind == VarKind::Symmetric) {
                int k = v.offset;
                for (int q = 0; q < v.rows; ++q)
                    for (int p = 0; p <= q; ++p, ++k) {
                        Eigen::MatrixXd B = t.left.col(p) * t.right.row(q);
                        if (p != q) B += t.left.col(q) * t.right.row(p);
                        Eigen::MatrixXd& A = slot(k);
                        A += B + B.transpose();
                    }
            } else {
                int k = v.offset;
                for (int cI = 0; cI < v.cols; ++cI)
                    for (int r = 0; r < v.rows; ++r, ++k) {
                        Eigen::MatrixXd B = t.left.col(r) * t.right.row(cI);
                        Eigen::MatrixXd& A = slot(k);
                        A += B + B.transpose();
                    }
            }
        }
        for (const auto& t : c.scalar_terms) {
            Eigen::MatrixXd& A = slot(vars_[t.var].offset);
            A += 0.5 * (t.coeff + t.coeff.transpose());
        }
        cp.cons.push_back(std::move(cc));
    }

    // positivity side constraints: -X < 0
    for (int vi = 0; vi < static_cast<int>(vars_.size()); ++vi) {
        const auto& v = vars_[vi];
        if (!v.require_positive) continue;
        Compiled::Con cc;
        cc.name = "positivity:" + v.name;
        cc.dim = v.rows;
        cc.is_positivity = true;
        cc.var = vi;
        cc.constant = Eigen::MatrixXd::Zero(v.rows, v.rows);
        if (v.kind == VarKind::Symmetric) {
            int k = v.offset;
            for (int q = 0; q < v.rows; ++q)
                for (int p = 0; p <= q; ++p, ++k) {
                    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(v.rows, v.rows);
                    A(p, q) = -1.0;
                    A(q, p) = -1.0;
                    cc.coords.push_back(k);
                    cc.deriv.push_back(std::move(A));
                }
        } else {  // positive scalar
            Eigen::MatrixXd A(1, 1);
            A(0, 0) = -1.0;
            cc.coords.push_back(v.offset);
            cc.deriv.push_back(std::move(A));
        }
        cp.cons.push_back(std::move(cc));
    }

    return cp;
}

// ---------------------------------------------------------------------------
// Phase-I margin maximization
// ---------------------------------------------------------------------------

inline SolveResult LmiProblem::solve(const SolveOptions& opts, const Eigen::VectorXd* warm) const {
    Compiled cp = compile();
    const int m = cp.m;

    cp.lo = Eigen::VectorXd::Constant(m, -opts.box_bound);
    cp.hi = Eigen::VectorXd::Constant(m, opts.box_bound);
    for (const auto& v : vars_) {
        if (!std::isnan(v.box_lo))
            for (int k = 0; k < v.count; ++k) {
                cp.lo[v.offset + k] = v.box_lo;
                cp.hi[v.offset + k] = v.box_hi;
            }
    }

    SolveResult res;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(m);
    if (warm && warm->size() == m) x = *warm;
    // keep the start strictly inside the box
    for (int i = 0; i < m; ++i) {
        const double pad = 1e-6 * (cp.hi[i] - cp.lo[i]);
        x[i] = std::min(std::max(x[i], cp.lo[i] + pad), cp.hi[i] - pad);
    }

    // helpers over the compiled constraints -------------------------------
    auto eval_con = [&](const Compiled::Con& cc, const Eigen::VectorXd& xv) {
        Eigen::MatrixXd G = cc.constant;
        for (size_t i = 0; i < cc.coords.size(); ++i) G += xv[cc.coords[i]] * cc.deriv[i];
        return G;
    };
    auto max_eig = [&](const Eigen::VectorXd& xv) {
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& cc : cp.cons) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(eval_con(cc, xv), Eigen::EigenvaluesOnly);
            worst = std::max(worst, es.eigenvalues().maxCoeff());
        }
        return worst;
    };

    double t = max_eig(x);
    t += 0.1 * std::max(1.0, std::abs(t));

    // barrier degrees: n per log-det cone, 2 per boxed coordinate
    double nu = 2.0 * m;
    for (const auto& cc : cp.cons) nu += cc.dim;

    double tau = std::max(1.0, nu / std::max(1.0, std::abs(t)));

    // objective + barrier value; returns NaN outside the domain
    auto barrier_value = [&](const Eigen::VectorXd& xv, double tv) -> double {
        double f = 0.0;
        for (const auto& cc : cp.cons) {
            Eigen::MatrixXd S = -eval_con(cc, xv);
            S.diagonal().array() += tv;
            Eigen::LLT<Eigen::MatrixXd> llt(S);
            if (llt.info() != Eigen::Success) return std::numeric_limits<double>::quiet_NaN();
            f -= 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
        }
        for (int i = 0; i < m; ++i) {
            const double a = cp.hi[i] - xv[i], b = xv[i] - cp.lo[i];
            if (a <= 0.0 || b <= 0.0) return std::numeric_limits<double>::quiet_NaN();
            f -= std::log(a) + std::log(b);
        }
        return f;
    };

    // scratch buffers sized for the largest constraint
    int max_coords = 0, max_dim = 0;
    for (const auto& cc : cp.cons) {
        max_coords = std::max(max_coords, static_cast<int>(cc.coords.size()));
        max_dim = std::max(max_dim, cc.dim);
    }
    Eigen::MatrixXd U(max_coords, max_dim * max_dim), Tt(max_coords, max_dim * max_dim);
    Eigen::MatrixXd W(max_dim, max_dim), WT(max_dim, max_dim);

    Eigen::VectorXd g(m + 1);
    Eigen::MatrixXd H(m + 1, m + 1);
    int newton_used = 0;
    int stall_count = 0;

    const double gap_floor = 1e-12;

    for (int outer = 0; outer < opts.max_outer; ++outer) {
        // ---- Newton centering for the current tau ----
        for (int it = 0; it < 200; ++it) {
            if (newton_used++ > opts.max_newton_total) {
                res.status = SolveStatus::NumericalBreakdown;
                res.x = x;
                res.t_star = t;
                res.newton_iters = newton_used;
                return res;
            }

            g.setZero();
            H.setZero();
            g[m] = tau;  // objective: tau * t
            double f_cur = tau * t;

            bool domain_ok = true;
            for (const auto& cc : cp.cons) {
                const int n = cc.dim;
                const int nc = static_cast<int>(cc.coords.size());
                Eigen::MatrixXd S = -eval_con(cc, x);
                S.diagonal().array() += t;
                Eigen::LLT<Eigen::MatrixXd> llt(S);
                if (llt.info() != Eigen::Success) {
                    domain_ok = false;
                    break;
                }
                f_cur -= 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
                Eigen::MatrixXd Sinv = llt.solve(Eigen::MatrixXd::Identity(n, n));

                auto Ublk = U.topLeftCorner(nc, n * n);
                auto Tblk = Tt.topLeftCorner(nc, n * n);
                for (int i = 0; i < nc; ++i) {
                    W.topLeftCorner(n, n).noalias() = Sinv * cc.deriv[i];
                    WT.topLeftCorner(n, n) = W.topLeftCorner(n, n).transpose();
                    Ublk.row(i) = Eigen::Map<const Eigen::VectorXd>(W.data(), n * n);
                    Tblk.row(i) = Eigen::Map<const Eigen::VectorXd>(WT.data(), n * n);
                    const double gi = (Sinv.array() * cc.deriv[i].array()).sum();
                    g[cc.coords[i]] += gi;
                    const double hti = (Sinv.array() * WT.topLeftCorner(n, n).array()).sum();
                    H(m, cc.coords[i]) -= hti;
                    H(cc.coords[i], m) -= hti;
                }
                g[m] -= Sinv.trace();
                H(m, m) += Sinv.squaredNorm();

                Eigen::MatrixXd Hloc = Ublk * Tblk.transpose();
                for (int i = 0; i < nc; ++i)
                    for (int k = 0; k < nc; ++k) H(cc.coords[i], cc.coords[k]) += Hloc(i, k);
            }
            if (!domain_ok) {
                res.status = SolveStatus::NumericalBreakdown;
                res.x = x;
                res.t_star = t;
                res.newton_iters = newton_used;
                return res;
            }

            for (int i = 0; i < m; ++i) {
                const double a = cp.hi[i] - x[i], b = x[i] - cp.lo[i];
                f_cur -= std::log(a) + std::log(b);
                g[i] += 1.0 / a - 1.0 / b;
                H(i, i) += 1.0 / (a * a) + 1.0 / (b * b);
            }

            // Newton direction with ridge fallback
            Eigen::VectorXd d;
            double ridge = 0.0;
            for (int attempt = 0;; ++attempt) {
                Eigen::MatrixXd Hr = H;
                if (ridge > 0.0) Hr.diagonal().array() += ridge;
                Eigen::LDLT<Eigen::MatrixXd> ldlt(Hr);
                d = ldlt.solve(-g);
                if (ldlt.info() == Eigen::Success && g.dot(d) < 0.0 && d.allFinite()) break;
                ridge = (ridge == 0.0) ? 1e-10 * std::max(1.0, H.diagonal().maxCoeff()) : ridge * 100.0;
                if (attempt > 8) {
                    res.status = SolveStatus::NumericalBreakdown;
                    res.x = x;
                    res.t_star = t;
                    res.newton_iters = newton_used;
                    return res;
                }
            }

            const double decrement = -g.dot(d);
            if (0.5 * decrement < opts.newton_tol * std::max(1.0, std::abs(f_cur))) break;

            // backtracking line search on tau*t + barrier
            double alpha = 1.0;
            bool moved = false;
            for (int ls = 0; ls < 60; ++ls) {
                Eigen::VectorXd xn = x + alpha * d.head(m);
                const double tn = t + alpha * d[m];
                const double fn = barrier_value(xn, tn) + tau * tn;
                if (std::isfinite(fn) && fn <= f_cur + 0.25 * alpha * g.dot(d)) {
                    x = std::move(xn);
                    t = tn;
                    moved = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!moved) {
                if (++stall_count >= 2) {
                    res.status = SolveStatus::NumericalBreakdown;
                    res.x = x;
                    res.t_star = t;
                    res.newton_iters = newton_used;
                    return res;
                }
                break;  // re-center at a larger tau
            }
            stall_count = 0;

            if (!opts.maximize_margin && t < -opts.feasible_exit) {
                res.status = SolveStatus::Feasible;
                res.x = x;
                res.t_star = t;
                res.gap = nu / tau;
                res.newton_iters = newton_used;
                return res;
            }
        }

        const double gap = nu / tau;
        res.gap = gap;
        if (opts.verbosity > 0)
            std::cerr << "lmi: outer " << outer << " tau=" << tau << " t=" << t << " gap=" << gap << "\n";

        if (!opts.maximize_margin) {
            if (t < -opts.feasible_exit) {
                res.status = SolveStatus::Feasible;
                res.x = x;
                res.t_star = t;
                res.newton_iters = newton_used;
                return res;
            }
            // certified lower bound on the optimal margin (2x safety on the gap)
            if (t - 2.0 * gap > -opts.tol_margin) {
                res.status = SolveStatus::Infeasible;
                res.x = x;
                res.t_star = t;
                res.newton_iters = newton_used;
                return res;
            }
            if (gap < gap_floor * std::max(1.0, std::abs(t))) {
                res.status = (t < -opts.tol_margin) ? SolveStatus::Feasible : SolveStatus::Infeasible;
                res.x = x;
                res.t_star = t;
                res.newton_iters = newton_used;
                return res;
            }
        } else {
            if (gap < opts.margin_rel_gap * std::max(std::abs(t), 1e-9) || gap < gap_floor) {
                res.status = (t < -opts.tol_margin) ? SolveStatus::Feasible : SolveStatus::Infeasible;
                res.x = x;
                res.t_star = t;
                res.newton_iters = newton_used;
                return res;
            }
        }

        tau *= opts.tau_multiplier;
    }

    res.status = SolveStatus::NumericalBreakdown;
    res.x = x;
    res.t_star = t;
    res.newton_iters = newton_used;
    return res;
}

// ---------------------------------------------------------------------------
// Certificate verification (independent of the solver path)
// ---------------------------------------------------------------------------

inline VerifyReport LmiProblem::verify(const Eigen::VectorXd& x, double tol_margin) const {
    check_assignment(x);
    VerifyReport rep;
    rep.all_pass = true;

    for (int ci = 0; ci < static_cast<int>(constraints_.size()); ++ci) {
        Eigen::MatrixXd G = eval_constraint(ci, x);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (G + G.transpose()), Eigen::EigenvaluesOnly);
        ConstraintMargin cm;
        cm.name = constraints_[ci].name;
        cm.is_positivity = false;
        cm.margin = es.eigenvalues().maxCoeff();
        cm.pass = cm.margin < -tol_margin;
        rep.all_pass = rep.all_pass && cm.pass;
        rep.rows.push_back(std::move(cm));
    }
    for (int vi = 0; vi < static_cast<int>(vars_.size()); ++vi) {
        const auto& v = vars_[vi];
        if (!v.require_positive) continue;
        ConstraintMargin cm;
        cm.name = "positivity:" + v.name;
        cm.is_positivity = true;
        if (v.kind == VarKind::Symmetric) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(value(x, vi), Eigen::EigenvaluesOnly);
            cm.margin = es.eigenvalues().minCoeff();
        } else {
            cm.margin = x[v.offset];
        }
        cm.pass = cm.margin > tol_margin;
        rep.all_pass = rep.all_pass && cm.pass;
        rep.rows.push_back(std::move(cm));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Plain-text matrix format: dimension header line, then row-major entries
// ---------------------------------------------------------------------------

inline void write_matrix(std::ostream& os, const Eigen::MatrixXd& M) {
    os << M.rows() << " " << M.cols() << "\n";
    os.precision(17);
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        for (Eigen::Index c = 0; c < M.cols(); ++c) os << (c ? " " : "") << M(r, c);
        os << "\n";
    }
}

inline Eigen::MatrixXd read_matrix(std::istream& is) {
    Eigen::Index rows = 0, cols = 0;
    if (!(is >> rows >> cols) || rows < 0 || cols < 0)
        throw std::runtime_error("matrix text format: bad dimension header");
    Eigen::MatrixXd M(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            if (!(is >> M(r, c))) throw std::runtime_error("matrix text format: truncated entries");
    return M;
}

// Assignment file: one "var <name> <rows> <cols>" section per variable,
// each followed by a matrix block in the format above.
inline void write_assignment(std::ostream& os, const LmiProblem& p, const Eigen::VectorXd& x) {
    for (int v = 0; v < p.num_variables(); ++v) {
        const auto& var = p.variable(v);
        os << "var " << var.name << "\n";
        write_matrix(os, p.value(x, v));
    }
}

inline Eigen::VectorXd read_assignment(std::istream& is, const LmiProblem& p) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(p.num_coordinates());
    std::string tag, name;
    while (is >> tag) {
        if (tag != "var") throw std::runtime_error("assignment text format: expected 'var'");
        if (!(is >> name)) throw std::runtime_error("assignment text format: missing variable name");
        const int v = p.find_variable(name);
        p.set_value(x, v, read_matrix(is));
    }
    return x;
}

}  // namespace heatctl::lmi
