#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <string>
#include <vector>

namespace ddrc::conic {

/// One second-order cone constraint ||F x + g|| <= h'x + d. A cone with zero
/// F rows degenerates to the linear inequality h'x + d >= 0; the solver
/// treats it as a 1-dimensional cone, for which the scaling algebra reduces
/// to the usual linear-programming formulas.
struct SocConstraint {
    Eigen::SparseMatrix<double> F;
    Eigen::VectorXd g;
    Eigen::SparseVector<double> h;
    double d = 0.0;

    Eigen::Index dim() const { return F.rows() + 1; }
};

/// min c'x  s.t.  A x = b,  every cone constraint satisfied.
struct Program {
    Eigen::VectorXd c;
    Eigen::SparseMatrix<double> A;
    Eigen::VectorXd b;
    std::vector<SocConstraint> cones;

    Eigen::Index num_vars() const { return c.size(); }
    void validate() const;
};

struct SolverSettings {
    double tol_gap = 1e-8;
    double tol_feas = 1e-8;
    int max_iter = 200;
    double regularization = 1e-9;
    bool verbose = false;
};

enum class SolveStatus {
    Optimal,
    PrimalInfeasible,
    DualInfeasible,
    IterLimit,
    NumericalFailure,
};

const char* to_string(SolveStatus status);

/// Solver output. On Optimal, x is the primal point and (y, z) the equality
/// and cone multipliers; s holds the cone slacks in the internal row order
/// (per cone: the scalar h'x + d first, then F x + g). On PrimalInfeasible,
/// (y, z) is a certificate ray normalized to b'y + sum_i (d_i z_i0 + g_i'z_i1)
/// = -1; on DualInfeasible, (x, s) is a ray with c'x = -1.
struct SolveResult {
    SolveStatus status = SolveStatus::NumericalFailure;
    Eigen::VectorXd x;
    Eigen::VectorXd y;
    Eigen::VectorXd z;
    Eigen::VectorXd s;
    double objective = 0.0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double gap = 0.0;
    int iterations = 0;
    std::string message;
};

SolveResult solve(const Program& prog, const SolverSettings& settings = {});

/// True when the result is usable at the given tolerance: either Optimal, or
/// an iteration-limit stop whose best iterate has all residuals within 10x
/// tol. Degenerate instances (strict complementarity failing at the optimum)
/// routinely land in the second bucket; the objective there is still accurate
/// to far better than tol.
inline bool near_optimal(const SolveResult& r, double tol) {
    if (r.status == SolveStatus::Optimal)
        return true;
    return r.status == SolveStatus::IterLimit && r.primal_residual <= 10.0 * tol &&
           r.dual_residual <= 10.0 * tol && r.gap <= 10.0 * tol;
}

/// Residuals recomputed from scratch, independent of solver state. ok is
/// false when any measure exceeds 10x the stated tolerance.
struct CertificateReport {
    bool ok = false;
    double eq_residual = 0.0;
    double cone_violation = 0.0;
    double dual_residual = 0.0;
    double dual_cone_violation = 0.0;
    double gap = 0.0;
    std::string detail;
};

CertificateReport check_certificate(const Program& prog, const SolveResult& result,
                                    double tol = 1e-8);

/// Plain-text sparse-triplet serialization, the exchange format for
/// cross-checking against external solvers.
std::string program_to_text(const Program& prog);
Program program_from_text(const std::string& text);
void save_program(const std::string& path, const Program& prog);
Program load_program(const std::string& path);

/// Entry point for external solutions produced from the text format: wraps a
/// primal vector (and optional duals) so check_certificate can judge it.
SolveResult import_solution(const Program& prog, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& y = {}, const Eigen::VectorXd& z = {});

} // namespace ddrc::conic
