#include "ddrc/pce.hpp"

#include "ddrc/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace ddrc::pce {

bool is_symmetric(const Eigen::MatrixXd& a, double tol) {
    if (a.rows() != a.cols())
        return false;
    const double scale = std::max(1.0, a.norm());
    return (a - a.transpose()).norm() <= tol * scale;
}

void DisturbanceCoeffs::validate() const {
    if (W01.cols() != W01.rows() + 1)
        throw ConfigError("disturbance coefficients must be n_w x (n_w + 1)");
}

namespace {

// Eigendecomposition with the symmetry gate applied first. All spectral
// operations in this module funnel through here.
Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> decompose(const Eigen::MatrixXd& a,
                                                         const char* name) {
    if (!is_symmetric(a))
        throw ConfigError(std::string(name) + " is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (a + a.transpose()));
    if (eig.info() != Eigen::Success)
        throw ConfigError(std::string(name) + ": eigendecomposition failed");
    return eig;
}

// Inverse principal square root of a positive definite matrix.
Eigen::MatrixXd inv_sqrt_pd(const Eigen::MatrixXd& a, const char* name) {
    auto eig = decompose(a, name);
    const Eigen::VectorXd& lam = eig.eigenvalues();
    const double lam_max = lam.maxCoeff();
    if (lam_max <= 0.0 || lam.minCoeff() <= 1e-12 * lam_max)
        throw ConfigError(std::string(name) + " is not invertible at working precision");
    return eig.eigenvectors() * lam.cwiseSqrt().cwiseInverse().asDiagonal() *
           eig.eigenvectors().transpose();
}

} // namespace

Eigen::MatrixXd sqrt_psd(const Eigen::MatrixXd& gamma) {
    auto eig = decompose(gamma, "sqrt_psd input");
    Eigen::VectorXd lam = eig.eigenvalues();
    const double lam_max = std::max(lam.maxCoeff(), 0.0);
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam(i) < -1e-8 * lam_max)
            throw ConfigError("sqrt_psd input is indefinite");
        if (lam(i) < 1e-12 * lam_max || lam(i) < 0.0)
            lam(i) = 0.0;
    }
    return eig.eigenvectors() * lam.cwiseSqrt().asDiagonal() * eig.eigenvectors().transpose();
}

Eigen::MatrixXd psi_map(const Eigen::MatrixXd& gamma, const Eigen::MatrixXd& gamma_bar) {
    const Eigen::MatrixXd half = sqrt_psd(gamma_bar);
    const Eigen::MatrixXd inv_half = inv_sqrt_pd(gamma_bar, "psi_map anchor");
    return inv_half * sqrt_psd(half * gamma * half);
}

Eigen::MatrixXd psi_inverse(const Eigen::MatrixXd& w1, const Eigen::MatrixXd& gamma_bar) {
    if (w1.rows() != w1.cols() || w1.rows() != gamma_bar.rows())
        throw ConfigError("psi_inverse: shape mismatch");
    const Eigen::MatrixXd product = sqrt_psd(gamma_bar) * w1;
    if (!is_symmetric(product, 1e-8))
        throw ConfigError("psi_inverse: input is not in the image of the square-root map");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (product + product.transpose()));
    const double lam_max = std::max(eig.eigenvalues().maxCoeff(), 0.0);
    if (eig.eigenvalues().minCoeff() < -std::max(1e-10, 1e-8 * lam_max))
        throw ConfigError("psi_inverse: input is not in the image of the square-root map");
    return w1 * w1.transpose();
}

double gelbrich_distance(const Eigen::VectorXd& m, const Eigen::MatrixXd& gamma,
                         const Eigen::VectorXd& m_bar, const Eigen::MatrixXd& gamma_bar) {
    if (m.size() != m_bar.size() || gamma.rows() != gamma_bar.rows())
        throw ConfigError("gelbrich_distance: shape mismatch");
    const Eigen::MatrixXd half = sqrt_psd(gamma_bar);
    const Eigen::MatrixXd root = sqrt_psd(half * gamma * half);
    double trace_term = gamma.trace() + gamma_bar.trace() - 2.0 * root.trace();
    if (trace_term < 0.0) {
        if (trace_term < -1e-10)
            throw ConfigError("gelbrich_distance: negative trace term beyond rounding");
        trace_term = 0.0;
    }
    return std::sqrt((m - m_bar).squaredNorm() + trace_term);
}

double coeff_distance(const Eigen::MatrixXd& W01, const Eigen::MatrixXd& anchor) {
    if (W01.rows() != anchor.rows() || W01.cols() != anchor.cols())
        throw ConfigError("coeff_distance: shape mismatch");
    return (W01 - anchor).norm();
}

StackedDisturbance stack_disturbance(const DisturbanceCoeffs& w, Eigen::Index horizon) {
    if (horizon < 1)
        throw ConfigError("stack_disturbance: horizon must be positive");
    w.validate();
    const Eigen::Index nw = w.n_w();
    StackedDisturbance out;
    out.horizon = horizon;
    out.n_w = nw;
    out.Wseq = Eigen::MatrixXd::Zero(horizon * nw, horizon * nw + 1);
    for (Eigen::Index k = 0; k < horizon; ++k) {
        out.Wseq.block(k * nw, 0, nw, 1) = w.W01.col(0);
        out.Wseq.block(k * nw, 1 + k * nw, nw, nw) = w.W01.rightCols(nw);
    }
    return out;
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> moments_from_pce(const PceMatrix& coeffs) {
    if (coeffs.cols() < 1)
        throw ConfigError("moments_from_pce: coefficient matrix has no columns");
    const Eigen::MatrixXd stoch = coeffs.rightCols(coeffs.cols() - 1);
    return {coeffs.col(0), stoch * stoch.transpose()};
}

} // namespace ddrc::pce
