#pragma once

#include <Eigen/Dense>
#include <utility>

namespace ddrc::pce {

/// Coefficient matrix of a chaos-expanded random vector: one row per
/// component, column j multiplies basis polynomial j. Column 0 (the constant
/// polynomial) carries the mean. All basis polynomials here have degree <= 1,
/// so no symbolic polynomial machinery exists; everything acts on these
/// matrices directly.
using PceMatrix = Eigen::MatrixXd;

/// One-step disturbance coefficients [w0 | W1]: mean in column 0, the
/// generalized covariance square root in the remaining n_w columns.
struct DisturbanceCoeffs {
    Eigen::MatrixXd W01;

    Eigen::Index n_w() const { return W01.rows(); }
    Eigen::VectorXd mean() const { return W01.col(0); }
    Eigen::MatrixXd sqrt_block() const { return W01.rightCols(W01.rows()); }

    void validate() const;
};

/// Coefficients of the length-N disturbance sequence in the shared basis
/// {1, xi^i_k}: the block structure [1_N (x) w0, I_N (x) W1] with
/// L = N * n_w + 1 columns. Off-block entries are exact zeros.
struct StackedDisturbance {
    Eigen::MatrixXd Wseq;
    Eigen::Index horizon = 0;
    Eigen::Index n_w = 0;

    Eigen::Index basis_dim() const { return Wseq.cols(); }
};

/// Principal square root of a symmetric PSD matrix. Eigenvalues below
/// 1e-12 * lambda_max are clamped to zero; below -1e-8 * lambda_max the input
/// is rejected as indefinite.
Eigen::MatrixXd sqrt_psd(const Eigen::MatrixXd& gamma);

/// Generalized square root anchored at gamma_bar:
/// Psi(Gamma) = gamma_bar^{-1/2} (gamma_bar^{1/2} Gamma gamma_bar^{1/2})^{1/2}.
/// Satisfies Psi(Gamma) Psi(Gamma)^T = Gamma; unlike the principal root it is
/// linear enough in Gamma to make the ambiguity ball convex in coefficients.
Eigen::MatrixXd psi_map(const Eigen::MatrixXd& gamma, const Eigen::MatrixXd& gamma_bar);

/// Inverse of psi_map on its image: requires gamma_bar^{1/2} * W1 symmetric
/// PSD, returns Gamma = W1 W1^T.
Eigen::MatrixXd psi_inverse(const Eigen::MatrixXd& w1, const Eigen::MatrixXd& gamma_bar);

/// Distance between two mean/covariance pairs:
/// sqrt(|m - m_bar|^2 + tr(Gamma + gamma_bar - 2 (gamma_bar^{1/2} Gamma gamma_bar^{1/2})^{1/2})).
/// A trace argument in [-1e-10, 0) is treated as rounding and clamped to 0.
double gelbrich_distance(const Eigen::VectorXd& m, const Eigen::MatrixXd& gamma,
                         const Eigen::VectorXd& m_bar, const Eigen::MatrixXd& gamma_bar);

/// Frobenius distance between coefficient matrices. Equals the Gelbrich
/// distance when both are Psi-images over the same anchor.
double coeff_distance(const Eigen::MatrixXd& W01, const Eigen::MatrixXd& anchor);

/// Lifts one-step coefficients to the length-N sequence layout
/// [1_N (x) w0, I_N (x) W1].
StackedDisturbance stack_disturbance(const DisturbanceCoeffs& w, Eigen::Index horizon);

/// Mean and covariance encoded by a coefficient matrix over an orthonormal
/// basis: mean is column 0, covariance is the Gram matrix of the rest.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> moments_from_pce(const PceMatrix& coeffs);

/// Symmetry gate used by every "symmetric PSD" precondition in this module.
bool is_symmetric(const Eigen::MatrixXd& a, double tol = 1e-10);

} // namespace ddrc::pce
