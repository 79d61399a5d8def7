#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>

namespace ddrc::data {

/// Recorded input/output/disturbance realizations. Signals are stored one
/// column per time step (u is n_u x T and so on). All three signals share the
/// same length T >= 1.
struct TrajectoryData {
    Eigen::MatrixXd u;
    Eigen::MatrixXd y;
    Eigen::MatrixXd w;

    Eigen::Index length() const { return u.cols(); }
    Eigen::Index n_u() const { return u.rows(); }
    Eigen::Index n_y() const { return y.rows(); }
    Eigen::Index n_w() const { return w.rows(); }

    /// Stacked (u, w) signal, the one whose excitation matters for the OCP.
    Eigen::MatrixXd input_disturbance_stack() const;

    void validate() const;
};

/// Past/future Hankel blocks of one recorded trajectory. Per signal v, the
/// order-(t_ini + horizon) block-Hankel matrix is split into its first
/// t_ini * n_v rows (past) and the remaining horizon * n_v rows (future).
struct HankelSystem {
    Eigen::MatrixXd u_past, y_past, w_past;
    Eigen::MatrixXd u_future, y_future, w_future;
    Eigen::Index t_ini = 0;
    Eigen::Index horizon = 0;

    Eigen::Index n_u() const { return u_future.rows() / horizon; }
    Eigen::Index n_y() const { return y_future.rows() / horizon; }
    Eigen::Index n_w() const { return w_future.rows() / horizon; }
    Eigen::Index depth() const { return u_past.cols(); }

    /// [u_past; y_past; w_past] stacked, the left-hand side of the past
    /// pinning constraint.
    Eigen::MatrixXd past_stack() const;
};

/// Sample mean and covariance of a disturbance record.
struct EmpiricalMoments {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;
};

struct PersistencyReport {
    bool exciting = false;
    Eigen::Index required_rank = 0;
    Eigen::Index rank = 0;
    double smallest_accepted_sv = 0.0;
    double largest_sv = 0.0;
};

/// Reads a trajectory CSV (header `t,u_0..,y_0..,w_0..`, one row per step).
/// T is inferred from the row count.
TrajectoryData load_trajectory(const std::filesystem::path& path,
                               Eigen::Index n_u, Eigen::Index n_y, Eigen::Index n_w);

/// Writes the trajectory CSV; inverse of load_trajectory, byte-stable.
void save_trajectory(const std::filesystem::path& path, const TrajectoryData& data);
std::string trajectory_to_csv(const TrajectoryData& data);

/// Block-Hankel matrix of order t: t * n_v rows, T - t + 1 columns; column j
/// is the stacked window [v_j; ...; v_{j+t-1}].
Eigen::MatrixXd build_hankel(const Eigen::MatrixXd& signal, Eigen::Index order);

/// Persistency of excitation of a signal at a given order: full row rank of
/// its Hankel matrix. Singular values >= 1e-9 * sigma_max count as nonzero.
PersistencyReport check_persistency(const Eigen::MatrixXd& signal, Eigen::Index order);

/// Persistency of the stacked (u, w) record, the condition the OCP needs at
/// order n_x + N + T_ini.
PersistencyReport check_persistency(const TrajectoryData& data, Eigen::Index order);

/// Builds the order-(t_ini + horizon) Hankel matrix per signal and splits
/// rows into past and future blocks.
HankelSystem split_hankel(const TrajectoryData& data, Eigen::Index t_ini, Eigen::Index horizon);

/// Sample mean and covariance (divisor n-1, explicitly symmetrized). Throws
/// if fewer than 2 samples or if the covariance is not positive definite.
EmpiricalMoments estimate_moments(const Eigen::MatrixXd& w);

std::string moments_to_json(const EmpiricalMoments& m);
EmpiricalMoments moments_from_json(const std::string& text);

} // namespace ddrc::data
