#pragma once

#include "ddrc/data.hpp"
#include "ddrc/ocp.hpp"
#include "ddrc/rng.hpp"

#include <cstdint>
#include <vector>

namespace ddrc::sim {

/// Ground-truth realization dynamics x+ = Ax + Bu + Ew, y = Cx + Du + Fw.
/// Only the simulation side knows this model; the synthesis pipeline sees
/// recorded data.
struct LtiModel {
    Eigen::MatrixXd A, B, C, D, E, F;

    Eigen::Index n_x() const { return A.rows(); }
    Eigen::Index n_u() const { return B.cols(); }
    Eigen::Index n_y() const { return C.rows(); }
    Eigen::Index n_w() const { return E.cols(); }

    /// Controllability of (A, [B E]) and observability of (A, C), by rank
    /// with singular-value cutoff 1e-9.
    void validate() const;
};

/// Disturbance law used to drive simulations. The true moments are derived
/// once in finalize() and cached; the synthesis pipeline never reads them
/// except through recorded samples or when constructing oracle anchors.
struct DisturbanceModel {
    enum class Kind { Gaussian, GaussianMixture, Uniform };
    Kind kind = Kind::Gaussian;
    std::vector<double> weights;
    std::vector<Eigen::VectorXd> means;
    std::vector<Eigen::MatrixXd> covariances;

    Eigen::VectorXd m_true;
    Eigen::MatrixXd gamma_true;

    Eigen::Index n_w() const { return means.empty() ? 0 : means.front().size(); }

    /// Validates the parameters, computes (m_true, gamma_true), caches
    /// component factors for sampling.
    void finalize();

    Eigen::VectorXd sample(RngStream& rng) const;

private:
    std::vector<Eigen::MatrixXd> factors_;
};

struct RolloutResult {
    Eigen::MatrixXd u;
    Eigen::MatrixXd y;
    double cost = 0.0;
};

/// Monte Carlo summary: average realized cost and the count of (trajectory,
/// step, half-space) triples where a constraint was violated.
struct McReport {
    double J = 0.0;
    long violations = 0;
    int n_traj = 0;
    std::uint64_t seed = 0;
    /// Filled only when traces are requested; one entry per trajectory.
    std::vector<RolloutResult> traces;
};

/// The double-integrator benchmark plant: disturbance enters the state
/// directly, the output is the position.
LtiModel benchmark_model();

/// The benchmark disturbance: two-component Gaussian mixture with
/// m_true = 0 and gamma_true = [[0.03, 0.02], [0.02, 0.03]].
DisturbanceModel benchmark_disturbance();

/// The benchmark control problem: horizon 10, unit weights, both-sided input
/// bound |u| <= 0.5 at risk level 0.2, and a quiescent two-step initial
/// window placing the plant at position 2.2 with velocity 0.55.
ocp::OcpSpec benchmark_ocp_spec();

/// Random controllable/observable model with standard normal entries,
/// redrawn until the rank checks pass.
LtiModel random_system(Eigen::Index n_x, Eigen::Index n_u, Eigen::Index n_y,
                       Eigen::Index n_w, std::uint64_t seed);

/// Initial state consistent with the measured window: least squares on the
/// observability map after subtracting the forced response. Throws when the
/// map is rank deficient or the window is inconsistent.
Eigen::VectorXd reconstruct_state(const LtiModel& model, const Eigen::MatrixXd& u_ini,
                                  const Eigen::MatrixXd& y_ini, const Eigen::MatrixXd& w_ini);

/// Applies the policy to one realized disturbance sequence (n_w x N) from
/// initial state x0: u_k = ubar_k + sum_{i<k} K_{k,i} w_i, dynamics per the
/// model, cost sum_k |y_k|_Q^2 + |u_k|_R^2 with the spec's weights.
RolloutResult simulate_rollout(const LtiModel& model, const ocp::Policy& policy,
                               const ocp::OcpSpec& spec, const Eigen::VectorXd& x0,
                               const Eigen::MatrixXd& w_seq);

/// n_traj independent rollouts from the spec's reconstructed initial state,
/// per-trajectory seed substreams, violation counting against the spec's
/// half-spaces (a'u > 1 or a'y > 1). Deterministic per seed; the report is
/// byte-identical for any jobs count because per-trajectory results are
/// stored first and reduced in trajectory order.
McReport monte_carlo(const LtiModel& model, const ocp::Policy& policy,
                     const ocp::OcpSpec& spec, const DisturbanceModel& dist, int n_traj,
                     std::uint64_t seed, bool keep_traces = false, int jobs = 1);

/// Model-based counterpart of the data-driven assembly: same decision
/// blocks, cones, and causality rows, but the coefficient dynamics are
/// propagated explicitly through the model instead of pinned by recorded
/// Hankel blocks. The per-column auxiliary slot stores the state trajectory
/// (N+1 states) in place of the Hankel preimage.
ocp::AssembledOcp pce_oracle(const LtiModel& model, const ocp::OcpSpec& spec,
                             const ambiguity::VertexSet& delta);

/// Excitation record for synthesis: i.i.d. uniform [-1, 1] inputs, zero
/// initial state, persistency re-checked at pe_order on the stacked (u, w)
/// signal, with up to 10 seed-derived retries.
data::TrajectoryData generate_experiment_data(const LtiModel& model,
                                              const DisturbanceModel& dist, Eigen::Index T,
                                              Eigen::Index pe_order, std::uint64_t seed);

/// One labeled row of the experiment table (a Monte Carlo report plus the
/// ambiguity cell it came from).
struct McRow {
    std::string label;
    double rho_bar = 0.0;
    int samples = 0;
    McReport rep;
};

/// CSV with header `case,rho_bar,s,J,violations,n_traj,seed`; byte-stable
/// for fixed inputs.
std::string mc_rows_to_csv(const std::vector<McRow>& rows);

/// Per-trajectory trace CSV `traj,k,u...,y...` for the first max_traj kept
/// traces (all of them when max_traj <= 0).
std::string traces_to_csv(const McReport& rep, int max_traj = 0);

} // namespace ddrc::sim
