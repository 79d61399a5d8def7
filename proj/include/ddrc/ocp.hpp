#pragma once

#include "ddrc/ambiguity.hpp"
#include "ddrc/conic.hpp"
#include "ddrc/data.hpp"

#include <string>
#include <vector>

namespace ddrc::ocp {

/// Everything the control problem needs besides the recorded data: horizon,
/// weights, half-space constraints with their risk levels, and the measured
/// window immediately before time zero. Half-spaces are stored pre-normalized
/// to a'x <= 1.
struct OcpSpec {
    Eigen::Index N = 0;
    Eigen::Index T_ini = 0;
    Eigen::MatrixXd Q;
    Eigen::MatrixXd R;
    Eigen::MatrixXd input_halfspaces;
    Eigen::MatrixXd output_halfspaces;
    double eps_u = 0.5;
    double eps_y = 0.5;
    Eigen::MatrixXd u_ini;
    Eigen::MatrixXd y_ini;
    Eigen::MatrixXd w_ini;

    Eigen::Index n_u() const { return R.rows(); }
    Eigen::Index n_y() const { return Q.rows(); }
    Eigen::Index n_w() const { return w_ini.rows(); }

    void validate() const;
};

/// Affine causal disturbance feedback u = ubar + K_w w together with the
/// certified worst-case cost. K_w is stored dense; blocks (k, i) with i >= k
/// are exact zeros by construction.
struct Policy {
    Eigen::VectorXd ubar;
    Eigen::MatrixXd K_w;
    double alpha = 0.0;
};

/// Index map from named blocks to positions in the flat variable vector.
/// Order: alpha, ubar, strictly-lower K_w blocks, then per-vertex blocks
/// (vertex-major, basis-column-minor; within one column u, y, g). When g
/// elimination is on, the g slot holds nullspace coordinates instead and
/// `g_dim` shrinks accordingly.
struct Layout {
    Eigen::Index n_u = 0, n_y = 0, n_w = 0;
    Eigen::Index N = 0, T_ini = 0, L = 0;
    Eigen::Index depth = 0;
    Eigen::Index g_dim = 0;
    Eigen::Index vertices = 0;
    Eigen::Index num_vars = 0;
    Eigen::Index alpha_index = 0;
    Eigen::Index ubar_offset = 0;
    Eigen::Index kw_offset = 0;
    Eigen::Index vertex_offset = 0;
    bool eliminated_g = false;

    Eigen::Index per_column() const { return N * (n_u + n_y) + g_dim; }
    Eigen::Index per_vertex() const { return per_column() * L; }

    // K_w block (k, i) exists only for i < k; entry (a, b) of that block.
    Eigen::Index kw_var(Eigen::Index k, Eigen::Index i, Eigen::Index a, Eigen::Index b) const;
    Eigen::Index u_var(Eigen::Index v, Eigen::Index j, Eigen::Index k, Eigen::Index a) const;
    Eigen::Index y_var(Eigen::Index v, Eigen::Index j, Eigen::Index k, Eigen::Index a) const;
    Eigen::Index g_var(Eigen::Index v, Eigen::Index j, Eigen::Index c) const;
};

/// The assembled program plus the layout needed to interpret its solution,
/// and the lifted disturbance coefficients per vertex (kept for simulation
/// and reporting).
struct AssembledOcp {
    conic::Program program;
    Layout layout;
    std::vector<Eigen::MatrixXd> lifted;
};

double sigma(double eps);

/// Builds the sampled robust program: per vertex, fresh coefficient
/// variables (u, y, g) for each basis column, pinned to the recorded past
/// through the Hankel blocks, coupled through the shared feedback (ubar,
/// K_w), bounded by the shared epigraph alpha, with distributionally robust
/// chance constraints per half-space and step. Objective: minimize alpha.
/// eliminate_g replaces each g by coordinates in the nullspace of the pinned
/// rows; same feasible set, smaller program.
AssembledOcp build_ocp(const data::HankelSystem& H, const OcpSpec& spec,
                       const ambiguity::VertexSet& delta, bool eliminate_g = false);

/// Appends the cones every assembly shares: the per-vertex objective
/// epigraph and the distributionally robust half-space constraints. They
/// touch only the u/y/alpha blocks, so any assembler that honors the layout
/// can reuse them.
void append_shared_cones(conic::Program& prog, const Layout& layout, const OcpSpec& spec);

Policy decode_policy(const Eigen::VectorXd& x, const Layout& layout);

/// Writes the policy blocks of a solution vector (other blocks untouched).
void encode_policy(const Policy& policy, const Layout& layout, Eigen::VectorXd& x);

/// a'v0 + sigma(eps) * |a'V_rest| - 1; <= 0 means the chance constraint
/// holds for every distribution consistent with the coefficients.
double evaluate_chance_margin(const pce::PceMatrix& V, const Eigen::VectorXd& a, double eps);

std::string ocp_spec_to_json(const OcpSpec& spec);
OcpSpec ocp_spec_from_json(const std::string& text);

/// Policy and layout round-trips for the file-based pipeline: a build stage
/// writes the layout next to the program text, a solve stage reads it back
/// to decode the policy from the solver's primal vector.
std::string policy_to_json(const Policy& policy);
Policy policy_from_json(const std::string& text);
std::string layout_to_json(const Layout& layout);
Layout layout_from_json(const std::string& text);

} // namespace ddrc::ocp
