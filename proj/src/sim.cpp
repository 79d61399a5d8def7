#include "ddrc/sim.hpp"

#include "ddrc/errors.hpp"
#include "ddrc/io.hpp"
#include "ddrc/pce.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <thread>
#include <utility>
#include <vector>

namespace ddrc::sim {

namespace {

Eigen::Index rank_of(const Eigen::MatrixXd& M) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0)
        return 0;
    const double cut = 1e-9 * sv(0);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) >= cut && sv(i) > 0.0)
            ++r;
    return r;
}

} // namespace

void LtiModel::validate() const {
    const Eigen::Index nx = n_x();
    if (A.cols() != nx || B.rows() != nx || E.rows() != nx)
        throw ConfigError("LtiModel: A must be square and B, E must have n_x rows");
    if (C.cols() != nx || D.rows() != C.rows() || F.rows() != C.rows())
        throw ConfigError("LtiModel: C, D, F must share the output dimension");
    if (D.cols() != B.cols() || F.cols() != E.cols())
        throw ConfigError("LtiModel: D, F must share columns with B, E");

    Eigen::MatrixXd BE(nx, B.cols() + E.cols());
    BE << B, E;
    Eigen::MatrixXd ctrb(nx, nx * BE.cols());
    Eigen::MatrixXd blk = BE;
    for (Eigen::Index k = 0; k < nx; ++k) {
        ctrb.middleCols(k * BE.cols(), BE.cols()) = blk;
        blk = A * blk;
    }
    if (rank_of(ctrb) != nx)
        throw ConfigError("LtiModel: (A, [B E]) is not controllable");

    Eigen::MatrixXd obsv(nx * C.rows(), nx);
    Eigen::MatrixXd row = C;
    for (Eigen::Index k = 0; k < nx; ++k) {
        obsv.middleRows(k * C.rows(), C.rows()) = row;
        row = row * A;
    }
    if (rank_of(obsv) != nx)
        throw ConfigError("LtiModel: (A, C) is not observable");
}

void DisturbanceModel::finalize() {
    const std::size_t parts = means.size();
    if (parts == 0 || covariances.size() != parts)
        throw ConfigError("DisturbanceModel: means and covariances must be nonempty and paired");
    if (kind != Kind::GaussianMixture && parts != 1)
        throw ConfigError("DisturbanceModel: only a mixture may have several components");
    if (weights.empty() && parts == 1)
        weights = {1.0};
    if (weights.size() != parts)
        throw ConfigError("DisturbanceModel: one weight per component");

    const Eigen::Index nw = means.front().size();
    double wsum = 0.0;
    for (double wk : weights) {
        if (wk <= 0.0)
            throw ConfigError("DisturbanceModel: weights must be positive");
        wsum += wk;
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw ConfigError("DisturbanceModel: weights must sum to 1");

    factors_.clear();
    factors_.reserve(parts);
    m_true = Eigen::VectorXd::Zero(nw);
    Eigen::MatrixXd second = Eigen::MatrixXd::Zero(nw, nw);
    for (std::size_t i = 0; i < parts; ++i) {
        if (means[i].size() != nw || covariances[i].rows() != nw || covariances[i].cols() != nw)
            throw ConfigError("DisturbanceModel: component dimensions disagree");
        if (kind == Kind::Uniform) {
            // Entrywise uniform needs an axis-aligned covariance; the factor
            // stores half-widths sqrt(3 * Gamma_ii) on the diagonal.
            Eigen::MatrixXd off = covariances[i];
            off.diagonal().setZero();
            if (off.cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, covariances[i].norm()))
                throw ConfigError("DisturbanceModel: uniform law needs a diagonal covariance");
            Eigen::VectorXd half = (3.0 * covariances[i].diagonal().array()).sqrt();
            factors_.push_back(half.asDiagonal());
        } else {
            factors_.push_back(pce::sqrt_psd(covariances[i]));
        }
        m_true += weights[i] * means[i];
        second += weights[i] * (covariances[i] + means[i] * means[i].transpose());
    }
    gamma_true = second - m_true * m_true.transpose();
    gamma_true = 0.5 * (gamma_true + gamma_true.transpose());
}

Eigen::VectorXd DisturbanceModel::sample(RngStream& rng) const {
    if (factors_.empty())
        throw ConfigError("DisturbanceModel: finalize() must run before sampling");
    std::size_t comp = 0;
    if (kind == Kind::GaussianMixture && means.size() > 1) {
        const double u = rng.uniform();
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc || i + 1 == weights.size()) {
                comp = i;
                break;
            }
        }
    }
    const Eigen::Index nw = means[comp].size();
    if (kind == Kind::Uniform)
        return means[comp] + factors_[comp] * rng.uniform_vector(nw, -1.0, 1.0);
    return means[comp] + factors_[comp] * rng.normal_vector(nw);
}

LtiModel benchmark_model() {
    LtiModel m;
    m.A.resize(2, 2);
    m.A << 1.0, 1.0, 0.0, 1.0;
    m.B.resize(2, 1);
    m.B << 0.5, 1.0;
    m.C.resize(1, 2);
    m.C << 1.0, 0.0;
    m.D = Eigen::MatrixXd::Zero(1, 1);
    m.E = Eigen::MatrixXd::Identity(2, 2);
    m.F = Eigen::MatrixXd::Zero(1, 2);
    m.validate();
    return m;
}

DisturbanceModel benchmark_disturbance() {
    DisturbanceModel d;
    d.kind = DisturbanceModel::Kind::GaussianMixture;
    d.weights = {0.5, 0.5};
    const double c = std::sqrt(0.02);
    Eigen::VectorXd mu(2);
    mu << c, c;
    d.means = {mu, -mu};
    d.covariances = {0.01 * Eigen::MatrixXd::Identity(2, 2),
                     0.01 * Eigen::MatrixXd::Identity(2, 2)};
    d.finalize();
    return d;
}

ocp::OcpSpec benchmark_ocp_spec() {
    ocp::OcpSpec spec;
    spec.N = 10;
    spec.T_ini = 2;
    spec.Q = Eigen::MatrixXd::Identity(1, 1);
    spec.R = Eigen::MatrixXd::Identity(1, 1);
    // |u| <= 0.5 written as a'u <= 1 with a = +-2.
    spec.input_halfspaces.resize(2, 1);
    spec.input_halfspaces << 2.0, -2.0;
    spec.output_halfspaces.resize(0, 1);
    spec.eps_u = 0.2;
    spec.eps_y = 0.5;
    spec.u_ini = Eigen::MatrixXd::Zero(1, 2);
    spec.w_ini = Eigen::MatrixXd::Zero(2, 2);
    // Zero-input drift: outputs (1.1, 1.65) imply velocity 0.55, so the
    // plant starts at position 2.2 at time zero, far enough out that the
    // input bound genuinely binds but the task stays feasible.
    spec.y_ini.resize(1, 2);
    spec.y_ini << 1.1, 1.65;
    spec.validate();
    return spec;
}

LtiModel random_system(Eigen::Index n_x, Eigen::Index n_u, Eigen::Index n_y,
                       Eigen::Index n_w, std::uint64_t seed) {
    if (n_x < 1 || n_u < 1 || n_y < 1 || n_w < 1)
        throw ConfigError("random_system: all dimensions must be positive");
    for (std::uint64_t attempt = 0; attempt < 50; ++attempt) {
        RngStream rng = RngStream::substream(seed, attempt);
        const auto draw = [&](Eigen::Index r, Eigen::Index c) {
            Eigen::MatrixXd M(r, c);
            for (Eigen::Index i = 0; i < r; ++i)
                for (Eigen::Index j = 0; j < c; ++j)
                    M(i, j) = rng.normal();
            return M;
        };
        LtiModel m;
        m.A = draw(n_x, n_x);
        // Spectral radius capped at 0.95 so recorded rollouts stay bounded.
        const double rho = m.A.eigenvalues().cwiseAbs().maxCoeff();
        if (rho > 0.95)
            m.A *= 0.95 / rho;
        m.B = draw(n_x, n_u);
        m.C = draw(n_y, n_x);
        m.D = draw(n_y, n_u);
        m.E = draw(n_x, n_w);
        m.F = Eigen::MatrixXd::Zero(n_y, n_w);
        try {
            m.validate();
        } catch (const ConfigError&) {
            continue;
        }
        return m;
    }
    throw DataError("random_system: no controllable and observable draw in 50 attempts");
}

Eigen::VectorXd reconstruct_state(const LtiModel& model, const Eigen::MatrixXd& u_ini,
                                  const Eigen::MatrixXd& y_ini, const Eigen::MatrixXd& w_ini) {
    const Eigen::Index nx = model.n_x(), ny = model.n_y();
    const Eigen::Index T = u_ini.cols();
    if (y_ini.cols() != T || w_ini.cols() != T || u_ini.rows() != model.n_u() ||
        y_ini.rows() != ny || w_ini.rows() != model.n_w())
        throw ConfigError("reconstruct_state: window shapes do not match the model");

    // y = O x0 + forced response; solve for the window's starting state,
    // then roll it forward to the end of the window.
    Eigen::MatrixXd O(T * ny, nx);
    Eigen::VectorXd forced(T * ny);
    Eigen::MatrixXd CAk = model.C;
    Eigen::VectorXd z = Eigen::VectorXd::Zero(nx);
    for (Eigen::Index k = 0; k < T; ++k) {
        O.middleRows(k * ny, ny) = CAk;
        CAk = CAk * model.A;
        forced.segment(k * ny, ny) =
            model.C * z + model.D * u_ini.col(k) + model.F * w_ini.col(k);
        z = model.A * z + model.B * u_ini.col(k) + model.E * w_ini.col(k);
    }
    Eigen::VectorXd rhs(T * ny);
    for (Eigen::Index k = 0; k < T; ++k)
        rhs.segment(k * ny, ny) = y_ini.col(k) - forced.segment(k * ny, ny);

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(O);
    cod.setThreshold(1e-9);
    if (cod.rank() < nx)
        throw DataError("reconstruct_state: the window is too short to determine the state");
    const Eigen::VectorXd x0 = cod.solve(rhs);
    if ((O * x0 - rhs).norm() > 1e-6 * (1.0 + rhs.norm()))
        throw DataError("reconstruct_state: the window is inconsistent with the model");

    Eigen::VectorXd x = x0;
    for (Eigen::Index k = 0; k < T; ++k)
        x = model.A * x + model.B * u_ini.col(k) + model.E * w_ini.col(k);
    return x;
}

RolloutResult simulate_rollout(const LtiModel& model, const ocp::Policy& policy,
                               const ocp::OcpSpec& spec, const Eigen::VectorXd& x0,
                               const Eigen::MatrixXd& w_seq) {
    const Eigen::Index N = spec.N, n_u = spec.n_u(), n_y = spec.n_y(), n_w = spec.n_w();
    if (model.n_u() != n_u || model.n_y() != n_y || model.n_w() != n_w ||
        model.n_x() != x0.size())
        throw ConfigError("simulate_rollout: model and spec dimensions disagree");
    if (w_seq.rows() != n_w || w_seq.cols() != N)
        throw ConfigError("simulate_rollout: disturbance sequence must be n_w x N");
    if (policy.ubar.size() != N * n_u || policy.K_w.rows() != N * n_u ||
        policy.K_w.cols() != N * n_w)
        throw ConfigError("simulate_rollout: policy shapes do not match the spec");

    // Column-major flattening of w_seq is exactly the time-major stack the
    // feedback acts on.
    const Eigen::VectorXd w_flat = Eigen::Map<const Eigen::VectorXd>(w_seq.data(), w_seq.size());
    const Eigen::VectorXd u_flat = policy.ubar + policy.K_w * w_flat;

    RolloutResult out;
    out.u.resize(n_u, N);
    out.y.resize(n_y, N);
    Eigen::VectorXd x = x0;
    for (Eigen::Index k = 0; k < N; ++k) {
        const Eigen::VectorXd u = u_flat.segment(k * n_u, n_u);
        const Eigen::VectorXd w = w_seq.col(k);
        const Eigen::VectorXd y = model.C * x + model.D * u + model.F * w;
        out.u.col(k) = u;
        out.y.col(k) = y;
        out.cost += y.dot(spec.Q * y) + u.dot(spec.R * u);
        x = model.A * x + model.B * u + model.E * w;
    }
    return out;
}

McReport monte_carlo(const LtiModel& model, const ocp::Policy& policy,
                     const ocp::OcpSpec& spec, const DisturbanceModel& dist, int n_traj,
                     std::uint64_t seed, bool keep_traces, int jobs) {
    if (n_traj < 1)
        throw ConfigError("monte_carlo: need at least one trajectory");
    if (jobs < 1)
        throw ConfigError("monte_carlo: jobs must be positive");
    if (dist.n_w() != spec.n_w())
        throw ConfigError("monte_carlo: disturbance dimension does not match the spec");
    const Eigen::VectorXd x0 = reconstruct_state(model, spec.u_ini, spec.y_ini, spec.w_ini);

    std::vector<double> cost(static_cast<std::size_t>(n_traj));
    std::vector<long> viol(static_cast<std::size_t>(n_traj), 0);
    std::vector<RolloutResult> rolls;
    if (keep_traces)
        rolls.resize(static_cast<std::size_t>(n_traj));

    auto run_range = [&](int lo, int hi) {
        for (int t = lo; t < hi; ++t) {
            RngStream rng = RngStream::substream(seed, static_cast<std::uint64_t>(t));
            Eigen::MatrixXd w_seq(spec.n_w(), spec.N);
            for (Eigen::Index k = 0; k < spec.N; ++k)
                w_seq.col(k) = dist.sample(rng);
            RolloutResult roll = simulate_rollout(model, policy, spec, x0, w_seq);
            const std::size_t ti = static_cast<std::size_t>(t);
            cost[ti] = roll.cost;
            // Tolerance matters: a nominally saturated input sits exactly on
            // the boundary, and the solver's rounding decides which side of
            // it the decoded policy lands on. Without the slack a hairline
            // overshoot of 1e-9 would be counted on every trajectory.
            // Genuine noise-driven violations overshoot by orders more.
            constexpr double viol_tol = 1e-5;
            for (Eigen::Index k = 0; k < spec.N; ++k) {
                for (Eigen::Index i = 0; i < spec.input_halfspaces.rows(); ++i)
                    if (spec.input_halfspaces.row(i).dot(roll.u.col(k)) > 1.0 + viol_tol)
                        ++viol[ti];
                for (Eigen::Index i = 0; i < spec.output_halfspaces.rows(); ++i)
                    if (spec.output_halfspaces.row(i).dot(roll.y.col(k)) > 1.0 + viol_tol)
                        ++viol[ti];
            }
            if (keep_traces)
                rolls[ti] = std::move(roll);
        }
    };

    const int workers = std::min(jobs, n_traj);
    if (workers <= 1) {
        run_range(0, n_traj);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const int chunk = (n_traj + workers - 1) / workers;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run_range, w * chunk, std::min(n_traj, (w + 1) * chunk));
        for (auto& th : pool)
            th.join();
    }

    McReport rep;
    rep.n_traj = n_traj;
    rep.seed = seed;
    double total = 0.0;
    for (int t = 0; t < n_traj; ++t) {
        total += cost[static_cast<std::size_t>(t)];
        rep.violations += viol[static_cast<std::size_t>(t)];
    }
    if (keep_traces)
        rep.traces = std::move(rolls);
    rep.J = total / static_cast<double>(n_traj);
    return rep;
}

ocp::AssembledOcp pce_oracle(const LtiModel& model, const ocp::OcpSpec& spec,
                             const ambiguity::VertexSet& delta) {
    spec.validate();
    model.validate();
    if (delta.vertices.empty())
        throw ConfigError("pce_oracle: vertex set is empty");
    if (model.n_u() != spec.n_u() || model.n_y() != spec.n_y() || model.n_w() != spec.n_w())
        throw ConfigError("pce_oracle: model and spec dimensions disagree");

    const Eigen::Index n_u = spec.n_u(), n_y = spec.n_y(), n_w = spec.n_w();
    const Eigen::Index n_x = model.n_x();
    const Eigen::Index N = spec.N, L = N * n_w + 1;
    const Eigen::Index V = static_cast<Eigen::Index>(delta.vertices.size());
    const Eigen::VectorXd x_ini = reconstruct_state(model, spec.u_ini, spec.y_ini, spec.w_ini);

    ocp::AssembledOcp out;
    out.lifted.reserve(static_cast<std::size_t>(V));
    for (const auto& vert : delta.vertices) {
        if (vert.W01.rows() != n_w)
            throw ConfigError("pce_oracle: vertex dimension does not match n_w");
        out.lifted.push_back(ambiguity::lift_vertex(vert, N).Wseq);
    }

    // Same block layout as the data-driven assembly, but the per-column
    // auxiliary slot holds the state trajectory x_0..x_N instead of a Hankel
    // preimage. The shared cones then apply verbatim.
    ocp::Layout& lay = out.layout;
    lay.n_u = n_u;
    lay.n_y = n_y;
    lay.n_w = n_w;
    lay.N = N;
    lay.T_ini = spec.T_ini;
    lay.L = L;
    lay.depth = (N + 1) * n_x;
    lay.g_dim = lay.depth;
    lay.vertices = V;
    lay.eliminated_g = false;
    lay.alpha_index = 0;
    lay.ubar_offset = 1;
    lay.kw_offset = 1 + N * n_u;
    lay.vertex_offset = lay.kw_offset + (N * (N - 1) / 2) * n_u * n_w;
    lay.num_vars = lay.vertex_offset + V * lay.per_vertex();

    conic::Program& prog = out.program;
    prog.c = Eigen::VectorXd::Zero(lay.num_vars);
    prog.c(lay.alpha_index) = 1.0;

    std::vector<Eigen::Triplet<double>> trip;
    std::vector<double> rhs;
    Eigen::Index row = 0;
    const auto push = [&](Eigen::Index r, Eigen::Index c, double v) {
        if (v != 0.0)
            trip.emplace_back(static_cast<int>(r), static_cast<int>(c), v);
    };
    const auto x_var = [&](Eigen::Index v, Eigen::Index j, Eigen::Index k, Eigen::Index a) {
        return lay.g_var(v, j, k * n_x + a);
    };

    for (Eigen::Index v = 0; v < V; ++v) {
        const Eigen::MatrixXd& Wseq = out.lifted[static_cast<std::size_t>(v)];
        for (Eigen::Index j = 0; j < L; ++j) {
            // Initial state: the reconstructed state on the deterministic
            // column, zero on every stochastic one.
            for (Eigen::Index a = 0; a < n_x; ++a) {
                push(row, x_var(v, j, 0, a), 1.0);
                rhs.push_back(j == 0 ? x_ini(a) : 0.0);
                ++row;
            }
            for (Eigen::Index k = 0; k < N; ++k) {
                const Eigen::VectorXd wk = Wseq.block(k * n_w, j, n_w, 1);
                // x_{k+1} = A x_k + B u_k + E w_k, coefficient by coefficient.
                const Eigen::VectorXd ew = model.E * wk;
                for (Eigen::Index a = 0; a < n_x; ++a) {
                    for (Eigen::Index b = 0; b < n_x; ++b)
                        push(row, x_var(v, j, k, b), model.A(a, b));
                    for (Eigen::Index b = 0; b < n_u; ++b)
                        push(row, lay.u_var(v, j, k, b), model.B(a, b));
                    push(row, x_var(v, j, k + 1, a), -1.0);
                    rhs.push_back(-ew(a));
                    ++row;
                }
                // y_k = C x_k + D u_k + F w_k.
                const Eigen::VectorXd fw = model.F * wk;
                for (Eigen::Index a = 0; a < n_y; ++a) {
                    for (Eigen::Index b = 0; b < n_x; ++b)
                        push(row, x_var(v, j, k, b), model.C(a, b));
                    for (Eigen::Index b = 0; b < n_u; ++b)
                        push(row, lay.u_var(v, j, k, b), model.D(a, b));
                    push(row, lay.y_var(v, j, k, a), -1.0);
                    rhs.push_back(-fw(a));
                    ++row;
                }
            }
            // Causality rows, identical to the data-driven assembly.
            for (Eigen::Index k = 0; k < N; ++k)
                for (Eigen::Index a = 0; a < n_u; ++a) {
                    push(row, lay.u_var(v, j, k, a), 1.0);
                    for (Eigen::Index i = 0; i < k; ++i)
                        for (Eigen::Index b = 0; b < n_w; ++b)
                            push(row, lay.kw_var(k, i, a, b), -Wseq(i * n_w + b, j));
                    if (j == 0)
                        push(row, lay.ubar_offset + k * n_u + a, -1.0);
                    rhs.push_back(0.0);
                    ++row;
                }
        }
    }

    Eigen::SparseMatrix<double> A(row, lay.num_vars);
    A.setFromTriplets(trip.begin(), trip.end());
    prog.A = std::move(A);
    prog.b = Eigen::Map<const Eigen::VectorXd>(rhs.data(), row);

    ocp::append_shared_cones(prog, lay, spec);
    prog.validate();
    return out;
}

data::TrajectoryData generate_experiment_data(const LtiModel& model,
                                              const DisturbanceModel& dist, Eigen::Index T,
                                              Eigen::Index pe_order, std::uint64_t seed) {
    if (T < 1)
        throw ConfigError("generate_experiment_data: record length must be positive");
    if (pe_order < 1)
        throw ConfigError("generate_experiment_data: excitation order must be positive");
    if (dist.n_w() != model.n_w())
        throw ConfigError("generate_experiment_data: disturbance dimension mismatch");

    for (std::uint64_t attempt = 0; attempt < 10; ++attempt) {
        RngStream rng = RngStream::substream(seed, attempt);
        data::TrajectoryData rec;
        rec.u.resize(model.n_u(), T);
        rec.y.resize(model.n_y(), T);
        rec.w.resize(model.n_w(), T);
        Eigen::VectorXd x = Eigen::VectorXd::Zero(model.n_x());
        for (Eigen::Index k = 0; k < T; ++k) {
            rec.u.col(k) = rng.uniform_vector(model.n_u(), -1.0, 1.0);
            rec.w.col(k) = dist.sample(rng);
            rec.y.col(k) = model.C * x + model.D * rec.u.col(k) + model.F * rec.w.col(k);
            x = model.A * x + model.B * rec.u.col(k) + model.E * rec.w.col(k);
        }
        if (data::check_persistency(rec, pe_order).exciting)
            return rec;
    }
    throw DataError("generate_experiment_data: no persistently exciting record in 10 attempts");
}

std::string mc_rows_to_csv(const std::vector<McRow>& rows) {
    std::string out = "case,rho_bar,s,J,violations,n_traj,seed\n";
    for (const auto& row : rows) {
        out += row.label;
        out += ',' + io::format_double(row.rho_bar);
        out += ',' + std::to_string(row.samples);
        out += ',' + io::format_double(row.rep.J);
        out += ',' + std::to_string(row.rep.violations);
        out += ',' + std::to_string(row.rep.n_traj);
        out += ',' + std::to_string(row.rep.seed);
        out += '\n';
    }
    return out;
}

std::string traces_to_csv(const McReport& rep, int max_traj) {
    if (rep.traces.empty())
        throw ConfigError("traces_to_csv: the report was produced without traces");
    const Eigen::Index n_u = rep.traces.front().u.rows();
    const Eigen::Index n_y = rep.traces.front().y.rows();
    std::string out = "traj,k";
    for (Eigen::Index i = 0; i < n_u; ++i)
        out += ",u_" + std::to_string(i);
    for (Eigen::Index i = 0; i < n_y; ++i)
        out += ",y_" + std::to_string(i);
    out += '\n';
    std::size_t count = rep.traces.size();
    if (max_traj > 0)
        count = std::min(count, static_cast<std::size_t>(max_traj));
    for (std::size_t t = 0; t < count; ++t) {
        const RolloutResult& roll = rep.traces[t];
        for (Eigen::Index k = 0; k < roll.u.cols(); ++k) {
            out += std::to_string(t);
            out += ',' + std::to_string(k);
            for (Eigen::Index i = 0; i < n_u; ++i)
                out += ',' + io::format_double(roll.u(i, k));
            for (Eigen::Index i = 0; i < n_y; ++i)
                out += ',' + io::format_double(roll.y(i, k));
            out += '\n';
        }
    }
    return out;
}

} // namespace ddrc::sim
