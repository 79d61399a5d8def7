#include "ddrc/ocp.hpp"

#include "ddrc/errors.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>

#include <cmath>
#include <utility>

namespace ddrc::ocp {

namespace {

void check_psd(const Eigen::MatrixXd& M, const char* name, bool strict) {
    if (M.rows() != M.cols())
        throw ConfigError(std::string(name) + " must be square");
    if (!pce::is_symmetric(M, 1e-10))
        throw ConfigError(std::string(name) + " must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(M);
    const double lam_min = eig.eigenvalues().minCoeff();
    const double lam_max = std::max(0.0, eig.eigenvalues().maxCoeff());
    if (strict ? lam_min <= 0.0 : lam_min < -1e-10 * std::max(1.0, lam_max))
        throw ConfigError(std::string(name) +
                          (strict ? " must be positive definite" : " must be positive semidefinite"));
}

} // namespace

void OcpSpec::validate() const {
    if (N < 1)
        throw ConfigError("OcpSpec: horizon must be at least 1");
    if (T_ini < 1)
        throw ConfigError("OcpSpec: past window must be at least 1");
    check_psd(Q, "Q", false);
    check_psd(R, "R", true);
    if (eps_u <= 0.0 || eps_u >= 1.0 || eps_y <= 0.0 || eps_y >= 1.0)
        throw ConfigError("OcpSpec: risk levels must lie strictly between 0 and 1");
    if (u_ini.rows() != n_u() || u_ini.cols() != T_ini || y_ini.rows() != n_y() ||
        y_ini.cols() != T_ini || w_ini.cols() != T_ini)
        throw ConfigError("OcpSpec: init window shapes must be n x T_ini");
    if (input_halfspaces.size() > 0 && input_halfspaces.cols() != n_u())
        throw ConfigError("OcpSpec: input half-space dimension mismatch");
    if (output_halfspaces.size() > 0 && output_halfspaces.cols() != n_y())
        throw ConfigError("OcpSpec: output half-space dimension mismatch");
}

double sigma(double eps) {
    if (eps <= 0.0 || eps >= 1.0)
        throw ConfigError("sigma: risk level must lie strictly between 0 and 1");
    return std::sqrt((1.0 - eps) / eps);
}

Eigen::Index Layout::kw_var(Eigen::Index k, Eigen::Index i, Eigen::Index a,
                            Eigen::Index b) const {
    // Strictly-lower blocks only; block (k, i) sits at position k(k-1)/2 + i.
    return kw_offset + (k * (k - 1) / 2 + i) * n_u * n_w + a * n_w + b;
}

Eigen::Index Layout::u_var(Eigen::Index v, Eigen::Index j, Eigen::Index k,
                           Eigen::Index a) const {
    return vertex_offset + v * per_vertex() + j * per_column() + k * n_u + a;
}

Eigen::Index Layout::y_var(Eigen::Index v, Eigen::Index j, Eigen::Index k,
                           Eigen::Index a) const {
    return vertex_offset + v * per_vertex() + j * per_column() + N * n_u + k * n_y + a;
}

Eigen::Index Layout::g_var(Eigen::Index v, Eigen::Index j, Eigen::Index c) const {
    return vertex_offset + v * per_vertex() + j * per_column() + N * (n_u + n_y) + c;
}

AssembledOcp build_ocp(const data::HankelSystem& H, const OcpSpec& spec,
                       const ambiguity::VertexSet& delta, bool eliminate_g) {
    spec.validate();
    if (delta.vertices.empty())
        throw ConfigError("build_ocp: vertex set is empty");
    if (H.t_ini != spec.T_ini || H.horizon != spec.N || H.n_u() != spec.n_u() ||
        H.n_y() != spec.n_y() || H.n_w() != spec.n_w())
        throw ConfigError("build_ocp: Hankel blocks do not match the problem spec");

    const Eigen::Index n_u = spec.n_u(), n_y = spec.n_y(), n_w = spec.n_w();
    const Eigen::Index N = spec.N, L = N * n_w + 1;
    const Eigen::Index depth = H.depth();
    const Eigen::Index V = static_cast<Eigen::Index>(delta.vertices.size());

    AssembledOcp out;
    out.lifted.reserve(static_cast<std::size_t>(V));
    for (const auto& vert : delta.vertices) {
        if (vert.W01.rows() != n_w)
            throw ConfigError("build_ocp: vertex dimension does not match n_w");
        out.lifted.push_back(ambiguity::lift_vertex(vert, N).Wseq);
    }

    const Eigen::MatrixXd past = H.past_stack();
    Eigen::VectorXd past_vec(past.rows());
    {
        Eigen::VectorXd stacked(past.rows());
        const auto flatten = [](const Eigen::MatrixXd& M) {
            return Eigen::Map<const Eigen::VectorXd>(M.data(), M.size());
        };
        stacked << flatten(spec.u_ini), flatten(spec.y_ini), flatten(spec.w_ini);
        past_vec = stacked;
    }

    // Optional reduction: the rows that pin g (the past block and the fixed
    // disturbance rows) are shared by every column, so g can be swapped for
    // coordinates in their nullspace once and for all.
    Eigen::MatrixXd Z, UZ, YZ;
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> pinned_cod;
    Eigen::MatrixXd pinned;
    Eigen::Index g_dim = depth;
    if (eliminate_g) {
        pinned.resize(past.rows() + N * n_w, depth);
        pinned << past, H.w_future;
        pinned_cod.compute(pinned);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(pinned);
        Z = lu.kernel();
        if (Z.cols() == 1 && Z.isZero())
            Z.resize(depth, 0);
        g_dim = Z.cols();
        UZ = H.u_future * Z;
        YZ = H.y_future * Z;
    }

    Layout& lay = out.layout;
    lay.n_u = n_u;
    lay.n_y = n_y;
    lay.n_w = n_w;
    lay.N = N;
    lay.T_ini = spec.T_ini;
    lay.L = L;
    lay.depth = depth;
    lay.g_dim = g_dim;
    lay.vertices = V;
    lay.eliminated_g = eliminate_g;
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
    trip.reserve(static_cast<std::size_t>(
        V * L * (past.rows() * depth / 4 + N * (n_u + n_y) * (g_dim + 2) + N * n_w * depth / 2 +
                 N * n_u * (N * n_w + 2))));

    for (Eigen::Index v = 0; v < V; ++v) {
        const Eigen::MatrixXd& Wseq = out.lifted[static_cast<std::size_t>(v)];
        for (Eigen::Index j = 0; j < L; ++j) {
            if (!eliminate_g) {
                // Past pinning: H_p g = past window for the deterministic
                // column, zero for every stochastic one.
                for (Eigen::Index r = 0; r < past.rows(); ++r) {
                    for (Eigen::Index c = 0; c < depth; ++c)
                        push(row, lay.g_var(v, j, c), past(r, c));
                    rhs.push_back(j == 0 ? past_vec(r) : 0.0);
                    ++row;
                }
                // Future consistency rows.
                for (Eigen::Index r = 0; r < N * n_u; ++r) {
                    for (Eigen::Index c = 0; c < depth; ++c)
                        push(row, lay.g_var(v, j, c), H.u_future(r, c));
                    push(row, lay.u_var(v, j, r / n_u, r % n_u), -1.0);
                    rhs.push_back(0.0);
                    ++row;
                }
                for (Eigen::Index r = 0; r < N * n_y; ++r) {
                    for (Eigen::Index c = 0; c < depth; ++c)
                        push(row, lay.g_var(v, j, c), H.y_future(r, c));
                    push(row, lay.y_var(v, j, r / n_y, r % n_y), -1.0);
                    rhs.push_back(0.0);
                    ++row;
                }
                for (Eigen::Index r = 0; r < N * n_w; ++r) {
                    for (Eigen::Index c = 0; c < depth; ++c)
                        push(row, lay.g_var(v, j, c), H.w_future(r, c));
                    rhs.push_back(Wseq(r, j));
                    ++row;
                }
            } else {
                Eigen::VectorXd pin_rhs(pinned.rows());
                pin_rhs.head(past.rows()) = j == 0 ? past_vec : Eigen::VectorXd::Zero(past.rows());
                pin_rhs.tail(N * n_w) = Wseq.col(j);
                const Eigen::VectorXd part = pinned_cod.solve(pin_rhs);
                if ((pinned * part - pin_rhs).norm() > 1e-8 * (1.0 + pin_rhs.norm()))
                    throw DataError("build_ocp: recorded data cannot reproduce the pinned rows");
                const Eigen::VectorXd u_part = H.u_future * part;
                const Eigen::VectorXd y_part = H.y_future * part;
                for (Eigen::Index r = 0; r < N * n_u; ++r) {
                    for (Eigen::Index c = 0; c < g_dim; ++c)
                        push(row, lay.g_var(v, j, c), UZ(r, c));
                    push(row, lay.u_var(v, j, r / n_u, r % n_u), -1.0);
                    rhs.push_back(-u_part(r));
                    ++row;
                }
                for (Eigen::Index r = 0; r < N * n_y; ++r) {
                    for (Eigen::Index c = 0; c < g_dim; ++c)
                        push(row, lay.g_var(v, j, c), YZ(r, c));
                    push(row, lay.y_var(v, j, r / n_y, r % n_y), -1.0);
                    rhs.push_back(-y_part(r));
                    ++row;
                }
            }
            // Causality: the deterministic input column carries the
            // feedforward, every column sees the feedback acting on the
            // matching disturbance column.
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

    append_shared_cones(prog, lay, spec);
    prog.validate();
    return out;
}

void append_shared_cones(conic::Program& prog, const Layout& lay, const OcpSpec& spec) {
    const Eigen::Index n_u = lay.n_u, n_y = lay.n_y;
    const Eigen::Index N = lay.N, L = lay.L, V = lay.vertices;
    const Eigen::MatrixXd Qh = pce::sqrt_psd(spec.Q);
    const Eigen::MatrixXd Rh = pce::sqrt_psd(spec.R);
    const double sig_u = sigma(spec.eps_u), sig_y = sigma(spec.eps_y);

    // Epigraph per vertex: |[2 z; alpha - 1]| <= alpha + 1 encodes
    // |z|^2 <= alpha, z the weighted coefficient stack.
    const Eigen::Index zlen = L * N * (n_u + n_y);
    for (Eigen::Index v = 0; v < V; ++v) {
        conic::SocConstraint cone;
        std::vector<Eigen::Triplet<double>> ft;
        Eigen::Index zr = 0;
        for (Eigen::Index j = 0; j < L; ++j) {
            for (Eigen::Index k = 0; k < N; ++k)
                for (Eigen::Index a = 0; a < n_y; ++a) {
                    for (Eigen::Index b = 0; b < n_y; ++b)
                        if (Qh(a, b) != 0.0)
                            ft.emplace_back(static_cast<int>(zr),
                                            static_cast<int>(lay.y_var(v, j, k, b)),
                                            2.0 * Qh(a, b));
                    ++zr;
                }
            for (Eigen::Index k = 0; k < N; ++k)
                for (Eigen::Index a = 0; a < n_u; ++a) {
                    for (Eigen::Index b = 0; b < n_u; ++b)
                        if (Rh(a, b) != 0.0)
                            ft.emplace_back(static_cast<int>(zr),
                                            static_cast<int>(lay.u_var(v, j, k, b)),
                                            2.0 * Rh(a, b));
                    ++zr;
                }
        }
        Eigen::SparseMatrix<double> F(zlen + 1, lay.num_vars);
        ft.emplace_back(static_cast<int>(zlen), static_cast<int>(lay.alpha_index), 1.0);
        F.setFromTriplets(ft.begin(), ft.end());
        cone.F = std::move(F);
        cone.g = Eigen::VectorXd::Zero(zlen + 1);
        cone.g(zlen) = -1.0;
        cone.h.resize(lay.num_vars);
        cone.h.coeffRef(lay.alpha_index) = 1.0;
        cone.d = 1.0;
        prog.cones.push_back(std::move(cone));
    }

    // Distributionally robust half-space constraints, one cone per
    // (vertex, step, half-space).
    const auto add_chance = [&](const Eigen::MatrixXd& halfspaces, double sig, bool on_input) {
        for (Eigen::Index v = 0; v < V; ++v)
            for (Eigen::Index k = 0; k < N; ++k)
                for (Eigen::Index i = 0; i < halfspaces.rows(); ++i) {
                    conic::SocConstraint cone;
                    std::vector<Eigen::Triplet<double>> ft;
                    const Eigen::Index dim = on_input ? n_u : n_y;
                    for (Eigen::Index j = 1; j < L; ++j)
                        for (Eigen::Index b = 0; b < dim; ++b) {
                            const double coeff = sig * halfspaces(i, b);
                            if (coeff != 0.0)
                                ft.emplace_back(static_cast<int>(j - 1),
                                                static_cast<int>(on_input ? lay.u_var(v, j, k, b)
                                                                          : lay.y_var(v, j, k, b)),
                                                coeff);
                        }
                    Eigen::SparseMatrix<double> F(L - 1, lay.num_vars);
                    F.setFromTriplets(ft.begin(), ft.end());
                    cone.F = std::move(F);
                    cone.g = Eigen::VectorXd::Zero(L - 1);
                    cone.h.resize(lay.num_vars);
                    for (Eigen::Index b = 0; b < dim; ++b)
                        if (halfspaces(i, b) != 0.0)
                            cone.h.coeffRef(on_input ? lay.u_var(v, 0, k, b)
                                                     : lay.y_var(v, 0, k, b)) = -halfspaces(i, b);
                    cone.d = 1.0;
                    prog.cones.push_back(std::move(cone));
                }
    };
    add_chance(spec.input_halfspaces, sig_u, true);
    add_chance(spec.output_halfspaces, sig_y, false);
}

Policy decode_policy(const Eigen::VectorXd& x, const Layout& lay) {
    if (x.size() != lay.num_vars)
        throw ConfigError("decode_policy: solution length does not match the layout");
    Policy p;
    p.alpha = x(lay.alpha_index);
    p.ubar = x.segment(lay.ubar_offset, lay.N * lay.n_u);
    p.K_w = Eigen::MatrixXd::Zero(lay.N * lay.n_u, lay.N * lay.n_w);
    for (Eigen::Index k = 1; k < lay.N; ++k)
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index a = 0; a < lay.n_u; ++a)
                for (Eigen::Index b = 0; b < lay.n_w; ++b)
                    p.K_w(k * lay.n_u + a, i * lay.n_w + b) = x(lay.kw_var(k, i, a, b));
    return p;
}

void encode_policy(const Policy& p, const Layout& lay, Eigen::VectorXd& x) {
    if (x.size() != lay.num_vars)
        throw ConfigError("encode_policy: vector length does not match the layout");
    if (p.ubar.size() != lay.N * lay.n_u || p.K_w.rows() != lay.N * lay.n_u ||
        p.K_w.cols() != lay.N * lay.n_w)
        throw ConfigError("encode_policy: policy shapes do not match the layout");
    x(lay.alpha_index) = p.alpha;
    x.segment(lay.ubar_offset, lay.N * lay.n_u) = p.ubar;
    for (Eigen::Index k = 1; k < lay.N; ++k)
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index a = 0; a < lay.n_u; ++a)
                for (Eigen::Index b = 0; b < lay.n_w; ++b)
                    x(lay.kw_var(k, i, a, b)) = p.K_w(k * lay.n_u + a, i * lay.n_w + b);
}

double evaluate_chance_margin(const pce::PceMatrix& V, const Eigen::VectorXd& a, double eps) {
    if (V.cols() < 1)
        throw ConfigError("evaluate_chance_margin: coefficient matrix has no columns");
    if (V.rows() != a.size())
        throw ConfigError("evaluate_chance_margin: half-space dimension mismatch");
    const double det = a.dot(V.col(0));
    const double stoch = (a.transpose() * V.rightCols(V.cols() - 1)).norm();
    return det + sigma(eps) * stoch - 1.0;
}

namespace {

nlohmann::json matrix_to_json(const Eigen::MatrixXd& M) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        nlohmann::json cols = nlohmann::json::array();
        for (Eigen::Index c = 0; c < M.cols(); ++c)
            cols.push_back(M(r, c));
        rows.push_back(std::move(cols));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.empty() || !j.front().is_array())
        throw ConfigError(std::string("OcpSpec JSON: ") + what + " must be a 2-D array");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j.front().size());
    Eigen::MatrixXd M(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (static_cast<Eigen::Index>(j[r].size()) != cols)
            throw ConfigError(std::string("OcpSpec JSON: ") + what + " rows have unequal lengths");
        for (Eigen::Index c = 0; c < cols; ++c)
            M(r, c) = j[r][c].get<double>();
    }
    return M;
}

// Time-major list of per-step vectors -> n x T_ini matrix (one column per step).
Eigen::MatrixXd window_from_json(const nlohmann::json& j, const char* what) {
    const Eigen::MatrixXd rows = matrix_from_json(j, what);
    return rows.transpose();
}

nlohmann::json window_to_json(const Eigen::MatrixXd& M) {
    return matrix_to_json(M.transpose());
}

nlohmann::json halfspaces_to_json(const Eigen::MatrixXd& A) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index r = 0; r < A.rows(); ++r) {
        nlohmann::json entry;
        nlohmann::json a = nlohmann::json::array();
        for (Eigen::Index c = 0; c < A.cols(); ++c)
            a.push_back(A(r, c));
        entry["a"] = std::move(a);
        entry["b"] = 1.0;
        arr.push_back(std::move(entry));
    }
    return arr;
}

Eigen::MatrixXd halfspaces_from_json(const nlohmann::json& j, Eigen::Index dim,
                                     const char* what) {
    if (!j.is_array())
        throw ConfigError(std::string("OcpSpec JSON: ") + what + " must be an array");
    Eigen::MatrixXd A(static_cast<Eigen::Index>(j.size()), dim);
    for (Eigen::Index r = 0; r < A.rows(); ++r) {
        const auto& entry = j[r];
        if (!entry.contains("a") || !entry["a"].is_array() ||
            static_cast<Eigen::Index>(entry["a"].size()) != dim)
            throw ConfigError(std::string("OcpSpec JSON: ") + what +
                              " entries need an 'a' vector of the right length");
        const double b = entry.value("b", 1.0);
        if (b <= 0.0)
            throw ConfigError(std::string("OcpSpec JSON: ") + what +
                              " right-hand sides must be positive (a'x <= b, b > 0)");
        for (Eigen::Index c = 0; c < dim; ++c)
            A(r, c) = entry["a"][c].get<double>() / b;
    }
    return A;
}

} // namespace

std::string ocp_spec_to_json(const OcpSpec& spec) {
    spec.validate();
    nlohmann::json j;
    j["N"] = spec.N;
    j["T_ini"] = spec.T_ini;
    j["Q"] = matrix_to_json(spec.Q);
    j["R"] = matrix_to_json(spec.R);
    j["input_halfspaces"] = halfspaces_to_json(spec.input_halfspaces);
    j["output_halfspaces"] = halfspaces_to_json(spec.output_halfspaces);
    j["eps_u"] = spec.eps_u;
    j["eps_y"] = spec.eps_y;
    j["init_window"]["u"] = window_to_json(spec.u_ini);
    j["init_window"]["y"] = window_to_json(spec.y_ini);
    j["init_window"]["w"] = window_to_json(spec.w_ini);
    return j.dump(2) + "\n";
}

OcpSpec ocp_spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("OcpSpec JSON: ") + e.what());
    }
    for (const char* key : {"N", "T_ini", "Q", "R", "eps_u", "eps_y", "init_window"})
        if (!j.contains(key))
            throw ConfigError(std::string("OcpSpec JSON: missing key ") + key);

    OcpSpec spec;
    spec.N = j["N"].get<Eigen::Index>();
    spec.T_ini = j["T_ini"].get<Eigen::Index>();
    spec.Q = matrix_from_json(j["Q"], "Q");
    spec.R = matrix_from_json(j["R"], "R");
    spec.eps_u = j["eps_u"].get<double>();
    spec.eps_y = j["eps_y"].get<double>();
    const auto& win = j["init_window"];
    for (const char* key : {"u", "y", "w"})
        if (!win.contains(key))
            throw ConfigError(std::string("OcpSpec JSON: init_window missing ") + key);
    spec.u_ini = window_from_json(win["u"], "init_window.u");
    spec.y_ini = window_from_json(win["y"], "init_window.y");
    spec.w_ini = window_from_json(win["w"], "init_window.w");
    spec.input_halfspaces = j.contains("input_halfspaces")
                                ? halfspaces_from_json(j["input_halfspaces"], spec.n_u(),
                                                       "input_halfspaces")
                                : Eigen::MatrixXd(0, spec.n_u());
    spec.output_halfspaces = j.contains("output_halfspaces")
                                 ? halfspaces_from_json(j["output_halfspaces"], spec.n_y(),
                                                        "output_halfspaces")
                                 : Eigen::MatrixXd(0, spec.n_y());
    spec.validate();
    return spec;
}

std::string policy_to_json(const Policy& policy) {
    nlohmann::json j;
    j["alpha"] = policy.alpha;
    j["ubar"] = std::vector<double>(policy.ubar.data(), policy.ubar.data() + policy.ubar.size());
    j["K_w"] = matrix_to_json(policy.K_w);
    return j.dump(2) + "\n";
}

Policy policy_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("policy JSON: ") + e.what());
    }
    for (const char* key : {"alpha", "ubar", "K_w"})
        if (!j.contains(key))
            throw ConfigError(std::string("policy JSON: missing key ") + key);
    Policy p;
    p.alpha = j["alpha"].get<double>();
    const auto u = j["ubar"].get<std::vector<double>>();
    p.ubar = Eigen::Map<const Eigen::VectorXd>(u.data(), static_cast<Eigen::Index>(u.size()));
    p.K_w = matrix_from_json(j["K_w"], "K_w");
    if (p.K_w.rows() != p.ubar.size())
        throw ConfigError("policy JSON: K_w row count must match ubar length");
    return p;
}

std::string layout_to_json(const Layout& lay) {
    nlohmann::json j;
    j["n_u"] = lay.n_u;
    j["n_y"] = lay.n_y;
    j["n_w"] = lay.n_w;
    j["N"] = lay.N;
    j["T_ini"] = lay.T_ini;
    j["L"] = lay.L;
    j["depth"] = lay.depth;
    j["g_dim"] = lay.g_dim;
    j["vertices"] = lay.vertices;
    j["num_vars"] = lay.num_vars;
    j["alpha_index"] = lay.alpha_index;
    j["ubar_offset"] = lay.ubar_offset;
    j["kw_offset"] = lay.kw_offset;
    j["vertex_offset"] = lay.vertex_offset;
    j["eliminated_g"] = lay.eliminated_g;
    return j.dump(2) + "\n";
}

Layout layout_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("layout JSON: ") + e.what());
    }
    Layout lay;
    auto req = [&](const char* key) -> const nlohmann::json& {
        if (!j.contains(key))
            throw ConfigError(std::string("layout JSON: missing key ") + key);
        return j[key];
    };
    lay.n_u = req("n_u").get<Eigen::Index>();
    lay.n_y = req("n_y").get<Eigen::Index>();
    lay.n_w = req("n_w").get<Eigen::Index>();
    lay.N = req("N").get<Eigen::Index>();
    lay.T_ini = req("T_ini").get<Eigen::Index>();
    lay.L = req("L").get<Eigen::Index>();
    lay.depth = req("depth").get<Eigen::Index>();
    lay.g_dim = req("g_dim").get<Eigen::Index>();
    lay.vertices = req("vertices").get<Eigen::Index>();
    lay.num_vars = req("num_vars").get<Eigen::Index>();
    lay.alpha_index = req("alpha_index").get<Eigen::Index>();
    lay.ubar_offset = req("ubar_offset").get<Eigen::Index>();
    lay.kw_offset = req("kw_offset").get<Eigen::Index>();
    lay.vertex_offset = req("vertex_offset").get<Eigen::Index>();
    lay.eliminated_g = req("eliminated_g").get<bool>();
    if (lay.n_u <= 0 || lay.N <= 0 || lay.L <= 0 || lay.num_vars <= 0 || lay.vertices <= 0)
        throw ConfigError("layout JSON: dimensions must be positive");
    return lay;
}

} // namespace ddrc::ocp
