#include "ddrc/ambiguity.hpp"

#include "ddrc/conic.hpp"
#include "ddrc/errors.hpp"
#include "ddrc/rng.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <utility>

namespace ddrc::ambiguity {

void GelbrichSet::validate() const {
    if (rho < 0.0)
        throw ConfigError("GelbrichSet: radius must be nonnegative");
    if (gamma_bar.rows() != gamma_bar.cols() || gamma_bar.rows() != m_bar.size())
        throw ConfigError("GelbrichSet: anchor dimensions disagree");
    if (!pce::is_symmetric(gamma_bar))
        throw ConfigError("GelbrichSet: covariance anchor is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gamma_bar);
    if (eig.eigenvalues().minCoeff() <= 0.0)
        throw ConfigError("GelbrichSet: covariance anchor is not positive definite");
}

void CoeffAmbiguity::validate() const {
    if (rho < 0.0)
        throw ConfigError("CoeffAmbiguity: radius must be nonnegative");
    if (anchor.rows() + 1 != anchor.cols())
        throw ConfigError("CoeffAmbiguity: anchor must be n_w x (n_w + 1)");
    const Eigen::MatrixXd half = anchor.rightCols(anchor.rows());
    if (!pce::is_symmetric(half, 1e-8))
        throw ConfigError("CoeffAmbiguity: anchor square-root block is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (half + half.transpose()));
    if (eig.eigenvalues().minCoeff() <= 0.0)
        throw ConfigError("CoeffAmbiguity: anchor square-root block is not positive definite");
}

CoeffAmbiguity coeff_ambiguity(const GelbrichSet& set) {
    set.validate();
    CoeffAmbiguity a;
    a.gamma_bar_half = pce::sqrt_psd(set.gamma_bar);
    a.anchor.resize(set.m_bar.size(), set.m_bar.size() + 1);
    a.anchor.col(0) = set.m_bar;
    a.anchor.rightCols(set.m_bar.size()) = a.gamma_bar_half;
    a.rho = set.rho;
    return a;
}

bool membership(const pce::DisturbanceCoeffs& w, const CoeffAmbiguity& a) {
    if (w.W01.rows() != a.anchor.rows() || w.W01.cols() != a.anchor.cols())
        throw ConfigError("membership: coefficient shape does not match the anchor");
    if (pce::coeff_distance(w.W01, a.anchor) > a.rho + 1e-12)
        return false;
    const Eigen::MatrixXd product = a.gamma_bar_half * w.sqrt_block();
    if (!pce::is_symmetric(product, 1e-8))
        return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (product + product.transpose()));
    return eig.eigenvalues().minCoeff() >= -1e-10;
}

VertexSet sample_ambiguity(const CoeffAmbiguity& a, int s, std::uint64_t seed) {
    a.validate();
    if (s < 1)
        throw ConfigError("sample_ambiguity: target count must be at least 1");

    VertexSet out;
    out.seed = seed;
    out.requested = s;
    out.vertices.push_back(pce::DisturbanceCoeffs{a.anchor});
    if (a.rho == 0.0)
        return out;

    const Eigen::Index nw = a.n_w();
    // Candidates are drawn as (mean, S) with S symmetric and W1 recovered as
    // gamma_bar^{-1/2} S. A uniform draw of W1 entries would hit the
    // symmetric-product cone with probability zero; in S the cone has
    // interior. The box below covers the coefficient ball: members satisfy
    // |S - gamma_bar|_F <= |gamma_bar^{1/2}|_2 * rho.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a.gamma_bar_half);
    const Eigen::MatrixXd half_inv =
        eig.eigenvectors() * eig.eigenvalues().cwiseInverse().asDiagonal() *
        eig.eigenvectors().transpose();
    const Eigen::MatrixXd gamma_bar = a.gamma_bar_half * a.gamma_bar_half.transpose();
    const double s_width = a.rho * eig.eigenvalues().maxCoeff();

    RngStream rng(seed);
    const long cap = 1000L * s;
    long draws = 0;
    while (out.retained() < s && draws < cap) {
        ++draws;
        pce::DisturbanceCoeffs cand;
        cand.W01.resize(nw, nw + 1);
        for (Eigen::Index i = 0; i < nw; ++i)
            cand.W01(i, 0) = a.anchor(i, 0) + rng.uniform(-a.rho, a.rho);
        Eigen::MatrixXd S(nw, nw);
        for (Eigen::Index i = 0; i < nw; ++i)
            for (Eigen::Index j = i; j < nw; ++j) {
                S(i, j) = gamma_bar(i, j) + rng.uniform(-s_width, s_width);
                S(j, i) = S(i, j);
            }
        cand.W01.rightCols(nw) = half_inv * S;
        if (membership(cand, a))
            out.vertices.push_back(std::move(cand));
    }
    out.capped = out.retained() < s;
    return out;
}

VertexSet prune_to_vertices(const VertexSet& v) {
    if (v.vertices.empty())
        throw ConfigError("prune_to_vertices: empty vertex set");

    const Eigen::Index d = v.vertices.front().W01.size();
    std::vector<Eigen::VectorXd> flat;
    flat.reserve(v.vertices.size());
    for (const auto& p : v.vertices)
        flat.push_back(Eigen::Map<const Eigen::VectorXd>(p.W01.data(), d));

    std::vector<bool> alive(v.vertices.size(), true);
    for (std::size_t i = 0; i < flat.size(); ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < flat.size(); ++j)
            if (alive[j] && j != i)
                others.push_back(j);
        if (others.empty())
            continue;

        // Distance from point i to the hull of the others:
        // min t  s.t.  |sum_j lambda_j v_j - v_i| <= t, sum lambda = 1,
        // lambda >= 0. The point is redundant when the distance vanishes.
        const Eigen::Index k = static_cast<Eigen::Index>(others.size());
        conic::Program prog;
        prog.c = Eigen::VectorXd::Zero(k + 1);
        prog.c(k) = 1.0;
        Eigen::SparseMatrix<double> A(1, k + 1);
        for (Eigen::Index j = 0; j < k; ++j)
            A.coeffRef(0, j) = 1.0;
        prog.A = A;
        prog.b = Eigen::VectorXd::Ones(1);

        conic::SocConstraint dist;
        Eigen::MatrixXd F = Eigen::MatrixXd::Zero(d, k + 1);
        for (Eigen::Index j = 0; j < k; ++j)
            F.col(j) = flat[others[j]];
        dist.F = F.sparseView();
        dist.g = -flat[i];
        dist.h.resize(k + 1);
        dist.h.coeffRef(k) = 1.0;
        dist.d = 0.0;
        prog.cones.push_back(std::move(dist));
        for (Eigen::Index j = 0; j < k; ++j) {
            conic::SocConstraint nonneg;
            nonneg.F.resize(0, k + 1);
            nonneg.g.resize(0);
            nonneg.h.resize(k + 1);
            nonneg.h.coeffRef(j) = 1.0;
            nonneg.d = 0.0;
            prog.cones.push_back(std::move(nonneg));
        }

        const conic::SolveResult res = conic::solve(prog);
        if (res.status != conic::SolveStatus::Optimal)
            throw DataError("prune_to_vertices: conic solve failed (" + res.message + ")");
        if (res.objective <= 1e-8 * (1.0 + flat[i].norm()))
            alive[i] = false;
    }

    VertexSet out;
    out.seed = v.seed;
    out.requested = v.requested;
    out.capped = v.capped;
    for (std::size_t i = 0; i < v.vertices.size(); ++i)
        if (alive[i])
            out.vertices.push_back(v.vertices[i]);
    return out;
}

pce::StackedDisturbance lift_vertex(const pce::DisturbanceCoeffs& w, Eigen::Index horizon) {
    return pce::stack_disturbance(w, horizon);
}

std::string vertex_set_to_json(const VertexSet& v) {
    nlohmann::json j;
    j["seed"] = v.seed;
    j["s"] = v.requested;
    j["retained"] = v.retained();
    auto& verts = j["vertices"] = nlohmann::json::array();
    for (const auto& p : v.vertices) {
        nlohmann::json entry = nlohmann::json::array();
        for (Eigen::Index r = 0; r < p.W01.rows(); ++r)
            for (Eigen::Index c = 0; c < p.W01.cols(); ++c)
                entry.push_back(p.W01(r, c));
        verts.push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
}

VertexSet vertex_set_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("vertex set JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw ConfigError("vertex set JSON: missing or empty vertices array");

    VertexSet v;
    v.seed = j.value("seed", std::uint64_t{0});
    v.requested = j.value("s", 0);
    for (const auto& entry : j["vertices"]) {
        const std::size_t len = entry.size();
        // len = n_w * (n_w + 1) determines the shape.
        Eigen::Index nw = 0;
        while (static_cast<std::size_t>(nw * (nw + 1)) < len)
            ++nw;
        if (static_cast<std::size_t>(nw * (nw + 1)) != len || nw == 0)
            throw ConfigError("vertex set JSON: vertex length is not n_w*(n_w+1)");
        pce::DisturbanceCoeffs p;
        p.W01.resize(nw, nw + 1);
        std::size_t idx = 0;
        for (Eigen::Index r = 0; r < nw; ++r)
            for (Eigen::Index c = 0; c < nw + 1; ++c)
                p.W01(r, c) = entry[idx++].get<double>();
        v.vertices.push_back(std::move(p));
    }
    v.capped = v.requested > 0 && v.retained() < v.requested;
    return v;
}

} // namespace ddrc::ambiguity
