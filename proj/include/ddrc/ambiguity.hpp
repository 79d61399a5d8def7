#pragma once

#include "ddrc/pce.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ddrc::ambiguity {

/// Ball of mean/covariance pairs within Gelbrich distance rho of an anchor.
struct GelbrichSet {
    Eigen::VectorXd m_bar;
    Eigen::MatrixXd gamma_bar;
    double rho = 0.0;

    void validate() const;
};

/// Image of a GelbrichSet in coefficient space: the Frobenius ball of radius
/// rho around anchor = [m_bar | gamma_bar^{1/2}], intersected with the cone
/// of matrices whose stochastic block is a generalized square root
/// (gamma_bar^{1/2} W1 symmetric PSD). Frobenius distance here equals the
/// Gelbrich distance of the encoded moments, which is what makes the set a
/// faithful reformulation rather than a relaxation.
struct CoeffAmbiguity {
    Eigen::MatrixXd anchor;
    double rho = 0.0;
    Eigen::MatrixXd gamma_bar_half;

    Eigen::Index n_w() const { return anchor.rows(); }
    void validate() const;
};

/// Finite stand-in for the ambiguity set: the sampled points whose convex
/// hull replaces the ball in the relaxed program. Provenance is kept so runs
/// can be reproduced and serialized sets audited.
struct VertexSet {
    std::vector<pce::DisturbanceCoeffs> vertices;
    std::uint64_t seed = 0;
    int requested = 0;
    bool capped = false;

    Eigen::Index retained() const { return static_cast<Eigen::Index>(vertices.size()); }
};

CoeffAmbiguity coeff_ambiguity(const GelbrichSet& set);

/// Exact membership test for the coefficient set: Frobenius distance to the
/// anchor within rho (+1e-12 slack), gamma_bar^{1/2} W1 symmetric to 1e-8,
/// eigenvalues >= -1e-10.
bool membership(const pce::DisturbanceCoeffs& w, const CoeffAmbiguity& a);

/// Rejection sampling of the coefficient set. Candidates are drawn uniformly
/// from an axis-aligned box around the anchor that covers the ball, in a
/// (mean, symmetric product) parameterization so the square-root cone has
/// positive measure; each candidate is then re-tested by membership, and the
/// anchor itself is always the first vertex. Stops at s accepted points or
/// after 1000*s raw draws, whichever comes first; hitting the cap sets the
/// capped flag but still returns a valid (non-empty) set. Deterministic per
/// seed.
VertexSet sample_ambiguity(const CoeffAmbiguity& a, int s, std::uint64_t seed);

/// Removes every point expressible as a convex combination of the remaining
/// ones (per-point small conic program, tolerance 1e-8). The convex hull is
/// unchanged; provenance fields are carried over.
VertexSet prune_to_vertices(const VertexSet& v);

/// Lift of a one-step vertex to the horizon-length stacked coefficient
/// layout. Delegation kept here because the vertex set owns the lifting step.
pce::StackedDisturbance lift_vertex(const pce::DisturbanceCoeffs& w, Eigen::Index horizon);

std::string vertex_set_to_json(const VertexSet& v);
VertexSet vertex_set_from_json(const std::string& text);

} // namespace ddrc::ambiguity
