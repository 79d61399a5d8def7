#include "ddrc/conic.hpp"

#include "ddrc/errors.hpp"
#include "ddrc/io.hpp"

#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>

namespace ddrc::conic {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void Program::validate() const {
    const Eigen::Index n = c.size();
    if (n < 1)
        throw ConfigError("conic program has no variables");
    if (A.rows() > 0 && A.cols() != n)
        throw ConfigError("equality matrix column count mismatch");
    if (b.size() != A.rows())
        throw ConfigError("equality right-hand side length mismatch");
    for (const SocConstraint& cone : cones) {
        if (cone.F.rows() > 0 && cone.F.cols() != n)
            throw ConfigError("cone F column count mismatch");
        if (cone.g.size() != cone.F.rows())
            throw ConfigError("cone g length mismatch");
        if (cone.h.size() != n)
            throw ConfigError("cone h length mismatch");
    }
}

const char* to_string(SolveStatus status) {
    switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::PrimalInfeasible: return "primal_infeasible";
    case SolveStatus::DualInfeasible: return "dual_infeasible";
    case SolveStatus::IterLimit: return "iteration_limit";
    case SolveStatus::NumericalFailure: return "numerical_failure";
    }
    return "unknown";
}

namespace {

// Internal flattened form: G x + s = h with s in a product of second-order
// cones. Per cone the first slack row carries h'x + d, the rest F x + g.
struct Flat {
    Eigen::Index n = 0, p = 0, m = 0;
    Eigen::SparseMatrix<double> G;
    Eigen::VectorXd hvec;
    std::vector<Eigen::Index> dim;
    std::vector<Eigen::Index> off;
};

Flat flatten(const Program& prog) {
    Flat f;
    f.n = prog.c.size();
    f.p = prog.A.rows();
    Eigen::Index row = 0;
    std::vector<Eigen::Triplet<double>> trips;
    for (const SocConstraint& cone : prog.cones) {
        f.off.push_back(row);
        f.dim.push_back(cone.dim());
        for (Eigen::SparseVector<double>::InnerIterator it(cone.h); it; ++it)
            trips.emplace_back(static_cast<int>(row), static_cast<int>(it.index()),
                               -it.value());
        for (int k = 0; k < cone.F.outerSize(); ++k)
            for (Eigen::SparseMatrix<double>::InnerIterator it(cone.F, k); it; ++it)
                trips.emplace_back(static_cast<int>(row + 1 + it.row()),
                                   static_cast<int>(it.col()), -it.value());
        row += cone.dim();
    }
    f.m = row;
    f.G.resize(f.m, f.n);
    f.G.setFromTriplets(trips.begin(), trips.end());
    f.hvec.resize(f.m);
    row = 0;
    for (const SocConstraint& cone : prog.cones) {
        f.hvec(row) = cone.d;
        if (cone.F.rows() > 0)
            f.hvec.segment(row + 1, cone.F.rows()) = cone.g;
        row += cone.dim();
    }
    return f;
}

// Ruiz equilibration of the stacked [A; G] system. Rows belonging to one
// cone share a single factor, because the cone is invariant only under
// uniform scaling of the whole block; columns scale freely. On return
// A = Ra A0 Dc, G = Rg G0 Dc, b = Ra b0, h = Rg h0, c = Dc c0, with the
// diagonal vectors holding Ra, Rg, Dc for unscaling the solution.
void equilibrate(Eigen::SparseMatrix<double>& A, Eigen::VectorXd& b, Eigen::VectorXd& c,
                 Flat& f, Eigen::VectorXd& dcol, Eigen::VectorXd& era,
                 Eigen::VectorXd& erg) {
    dcol = Eigen::VectorXd::Ones(f.n);
    era = Eigen::VectorXd::Ones(f.p);
    erg = Eigen::VectorXd::Ones(f.m);
    Eigen::VectorXd fa(f.p), fg(f.m), fc(f.n);
    for (int pass = 0; pass < 10; ++pass) {
        Eigen::VectorXd rowmax_a = Eigen::VectorXd::Zero(f.p);
        Eigen::VectorXd rowmax_g = Eigen::VectorXd::Zero(f.m);
        Eigen::VectorXd colmax = Eigen::VectorXd::Zero(f.n);
        for (int k = 0; k < A.outerSize(); ++k)
            for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it) {
                const double a = std::abs(it.value());
                rowmax_a(it.row()) = std::max(rowmax_a(it.row()), a);
                colmax(it.col()) = std::max(colmax(it.col()), a);
            }
        for (int k = 0; k < f.G.outerSize(); ++k)
            for (Eigen::SparseMatrix<double>::InnerIterator it(f.G, k); it; ++it) {
                const double a = std::abs(it.value());
                rowmax_g(it.row()) = std::max(rowmax_g(it.row()), a);
                colmax(it.col()) = std::max(colmax(it.col()), a);
            }
        for (std::size_t i = 0; i < f.dim.size(); ++i) {
            const double mx = rowmax_g.segment(f.off[i], f.dim[i]).maxCoeff();
            rowmax_g.segment(f.off[i], f.dim[i]).setConstant(mx);
        }
        bool settled = true;
        const auto factor = [&settled](double mx) {
            if (mx <= 0.0)
                return 1.0;
            const double sf = 1.0 / std::sqrt(mx);
            if (sf < 0.999 || sf > 1.001)
                settled = false;
            return sf;
        };
        for (Eigen::Index i = 0; i < f.p; ++i)
            fa(i) = factor(rowmax_a(i));
        for (Eigen::Index i = 0; i < f.m; ++i)
            fg(i) = factor(rowmax_g(i));
        for (Eigen::Index j = 0; j < f.n; ++j)
            fc(j) = factor(colmax(j));
        if (settled)
            break;
        for (int k = 0; k < A.outerSize(); ++k)
            for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it)
                it.valueRef() *= fa(it.row()) * fc(it.col());
        for (int k = 0; k < f.G.outerSize(); ++k)
            for (Eigen::SparseMatrix<double>::InnerIterator it(f.G, k); it; ++it)
                it.valueRef() *= fg(it.row()) * fc(it.col());
        era.array() *= fa.array();
        erg.array() *= fg.array();
        dcol.array() *= fc.array();
    }
    b.array() *= era.array();
    f.hvec.array() *= erg.array();
    c.array() *= dcol.array();
}

// Smallest cone eigenvalue over all blocks: per block s0 - |s1|.
double cone_min_eig(const Flat& f, const Eigen::VectorXd& v) {
    double me = kInf;
    for (std::size_t i = 0; i < f.dim.size(); ++i) {
        const Eigen::Index o = f.off[i], q = f.dim[i];
        const double e = q == 1 ? v(o) : v(o) - v.segment(o + 1, q - 1).norm();
        me = std::min(me, e);
    }
    return me;
}

// Same strictness as the scaling computation, so a point accepted here is
// guaranteed usable on the next iteration.
bool strictly_interior(const Flat& f, const Eigen::VectorXd& v) {
    for (std::size_t i = 0; i < f.dim.size(); ++i) {
        const Eigen::Index o = f.off[i], q = f.dim[i];
        if (v(o) <= 0.0)
            return false;
        if (q >= 2 &&
            v(o) * v(o) - v.segment(o + 1, q - 1).squaredNorm() <= 0.0)
            return false;
    }
    return true;
}

void cone_shift(const Flat& f, Eigen::VectorXd& v, double a) {
    for (std::size_t i = 0; i < f.dim.size(); ++i)
        v(f.off[i]) += a;
}

// Largest t >= 0 keeping v + t*dv inside one cone block; v must be interior.
double max_step_block(const Eigen::Ref<const Eigen::VectorXd>& v,
                      const Eigen::Ref<const Eigen::VectorXd>& dv) {
    const Eigen::Index q = v.size();
    if (q == 1)
        return dv(0) >= 0.0 ? kInf : v(0) / -dv(0);
    // Boundary crossing: (v0 + t d0)^2 = |v1 + t d1|^2, smallest positive root.
    const double a = dv(0) * dv(0) - dv.tail(q - 1).squaredNorm();
    const double b = 2.0 * (v(0) * dv(0) - v.tail(q - 1).dot(dv.tail(q - 1)));
    const double c = v(0) * v(0) - v.tail(q - 1).squaredNorm();
    if (std::abs(a) < 1e-300)
        return b >= 0.0 ? kInf : c / -b;
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0)
        return kInf;
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (b + (b >= 0.0 ? sq : -sq));
    double best = kInf;
    const double r1 = qq / a;
    if (r1 > 0.0 && r1 < best)
        best = r1;
    if (qq != 0.0) {
        const double r2 = c / qq;
        if (r2 > 0.0 && r2 < best)
            best = r2;
    }
    return best;
}


// Nesterov-Todd scaling of one cone block. The scaling point wbar satisfies
// eta^2 (2 wbar wbar' - J) z = s; the symmetric scaling matrix is
// W = eta (2 root root' - J) with root the Jordan square root of wbar, so
// that W z = W^{-1} s = lam and W^2 = eta^2 (2 wbar wbar' - J). For the KKT
// system W^2 is written as eta^2 (D + u u' - v v') with diagonal
// D = diag(|wbar_1|^2, 1, ..., 1), u = (wbar_0, 2 wbar_1), v = (0, sqrt2
// wbar_1), which costs one uniform diagonal plus two border columns per cone.
struct Scaling {
    Eigen::Index q = 1;
    double eta = 1.0, eta2 = 1.0;
    double d0 = 0.0;
    Eigen::VectorXd root;
    Eigen::VectorXd lam;
    Eigen::VectorXd u, v;
};

bool compute_scaling(const Eigen::Ref<const Eigen::VectorXd>& s,
                     const Eigen::Ref<const Eigen::VectorXd>& z, Scaling& sc) {
    const Eigen::Index q = s.size();
    sc.q = q;
    if (q == 1) {
        if (s(0) <= 0.0 || z(0) <= 0.0)
            return false;
        sc.eta2 = s(0) / z(0);
        sc.eta = std::sqrt(sc.eta2);
        sc.lam.resize(1);
        sc.lam(0) = std::sqrt(s(0) * z(0));
        return true;
    }
    const double snorm2 = s(0) * s(0) - s.tail(q - 1).squaredNorm();
    const double znorm2 = z(0) * z(0) - z.tail(q - 1).squaredNorm();
    if (snorm2 <= 0.0 || znorm2 <= 0.0 || s(0) <= 0.0 || z(0) <= 0.0)
        return false;
    const double snorm = std::sqrt(snorm2), znorm = std::sqrt(znorm2);
    const Eigen::VectorXd sbar = s / snorm, zbar = z / znorm;
    const double gamma = std::sqrt(0.5 * (1.0 + sbar.dot(zbar)));
    Eigen::VectorXd wbar(q);
    wbar(0) = (sbar(0) + zbar(0)) / (2.0 * gamma);
    wbar.tail(q - 1) = (sbar.tail(q - 1) - zbar.tail(q - 1)) / (2.0 * gamma);
    sc.eta2 = snorm / znorm;
    sc.eta = std::sqrt(sc.eta2);
    sc.root = wbar;
    sc.root(0) += 1.0;
    sc.root /= std::sqrt(2.0 * (wbar(0) + 1.0));
    Eigen::VectorXd Jz(q);
    Jz(0) = z(0);
    Jz.tail(q - 1) = -z.tail(q - 1);
    sc.lam = sc.eta * (2.0 * sc.root * sc.root.dot(z) - Jz);
    sc.d0 = wbar.tail(q - 1).squaredNorm();
    sc.u.resize(q);
    sc.u(0) = wbar(0);
    sc.u.tail(q - 1) = 2.0 * wbar.tail(q - 1);
    sc.v = Eigen::VectorXd::Zero(q);
    sc.v.tail(q - 1) = std::sqrt(2.0) * wbar.tail(q - 1);
    return true;
}

Eigen::VectorXd apply_W(const Scaling& sc, const Eigen::Ref<const Eigen::VectorXd>& x) {
    if (sc.q == 1)
        return sc.eta * x;
    Eigen::VectorXd Jx(sc.q);
    Jx(0) = x(0);
    Jx.tail(sc.q - 1) = -x.tail(sc.q - 1);
    return sc.eta * (2.0 * sc.root * sc.root.dot(x) - Jx);
}

Eigen::VectorXd apply_Winv(const Scaling& sc, const Eigen::Ref<const Eigen::VectorXd>& x) {
    if (sc.q == 1)
        return x / sc.eta;
    // (2 r r' - J)^{-1} = 2 (Jr)(Jr)' - J for any unit-J vector r.
    Eigen::VectorXd Jr(sc.q), Jx(sc.q);
    Jr(0) = sc.root(0);
    Jr.tail(sc.q - 1) = -sc.root.tail(sc.q - 1);
    Jx(0) = x(0);
    Jx.tail(sc.q - 1) = -x.tail(sc.q - 1);
    return (2.0 * Jr * Jr.dot(x) - Jx) / sc.eta;
}

Eigen::VectorXd jordan_mul(const Eigen::Ref<const Eigen::VectorXd>& a,
                           const Eigen::Ref<const Eigen::VectorXd>& b) {
    const Eigen::Index q = a.size();
    Eigen::VectorXd out(q);
    out(0) = a.dot(b);
    if (q > 1)
        out.tail(q - 1) = a(0) * b.tail(q - 1) + b(0) * a.tail(q - 1);
    return out;
}

// Solves a o x = d (Jordan division).
Eigen::VectorXd jordan_div(const Eigen::Ref<const Eigen::VectorXd>& a,
                           const Eigen::Ref<const Eigen::VectorXd>& d) {
    const Eigen::Index q = a.size();
    if (q == 1)
        return d / a(0);
    const double nu = a(0) * a(0) - a.tail(q - 1).squaredNorm();
    Eigen::VectorXd x(q);
    x(0) = (a(0) * d(0) - a.tail(q - 1).dot(d.tail(q - 1))) / nu;
    x.tail(q - 1) = (d.tail(q - 1) - x(0) * a.tail(q - 1)) / a(0);
    return x;
}

// Sparse KKT operator
//   [ rI    A'    G'     ]
//   [ A    -rI    0      ]
//   [ G     0   -W^2-rI  ]
// with each cone block of W^2 expanded through two border columns and rows:
//   [ -e D    -e u   -e v ]          (e = eta^2, D = diag(d0, 1, ..., 1))
//   [ -e u'   +e     0    ]
//   [ -e v'   0     -e    ]
// which applies -e (D + u u' - v v') to the slack block exactly and keeps
// the matrix quasi-definite. Only the lower triangle is stored; r is the
// static regularization and solves are refined against the unregularized
// operator.
struct Kkt {
    Eigen::Index n = 0, p = 0, dimK = 0;
    std::vector<Eigen::Index> zbase;
    Eigen::SparseMatrix<double> K;
    Eigen::VectorXd signs;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>, Eigen::Lower> ldlt;
    double reg = 1e-9;
};

void kkt_build(Kkt& kkt, const Eigen::SparseMatrix<double>& A, const Flat& f) {
    kkt.n = f.n;
    kkt.p = f.p;
    kkt.zbase.clear();
    Eigen::Index idx = f.n + f.p;
    for (std::size_t i = 0; i < f.dim.size(); ++i) {
        kkt.zbase.push_back(idx);
        idx += f.dim[i] + (f.dim[i] >= 2 ? 2 : 0);
    }
    kkt.dimK = idx;
    kkt.signs = Eigen::VectorXd::Constant(kkt.dimK, -1.0);
    kkt.signs.head(f.n).setOnes();

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(A.nonZeros() + f.G.nonZeros()) +
                  static_cast<std::size_t>(kkt.dimK) * 4);
    for (Eigen::Index i = 0; i < f.n; ++i)
        trips.emplace_back(static_cast<int>(i), static_cast<int>(i), kkt.reg);
    for (Eigen::Index i = 0; i < f.p; ++i)
        trips.emplace_back(static_cast<int>(f.n + i), static_cast<int>(f.n + i), -kkt.reg);
    for (int k = 0; k < A.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it)
            trips.emplace_back(static_cast<int>(f.n + it.row()), static_cast<int>(it.col()),
                               it.value());
    for (std::size_t i = 0; i < f.dim.size(); ++i) {
        const Eigen::Index q = f.dim[i], zb = kkt.zbase[i];
        // Initial values represent W = I: wbar = e gives d0 = 0, u = e0, v = 0.
        // Most border entries start at zero but must stay structural.
        trips.emplace_back(static_cast<int>(zb), static_cast<int>(zb),
                           q >= 2 ? -kkt.reg : -1.0 - kkt.reg);
        for (Eigen::Index j = 1; j < q; ++j)
            trips.emplace_back(static_cast<int>(zb + j), static_cast<int>(zb + j),
                               -1.0 - kkt.reg);
        if (q >= 2) {
            const Eigen::Index t1 = zb + q, t2 = zb + q + 1;
            trips.emplace_back(static_cast<int>(t1), static_cast<int>(zb), -1.0);
            trips.emplace_back(static_cast<int>(t2), static_cast<int>(zb), 0.0);
            for (Eigen::Index j = 1; j < q; ++j) {
                trips.emplace_back(static_cast<int>(t1), static_cast<int>(zb + j), 0.0);
                trips.emplace_back(static_cast<int>(t2), static_cast<int>(zb + j), 0.0);
            }
            trips.emplace_back(static_cast<int>(t1), static_cast<int>(t1), 1.0 + kkt.reg);
            trips.emplace_back(static_cast<int>(t2), static_cast<int>(t2), -1.0 - kkt.reg);
            kkt.signs(t1) = 1.0;
        }
    }
    // G rows land below the x/y blocks, so every entry is in the lower triangle.
    for (int k = 0; k < f.G.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(f.G, k); it; ++it) {
            const std::size_t cone = static_cast<std::size_t>(
                std::upper_bound(f.off.begin(), f.off.end(), it.row()) - f.off.begin() - 1);
            const Eigen::Index row = kkt.zbase[cone] + (it.row() - f.off[cone]);
            trips.emplace_back(static_cast<int>(row), static_cast<int>(it.col()), it.value());
        }
    kkt.K.resize(kkt.dimK, kkt.dimK);
    kkt.K.setFromTriplets(trips.begin(), trips.end());
    kkt.K.makeCompressed();
    kkt.ldlt.analyzePattern(kkt.K);
}

// Rewrites all scaling-dependent (and regularization-dependent) entries.
void kkt_update(Kkt& kkt, const Flat& f, const std::vector<Scaling>& sc) {
    for (Eigen::Index i = 0; i < f.n; ++i)
        kkt.K.coeffRef(i, i) = kkt.reg;
    for (Eigen::Index i = 0; i < f.p; ++i)
        kkt.K.coeffRef(f.n + i, f.n + i) = -kkt.reg;
    for (std::size_t i = 0; i < f.dim.size(); ++i) {
        const Eigen::Index q = f.dim[i], zb = kkt.zbase[i];
        const double e = sc[i].eta2;
        if (q == 1) {
            kkt.K.coeffRef(zb, zb) = -e - kkt.reg;
            continue;
        }
        const Eigen::Index t1 = zb + q, t2 = zb + q + 1;
        kkt.K.coeffRef(zb, zb) = -e * sc[i].d0 - kkt.reg;
        for (Eigen::Index j = 1; j < q; ++j)
            kkt.K.coeffRef(zb + j, zb + j) = -e - kkt.reg;
        for (Eigen::Index j = 0; j < q; ++j) {
            kkt.K.coeffRef(t1, zb + j) = -e * sc[i].u(j);
            kkt.K.coeffRef(t2, zb + j) = -e * sc[i].v(j);
        }
        kkt.K.coeffRef(t1, t1) = e + kkt.reg;
        kkt.K.coeffRef(t2, t2) = -e - kkt.reg;
    }
}

bool kkt_factorize(Kkt& kkt, const Flat& f, const std::vector<Scaling>& sc) {
    for (int attempt = 0; attempt < 4; ++attempt) {
        kkt.ldlt.factorize(kkt.K);
        if (kkt.ldlt.info() == Eigen::Success)
            return true;
        kkt.reg *= 100.0;
        kkt_update(kkt, f, sc);
    }
    return false;
}

// Residual of the unregularized system, accumulated in extended precision.
// Near the solution the KKT condition number approaches 1/mu^2, and the
// refinement loop below is only as good as this residual.
Eigen::VectorXd kkt_residual(const Kkt& kkt, const Eigen::VectorXd& rhs,
                             const Eigen::VectorXd& sol) {
    std::vector<long double> acc(static_cast<std::size_t>(kkt.dimK));
    for (Eigen::Index i = 0; i < kkt.dimK; ++i)
        acc[i] = static_cast<long double>(rhs(i)) +
                 static_cast<long double>(kkt.reg) * kkt.signs(i) * sol(i);
    for (Eigen::Index col = 0; col < kkt.K.outerSize(); ++col) {
        const long double xc = sol(col);
        for (Eigen::SparseMatrix<double>::InnerIterator it(kkt.K, col); it; ++it) {
            const long double v = it.value();
            acc[it.row()] -= v * xc;
            if (it.row() != col)
                acc[col] -= v * static_cast<long double>(sol(it.row()));
        }
    }
    Eigen::VectorXd r(kkt.dimK);
    for (Eigen::Index i = 0; i < kkt.dimK; ++i)
        r(i) = static_cast<double>(acc[i]);
    return r;
}

// Solve against the true (unregularized) operator by iterative refinement on
// the regularized factorization.
Eigen::VectorXd kkt_solve(const Kkt& kkt, const Eigen::VectorXd& rhs) {
    Eigen::VectorXd sol = kkt.ldlt.solve(rhs);
    const double target = 1e-13 * std::max(1.0, rhs.norm());
    double prev = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best = sol;
    for (int it = 0; it < 10; ++it) {
        const Eigen::VectorXd resid = kkt_residual(kkt, rhs, sol);
        const double rn = resid.norm();
        if (rn < prev) {
            best = sol;
            if (rn <= target)
                return best;
        } else {
            break;
        }
        prev = rn;
        sol += kkt.ldlt.solve(resid);
    }
    return best;
}

Eigen::VectorXd kkt_pack(const Kkt& kkt, const Flat& f, const Eigen::VectorXd& rx,
                         const Eigen::VectorXd& ry, const Eigen::VectorXd& rz) {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(kkt.dimK);
    r.head(f.n) = rx;
    r.segment(f.n, f.p) = ry;
    for (std::size_t i = 0; i < f.dim.size(); ++i)
        r.segment(kkt.zbase[i], f.dim[i]) = rz.segment(f.off[i], f.dim[i]);
    return r;
}

Eigen::VectorXd kkt_unpack_z(const Kkt& kkt, const Flat& f, const Eigen::VectorXd& sol) {
    Eigen::VectorXd z(f.m);
    for (std::size_t i = 0; i < f.dim.size(); ++i)
        z.segment(f.off[i], f.dim[i]) = sol.segment(kkt.zbase[i], f.dim[i]);
    return z;
}

} // namespace

SolveResult solve(const Program& prog, const SolverSettings& settings) {
    prog.validate();
    if (settings.tol_gap <= 0.0 || settings.tol_feas <= 0.0 || settings.regularization <= 0.0)
        throw ConfigError("solver tolerances must be positive");

    Flat f = flatten(prog);
    const Eigen::Index n = f.n, p = f.p, m = f.m;
    const std::size_t ncones = f.dim.size();
    const double deg = static_cast<double>(ncones) + 1.0;
    // Residual scales come from the original data; convergence is judged in
    // the caller's units, not the equilibrated ones.
    const double nb = prog.b.norm(), nh = f.hvec.norm(), nc = prog.c.norm();

    Eigen::SparseMatrix<double> A = prog.A;
    Eigen::VectorXd b = prog.b, c = prog.c;
    Eigen::VectorXd dcol, era, erg;
    equilibrate(A, b, c, f, dcol, era, erg);

    SolveResult res;

    // Best iterate seen so far, by worst normalized residual. Exits that stop
    // short of the tolerances hand this back instead of the last iterate.
    double best_merit = std::numeric_limits<double>::infinity();
    double best_pres = 0.0, best_dres = 0.0, best_gap = 0.0, best_pcost = 0.0;
    int best_iter = -1;
    Eigen::VectorXd best_x, best_y, best_z, best_s;

    auto fail = [&](const std::string& why) {
        res.status = SolveStatus::NumericalFailure;
        res.message = why;
        if (best_iter >= 0) {
            res.x = best_x;
            res.y = best_y;
            res.z = best_z;
            res.s = best_s;
            res.objective = best_pcost;
            res.primal_residual = best_pres;
            res.dual_residual = best_dres;
            res.gap = best_gap;
            res.iterations = best_iter;
        }
        return res;
    };
    auto stop_with_best = [&](const std::string& why) {
        res.status = SolveStatus::IterLimit;
        res.message = why;
        res.x = best_x;
        res.y = best_y;
        res.z = best_z;
        res.s = best_s;
        res.objective = best_pcost;
        res.primal_residual = best_pres;
        res.dual_residual = best_dres;
        res.gap = best_gap;
        res.iterations = best_iter;
        return res;
    };

    std::vector<Scaling> sc(ncones);
    for (std::size_t i = 0; i < ncones; ++i) {
        sc[i].q = f.dim[i];
        if (f.dim[i] >= 2) {
            sc[i].u = Eigen::VectorXd::Zero(f.dim[i]);
            sc[i].u(0) = 1.0;
            sc[i].v = Eigen::VectorXd::Zero(f.dim[i]);
        }
    }
    Kkt kkt;
    kkt.reg = settings.regularization;
    kkt_build(kkt, A, f);
    kkt.ldlt.factorize(kkt.K);
    if (kkt.ldlt.info() != Eigen::Success && !kkt_factorize(kkt, f, sc))
        return fail("initial KKT factorization failed");

    // Starting point: least-norm primal/dual guesses shifted into the cone
    // interior, tau = kappa = 1.
    Eigen::VectorXd x, y, s, z;
    {
        const Eigen::VectorXd sol1 =
            kkt_solve(kkt, kkt_pack(kkt, f, Eigen::VectorXd::Zero(n), b, f.hvec));
        x = sol1.head(n);
        s = -kkt_unpack_z(kkt, f, sol1);
        const double ts = -cone_min_eig(f, s);
        if (ts >= -1e-8 * std::max(1.0, s.norm()))
            cone_shift(f, s, 1.0 + ts);
        const Eigen::VectorXd sol2 =
            kkt_solve(kkt, kkt_pack(kkt, f, -c, Eigen::VectorXd::Zero(p),
                                    Eigen::VectorXd::Zero(m)));
        y = sol2.segment(n, p);
        z = kkt_unpack_z(kkt, f, sol2);
        const double tz = -cone_min_eig(f, z);
        if (tz >= -1e-8 * std::max(1.0, z.norm()))
            cone_shift(f, z, 1.0 + tz);
    }
    double tau = 1.0, kappa = 1.0;

    Eigen::VectorXd dx(n), dy(p), dz(m), ds(m);
    Eigen::VectorXd wids(m), wdz(m), wids_aff(m), wdz_aff(m);
    double dtau = 0.0, dkappa = 0.0, dtau_aff = 0.0, dkappa_aff = 0.0;
    double stall_ref = std::numeric_limits<double>::infinity();
    int stall = 0;

    for (int iter = 0;; ++iter) {
        const Eigen::VectorXd r1 = c * tau + A.transpose() * y + f.G.transpose() * z;
        const Eigen::VectorXd r2 = A * x - b * tau;
        const Eigen::VectorXd r3 = f.G * x + s - f.hvec * tau;
        const double cx = c.dot(x);
        const double by_hz = b.dot(y) + f.hvec.dot(z);
        const double r4 = cx + by_hz + kappa;

        // cx, by_hz, and the gap are invariant under the equilibration;
        // residual vectors are mapped back to the original units.
        const double pcost = cx / tau;
        const double pres = std::max(r2.cwiseQuotient(era).norm() / (1.0 + nb),
                                     r3.cwiseQuotient(erg).norm() / (1.0 + nh)) /
                            tau;
        const double dres = r1.cwiseQuotient(dcol).norm() / ((1.0 + nc) * tau);
        const double gap_abs = s.dot(z) / (tau * tau);
        const double relgap = gap_abs / std::max(1.0, std::abs(pcost));

        if (settings.verbose)
            std::cerr << "iter " << iter << " pcost " << pcost << " pres " << pres
                      << " dres " << dres << " relgap " << relgap << " tau " << tau
                      << " kappa " << kappa << "\n";

        const double merit = std::max(pres, std::max(dres, relgap));
        if (merit < best_merit) {
            best_merit = merit;
            best_pres = pres;
            best_dres = dres;
            best_gap = relgap;
            best_pcost = pcost;
            best_iter = iter;
            best_x = dcol.cwiseProduct(x) / tau;
            best_y = era.cwiseProduct(y) / tau;
            best_z = erg.cwiseProduct(z) / tau;
            best_s = s.cwiseQuotient(erg) / tau;
        }
        if (merit < 0.99 * stall_ref) {
            stall_ref = merit;
            stall = 0;
        } else {
            ++stall;
        }

        if (pres <= settings.tol_feas && dres <= settings.tol_feas &&
            relgap <= settings.tol_gap) {
            res.status = SolveStatus::Optimal;
            res.x = dcol.cwiseProduct(x) / tau;
            res.y = era.cwiseProduct(y) / tau;
            res.z = erg.cwiseProduct(z) / tau;
            res.s = s.cwiseQuotient(erg) / tau;
            res.objective = pcost;
            res.primal_residual = pres;
            res.dual_residual = dres;
            res.gap = relgap;
            res.iterations = iter;
            return res;
        }
        if (by_hz < 0.0) {
            const Eigen::VectorXd dual_comb = A.transpose() * y + f.G.transpose() * z;
            const double pinf = dual_comb.cwiseQuotient(dcol).norm() / (-by_hz) / (1.0 + nc);
            if (pinf <= settings.tol_feas) {
                res.status = SolveStatus::PrimalInfeasible;
                res.y = era.cwiseProduct(y) / -by_hz;
                res.z = erg.cwiseProduct(z) / -by_hz;
                res.objective = std::numeric_limits<double>::quiet_NaN();
                res.primal_residual = pinf;
                res.iterations = iter;
                res.message = "certificate: A'y + G'z = 0, z in K, b'y + h'z = -1";
                return res;
            }
        }
        if (cx < 0.0) {
            const double dinf = std::max((A * x).cwiseQuotient(era).norm() / (1.0 + nb),
                                         (f.G * x + s).cwiseQuotient(erg).norm() / (1.0 + nh)) /
                                (-cx);
            if (dinf <= settings.tol_feas) {
                res.status = SolveStatus::DualInfeasible;
                res.x = dcol.cwiseProduct(x) / -cx;
                res.s = s.cwiseQuotient(erg) / -cx;
                res.objective = std::numeric_limits<double>::quiet_NaN();
                res.dual_residual = dinf;
                res.iterations = iter;
                res.message = "certificate: Ax = 0, Gx + s = 0, s in K, c'x = -1";
                return res;
            }
        }
        if (iter >= settings.max_iter)
            return stop_with_best("iteration limit reached");
        // The scaled KKT system's conditioning grows like 1/mu^2 near an
        // optimum with active cones, which caps the attainable accuracy.
        // Once progress flatlines, further iterations only drift.
        if (stall >= 15)
            return stop_with_best("progress stalled near the attainable accuracy");

        // A slack that drifts within rounding of its cone boundary poisons
        // the NT scaling: the block determinant is pure cancellation and the
        // scaled direction blows up, freezing all further steps. Lifting the
        // leading component to a representability floor costs a perturbation
        // far below the residual tolerances and keeps the scaling usable.
        for (Eigen::VectorXd* vp : {&s, &z})
            for (std::size_t i = 0; i < ncones; ++i) {
                const Eigen::Index o = f.off[i], q = f.dim[i];
                if (q == 1)
                    continue;
                Eigen::VectorXd& v = *vp;
                if (v(o) <= 0.0)
                    continue;
                const double t2 = v.segment(o + 1, q - 1).squaredNorm();
                const double floor = 1e-13 * v(o) * v(o);
                if (v(o) * v(o) - t2 < floor)
                    v(o) = std::sqrt(t2 + floor);
            }
        for (std::size_t i = 0; i < ncones; ++i)
            if (!compute_scaling(s.segment(f.off[i], f.dim[i]),
                                 z.segment(f.off[i], f.dim[i]), sc[i])) {
                if (best_iter >= 0)
                    return stop_with_best("iterate reached the cone boundary");
                return fail("iterate left the cone interior");
            }
        const double mu = (s.dot(z) + tau * kappa) / deg;

        kkt_update(kkt, f, sc);
        if (!kkt_factorize(kkt, f, sc))
            return fail("KKT factorization failed");

        const Eigen::VectorXd solt = kkt_solve(kkt, kkt_pack(kkt, f, -c, b, f.hvec));
        const Eigen::VectorXd x1 = solt.head(n);
        const Eigen::VectorXd y1 = solt.segment(n, p);
        const Eigen::VectorXd z1 = kkt_unpack_z(kkt, f, solt);
        const double denom =
            c.dot(x1) + b.dot(y1) + f.hvec.dot(z1) - kappa / tau;
        if (std::abs(denom) < 1e-14 * std::max(1.0, kappa / tau))
            return fail("degenerate step equation");

        double sigma = 0.0, alpha = 0.0, a_aff = 0.0;
        for (int pass = 0; pass < 3; ++pass) {
            Eigen::VectorXd dsvec(m);
            double dk;
            if (pass == 0) {
                for (std::size_t i = 0; i < ncones; ++i)
                    dsvec.segment(f.off[i], f.dim[i]) =
                        -jordan_mul(sc[i].lam, sc[i].lam);
                dk = -tau * kappa;
            } else if (pass == 1) {
                for (std::size_t i = 0; i < ncones; ++i) {
                    const Eigen::Index o = f.off[i], q = f.dim[i];
                    Eigen::VectorXd d = -jordan_mul(sc[i].lam, sc[i].lam) -
                                        jordan_mul(wids_aff.segment(o, q),
                                                   wdz_aff.segment(o, q));
                    d(0) += sigma * mu;
                    dsvec.segment(o, q) = d;
                }
                dk = -tau * kappa + sigma * mu - dtau_aff * dkappa_aff;
            } else {
                // Fallback without the second-order correction; used when the
                // corrected step collapsed at an off-center iterate.
                for (std::size_t i = 0; i < ncones; ++i) {
                    const Eigen::Index o = f.off[i], q = f.dim[i];
                    Eigen::VectorXd d = -jordan_mul(sc[i].lam, sc[i].lam);
                    d(0) += sigma * mu;
                    dsvec.segment(o, q) = d;
                }
                dk = -tau * kappa + sigma * mu;
            }
            const double rs = 1.0 - sigma;
            Eigen::VectorXd rz3(m);
            for (std::size_t i = 0; i < ncones; ++i) {
                const Eigen::Index o = f.off[i], q = f.dim[i];
                rz3.segment(o, q) =
                    -rs * r3.segment(o, q) -
                    apply_W(sc[i], jordan_div(sc[i].lam, dsvec.segment(o, q)));
            }
            const Eigen::VectorXd sol0 = kkt_solve(kkt, kkt_pack(kkt, f, -rs * r1, -rs * r2, rz3));
            const Eigen::VectorXd x0 = sol0.head(n);
            const Eigen::VectorXd y0 = sol0.segment(n, p);
            const Eigen::VectorXd z0 = kkt_unpack_z(kkt, f, sol0);
            dtau = (-rs * r4 - c.dot(x0) - b.dot(y0) - f.hvec.dot(z0) -
                    dk / tau) /
                   denom;
            dx = x0 + dtau * x1;
            dy = y0 + dtau * y1;
            dz = z0 + dtau * z1;
            // The slack step also satisfies the linear feasibility equation
            // G dx + ds - h dtau = -(1-sigma) r3; evaluating it this way
            // avoids amplifying rounding error through W^2, which grows like
            // 1/mu near the solution.
            ds = -rs * r3 - f.G * dx + f.hvec * dtau;
            dkappa = (dk - kappa * dtau) / tau;

            // Step bound in the scaled space: W is a cone automorphism, so
            // s + t ds in K iff lam + t W^{-1}ds in K (and likewise for z
            // with W dz). lam's boundary margin is mu-sized, so the quadratic
            // stays well conditioned where the raw s, z margins cancel.
            double amax = kInf;
            for (std::size_t i = 0; i < ncones; ++i) {
                const Eigen::Index o = f.off[i], q = f.dim[i];
                wids.segment(o, q) = apply_Winv(sc[i], ds.segment(o, q));
                wdz.segment(o, q) = apply_W(sc[i], dz.segment(o, q));
                amax = std::min(amax,
                                std::min(max_step_block(sc[i].lam, wids.segment(o, q)),
                                         max_step_block(sc[i].lam, wdz.segment(o, q))));
            }
            if (dtau < 0.0)
                amax = std::min(amax, tau / -dtau);
            if (dkappa < 0.0)
                amax = std::min(amax, kappa / -dkappa);

            if (pass == 0) {
                a_aff = std::min(1.0, amax);
                const double mu_aff =
                    ((s + a_aff * ds).dot(z + a_aff * dz) +
                     (tau + a_aff * dtau) * (kappa + a_aff * dkappa)) /
                    deg;
                sigma = std::pow(std::max(0.0, mu_aff / mu), 3);
                sigma = std::min(std::max(sigma, 0.0), 1.0);
                wids_aff = wids;
                wdz_aff = wdz;
                dtau_aff = dtau;
                dkappa_aff = dkappa;
            } else {
                // Damping applies after the unit cap, so even an amax > 1
                // step keeps a margin from the cone boundary.
                alpha = 0.99 * std::min(1.0, amax);
                if (pass == 1 && std::min(1.0, amax) < 0.2 * a_aff)
                    continue;
                break;
            }
        }

        // max_step resolves the boundary distance only to the precision of
        // the cone quadratic; for margins near roundoff it can overestimate,
        // so verify the stepped point and back off until strictly interior.
        int back = 0;
        for (; back < 30; ++back) {
            if (tau + alpha * dtau > 0.0 && kappa + alpha * dkappa > 0.0 &&
                strictly_interior(f, s + alpha * ds) &&
                strictly_interior(f, z + alpha * dz))
                break;
            alpha *= 0.5;
        }
        if (back == 30)
            return stop_with_best("step blocked at a cone boundary");

        if (settings.verbose)
            std::cerr << "  step alpha " << alpha << " sigma " << sigma << " a_aff "
                      << a_aff << "\n";
        x += alpha * dx;
        y += alpha * dy;
        z += alpha * dz;
        s += alpha * ds;
        tau += alpha * dtau;
        kappa += alpha * dkappa;
        if (tau <= 0.0 || kappa <= 0.0)
            return fail("homogenizing variables collapsed");
        // The embedding is homogeneous, so renormalizing to tau = 1 changes
        // nothing in exact arithmetic but stops the ray from drifting. Only
        // renormalize on real drift: near convergence the division's rounding
        // alone can push a hairline cone margin negative.
        if (tau < 0.99 || tau > 1.01) {
            x /= tau;
            y /= tau;
            z /= tau;
            s /= tau;
            kappa /= tau;
            tau = 1.0;
        }
    }
}

CertificateReport check_certificate(const Program& prog, const SolveResult& result,
                                    double tol) {
    prog.validate();
    const Flat f = flatten(prog);
    CertificateReport rep;
    std::ostringstream detail;
    const double lim = 10.0 * tol;

    auto cone_infeas = [&](const Eigen::VectorXd& v) {
        double worst = 0.0;
        for (std::size_t i = 0; i < f.dim.size(); ++i) {
            const Eigen::Index o = f.off[i], q = f.dim[i];
            const double tail = q == 1 ? 0.0 : v.segment(o + 1, q - 1).norm();
            worst = std::max(worst, (tail - v(o)) / (1.0 + std::abs(v(o)) + tail));
        }
        return std::max(worst, 0.0);
    };

    if (result.status == SolveStatus::Optimal) {
        if (result.x.size() != f.n) {
            rep.detail = "primal vector has wrong dimension";
            return rep;
        }
        rep.eq_residual = f.p == 0 ? 0.0
                                   : (prog.A * result.x - prog.b).norm() / (1.0 + prog.b.norm());
        const Eigen::VectorXd slack = f.hvec - f.G * result.x;
        rep.cone_violation = cone_infeas(slack);
        bool have_dual = result.y.size() == f.p && result.z.size() == f.m;
        if (have_dual) {
            rep.dual_residual = (prog.c + prog.A.transpose() * result.y +
                                 f.G.transpose() * result.z)
                                    .norm() /
                                (1.0 + prog.c.norm());
            rep.dual_cone_violation = cone_infeas(result.z);
            const double pval = prog.c.dot(result.x);
            const double dval = -prog.b.dot(result.y) - f.hvec.dot(result.z);
            rep.gap = std::abs(pval - dval) / (1.0 + std::abs(pval));
        }
        rep.ok = rep.eq_residual <= lim && rep.cone_violation <= lim &&
                 (!have_dual ||
                  (rep.dual_residual <= lim && rep.dual_cone_violation <= lim &&
                   rep.gap <= lim));
        if (!rep.ok)
            detail << "optimality check failed: eq " << rep.eq_residual << " cone "
                   << rep.cone_violation << " dual " << rep.dual_residual << " dualcone "
                   << rep.dual_cone_violation << " gap " << rep.gap;
    } else if (result.status == SolveStatus::PrimalInfeasible) {
        if (result.y.size() != f.p || result.z.size() != f.m) {
            rep.detail = "certificate has wrong dimension";
            return rep;
        }
        const double by_hz = prog.b.dot(result.y) + f.hvec.dot(result.z);
        rep.eq_residual = (prog.A.transpose() * result.y + f.G.transpose() * result.z).norm() /
                          (1.0 + prog.c.norm());
        rep.dual_cone_violation = cone_infeas(result.z);
        rep.ok = by_hz < 0.0 && rep.eq_residual <= lim * std::abs(by_hz) &&
                 rep.dual_cone_violation <= lim;
        if (!rep.ok)
            detail << "primal infeasibility certificate rejected: b'y+h'z " << by_hz
                   << " ray residual " << rep.eq_residual;
    } else if (result.status == SolveStatus::DualInfeasible) {
        if (result.x.size() != f.n) {
            rep.detail = "certificate has wrong dimension";
            return rep;
        }
        const double cx = prog.c.dot(result.x);
        rep.eq_residual = f.p == 0 ? 0.0 : (prog.A * result.x).norm() / (1.0 + prog.b.norm());
        const Eigen::VectorXd ray = -(f.G * result.x);
        rep.cone_violation = cone_infeas(ray);
        rep.ok = cx < 0.0 && rep.eq_residual <= lim * std::abs(cx) &&
                 rep.cone_violation <= lim;
        if (!rep.ok)
            detail << "dual infeasibility certificate rejected: c'x " << cx;
    } else {
        rep.detail = "no certificate for status " + std::string(to_string(result.status));
        return rep;
    }
    rep.detail = detail.str();
    return rep;
}

namespace {

void write_dense(std::ostringstream& out, const Eigen::VectorXd& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i > 0)
            out << ' ';
        out << io::format_double(v(i));
    }
    out << '\n';
}

void write_sparse(std::ostringstream& out, const Eigen::SparseMatrix<double>& M) {
    out << M.nonZeros() << '\n';
    for (int k = 0; k < M.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(M, k); it; ++it)
            out << it.row() << ' ' << it.col() << ' ' << io::format_double(it.value())
                << '\n';
}

} // namespace

std::string program_to_text(const Program& prog) {
    prog.validate();
    std::ostringstream out;
    out << "ddrc-socp 1\n";
    out << "dims " << prog.c.size() << ' ' << prog.A.rows() << ' ' << prog.cones.size()
        << '\n';
    out << "c\n";
    write_dense(out, prog.c);
    out << "A ";
    write_sparse(out, prog.A);
    out << "b\n";
    write_dense(out, prog.b);
    for (const SocConstraint& cone : prog.cones) {
        out << "cone " << cone.F.rows() << '\n';
        out << "F ";
        write_sparse(out, cone.F);
        out << "g\n";
        write_dense(out, cone.g);
        out << "h " << cone.h.nonZeros() << '\n';
        for (Eigen::SparseVector<double>::InnerIterator it(cone.h); it; ++it)
            out << it.index() << ' ' << io::format_double(it.value()) << '\n';
        out << "d " << io::format_double(cone.d) << '\n';
    }
    out << "end\n";
    return out.str();
}

namespace {

class TokenReader {
public:
    explicit TokenReader(const std::string& text) : in_(text) {}

    std::string next() {
        std::string tok;
        if (!(in_ >> tok))
            throw DataError("conic program text: unexpected end of input");
        return tok;
    }

    void expect(const std::string& want) {
        const std::string got = next();
        if (got != want)
            throw DataError("conic program text: expected '" + want + "', found '" + got +
                            "'");
    }

    long long integer() {
        const std::string tok = next();
        try {
            std::size_t used = 0;
            const long long v = std::stoll(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw DataError("conic program text: bad integer '" + tok + "'");
        }
    }

    double real() { return io::parse_double(next(), "conic program text"); }

private:
    std::istringstream in_;
};

Eigen::SparseMatrix<double> read_sparse(TokenReader& r, Eigen::Index rows,
                                        Eigen::Index cols) {
    const long long nnz = r.integer();
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(nnz));
    for (long long k = 0; k < nnz; ++k) {
        const long long i = r.integer(), j = r.integer();
        const double v = r.real();
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw DataError("conic program text: triplet index out of range");
        trips.emplace_back(static_cast<int>(i), static_cast<int>(j), v);
    }
    Eigen::SparseMatrix<double> M(rows, cols);
    M.setFromTriplets(trips.begin(), trips.end());
    return M;
}

} // namespace

Program program_from_text(const std::string& text) {
    TokenReader r(text);
    r.expect("ddrc-socp");
    if (r.integer() != 1)
        throw DataError("conic program text: unsupported version");
    r.expect("dims");
    const long long n = r.integer(), p = r.integer(), k = r.integer();
    if (n < 1 || p < 0 || k < 0)
        throw DataError("conic program text: bad dimensions");
    Program prog;
    r.expect("c");
    prog.c.resize(n);
    for (long long i = 0; i < n; ++i)
        prog.c(i) = r.real();
    r.expect("A");
    prog.A = read_sparse(r, p, n);
    r.expect("b");
    prog.b.resize(p);
    for (long long i = 0; i < p; ++i)
        prog.b(i) = r.real();
    for (long long ci = 0; ci < k; ++ci) {
        r.expect("cone");
        const long long mrows = r.integer();
        if (mrows < 0)
            throw DataError("conic program text: bad cone size");
        SocConstraint cone;
        r.expect("F");
        cone.F = read_sparse(r, mrows, n);
        r.expect("g");
        cone.g.resize(mrows);
        for (long long i = 0; i < mrows; ++i)
            cone.g(i) = r.real();
        r.expect("h");
        const long long hnnz = r.integer();
        cone.h.resize(n);
        for (long long i = 0; i < hnnz; ++i) {
            const long long idx = r.integer();
            const double v = r.real();
            if (idx < 0 || idx >= n)
                throw DataError("conic program text: h index out of range");
            cone.h.coeffRef(idx) = v;
        }
        r.expect("d");
        cone.d = r.real();
        prog.cones.push_back(std::move(cone));
    }
    r.expect("end");
    prog.validate();
    return prog;
}

void save_program(const std::string& path, const Program& prog) {
    io::write_file(path, program_to_text(prog));
}

Program load_program(const std::string& path) {
    return program_from_text(io::read_file(path));
}

SolveResult import_solution(const Program& prog, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& y, const Eigen::VectorXd& z) {
    prog.validate();
    if (x.size() != prog.c.size())
        throw ConfigError("imported solution has wrong dimension");
    const Flat f = flatten(prog);
    SolveResult res;
    res.status = SolveStatus::Optimal;
    res.x = x;
    res.y = y;
    res.z = z;
    res.s = f.hvec - f.G * x;
    res.objective = prog.c.dot(x);
    res.message = "imported";
    return res;
}

} // namespace ddrc::conic
