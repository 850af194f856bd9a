#include "ym/symplectic/forms.hpp"

#include <algorithm>
#include <cmath>

namespace ym {

// ---- canonical forms ------------------------------------------------------

double theta_S(const PhasePointS& pt, const TangentS& v) {
    return inner(v.a, hodge(pt.lambda));
}

double omega_S(const PhasePointS& pt, const TangentS& v1, const TangentS& v2) {
    (void)pt; // bilinear in the tangents; the base point does not enter
    return inner(v2.a, hodge(v1.alpha)) - inner(v1.a, hodge(v2.alpha));
}

double sigma_R(const PhasePointR& pt, const TangentR& v1, const TangentR& v2) {
    (void)pt;
    return inner(v2.a, v1.x) - inner(v1.a, v2.x);
}

double Theta_T(const PhasePointT& pt, const TangentT& v) {
    return inner(v.e, cov_d_star(pt.A, pt.B));
}

double Omega_T(const PhasePointT& pt, const TangentT& v1, const TangentT& v2) {
    return inner(bracket_cup(v1.a, v2.e), pt.B) -
           inner(bracket_cup(v2.a, v1.e), pt.B) +
           inner(v2.e, cov_d_star(pt.A, v1.beta)) -
           inner(v1.e, cov_d_star(pt.A, v2.beta));
}

// ---- moment maps ----------------------------------------------------------

AlgCochain moment_R(const Connection& A, const AlgCochain& p) {
    return cov_d_star(A, p);
}

AlgCochain moment_S(const Connection& A, const AlgCochain& lambda) {
    AlgCochain j = cov_d(A, lambda);
    j *= -1.0;
    return j;
}

AlgCochain moment_T(const PhasePointT& pt) {
    const CubicalComplex3& X = pt.A.lattice();
    const int n = pt.A.n();
    AlgCochain sW = hodge(cov_d(pt.A, hodge(pt.B))); // degree 1
    AlgCochain mu(X, 3, n);
    AlgElement u(n), v(n);
    const int V = X.volume();
    for (int site = 0; site < V; ++site) {
        cplx* dst = mu.at(site, 0);
        for (int dir = 0; dir < 3; ++dir) {
            const cplx* ws = sW.at(site, dir);
            const cplx* es = pt.E.at(site, dir);
            std::copy(ws, ws + n * n, u.m.begin());
            std::copy(es, es + n * n, v.m.begin());
            AlgElement c = commutator(u, v);
            for (int i = 0; i < n * n; ++i) dst[i] += c.m[i];
        }
    }
    return mu;
}

TangentR fundamental_vf_R(const AlgCochain& xi, const PhasePointR& pt) {
    return TangentR{cov_d(pt.A, xi), pointwise_bracket(pt.p, xi)};
}

TangentS fundamental_vf_S(const AlgCochain& xi, const PhasePointS& pt) {
    return TangentS{cov_d(pt.A, xi), pointwise_bracket(pt.lambda, xi)};
}

// ---- moment-condition audits ----------------------------------------------

namespace {

AlgCochain shifted(const AlgCochain& base, double t, const AlgCochain& dir) {
    AlgCochain out = base;
    out.add_scaled(t, dir);
    return out;
}

} // namespace

double check_moment_condition(const AlgCochain& xi, const PhasePointR& pt,
                              double fd_step, int probes, Rng& rng) {
    const CubicalComplex3& X = pt.A.lattice();
    const int n = pt.A.n();
    auto Jxi = [&](const PhasePointR& q) {
        return inner(q.p, cov_d(q.A, xi));
    };
    const TangentR xiR = fundamental_vf_R(xi, pt);
    double worst = 0.0;
    for (int k = 0; k < probes; ++k) {
        TangentR v{random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng)};
        const double jp = Jxi({shifted(pt.A, fd_step, v.a), shifted(pt.p, fd_step, v.x)});
        const double jm = Jxi({shifted(pt.A, -fd_step, v.a), shifted(pt.p, -fd_step, v.x)});
        const double fd = (jp - jm) / (2.0 * fd_step);
        worst = std::max(worst, std::fabs(fd - sigma_R(pt, v, xiR)));
    }
    return worst;
}

double check_moment_condition(const AlgCochain& xi, const PhasePointS& pt,
                              double fd_step, int probes, Rng& rng) {
    const CubicalComplex3& X = pt.A.lattice();
    const int n = pt.A.n();
    auto Jxi = [&](const PhasePointS& q) {
        return inner(cov_d(q.A, xi), hodge(q.lambda));
    };
    const TangentS xiS = fundamental_vf_S(xi, pt);
    double worst = 0.0;
    for (int k = 0; k < probes; ++k) {
        TangentS v{random_cochain(X, 1, n, rng), random_cochain(X, 2, n, rng)};
        const double jp =
            Jxi({shifted(pt.A, fd_step, v.a), shifted(pt.lambda, fd_step, v.alpha)});
        const double jm =
            Jxi({shifted(pt.A, -fd_step, v.a), shifted(pt.lambda, -fd_step, v.alpha)});
        const double fd = (jp - jm) / (2.0 * fd_step);
        worst = std::max(worst, std::fabs(fd - omega_S(pt, v, xiS)));
    }
    return worst;
}

double check_moment_condition(const AlgCochain& xi, const PhasePointT& pt,
                              double fd_step, int probes, Rng& rng) {
    const CubicalComplex3& X = pt.A.lattice();
    const int n = pt.A.n();
    auto Jxi = [&](const PhasePointT& q) {
        return inner(pointwise_bracket(q.E, xi), cov_d_star(q.A, q.B));
    };
    const TangentT xiT = fundamental_vf(xi, pt);
    double worst = 0.0;
    for (int k = 0; k < probes; ++k) {
        TangentT v{random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng),
                   random_cochain(X, 2, n, rng)};
        const PhasePointT qp{shifted(pt.A, fd_step, v.a), shifted(pt.E, fd_step, v.e),
                             shifted(pt.B, fd_step, v.beta)};
        const PhasePointT qm{shifted(pt.A, -fd_step, v.a),
                             shifted(pt.E, -fd_step, v.e),
                             shifted(pt.B, -fd_step, v.beta)};
        const double fd = (Jxi(qp) - Jxi(qm)) / (2.0 * fd_step);
        worst = std::max(worst, std::fabs(fd - Omega_T(pt, v, xiT)));
    }
    return worst;
}

// ---- observables -----------------------------------------------------------

double Observable::eval(const PhasePointT& pt) const {
    switch (kind) {
    case Kind::constant:
        return value;
    case Kind::phi:
        return inner(pt.E, cov_d_star(A, c));
    case Kind::psi:
        return inner(c, cov_d_star(A, pt.B));
    case Kind::vortex: {
        const double de = norm(cov_d(A, pt.E));
        const double db = norm(cov_d_star(A, pt.B));
        return 0.5 * (de * de + db * db);
    }
    }
    return 0.0;
}

AlgCochain Observable::varE(const PhasePointT& pt) const {
    switch (kind) {
    case Kind::constant:
        return AlgCochain(A.lattice(), 2, A.n());
    case Kind::phi:
        return c;
    case Kind::psi:
        return AlgCochain(A.lattice(), 2, A.n());
    case Kind::vortex:
        return cov_d(A, pt.E);
    }
    return AlgCochain(A.lattice(), 2, A.n());
}

AlgCochain Observable::varB(const PhasePointT& pt) const {
    switch (kind) {
    case Kind::constant:
        return AlgCochain(A.lattice(), 1, A.n());
    case Kind::phi:
        return AlgCochain(A.lattice(), 1, A.n());
    case Kind::psi:
        return c;
    case Kind::vortex:
        return cov_d_star(A, pt.B);
    }
    return AlgCochain(A.lattice(), 1, A.n());
}

Observable make_constant_observable(double value, const Connection& A) {
    Observable o;
    o.name = "constant";
    o.kind = Observable::Kind::constant;
    o.value = value;
    o.A = A;
    return o;
}

Observable make_phi_observable(const Connection& A, AlgCochain c) {
    if (c.degree() != 2)
        throw DegreeError("make_phi_observable: probe must have degree 2");
    Observable o;
    o.name = "phi_probe";
    o.kind = Observable::Kind::phi;
    o.A = A;
    o.c = std::move(c);
    return o;
}

Observable make_psi_observable(const Connection& A, AlgCochain cp) {
    if (cp.degree() != 1)
        throw DegreeError("make_psi_observable: probe must have degree 1");
    Observable o;
    o.name = "psi_probe";
    o.kind = Observable::Kind::psi;
    o.A = A;
    o.c = std::move(cp);
    return o;
}

Observable make_vortex_hamiltonian(const Connection& A) {
    Observable o;
    o.name = "vortex_hamiltonian";
    o.kind = Observable::Kind::vortex;
    o.A = A;
    return o;
}

std::vector<Observable> builtin_observables(const Connection& A) {
    const CubicalComplex3& X = A.lattice();
    const int n = A.n();
    Rng rng(0x5ca1ab1eull);
    std::vector<Observable> out;
    out.push_back(make_vortex_hamiltonian(A));
    // probe fields are taken in the image of d_A / d_A* so that every Green
    // solve they meet downstream has a right-hand side orthogonal to the
    // Laplacian kernel (constants, when A is flat)
    for (int k = 0; k < 2; ++k) {
        Observable o = make_phi_observable(A, cov_d(A, random_cochain(X, 1, n, rng)));
        o.name = "phi_" + std::to_string(k);
        out.push_back(std::move(o));
    }
    for (int k = 0; k < 2; ++k) {
        Observable o =
            make_psi_observable(A, cov_d_star(A, random_cochain(X, 2, n, rng)));
        o.name = "psi_" + std::to_string(k);
        out.push_back(std::move(o));
    }
    return out;
}

Observable poisson_observable(const Observable& f, const Observable& g) {
    using K = Observable::Kind;
    const Connection& A = f.A;
    auto named = [&](Observable o, const char* opname) {
        o.name = "{" + f.name + "," + g.name + "}" + opname;
        return o;
    };
    (void)named;
    // the family {constant, phi, psi, vortex} is closed under the bracket:
    //   {H, phi_c}  = psi_{d_A* c}
    //   {H, psi_c}  = phi_{-d_A c}
    //   {phi_c, psi_c'} = constant -(c', d_A* c)
    // and every same-kind or constant pairing vanishes.
    if (f.kind == K::vortex && g.kind == K::phi) {
        Observable o = make_psi_observable(A, cov_d_star(A, g.c));
        o.name = "{" + f.name + "," + g.name + "}";
        return o;
    }
    if (f.kind == K::phi && g.kind == K::vortex) {
        AlgCochain c = cov_d_star(A, f.c);
        c *= -1.0;
        Observable o = make_psi_observable(A, std::move(c));
        o.name = "{" + f.name + "," + g.name + "}";
        return o;
    }
    if (f.kind == K::vortex && g.kind == K::psi) {
        AlgCochain c = cov_d(A, g.c);
        c *= -1.0;
        Observable o = make_phi_observable(A, std::move(c));
        o.name = "{" + f.name + "," + g.name + "}";
        return o;
    }
    if (f.kind == K::psi && g.kind == K::vortex) {
        Observable o = make_phi_observable(A, cov_d(A, f.c));
        o.name = "{" + f.name + "," + g.name + "}";
        return o;
    }
    if (f.kind == K::phi && g.kind == K::psi) {
        Observable o = make_constant_observable(-inner(g.c, cov_d_star(A, f.c)), A);
        o.name = "{" + f.name + "," + g.name + "}";
        return o;
    }
    if (f.kind == K::psi && g.kind == K::phi) {
        Observable o = make_constant_observable(inner(f.c, cov_d_star(A, g.c)), A);
        o.name = "{" + f.name + "," + g.name + "}";
        return o;
    }
    Observable o = make_constant_observable(0.0, A);
    o.name = "{" + f.name + "," + g.name + "}";
    return o;
}

TangentT hamiltonian_vf_T(const Observable& obs, const PhasePointT& pt) {
    AlgCochain e = obs.varB(pt);
    e *= -1.0;
    return TangentT{AlgCochain(pt.A.lattice(), 1, pt.A.n()), std::move(e),
                    obs.varE(pt)};
}

double poisson_T(const Observable& f, const Observable& g, const PhasePointT& pt) {
    return inner(f.varB(pt), cov_d_star(pt.A, g.varE(pt))) -
           inner(g.varB(pt), cov_d_star(pt.A, f.varE(pt)));
}

double check_variational_derivative(const Observable& obs, const PhasePointT& pt,
                                    double fd_step, int probes, Rng& rng) {
    const CubicalComplex3& X = pt.A.lattice();
    const int n = pt.A.n();
    const AlgCochain vE = obs.varE(pt);
    const AlgCochain vB = obs.varB(pt);
    double worst = 0.0;
    for (int k = 0; k < probes; ++k) {
        const AlgCochain e = random_cochain(X, 1, n, rng);
        const AlgCochain beta = random_cochain(X, 2, n, rng);
        const PhasePointT qp{pt.A, shifted(pt.E, fd_step, e),
                             shifted(pt.B, fd_step, beta)};
        const PhasePointT qm{pt.A, shifted(pt.E, -fd_step, e),
                             shifted(pt.B, -fd_step, beta)};
        const double fd = (obs.eval(qp) - obs.eval(qm)) / (2.0 * fd_step);
        const double lin = inner(e, cov_d_star(pt.A, vE)) +
                           inner(vB, cov_d_star(pt.A, beta));
        worst = std::max(worst, std::fabs(fd - lin));
    }
    return worst;
}

double hamiltonian_R(const PhasePointR& pt) {
    const double f = norm(curvature(pt.A));
    const double p = norm(pt.p);
    return 0.5 * (f * f + p * p);
}

// ---- Omega spectrum ---------------------------------------------------------

namespace {

// Householder tridiagonalization of a symmetric matrix (values only).
// For each column k: with v the Householder vector for the trailing column,
// w = (2/v'v) A v, u = w - ((v'w)/(v'v)) v, and A <- A - v u' - u v'.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
    std::vector<double> v(n), w(n), u(n);
    for (int k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm2 += a[i * n + k] * a[i * n + k];
        if (xnorm2 == 0.0) {
            e[k] = 0.0;
            continue;
        }
        const double x0 = a[(k + 1) * n + k];
        const double alpha = (x0 >= 0.0) ? -std::sqrt(xnorm2) : std::sqrt(xnorm2);
        double vv = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = a[i * n + k];
            if (i == k + 1) v[i] -= alpha;
            vv += v[i] * v[i];
        }
        e[k] = alpha;
        a[(k + 1) * n + k] = alpha;
        a[k * n + (k + 1)] = alpha;
        for (int i = k + 2; i < n; ++i) {
            a[i * n + k] = 0.0;
            a[k * n + i] = 0.0;
        }
        if (vv == 0.0) continue;
        const double two_over_vv = 2.0 / vv;
        double vw = 0.0;
        for (int i = k + 1; i < n; ++i) {
            double s = 0.0;
            for (int j = k + 1; j < n; ++j) s += a[i * n + j] * v[j];
            w[i] = two_over_vv * s;
            vw += v[i] * w[i];
        }
        const double kappa = vw / vv;
        for (int i = k + 1; i < n; ++i) u[i] = w[i] - kappa * v[i];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i * n + j] -= v[i] * u[j] + u[i] * v[j];
    }
    for (int i = 0; i < n; ++i) d[i] = a[i * n + i];
    if (n >= 2) e[n - 2] = a[(n - 1) * n + (n - 2)];
    if (n >= 1) e[n - 1] = 0.0;
}

// implicit-shift QL iteration on a tridiagonal (values only)
void tridiag_eigenvalues(std::vector<double>& d, std::vector<double>& e, int n) {
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 128) break;
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? r : -r));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

OmegaSpectrumReport omega_rank_report(const PhasePointT& pt) {
    const CubicalComplex3& X = pt.A.lattice();
    const int n = pt.A.n();
    const int n1 = static_cast<int>(AlgCochain(X, 1, n).num_reals());
    const int n2 = static_cast<int>(AlgCochain(X, 2, n).num_reals());
    const int m = 2 * n1 + n2; // (a, e, beta) real coordinates
    const double h3 = X.h * X.h * X.h;

    const AlgCochain zeroA(X, 1, n);
    const AlgCochain dstar0B = cov_d_star(zeroA, pt.B);

    std::vector<double> M(static_cast<std::size_t>(m) * m, 0.0);
    auto write_block = [&](int j, int row0, const AlgCochain& r, double s) {
        const double* src = r.reals();
        const std::size_t nr = r.num_reals();
        double* col = M.data() + static_cast<std::size_t>(j) * m + row0;
        for (std::size_t i = 0; i < nr; ++i) col[i] = s * h3 * src[i];
    };

    AlgCochain one1(X, 1, n), one2(X, 2, n);
    for (int j = 0; j < n1; ++j) { // basis vectors in the a slot
        one1.reals()[j] = 1.0;
        AlgCochain re = cov_d_star(one1, pt.B); // includes the plain d part
        re -= dstar0B;                          // leave only the bracket part
        write_block(j, n1, re, -1.0);           // -( [a2 u e1], B )
        one1.reals()[j] = 0.0;
    }
    for (int j = 0; j < n1; ++j) { // basis vectors in the e slot
        one1.reals()[j] = 1.0;
        AlgCochain ra = cov_d_star(one1, pt.B);
        ra -= dstar0B;                      // +( [a1 u e2], B ), cup bracket
        write_block(n1 + j, 0, ra, +1.0);   //   symmetric in degree (1,1)
        AlgCochain rb = cov_d(pt.A, one1);  // +( e2, d_A* beta1 )
        write_block(n1 + j, 2 * n1, rb, +1.0);
        one1.reals()[j] = 0.0;
    }
    for (int j = 0; j < n2; ++j) { // basis vectors in the beta slot
        one2.reals()[j] = 1.0;
        AlgCochain re = cov_d_star(pt.A, one2); // -( e1, d_A* beta2 )
        write_block(2 * n1 + j, n1, re, -1.0);
        one2.reals()[j] = 0.0;
    }

    // Singular values of M through the symmetric embedding [[0, M], [M^T, 0]],
    // whose eigenvalues are exactly +/- the singular values.  Going through
    // the Gram matrix M^T M instead would square the condition: its
    // eigenvalue rounding floor re-emerges from the square root at about
    // 1e-8 of the largest singular value, which the near-zero threshold
    // below could not see through.
    const int m2 = 2 * m;
    std::vector<double> g(static_cast<std::size_t>(m2) * m2, 0.0);
    for (int j = 0; j < m; ++j) {
        const double* cj = M.data() + static_cast<std::size_t>(j) * m; // column j
        for (int i = 0; i < m; ++i) {
            g[static_cast<std::size_t>(i) * m2 + (m + j)] = cj[i];
            g[static_cast<std::size_t>(m + j) * m2 + i] = cj[i];
        }
    }
    std::vector<double> d(m2, 0.0), e(m2, 0.0);
    tridiagonalize(g, m2, d, e);
    tridiag_eigenvalues(d, e, m2);
    std::sort(d.begin(), d.end());

    OmegaSpectrumReport rep;
    rep.dim = m;
    rep.svals.resize(m);
    // the upper half of the +/- paired spectrum, clipped against rounding
    for (int i = 0; i < m; ++i) rep.svals[i] = std::max(0.0, d[m + i]);
    rep.min_sv = rep.svals.front();
    rep.max_sv = rep.svals.back();
    for (double s : rep.svals)
        if (s <= 1e-10 * rep.max_sv) ++rep.near_zero;
    return rep;
}

} // namespace ym
