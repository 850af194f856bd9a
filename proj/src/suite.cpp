#include "ym/harness/suite.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "ym/clebsch/clebsch.hpp"

namespace ym {

namespace {

// ---- small helpers ----------------------------------------------------------

CheckResult result(const char* name, double residual, double tol,
                   std::string note = "") {
    CheckResult r;
    r.name = name;
    r.residual = residual;
    r.tol = tol;
    r.pass = std::isfinite(residual) && residual <= tol;
    r.note = std::move(note);
    return r;
}

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

CubicalComplex3 lattice_of(const RunConfig& cfg) {
    return build_torus(cfg.dim_x(), cfg.dim_y(), cfg.dim_z(), cfg.h);
}

AlgCochain constant_scalar(const CubicalComplex3& X, const AlgElement& v) {
    AlgCochain c(X, 0, v.n);
    for (int s = 0; s < X.volume(); ++s) {
        cplx* dst = c.at(s, 0);
        std::copy(v.m.begin(), v.m.end(), dst);
    }
    return c;
}

// coexact field projected onto ker d_A*: every Green right-hand side along
// the way is orthogonal to the Laplacian kernel, so this is safe even at
// flat connections
AlgCochain divergence_free_probe(const Connection& A, Rng& rng, double tol) {
    AlgCochain raw = cov_d_star(A, random_cochain(A.lattice(), 2, A.n(), rng));
    const AlgCochain div = cov_d_star(A, raw);
    // at a flat connection the double application vanishes to rounding and
    // the cleanup solve would chase pure noise; skip it there
    if (norm(div) > 1e-12 * norm(raw)) raw -= cov_d(A, green(A, div, tol, 0).first);
    return raw;
}

double diff_norm(const AlgCochain& a, const AlgCochain& b) {
    AlgCochain d = a;
    d -= b;
    return norm(d);
}

// ---- module: lattice complex ------------------------------------------------

CheckResult check_complex_exactness(const RunConfig& cfg) {
    double worst = 0.0;
    Rng rng(cfg.seed ^ 0x11ull);
    for (int N : {2, 3, 4}) {
        const CubicalComplex3 X = build_torus(N, N, N, cfg.h);
        for (int k = 0; k <= 1; ++k) {
            const AlgCochain c = dyadic_cochain(X, k, 2, rng);
            worst = std::max(worst, coboundary(coboundary(c)).max_abs());
        }
    }
    return result("complex-exactness", worst, 0.0,
                  "d(d(c)) on dyadic data, cubes 2..4, degrees 0..1");
}

CheckResult check_cup_leibniz(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    Rng rng(cfg.seed ^ 0x12ull);
    double worst = 0.0;
    const int pairs[6][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}};
    for (int trial = 0; trial < 20; ++trial) {
        for (const auto& jk : pairs) {
            const int j = jk[0], k = jk[1];
            const AlgCochain a = dyadic_cochain(X, j, 2, rng);
            const AlgCochain b = dyadic_cochain(X, k, 2, rng);
            AlgCochain lhs = coboundary(cup(a, b));
            lhs -= cup(coboundary(a), b);
            AlgCochain rhs = cup(a, coboundary(b));
            if (j % 2 == 1) rhs *= -1.0;
            lhs -= rhs;
            worst = std::max(worst, lhs.max_abs());
        }
    }
    return result("cup-leibniz", worst, 0.0,
                  "d(a u b) - da u b - (-1)^j a u db, all degree pairs, 20 trials");
}

CheckResult check_hodge_isometry(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    Rng rng(cfg.seed ^ 0x13ull);
    double worst = 0.0, invol = 0.0;
    for (int k = 0; k <= 3; ++k) {
        const AlgCochain a = random_cochain(X, k, cfg.algebra_n, rng);
        const AlgCochain b = random_cochain(X, k, cfg.algebra_n, rng);
        const double scale = std::max(1e-300, norm(a) * norm(b));
        worst = std::max(worst,
                         std::fabs(inner(hodge(a), hodge(b)) - inner(a, b)) / scale);
        AlgCochain back = hodge(hodge(a));
        back -= a;
        invol = std::max(invol, back.max_abs());
    }
    return result("hodge-isometry", worst, 1e-12,
                  "relative; double application returns the input, defect " +
                      fmt(invol));
}

CheckResult check_inner_gram(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const double h3 = X.h * X.h * X.h;
    Rng rng(cfg.seed ^ 0x14ull);
    double worst = 0.0;
    for (int k = 0; k <= 3; ++k) {
        AlgCochain e1(X, k, 2), e2(X, k, 2);
        const std::size_t nr = e1.num_reals();
        for (int trial = 0; trial < 8; ++trial) {
            const std::size_t i = static_cast<std::size_t>(rng.engine() % nr);
            std::size_t j = static_cast<std::size_t>(rng.engine() % nr);
            if (j == i) j = (j + 1) % nr;
            e1.set_zero();
            e2.set_zero();
            e1.reals()[i] = 1.0;
            e2.reals()[j] = 1.0;
            worst = std::max(worst, std::fabs(inner(e1, e1) - h3)); // diagonal h^3
            worst = std::max(worst, std::fabs(inner(e1, e2)));      // off-diagonal 0
        }
    }
    return result("inner-gram", worst, 0.0,
                  "one-hot Gram: diagonal h^3 > 0, off-diagonal zero");
}

// ---- module: structure algebra ----------------------------------------------

CheckResult check_commutator_algebra(const RunConfig& cfg) {
    Rng rng(cfg.seed ^ 0x21ull);
    double worst = 0.0;
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 16; ++trial) {
            const AlgElement x = random_su(n, rng);
            const AlgElement y = random_su(n, rng);
            const AlgElement z = random_su(n, rng);
            // bilinearity
            AlgElement xs = x;
            xs *= 0.5;
            xs += y;
            AlgElement lin = commutator(xs, z);
            AlgElement xz = commutator(x, z);
            xz *= 0.5;
            lin -= xz;
            lin -= commutator(y, z);
            worst = std::max(worst, lin.max_abs());
            // antisymmetry
            AlgElement anti = commutator(x, y);
            anti += commutator(y, x);
            worst = std::max(worst, anti.max_abs());
            // Jacobi
            AlgElement jac = commutator(x, commutator(y, z));
            jac += commutator(y, commutator(z, x));
            jac += commutator(z, commutator(x, y));
            worst = std::max(worst, jac.max_abs());
        }
    }
    return result("commutator-algebra", worst, 1e-13,
                  "bilinearity, antisymmetry, Jacobi; ranks 2 and 3");
}

CheckResult check_ad_invariance(const RunConfig& cfg) {
    Rng rng(cfg.seed ^ 0x22ull);
    double worst = 0.0;
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 16; ++trial) {
            const AlgElement x = random_su(n, rng);
            const AlgElement y = random_su(n, rng);
            const AlgElement z = random_su(n, rng);
            worst = std::max(worst, std::fabs(inner_su(commutator(z, x), y) +
                                              inner_su(x, commutator(z, y))));
        }
    }
    return result("ad-invariance", worst, 1e-13,
                  "<[Z,X],Y> + <X,[Z,Y]> = 0; ranks 2 and 3");
}

// ---- module: covariant calculus ---------------------------------------------

CheckResult check_covariant_adjointness(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x31ull);
    const Connection A = random_cochain(X, 1, n, rng);
    double worst = 0.0;
    for (int k = 0; k <= 2; ++k) {
        const AlgCochain a = random_cochain(X, k, n, rng);
        const AlgCochain b = random_cochain(X, k + 1, n, rng);
        const double scale = std::max(1e-300, norm(a) * norm(b));
        worst = std::max(
            worst, std::fabs(inner(cov_d(A, a), b) - inner(a, cov_d_star(A, b))) /
                       scale);
    }
    return result("covariant-adjointness", worst, 1e-12,
                  "(d_A a, b) vs (a, d_A* b), degrees 0..2, random connection");
}

CheckResult check_covariant_square(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x32ull);
    const Connection A = random_cochain(X, 1, n, rng);
    const AlgCochain F = curvature(A);
    auto defect = [&](int k) {
        const AlgCochain c = random_cochain(X, k, n, rng);
        AlgCochain lhs = cov_d(A, cov_d(A, c));
        lhs -= bracket_cup(F, c);
        const double scale = std::max(1.0, norm(F) * norm(c));
        return lhs.max_abs() / scale;
    };
    const double r0 = defect(0);
    const double r1 = defect(1);
    return result("covariant-square-curvature", r0, 1e-13,
                  "degree 0 asserted; degree-1 defect measured: " + fmt(r1));
}

CheckResult check_curvature_linearization(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    Rng rng(cfg.seed ^ 0x33ull);
    double worst = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        const Connection A = dyadic_cochain(X, 1, 2, rng);
        const AlgCochain a = dyadic_cochain(X, 1, 2, rng);
        const double t = 0.5;
        Connection At = A;
        At.add_scaled(t, a);
        AlgCochain lhs = curvature(At);
        lhs -= curvature(A);
        lhs.add_scaled(-t, cov_d(A, a));
        lhs.add_scaled(-t * t, cup(a, a));
        worst = std::max(worst, lhs.max_abs());
    }
    return result("curvature-linearization", worst, 0.0,
                  "F(A+ta) - F(A) - t d_A a - t^2 (a u a) on dyadic data");
}

CheckResult check_gauge_flow_isometry(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x34ull);
    PhasePointT pt{Connection(X, 1, n), random_cochain(X, 1, n, rng),
                   random_cochain(X, 2, n, rng)};
    const AlgCochain xi = constant_scalar(X, random_su(n, rng));
    const double e0 = inner(pt.E, pt.E) + inner(pt.B, pt.B);
    const PhasePointT moved = gauge_flow(xi, 1.0, pt, 400);
    const double e1 = inner(moved.E, moved.E) + inner(moved.B, moved.B);
    return result("gauge-flow-isometry", std::fabs(e1 - e0) / std::max(1.0, e0),
                  1e-10, "norm of (E,B) under unit-time flow at flat base");
}

// ---- module: elliptic solver --------------------------------------------------

CheckResult check_green_self_adjoint(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x41ull);
    const Connection A = random_cochain(X, 1, n, rng);
    const AlgCochain c1 = random_cochain(X, 1, n, rng);
    const AlgCochain c2 = random_cochain(X, 1, n, rng);
    const AlgCochain g1 = green(A, c1, cfg.cg_tol, cfg.cg_maxit).first;
    const AlgCochain g2 = green(A, c2, cfg.cg_tol, cfg.cg_maxit).first;
    const double scale = std::max(1e-300, norm(c1) * norm(c2));
    const double r = std::fabs(inner(g1, c2) - inner(c1, g2)) / scale;
    return result("green-self-adjoint", r, 1e-8, "(Gc1,c2) vs (c1,Gc2), degree 1");
}

CheckResult check_green_commutation(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x42ull);
    const Connection A(X, 1, n); // flat base: curvature-free, so d_A and G commute
    const AlgCochain c = cov_d_star(A, random_cochain(X, 2, n, rng));
    AlgCochain lhs = cov_d(A, green(A, c, cfg.cg_tol, cfg.cg_maxit).first);
    lhs -= green(A, cov_d(A, c), cfg.cg_tol, cfg.cg_maxit).first;
    const double r = norm(lhs) / std::max(1e-300, norm(c));
    return result("green-commutation", r, 1e-7, "d_A G = G d_A at a flat connection");
}

CheckResult check_green_restricted(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x43ull);
    const Connection A(X, 1, n);
    // closed degree-2 input: beta = d_A v
    const AlgCochain beta = cov_d(A, random_cochain(X, 1, n, rng));
    const AlgCochain gb = green(A, beta, cfg.cg_tol, cfg.cg_maxit).first;
    const double r1 =
        diff_norm(cov_d(A, cov_d_star(A, gb)), beta) / std::max(1e-300, norm(beta));
    // coclosed degree-1 input: e = d_A* u
    const AlgCochain e = cov_d_star(A, random_cochain(X, 2, n, rng));
    const AlgCochain ge = green(A, e, cfg.cg_tol, cfg.cg_maxit).first;
    const double r2 =
        diff_norm(cov_d_star(A, cov_d(A, ge)), e) / std::max(1e-300, norm(e));
    return result("green-restricted", std::max(r1, r2), 1e-7,
                  "d_A d_A* G on closed and d_A* d_A G on coclosed inputs");
}

// ---- module: symplectic layer -------------------------------------------------

CheckResult check_form_antisymmetry(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x51ull);
    double worst = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        const PhasePointR ptR{random_cochain(X, 1, n, rng),
                              random_cochain(X, 1, n, rng)};
        const PhasePointS ptS{ptR.A, random_cochain(X, 2, n, rng)};
        const PhasePointT ptT{ptR.A, random_cochain(X, 1, n, rng),
                              random_cochain(X, 2, n, rng)};
        const TangentR r1{random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng)};
        const TangentR r2{random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng)};
        const TangentR r3{random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng)};
        const TangentS s1{r1.a, hodge(r1.x)};
        const TangentS s2{r2.a, hodge(r2.x)};
        const TangentS s3{r3.a, hodge(r3.x)};
        const TangentT t1{r1.a, r1.x, hodge(r1.a)};
        const TangentT t2{r2.a, r2.x, hodge(r2.a)};
        const TangentT t3{r3.a, r3.x, hodge(r3.a)};

        worst = std::max(worst, std::fabs(sigma_R(ptR, r1, r2) + sigma_R(ptR, r2, r1)));
        worst = std::max(worst, std::fabs(omega_S(ptS, s1, s2) + omega_S(ptS, s2, s1)));
        worst = std::max(worst, std::fabs(Omega_T(ptT, t1, t2) + Omega_T(ptT, t2, t1)));

        // bilinearity in the first slot with an exact dyadic coefficient
        auto blin_r = [&](double al) {
            TangentR mix{r1.a, r1.x};
            mix.a *= al;
            mix.x *= al;
            mix.a += r3.a;
            mix.x += r3.x;
            return std::fabs(sigma_R(ptR, mix, r2) - al * sigma_R(ptR, r1, r2) -
                             sigma_R(ptR, r3, r2));
        };
        auto blin_t = [&](double al) {
            TangentT mix{t1.a, t1.e, t1.beta};
            mix.a *= al;
            mix.e *= al;
            mix.beta *= al;
            mix.a += t3.a;
            mix.e += t3.e;
            mix.beta += t3.beta;
            return std::fabs(Omega_T(ptT, mix, t2) - al * Omega_T(ptT, t1, t2) -
                             Omega_T(ptT, t3, t2));
        };
        worst = std::max(worst, blin_r(0.5));
        worst = std::max(worst, blin_t(0.5));
    }
    return result("form-antisymmetry", worst, 1e-12,
                  "antisymmetry and bilinearity of the three two-forms");
}

CheckResult check_omega_closedness(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x52ull);
    const double fd = 1e-3;
    auto shift_pt = [](const PhasePointT& pt, double t, const TangentT& v) {
        PhasePointT q = pt;
        q.A.add_scaled(t, v.a);
        q.E.add_scaled(t, v.e);
        q.B.add_scaled(t, v.beta);
        return q;
    };
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        const PhasePointT pt{random_cochain(X, 1, n, rng),
                             random_cochain(X, 1, n, rng),
                             random_cochain(X, 2, n, rng)};
        const TangentT v1{random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng),
                          random_cochain(X, 2, n, rng)};
        const TangentT v2{random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng),
                          random_cochain(X, 2, n, rng)};
        const TangentT v3{random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng),
                          random_cochain(X, 2, n, rng)};
        auto dterm = [&](const TangentT& u, const TangentT& w1, const TangentT& w2) {
            return (Omega_T(shift_pt(pt, fd, u), w1, w2) -
                    Omega_T(shift_pt(pt, -fd, u), w1, w2)) /
                   (2.0 * fd);
        };
        const double sum =
            dterm(v1, v2, v3) - dterm(v2, v1, v3) + dterm(v3, v1, v2);
        worst = std::max(worst, std::fabs(sum));
    }
    return result("omega-closedness", worst, 1e-4,
                  "cyclic central-difference exterior derivative of Omega");
}

CheckResult check_moment_conditions(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x53ull);
    const AlgCochain xi = constant_scalar(X, random_su(n, rng));
    const PhasePointR ptR{random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng)};
    const PhasePointS ptS{ptR.A, random_cochain(X, 2, n, rng)};
    const PhasePointT ptT{ptR.A, random_cochain(X, 1, n, rng),
                          random_cochain(X, 2, n, rng)};
    const double rR = check_moment_condition(xi, ptR, cfg.fd_step, 8, rng);
    const double rS = check_moment_condition(xi, ptS, cfg.fd_step, 8, rng);
    const double rT = check_moment_condition(xi, ptT, cfg.fd_step, 8, rng);
    return result("moment-conditions", std::max({rR, rS, rT}), 1e-5,
                  "dJ = form(., generator) on all three spaces: " + fmt(rR) + " " +
                      fmt(rS) + " " + fmt(rT));
}

CheckResult check_moment_equivariance(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x54ull);
    const AlgElement xi_el = random_su(n, rng);
    const AlgElement zeta_el = random_su(n, rng);
    const AlgCochain xi = constant_scalar(X, xi_el);
    const AlgCochain zeta = constant_scalar(X, zeta_el);
    const GroupElement U = expm(zeta_el);
    const AlgCochain xi_ad = constant_scalar(X, conjugate(xi_el, U));

    // momentum phase space
    Connection A = random_cochain(X, 1, n, rng);
    AlgCochain p = random_cochain(X, 1, n, rng);
    const double j0 = inner(p, cov_d(A, xi));
    Connection Af = A;
    AlgCochain pf = p;
    gauge_flow_generic(zeta, 1.0, 400, Af, {&pf});
    const double j1 = inner(pf, cov_d(Af, xi_ad));
    double worst = std::fabs(j1 - j0) / std::max(1.0, std::fabs(j0));

    // field phase space
    const PhasePointT pt{A, random_cochain(X, 1, n, rng),
                         random_cochain(X, 2, n, rng)};
    const double k0 = inner(pointwise_bracket(pt.E, xi), cov_d_star(pt.A, pt.B));
    const PhasePointT moved = gauge_flow(zeta, 1.0, pt, 400);
    const double k1 =
        inner(pointwise_bracket(moved.E, xi_ad), cov_d_star(moved.A, moved.B));
    worst = std::max(worst, std::fabs(k1 - k0) / std::max(1.0, std::fabs(k0)));
    return result("moment-equivariance", worst, 1e-6,
                  "J^(Ad xi) after unit-time flow equals J^xi before");
}

CheckResult check_hodge_transport(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x55ull);
    double worst = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        const PhasePointR ptR{random_cochain(X, 1, n, rng),
                              random_cochain(X, 1, n, rng)};
        const PhasePointS ptS{ptR.A, hodge(ptR.p)};
        const TangentR v1{random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng)};
        const TangentR v2{random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng)};
        const TangentS w1{v1.a, hodge(v1.x)};
        const TangentS w2{v2.a, hodge(v2.x)};
        worst = std::max(
            worst, std::fabs(sigma_R(ptR, v1, v2) - omega_S(ptS, w1, w2)));
    }
    return result("hodge-transport", worst, 1e-12,
                  "sigma equals omega pulled back through (a,x) -> (a,*x)");
}

CheckResult check_poisson_vortex_agreement(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x56ull);
    const Connection A = random_cochain(X, 1, n, rng);
    const PhasePointT pt{A, random_cochain(X, 1, n, rng),
                         random_cochain(X, 2, n, rng)};
    const std::vector<Observable> obs = builtin_observables(A);
    double worst = 0.0, anti = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        for (std::size_t j = 0; j < obs.size(); ++j) {
            const double pb = poisson_T(obs[i], obs[j], pt);
            const double om =
                Omega_T(pt, hamiltonian_vf_T(obs[i], pt), hamiltonian_vf_T(obs[j], pt));
            worst = std::max(worst, std::fabs(pb - om));
            anti = std::max(anti, std::fabs(pb + poisson_T(obs[j], obs[i], pt)));
        }
    }
    return result("poisson-vortex-agreement", std::max(worst, anti), 1e-10,
                  "bracket equals Omega on Hamiltonian fields; antisymmetry " +
                      fmt(anti));
}

// ---- module: reduction maps ---------------------------------------------------

CheckResult check_gamma_symplecto_suite(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x61ull);
    const Connection A = random_cochain(X, 1, n, rng);
    const AlgCochain p = random_cochain(X, 1, n, rng);
    const double r = check_gamma_symplecto(A, p, 8, rng, cfg.cg_tol);
    return result("gamma-symplecto", r, 1e-7,
                  "pullback of the field-space form equals the reduced form");
}

CheckResult check_gamma_roundtrip(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x62ull);
    const Connection A(X, 1, n); // flat: both round trips are exact here
    const AlgCochain p = random_cochain(X, 1, n, rng);
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        const TangentR w{divergence_free_probe(A, rng, cfg.cg_tol),
                         divergence_free_probe(A, rng, cfg.cg_tol)};
        const TangentT v = clebsch_gamma(A, p, w, cfg.cg_tol);
        const TangentR back = clebsch_gamma_inverse(A, v, cfg.cg_tol);
        const double scale =
            std::max(1.0, std::max(norm(w.a), norm(w.x)));
        worst = std::max(worst, diff_norm(back.a, w.a) / scale);
        worst = std::max(worst, diff_norm(back.x, w.x) / scale);

        TangentT fib{AlgCochain(X, 1, n), divergence_free_probe(A, rng, cfg.cg_tol),
                     cov_d(A, random_cochain(X, 1, n, rng))};
        const TangentR mid = clebsch_gamma_inverse(A, fib, cfg.cg_tol);
        const TangentT again = clebsch_gamma(A, p, mid, cfg.cg_tol);
        const double fscale =
            std::max(1.0, std::max(norm(fib.e), norm(fib.beta)));
        worst = std::max(worst, diff_norm(again.e, fib.e) / fscale);
        worst = std::max(worst, diff_norm(again.beta, fib.beta) / fscale);
    }
    return result("gamma-roundtrip", worst, 1e-7,
                  "both compositions return constrained inputs, flat base");
}

CheckResult check_reduced_projector(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x63ull);
    const Connection A = random_cochain(X, 1, n, rng);
    const AlgCochain p = random_cochain(X, 1, n, rng);
    const AlgCochain q = random_cochain(X, 1, n, rng);
    const AlgCochain Pp = project_R0(A, p, cfg.cg_tol, cfg.cg_maxit).p;
    const AlgCochain PPp = project_R0(A, Pp, cfg.cg_tol, cfg.cg_maxit).p;
    const AlgCochain Pq = project_R0(A, q, cfg.cg_tol, cfg.cg_maxit).p;
    const double r_idem = diff_norm(PPp, Pp) / std::max(1e-300, norm(p));
    const double r_sa = std::fabs(inner(Pp, q) - inner(p, Pq)) /
                        std::max(1e-300, norm(p) * norm(q));
    const double r_res = norm(cov_d_star(A, Pp)) / std::max(1e-300, norm(p));
    return result("reduced-projector", std::max({r_idem, r_sa}), 2.0 * cfg.cg_tol,
                  "idempotent and self-adjoint; constraint residual " + fmt(r_res));
}

CheckResult check_charge_covariance(const RunConfig& cfg) {
    const CubicalComplex3 X = lattice_of(cfg);
    const int n = cfg.algebra_n;
    Rng rng(cfg.seed ^ 0x64ull);
    const PhasePointT pt{random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng),
                         random_cochain(X, 2, n, rng)};
    const AlgElement zeta_el = random_su(n, rng);
    const AlgCochain zeta = constant_scalar(X, zeta_el);
    const GroupElement U = expm(zeta_el);
    const AlgElement q0 = conserved_charge(pt);
    const PhasePointT moved = gauge_flow(zeta, 1.0, pt, 400);
    const AlgElement q1 = conserved_charge(moved);
    AlgElement d = conjugate(q0, U);
    d -= q1;
    return result("charge-covariance", d.frobenius_norm(), 1e-6,
                  "total charge conjugates along the unit-time flow");
}

CheckResult check_omega_spectrum(const RunConfig& cfg) {
    // informational: smallest lattice regardless of the configured size,
    // since the dense spectrum scales cubically
    const CubicalComplex3 X = build_torus(2, 2, 2, cfg.h);
    Rng rng(cfg.seed ^ 0x65ull);
    const PhasePointT pt{random_cochain(X, 1, 2, rng), random_cochain(X, 1, 2, rng),
                         random_cochain(X, 2, 2, rng)};
    const OmegaSpectrumReport rep = omega_rank_report(pt);
    std::ostringstream note;
    note << "2^3 rank-2 data: dim " << rep.dim << ", near-zero " << rep.near_zero
         << ", min sv " << fmt(rep.min_sv) << ", max sv " << fmt(rep.max_sv);
    return result("omega-spectrum", 0.0, 0.0, note.str());
}

// ---- registry -----------------------------------------------------------------

struct Entry {
    const char* name;
    CheckResult (*fn)(const RunConfig&);
};

const Entry kChecks[] = {
    {"complex-exactness", check_complex_exactness},
    {"cup-leibniz", check_cup_leibniz},
    {"hodge-isometry", check_hodge_isometry},
    {"inner-gram", check_inner_gram},
    {"commutator-algebra", check_commutator_algebra},
    {"ad-invariance", check_ad_invariance},
    {"covariant-adjointness", check_covariant_adjointness},
    {"covariant-square-curvature", check_covariant_square},
    {"curvature-linearization", check_curvature_linearization},
    {"gauge-flow-isometry", check_gauge_flow_isometry},
    {"green-self-adjoint", check_green_self_adjoint},
    {"green-commutation", check_green_commutation},
    {"green-restricted", check_green_restricted},
    {"form-antisymmetry", check_form_antisymmetry},
    {"omega-closedness", check_omega_closedness},
    {"moment-conditions", check_moment_conditions},
    {"moment-equivariance", check_moment_equivariance},
    {"hodge-transport", check_hodge_transport},
    {"poisson-vortex-agreement", check_poisson_vortex_agreement},
    {"gamma-symplecto", check_gamma_symplecto_suite},
    {"gamma-roundtrip", check_gamma_roundtrip},
    {"reduced-projector", check_reduced_projector},
    {"charge-covariance", check_charge_covariance},
    {"omega-spectrum", check_omega_spectrum},
};

bool selected(const std::string& name, const std::string& select) {
    if (select.empty()) return true;
    std::size_t pos = 0;
    while (pos <= select.size()) {
        const std::size_t comma = select.find(',', pos);
        const std::string tok =
            select.substr(pos, comma == std::string::npos ? std::string::npos
                                                          : comma - pos);
        if (!tok.empty() && name.find(tok) != std::string::npos) return true;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return false;
}

CheckResult run_one(const Entry& e, const RunConfig& cfg) {
    try {
        return e.fn(cfg);
    } catch (const std::exception& ex) {
        CheckResult r;
        r.name = e.name;
        r.residual = std::numeric_limits<double>::quiet_NaN();
        r.tol = 0.0;
        r.pass = false;
        r.note = std::string("exception: ") + ex.what();
        return r;
    }
}

} // namespace

std::vector<std::string> suite_check_names() {
    std::vector<std::string> names;
    for (const Entry& e : kChecks) names.push_back(e.name);
    return names;
}

SuiteReport run_suite(const RunConfig& cfg, int jobs) {
    std::vector<const Entry*> todo;
    for (const Entry& e : kChecks)
        if (selected(e.name, cfg.suite_select)) todo.push_back(&e);

    SuiteReport rep;
    rep.results.resize(todo.size());
    if (jobs <= 1 || todo.size() <= 1) {
        for (std::size_t i = 0; i < todo.size(); ++i)
            rep.results[i] = run_one(*todo[i], cfg);
        return rep;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= todo.size()) return;
            rep.results[i] = run_one(*todo[i], cfg);
        }
    };
    std::vector<std::thread> pool;
    const int k = std::min<int>(jobs, static_cast<int>(todo.size()));
    pool.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return rep;
}

std::string format_report(const SuiteReport& rep) {
    std::ostringstream out;
    std::size_t width = 4;
    for (const CheckResult& r : rep.results) width = std::max(width, r.name.size());
    int passed = 0;
    for (const CheckResult& r : rep.results) {
        out << (r.pass ? "PASS  " : "FAIL  ");
        out << r.name;
        for (std::size_t i = r.name.size(); i < width + 2; ++i) out << ' ';
        out << "residual " << fmt(r.residual) << "  tol " << fmt(r.tol);
        if (!r.note.empty()) out << "  [" << r.note << "]";
        out << '\n';
        if (r.pass) ++passed;
    }
    out << passed << "/" << rep.results.size() << " checks passed\n";
    return out.str();
}

} // namespace ym
