#include "ym/clebsch/clebsch.hpp"

#include <algorithm>
#include <cmath>

namespace ym {

PhasePointT clebsch_phi(const Connection& A, const AlgCochain& p) {
    AlgCochain E = p;
    E *= -1.0;
    return PhasePointT{A, std::move(E), curvature(A)};
}

ReducedPointR0 project_R0(const Connection& A, const AlgCochain& p, double tol,
                          int maxit) {
    const AlgCochain div = cov_d_star(A, p);
    const AlgCochain xi = green(A, div, tol, maxit).first;
    AlgCochain q = p;
    q -= cov_d(A, xi);
    return ReducedPointR0{A, std::move(q)};
}

TangentT clebsch_gamma(const Connection& A, const AlgCochain& p, const TangentR& v,
                       double tol, int maxit) {
    (void)p; // the map depends on the base point only through A
    AlgCochain e = green(A, v.x, tol, maxit).first;
    e *= -1.0;
    return TangentT{AlgCochain(A.lattice(), 1, A.n()), std::move(e), cov_d(A, v.a)};
}

TangentR clebsch_gamma_inverse(const Connection& A, const TangentT& v, double tol,
                               int maxit, double constraint_tol) {
    const double se = norm(v.e);
    if (se > 0.0) {
        const double re = norm(cov_d_star(A, v.e));
        if (re > 10.0 * constraint_tol * se)
            throw ConstraintViolation(
                "clebsch_gamma_inverse: input e is not divergence-free "
                "(relative defect " +
                std::to_string(re / se) + ")");
    }
    const double sb = norm(v.beta);
    if (sb > 0.0) {
        const double rb = norm(cov_d(A, v.beta));
        if (rb > 10.0 * constraint_tol * sb)
            throw ConstraintViolation(
                "clebsch_gamma_inverse: input beta is not closed "
                "(relative defect " +
                std::to_string(rb / sb) + ")");
    }
    AlgCochain a(A.lattice(), 1, A.n());
    if (sb > 0.0) a = cov_d_star(A, green(A, v.beta, tol, maxit).first);
    AlgCochain x = cov_d_star(A, cov_d(A, v.e));
    x *= -1.0;
    return TangentR{std::move(a), std::move(x)};
}

namespace {

// a coexact random degree-1 field, then projected onto ker d_A*; both steps
// keep every Green right-hand side orthogonal to the Laplacian kernel
AlgCochain constrained_probe(const Connection& A, Rng& rng, double tol) {
    const CubicalComplex3& X = A.lattice();
    AlgCochain raw = cov_d_star(A, random_cochain(X, 2, A.n(), rng));
    const AlgCochain div = cov_d_star(A, raw);
    // flat connections leave raw already divergence-free to rounding; the
    // cleanup solve would then chase pure noise, so skip it
    if (norm(div) > 1e-12 * norm(raw)) raw -= cov_d(A, green(A, div, tol, 0).first);
    return raw;
}

} // namespace

double check_gamma_symplecto(const Connection& A, const AlgCochain& p, int trials,
                             Rng& rng, double tol) {
    const PhasePointR base{A, p};
    const PhasePointT image = clebsch_phi(A, p);
    double worst = 0.0;
    for (int k = 0; k < trials; ++k) {
        const TangentR v1{constrained_probe(A, rng, tol),
                          constrained_probe(A, rng, tol)};
        const TangentR v2{constrained_probe(A, rng, tol),
                          constrained_probe(A, rng, tol)};
        const TangentT w1 = clebsch_gamma(A, p, v1, tol);
        const TangentT w2 = clebsch_gamma(A, p, v2, tol);
        const double lhs = Omega_T(image, w1, w2);
        const double rhs = sigma_R(base, v1, v2);
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return worst;
}

TangentR pullback_hamiltonian_vf(const Observable& obs, const Connection& A,
                                 const AlgCochain& p) {
    const PhasePointT pt = clebsch_phi(A, p);
    return TangentR{cov_d_star(A, obs.varE(pt)),
                    cov_d_star(A, cov_d(A, obs.varB(pt)))};
}

double check_bracket_correspondence(const Observable& f, const Observable& g,
                                    const Connection& A, const AlgCochain& p,
                                    double tol) {
    const PhasePointT pt = clebsch_phi(A, p);
    const double lhs = poisson_T(f, g, pt);
    const TangentR wf = clebsch_gamma_inverse(A, hamiltonian_vf_T(f, pt), tol);
    const TangentR wg = clebsch_gamma_inverse(A, hamiltonian_vf_T(g, pt), tol);
    const double rhs = sigma_R(PhasePointR{A, p}, wf, wg);
    return std::fabs(lhs - rhs);
}

AlgElement conserved_charge(const PhasePointT& pt) {
    return integrate(moment_T(pt));
}

AlgElement charge_integral_star_form(const PhasePointT& pt) {
    const AlgCochain W = cov_d(pt.A, hodge(pt.B)); // degree 2
    return integrate(bracket_cup(W, pt.E));
}

AlgElement charge_integral_flux_form(const PhasePointT& pt) {
    AlgCochain D = cov_d(pt.A, pt.E); // degree 2
    D *= -1.0;
    return integrate(bracket_cup(D, hodge(pt.B)));
}

} // namespace ym
