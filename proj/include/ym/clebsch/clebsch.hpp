#ifndef YM_CLEBSCH_CLEBSCH_HPP
#define YM_CLEBSCH_CLEBSCH_HPP

#include "ym/ops/elliptic.hpp"
#include "ym/symplectic/forms.hpp"

namespace ym {

// A point of the reduced space: a connection together with a momentum
// satisfying the divergence constraint d_A* p = 0 (up to solver tolerance).
struct ReducedPointR0 {
    Connection A;
    AlgCochain p; // degree 1
};

// Map a reduced point into field data: (A, p) -> (A, E = -p, B = curvature(A)).
PhasePointT clebsch_phi(const Connection& A, const AlgCochain& p);

// Orthogonal projection of a degree-1 momentum onto ker d_A*:
// p' = p - cov_d(A, green(A, cov_d_star(A, p))).
ReducedPointR0 project_R0(const Connection& A, const AlgCochain& p,
                          double tol = 1e-10, int maxit = 0);

// Green-modified linearization of clebsch_phi.  The output is a vertical
// field tangent: (a, x) -> (0, -green(A, x), cov_d(A, a)).  Keeping the
// base slot of the result zero is what makes the symplectic pullback
// identity hold at nonabelian connections: the bracket terms of Omega_T
// are driven entirely by the base direction, and the reduced form sigma_R
// has no counterpart for them.
TangentT clebsch_gamma(const Connection& A, const AlgCochain& p, const TangentR& v,
                       double tol = 1e-10, int maxit = 0);

// Inverse of clebsch_gamma on constrained fiber tangents:
// (e, beta) -> (cov_d_star(A, green(A, beta)), -cov_d_star(A, cov_d(A, e))).
// Requires d_A* e ~ 0 and d_A beta ~ 0; relative defects above
// 10 x constraint_tol raise ConstraintViolation.
TangentR clebsch_gamma_inverse(const Connection& A, const TangentT& v,
                               double tol = 1e-10, int maxit = 0,
                               double constraint_tol = 1e-6);

// Max over `trials` random constrained tangent pairs of
// |Omega_T(phi(A,p), gamma v1, gamma v2) - sigma_R((A,p), v1, v2)|.
// Probes are drawn coexact and then divergence-projected in both slots, so
// every Green solve involved has a kernel-consistent right-hand side even
// at flat or abelian connections.
double check_gamma_symplecto(const Connection& A, const AlgCochain& p, int trials,
                             Rng& rng, double tol = 1e-10);

// Reduced-space Hamiltonian vector field of an observable, evaluated through
// the field map: X^R = (cov_d_star(A, varE), cov_d_star(A, cov_d(A, varB)))
// at (E, B) = clebsch_phi(A, p).
TangentR pullback_hamiltonian_vf(const Observable& obs, const Connection& A,
                                 const AlgCochain& p);

// |poisson_T(f, g, phi(A,p)) - sigma_R((A,p), gamma^{-1} X_f, gamma^{-1} X_g)|.
double check_bracket_correspondence(const Observable& f, const Observable& g,
                                    const Connection& A, const AlgCochain& p,
                                    double tol = 1e-10);

// Total charge matrix: integrate(moment_T(pt)).  Vanishes identically on
// commuting field data.
AlgElement conserved_charge(const PhasePointT& pt);

// The same total charge written as the integral of either cup-product
// density; the two densities differ by an exact term plus a cubic
// commutator, so their integrals agree to the size of the cubic term.
AlgElement charge_integral_star_form(const PhasePointT& pt); // int [d_A*B u E]
AlgElement charge_integral_flux_form(const PhasePointT& pt); // int [-d_A E u *B]

} // namespace ym

#endif
