#ifndef YM_OPS_ELLIPTIC_HPP
#define YM_OPS_ELLIPTIC_HPP

#include <utility>

#include "ym/ops/gauge.hpp"

namespace ym {

struct GreenSolveReport {
    int iterations = 0;
    double residual = 0.0;  // final relative residual ||r|| / ||rhs||
    double tolerance = 0.0; // relative tolerance the solve targeted
};

// covariant Hodge Laplacian at the degree of c:
//   Delta_k = d_A d_A* + d_A* d_A, with whichever term would leave the
//   degree range 0..3 omitted.  Self-adjoint and positive semidefinite.
AlgCochain laplacian(const Connection& A, const AlgCochain& c);

// Green operator: solve laplacian(A, x) = rhs by plain conjugate gradients
// from x0 = 0 with fixed reduction order, to ||r|| <= tol * ||rhs||.
//   maxit = 0 selects 10 * (number of real unknowns).
// At degree 0 the lattice-constant identity directions are covariantly
// constant for every connection; the solve runs in their orthogonal
// complement (rhs is projected, so is each iterate).
// Throws ConvergenceError when the budget is exhausted and
// IrreducibilityError when a search direction exposes a (near-)kernel of
// the Laplacian: the solver refuses to deflate, because a kernel at k = 0
// means the connection is reducible and the operator has no inverse.
std::pair<AlgCochain, GreenSolveReport> green(const Connection& A,
                                              const AlgCochain& rhs,
                                              double tol = 1e-10, int maxit = 0);

// smallest-eigenvalue estimate of the degree-0 Laplacian by inverse power
// iteration, run until the Rayleigh quotient stagnates (or `iters` caps it).
// Never throws: if the inner solves expose a kernel direction, the Rayleigh
// quotient they report (tiny) is returned directly.  The caller accepts A
// as irreducible when the estimate exceeds its floor.
double irreducibility_check(const Connection& A, int iters = 400,
                            double solve_tol = 1e-8);

// x = cov_d(A, xi) + y with cov_d_star(A, y) = 0:  xi = G_A(d_A* x)
struct TangentDecomposition {
    AlgCochain xi; // degree 0
    AlgCochain y;  // degree 1, divergence-free part
    GreenSolveReport report;
};
TangentDecomposition decompose_tangent(const Connection& A, const AlgCochain& x,
                                       double tol = 1e-10, int maxit = 0);

// u = cov_d_star(A, lambda) + w with cov_d(A, w) = 0:  lambda = G_A(d_A u)
// solved at degree 3, where the Laplacian reduces to d_A d_A*.  This makes
// w = u - d_A* lambda closed up to solver tolerance identically in A; the
// alternative d_A G_A u at degree 2 leaves a defect of order ||F_A||.
struct CotangentDecomposition {
    AlgCochain lambda; // degree 3
    AlgCochain w;      // degree 2, closed part
    GreenSolveReport report;
};
CotangentDecomposition decompose_cotangent(const Connection& A,
                                           const AlgCochain& u,
                                           double tol = 1e-10, int maxit = 0);

} // namespace ym

#endif
