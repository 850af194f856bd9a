#ifndef YM_OPS_GAUGE_HPP
#define YM_OPS_GAUGE_HPP

#include <utility>
#include <vector>

#include "ym/ops/calculus.hpp"

namespace ym {

// the distinguished degree-1 cochain all covariant operators are based at
using Connection = AlgCochain;

struct PhasePointR {
    AlgCochain A; // degree 1
    AlgCochain p; // degree 1
};

struct PhasePointS {
    AlgCochain A;      // degree 1
    AlgCochain lambda; // degree 2
};

struct PhasePointT {
    AlgCochain A; // degree 1
    AlgCochain E; // degree 1
    AlgCochain B; // degree 2
};

// tangent vector at a PhasePointT: base direction a plus fiber directions
struct TangentT {
    AlgCochain a;    // degree 1
    AlgCochain e;    // degree 1
    AlgCochain beta; // degree 2
};

// F_A = dA + A ∪ A  (the cup square carries the whole (1/2)[A wedge A]
// since [A ∪ A] = 2 A ∪ A in degree 1)
AlgCochain curvature(const Connection& A);

// d_A c = dc + [A ∪ c]
AlgCochain cov_d(const Connection& A, const AlgCochain& c);

// the exact adjoint of cov_d with respect to `inner`, implemented as the
// mirrored (transposed) accumulation of cov_d term by term -- not via the
// smooth-theory *d* formula, which differs on the lattice
AlgCochain cov_d_star(const Connection& A, const AlgCochain& u);

// fundamental vector field of a degree-0 direction xi at (A,E,B):
//   a = d_A xi,  e = [E, xi],  beta = [B, xi]
// with the fiber brackets taken pointwise at each cell's base vertex
TangentT fundamental_vf(const AlgCochain& xi, const PhasePointT& pt);

// time-t flow of the fundamental vector field, classical 4th-order
// one-step method with `steps` substeps; defines the finite gauge action
PhasePointT gauge_flow(const AlgCochain& xi, double t, const PhasePointT& pt,
                       int steps);

// same integrator for an arbitrary connection plus pointwise-transforming
// fiber cochains (used for the phase spaces carrying (A,p) or (A,lambda))
void gauge_flow_generic(const AlgCochain& xi, double t, int steps, AlgCochain& A,
                        std::vector<AlgCochain*> fibers);

// (||d_A B||, ||d_A* E||): both vanish on the constrained field subspace
std::pair<double, double> gauss_residuals(const PhasePointT& pt);

} // namespace ym

#endif
