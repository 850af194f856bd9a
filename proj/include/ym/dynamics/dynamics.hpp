#ifndef YM_DYNAMICS_DYNAMICS_HPP
#define YM_DYNAMICS_DYNAMICS_HPP

#include <vector>

#include "ym/clebsch/clebsch.hpp"

namespace ym {

// One instrumented step of a trajectory; the column set is fixed and is
// what the CSV writer emits.
struct TrajectorySample {
    long step = 0;
    double time = 0.0;
    double energy = 0.0;         // Hamiltonian of the system being integrated
    double gauss_e = 0.0;        // ||d_A* E||   (for (A,p): E = -p)
    double gauss_b = 0.0;        // ||d_A B||    (for (A,p): B = F_A)
    double charge_norm = 0.0;    // Frobenius norm of the total charge matrix
    double bianchi_defect = 0.0; // ||d_A F_A||
};

struct TrajectoryRecord {
    std::vector<TrajectorySample> samples;
};

// ---- wave flow on (A, p) ----------------------------------------------------

struct EvolveResultR {
    PhasePointR state;
    TrajectoryRecord record;
};

// Leapfrog (Stoermer-Verlet) on H(A,p) = 1/2 (F_A,F_A) + 1/2 (p,p):
// Adot = p, pdot = -cov_d_star(A, curvature(A)).  Symmetric, hence
// time-reversible: integrating with -dt from the final state returns the
// initial one to round-off accumulation.  Non-finite field values raise
// NumericalBlowup with the offending step index.
EvolveResultR evolve_R(const Connection& A0, const AlgCochain& p0, double dt,
                       long steps, int record_stride = 1);

// ---- linear field flow on (E, B) at frozen A --------------------------------

// Sign convention for the first-order system:
//   intro: Edot = -d_A* B,  Bdot =  d_A E
//   body:  Edot =  d_A* B,  Bdot = -d_A E
// The two are exchanged by E -> -E.
enum class Convention { intro, body };

struct EvolveResultT {
    PhasePointT state;
    TrajectoryRecord record;
};

// Implicit midpoint on the linear skew system above, base point frozen.
// The midpoint equation is solved by fixed-point iteration (the map is a
// contraction for dt * ||operator|| / 2 < 1); stagnation past the iteration
// budget raises ConvergenceError.  Midpoint preserves every quadratic
// invariant of a linear system, in particular
// 1/2 (||d_A E||^2 + ||d_A* B||^2).
EvolveResultT evolve_T(const PhasePointT& pt0, double dt, long steps,
                       Convention convention, int record_stride = 1,
                       double fixed_point_tol = 1e-14,
                       int fixed_point_maxit = 200);

// ---- consistency of the two flows -------------------------------------------

struct MaxwellImageReport {
    double electric_residual = 0.0; // max ||(E_{k+1}-E_k)/dt - d_A* B_k||
    double magnetic_residual = 0.0; // max ||(B_{k+1}-B_k)/dt + d_A E_k||
    double gauss_initial = 0.0;     // ||d_A* E|| at step 0
    double gauss_max = 0.0;         // max over the trajectory
};

// Run the (A,p) leapfrog and push every state through the field map
// (E, B) = (-p, F_A); the images satisfy Edot = d_A* B, Bdot = -d_A E as an
// ODE identity, so the forward-difference residuals measure pure
// time-discretization error and halve when dt does.
MaxwellImageReport maxwell_image_check(const Connection& A0, const AlgCochain& p0,
                                       double dt, long steps);

} // namespace ym

#endif
