#ifndef YM_SYMPLECTIC_FORMS_HPP
#define YM_SYMPLECTIC_FORMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "ym/ops/elliptic.hpp"

namespace ym {

// tangent vectors at points of the two cotangent/tangent phase spaces;
// TangentT lives in gauge.hpp next to PhasePointT
struct TangentR {
    AlgCochain a; // degree 1 (base direction)
    AlgCochain x; // degree 1 (fiber direction)
};

struct TangentS {
    AlgCochain a;     // degree 1
    AlgCochain alpha; // degree 2
};

// ---- canonical forms ------------------------------------------------------

// theta(v) = (a, *lambda)_1
double theta_S(const PhasePointS& pt, const TangentS& v);

// omega(v1, v2) = (a2, *alpha1)_1 - (a1, *alpha2)_1  (= the exterior
// derivative of theta_S, which finite differences confirm)
double omega_S(const PhasePointS& pt, const TangentS& v1, const TangentS& v2);

// sigma((a,x),(b,y)) = (b, x)_1 - (a, y)_1
double sigma_R(const PhasePointR& pt, const TangentR& v1, const TangentR& v2);

// Theta(v) = (e, d_A* B)_1
double Theta_T(const PhasePointT& pt, const TangentT& v);

// Omega(v1,v2) = ([a1 u e2], B)_2 - ([a2 u e1], B)_2
//              + (e2, d_A* beta1)_1 - (e1, d_A* beta2)_1
// This is the exact differential of Theta_T on the affine phase space:
// the ([a u e], B) terms are the A-derivative of d_A* moved across the
// pairing, so the central-difference audit of d~Theta reproduces it to
// rounding (Theta is quadratic along any fixed direction).
double Omega_T(const PhasePointT& pt, const TangentT& v1, const TangentT& v2);

// ---- moment maps ----------------------------------------------------------

// J(A,p) = d_A* p, degree 0
AlgCochain moment_R(const Connection& A, const AlgCochain& p);

// J(A,lambda) = -d_A lambda, degree 3
AlgCochain moment_S(const Connection& A, const AlgCochain& lambda);

// charge density [d_A*B wedge E] as a degree-3 cochain: at each site the
// Levi-Civita-paired sum of pointwise commutators
//   sum_mu [ (*W)(x,{mu}), E(x,{mu}) ],  W = d_A(*B).
// Pointwise commutators (not position-shifted cup brackets) so that fields
// in a common commuting subalgebra give exactly zero, reflecting that the
// charge exists only through the non-commutativity of the algebra.
AlgCochain moment_T(const PhasePointT& pt);

// fundamental vector fields of a degree-0 direction xi; fiber parts are
// pointwise base-vertex brackets, matching gauge_flow's generator (for
// lattice-constant xi the moment conditions below then hold exactly)
TangentR fundamental_vf_R(const AlgCochain& xi, const PhasePointR& pt);
TangentS fundamental_vf_S(const AlgCochain& xi, const PhasePointS& pt);

// max over `probes` random tangent directions v of
//   | centered difference of J^xi along v  -  form(v, xi_#) |
// where J^xi and xi_# are the space's moment pairing and fundamental field.
double check_moment_condition(const AlgCochain& xi, const PhasePointR& pt,
                              double fd_step, int probes, Rng& rng);
double check_moment_condition(const AlgCochain& xi, const PhasePointS& pt,
                              double fd_step, int probes, Rng& rng);
double check_moment_condition(const AlgCochain& xi, const PhasePointT& pt,
                              double fd_step, int probes, Rng& rng);

// ---- observables on the (E,B) fibers --------------------------------------

// A real function of (E,B) carrying closed-form partial derivatives:
//   d~Phi(e,beta) = (e, d_A* varE)_1 + (varB, d_A* beta)_1.
// varE/varB are stored in closed form because the defining pairing pins
// varE only up to ker(d_A d_A*); check_variational_derivative audits them.
struct Observable {
    // closed under the Poisson bracket (see poisson_observable):
    //   constant:  eval = value
    //   phi:       eval = (E, d_A* c)_1,   varE = c (deg 2), varB = 0
    //   psi:       eval = (c, d_A* B)_1,   varE = 0, varB = c (deg 1)
    //   vortex:    eval = (1/2)(||d_A E||^2 + ||d_A* B||^2),
    //              varE = d_A E, varB = d_A* B
    enum class Kind { constant, phi, psi, vortex };

    std::string name;
    Kind kind = Kind::constant;
    double value = 0.0; // constant kind only
    Connection A;       // base connection the derivatives refer to
    AlgCochain c;       // phi: degree-2 probe; psi: degree-1 probe

    double eval(const PhasePointT& pt) const;
    AlgCochain varE(const PhasePointT& pt) const; // degree 2
    AlgCochain varB(const PhasePointT& pt) const; // degree 1
};

Observable make_constant_observable(double value, const Connection& A);
Observable make_phi_observable(const Connection& A, AlgCochain c);  // deg 2
Observable make_psi_observable(const Connection& A, AlgCochain cp); // deg 1
Observable make_vortex_hamiltonian(const Connection& A);

// vortex Hamiltonian + two phi and two psi quadratic probes with fixed seeds
std::vector<Observable> builtin_observables(const Connection& A);

// the Poisson bracket of two built-in observables, again as an observable
// with closed-form derivatives (the family above is closed under {,})
Observable poisson_observable(const Observable& f, const Observable& g);

// X_Phi = (0, -varB, varE): vertical, base direction zero
TangentT hamiltonian_vf_T(const Observable& obs, const PhasePointT& pt);

// (varB_f, d_A* varE_g)_1 - (varB_g, d_A* varE_f)_1
// == Omega_T(X_f, X_g) identically (the a-components of both fields vanish)
double poisson_T(const Observable& f, const Observable& g,
                 const PhasePointT& pt);

// max over probe fiber directions (e, beta) of
//   | centered difference of eval - [(e, d_A* varE) + (varB, d_A* beta)] |
double check_variational_derivative(const Observable& obs,
                                    const PhasePointT& pt, double fd_step,
                                    int probes, Rng& rng);

// Hamiltonian of the (A,p) system, exposed for the dynamics module:
//   H(A,p) = 1/2 (F_A, F_A)_2 + 1/2 (p, p)_1
double hamiltonian_R(const PhasePointR& pt);

// ---- numerical rank report for Omega --------------------------------------

// Omega pairs fiber directions beta in ker d_A* with nothing, so it is
// degenerate on the full tangent space; this assembles the exact matrix of
// Omega_T at pt in the real coordinate basis and reports its singular
// values rather than asserting nondegeneracy.
struct OmegaSpectrumReport {
    int dim = 0;
    double max_sv = 0.0;
    double min_sv = 0.0;            // smallest singular value overall
    int near_zero = 0;              // count of sv <= 1e-10 * max_sv
    std::vector<double> svals;      // ascending
};
OmegaSpectrumReport omega_rank_report(const PhasePointT& pt);

} // namespace ym

#endif
