#ifndef YM_OPS_CALCULUS_HPP
#define YM_OPS_CALCULUS_HPP

#include "ym/core/cochain.hpp"
#include "ym/lie/su.hpp"

namespace ym {

// Coboundary of a degree k < 3 cochain:
//   (dc)(x,T) = sum_{mu in T} eps(mu,T) * [ c(x+mu, T\mu) - c(x, T\mu) ]
// with eps(mu,T) = (-1)^(#{nu in T : nu < mu}).  d(d(c)) = 0.
AlgCochain coboundary(const AlgCochain& c);

// Hodge star: the value at (x,S) moves to the complementary cell (x,S^c)
// with the Levi-Civita sign of (S,S^c).  Applying it twice is the identity
// (exactly, bitwise), and it is an isometry of `inner` for every h because
// the inner product weights all degrees uniformly.
AlgCochain hodge(const AlgCochain& c);

// Front-face cup product (degrees j + k <= 3):
//   (a ∪ b)(x,S) = sum over splits S = P ⊔ Q, |P| = j, of
//                  sign(P,Q) * a(x,P) * b(x + P, Q)
// It is associative and satisfies the Leibniz rule
//   d(a ∪ b) = da ∪ b + (-1)^j a ∪ db
// exactly -- that identity is the binding contract of this operation.
AlgCochain cup(const AlgCochain& a, const AlgCochain& b);

// graded bracket [a ∪ b] := a ∪ b - (-1)^(jk) b ∪ a
AlgCochain bracket_cup(const AlgCochain& a, const AlgCochain& b);

// L^2-type inner product: h^3 * sum over k-cells of Re tr(a_c^dagger b_c).
// On anti-Hermitian values this equals h^3 * sum of -tr(a_c b_c); in
// general it is the (positive definite) real Frobenius pairing.
double inner(const AlgCochain& a, const AlgCochain& b);

// sqrt(inner(c,c))
double norm(const AlgCochain& c);

// h^3 * sum of the degree-3 cell values
AlgElement integrate(const AlgCochain& mu);

// h^3 * sum over 3-cells of Re tr( mu(x) * xi(x) ), xi a degree-0 cochain
// evaluated at the cube's base vertex (the raw trace pairing, not the
// sign-flipped one)
double pairing(const AlgCochain& mu, const AlgCochain& xi);

// pointwise bracket with a degree-0 cochain at each cell's base vertex:
// out(c) = [ c_value, xi(base_vertex(c)) ].  For lattice-constant xi this
// coincides with the graded cup bracket with xi and stays in su(n).
AlgCochain pointwise_bracket(const AlgCochain& c, const AlgCochain& xi);

// per-(set, matrix-entry) lattice mean removed; the result is orthogonal
// to every lattice-constant cochain of the same degree
AlgCochain remove_set_means(const AlgCochain& c);

} // namespace ym

#endif
