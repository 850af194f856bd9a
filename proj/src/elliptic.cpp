#include "ym/ops/elliptic.hpp"

#include <cmath>
#include <cstdint>

#include "ym/kernels/kernels.hpp"

namespace ym {

namespace {

// Lattice-constant multiples of the identity matrix commute pointwise with
// every connection value, so at degree 0 they are covariantly constant no
// matter what A is and span a kernel of the Laplacian.  Green solves at
// degree 0 therefore run in the orthogonal complement of this center; the
// projection below removes the component, and reapplying it each iteration
// stops rounding from reinjecting it.  No other degree carries such an
// A-independent kernel: the ordered split of the product pairs the identity
// with connection values at different cells there, so the brackets do not
// cancel (at degree 3 the kernel appears only for flat or commuting
// connections, where consistent right-hand sides keep the iteration in the
// complement by themselves).
void remove_center(AlgCochain& c) {
    const int k = c.degree();
    if (k != 0) return;
    const int n = c.n();
    auto& v = c.values();
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    const std::size_t cells = v.size() / nn;
    cplx trace_sum(0.0);
    for (std::size_t cell = 0; cell < cells; ++cell)
        for (int i = 0; i < n; ++i)
            trace_sum += v[cell * nn + static_cast<std::size_t>(i) * n + i];
    const cplx lam = trace_sum / (static_cast<double>(cells) * n);
    for (std::size_t cell = 0; cell < cells; ++cell)
        for (int i = 0; i < n; ++i)
            v[cell * nn + static_cast<std::size_t>(i) * n + i] -= lam;
}

} // namespace

AlgCochain laplacian(const Connection& A, const AlgCochain& c) {
    const int k = c.degree();
    AlgCochain out = c.zeros_like();
    if (k >= 1) out += cov_d(A, cov_d_star(A, c));
    if (k <= 2) out += cov_d_star(A, cov_d(A, c));
    return out;
}

std::pair<AlgCochain, GreenSolveReport> green(const Connection& A,
                                              const AlgCochain& rhs, double tol,
                                              int maxit) {
    const auto& kops = kern::ops();
    const std::size_t N = rhs.num_reals(); // real unknowns
    if (maxit <= 0) maxit = 10 * static_cast<int>(N);

    AlgCochain x = rhs.zeros_like();
    GreenSolveReport rep;
    rep.tolerance = tol;

    AlgCochain r = rhs;
    remove_center(r);
    const double bb = kops.dot(r.reals(), r.reals(), N);
    if (bb == 0.0) return {std::move(x), rep};
    const double bnorm = std::sqrt(bb);

    AlgCochain p = r;
    double rr = bb;
    for (int it = 1; it <= maxit; ++it) {
        AlgCochain Ap = laplacian(A, p);
        remove_center(Ap);
        const double pAp = kops.dot(p.reals(), Ap.reals(), N);
        const double pp = kops.dot(p.reals(), p.reals(), N);
        if (pAp <= 1e-12 * pp) {
            throw IrreducibilityError(
                "green: search direction lies in the (near-)kernel of the "
                "covariant Laplacian; the connection is reducible",
                pp > 0.0 ? pAp / pp : 0.0);
        }
        const double alpha = rr / pAp;
        kops.axpy(alpha, p.reals(), x.reals(), N);
        kops.axpy(-alpha, Ap.reals(), r.reals(), N);
        const double rr_new = kops.dot(r.reals(), r.reals(), N);
        rep.iterations = it;
        rep.residual = std::sqrt(rr_new) / bnorm;
        if (rep.residual <= tol) return {std::move(x), rep};
        const double beta = rr_new / rr;
        rr = rr_new;
        // p = r + beta * p
        kops.scale_add(beta, p.reals(), 1.0, r.reals(), p.reals(), N);
    }
    throw ConvergenceError("green: conjugate gradients exhausted its budget",
                           rep.iterations, rep.residual);
}

double irreducibility_check(const Connection& A, int iters, double solve_tol) {
    const CubicalComplex3& X = A.lattice();
    const int n = A.n();
    // deterministic start vector with a nonzero lattice mean, so it overlaps
    // the constant directions that span the kernel at a reducible connection
    AlgCochain v(X, 0, n);
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    for (auto& z : v.values()) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        const double t = 1.0 + 0.25 * static_cast<double>((s >> 40) & 0xffff) / 65536.0;
        z = cplx(t, 0.0);
    }

    const auto& kops = kern::ops();
    const std::size_t N = v.num_reals();
    double rayleigh = 0.0;
    for (int it = 0; it < iters; ++it) {
        double vv = kops.dot(v.reals(), v.reals(), N);
        kops.scal(1.0 / std::sqrt(vv), v.reals(), N);
        AlgCochain Lv = laplacian(A, v);
        const double prev = rayleigh;
        rayleigh = kops.dot(v.reals(), Lv.reals(), N);
        // once the quotient stagnates the estimate no longer depends on the
        // (arbitrary, non-equivariant) start vector: stop there, so equal
        // spectra give equal estimates instead of equal transients
        if (it >= 2 && std::fabs(rayleigh - prev) <= 1e-12 * std::fabs(rayleigh))
            return rayleigh;
        try {
            v = green(A, v, solve_tol, 0).first;
        } catch (const IrreducibilityError& e) {
            return e.rayleigh; // kernel found: report how singular it is
        } catch (const ConvergenceError&) {
            return rayleigh; // best estimate from the last completed iterate
        }
    }
    return rayleigh;
}

TangentDecomposition decompose_tangent(const Connection& A, const AlgCochain& x,
                                       double tol, int maxit) {
    if (x.degree() != 1) throw DegreeError("decompose_tangent: x must have degree 1");
    AlgCochain rhs = cov_d_star(A, x);
    // an input that is divergence-free to rounding already is its own pure
    // part; solving against the leftover noise would never converge
    if (norm(rhs) <= 1e-12 * norm(x) / A.lattice().h)
        return TangentDecomposition{AlgCochain(A.lattice(), 0, A.n()), x, {}};
    auto [xi, rep] = green(A, rhs, tol, maxit);
    AlgCochain y = x;
    y -= cov_d(A, xi);
    return TangentDecomposition{std::move(xi), std::move(y), rep};
}

CotangentDecomposition decompose_cotangent(const Connection& A,
                                           const AlgCochain& u, double tol,
                                           int maxit) {
    if (u.degree() != 2) throw DegreeError("decompose_cotangent: u must have degree 2");
    AlgCochain rhs = cov_d(A, u);
    if (norm(rhs) <= 1e-12 * norm(u) / A.lattice().h)
        return CotangentDecomposition{AlgCochain(A.lattice(), 3, A.n()), u, {}};
    auto [lambda, rep] = green(A, rhs, tol, maxit);
    AlgCochain w = u;
    w -= cov_d_star(A, lambda);
    return CotangentDecomposition{std::move(lambda), std::move(w), rep};
}

} // namespace ym
