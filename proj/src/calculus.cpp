#include "ym/ops/calculus.hpp"

#include <cmath>
#include <string>

#include "ym/kernels/kernels.hpp"

namespace ym {

namespace {

// y_cell += s * x_cell, one n x n block
inline void block_axpy(double s, const cplx* x, cplx* y, int nn) {
    for (int i = 0; i < nn; ++i) y[i] += s * x[i];
}

} // namespace

AlgCochain coboundary(const AlgCochain& c) {
    const int k = c.degree();
    if (k >= 3) throw DegreeError("coboundary: input degree must be < 3");
    const CubicalComplex3& X = c.lattice();
    AlgCochain out(X, k + 1, c.n());
    const int nn = c.nn();
    const int nsets_out = CubicalComplex3::num_sets(k + 1);
    const int V = X.volume();

    for (int site = 0; site < V; ++site) {
        for (int so = 0; so < nsets_out; ++so) {
            std::uint8_t T = CubicalComplex3::kSetMask[k + 1][so];
            cplx* dst = out.at(site, so);
            for (int mu = 1; mu <= 3; ++mu) {
                std::uint8_t mbit = 1u << (mu - 1);
                if (!(T & mbit)) continue;
                const int sgn = coboundary_sign(T, mu);
                const int si = CubicalComplex3::set_index(T & ~mbit);
                block_axpy(sgn, c.at(X.shift(site, mu, +1), si), dst, nn);
                block_axpy(-sgn, c.at(site, si), dst, nn);
            }
        }
    }
    return out;
}

AlgCochain hodge(const AlgCochain& c) {
    const int k = c.degree();
    const CubicalComplex3& X = c.lattice();
    AlgCochain out(X, 3 - k, c.n());
    const int nn = c.nn();
    const int nsets = CubicalComplex3::num_sets(k);
    const int V = X.volume();

    for (int site = 0; site < V; ++site) {
        for (int s = 0; s < nsets; ++s) {
            std::uint8_t mask = CubicalComplex3::kSetMask[k][s];
            std::uint8_t comp = 7u & ~mask;
            const double sgn = hodge_sign(mask);
            const cplx* src = c.at(site, s);
            cplx* dst = out.at(site, CubicalComplex3::set_index(comp));
            for (int i = 0; i < nn; ++i) dst[i] = sgn * src[i];
        }
    }
    return out;
}

AlgCochain cup(const AlgCochain& a, const AlgCochain& b) {
    const int j = a.degree(), k = b.degree();
    if (j + k > 3) throw DegreeError("cup: total degree exceeds 3");
    if (!(a.lattice() == b.lattice()) || a.n() != b.n())
        throw DegreeError("cup: operands live on different lattices or ranks");
    const CubicalComplex3& X = a.lattice();
    const int n = a.n();
    const int m = j + k;
    AlgCochain out(X, m, n);
    const auto& kops = kern::ops();
    const int nsets_out = CubicalComplex3::num_sets(m);
    const int V = X.volume();

    for (int site = 0; site < V; ++site) {
        for (int so = 0; so < nsets_out; ++so) {
            std::uint8_t S = CubicalComplex3::kSetMask[m][so];
            cplx* dst = out.at(site, so);
            // enumerate subsets P of S with |P| = j
            for (std::uint8_t P = 0;; P = static_cast<std::uint8_t>(P + 1)) {
                if ((P & S) == P && CubicalComplex3::degree_of_mask(P) == j) {
                    std::uint8_t Q = S & ~P;
                    const double sgn = shuffle_sign(P, Q);
                    const cplx* av = a.at(site, CubicalComplex3::set_index(P));
                    const cplx* bv =
                        b.at(X.shift_mask(site, P), CubicalComplex3::set_index(Q));
                    kops.gemm_acc(n, sgn, av, bv, dst);
                }
                if (P == 7) break;
            }
        }
    }
    return out;
}

AlgCochain bracket_cup(const AlgCochain& a, const AlgCochain& b) {
    const int j = a.degree(), k = b.degree();
    AlgCochain r = cup(a, b);
    AlgCochain ba = cup(b, a);
    const double sgn = ((j * k) % 2 == 0) ? -1.0 : 1.0;
    r.add_scaled(sgn, ba);
    return r;
}

double inner(const AlgCochain& a, const AlgCochain& b) {
    if (!a.compatible(b)) throw DegreeError("inner: degree or lattice mismatch");
    const double h = a.lattice().h;
    return h * h * h * kern::ops().dot(a.reals(), b.reals(), a.num_reals());
}

double norm(const AlgCochain& c) { return std::sqrt(inner(c, c)); }

AlgElement integrate(const AlgCochain& mu) {
    if (mu.degree() != 3) throw DegreeError("integrate: expects a degree-3 cochain");
    const double h = mu.lattice().h;
    AlgElement q(mu.n());
    const int nn = mu.nn();
    for (int cell = 0; cell < mu.num_cells(); ++cell) {
        const cplx* v = mu.at(cell);
        for (int i = 0; i < nn; ++i) q.m[i] += v[i];
    }
    q *= h * h * h;
    return q;
}

double pairing(const AlgCochain& mu, const AlgCochain& xi) {
    if (mu.degree() != 3 || xi.degree() != 0)
        throw DegreeError("pairing: expects degrees 3 and 0");
    if (!(mu.lattice() == xi.lattice()) || mu.n() != xi.n())
        throw DegreeError("pairing: operands live on different lattices or ranks");
    const int n = mu.n();
    const double h = mu.lattice().h;
    double acc = 0.0;
    for (int cell = 0; cell < mu.num_cells(); ++cell) {
        const cplx* m = mu.at(cell);
        const cplx* x = xi.at(cell); // degree 3 and 0 share the site index
        cplx t(0.0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) t += m[i * n + k] * x[k * n + i];
        acc += t.real();
    }
    return acc * h * h * h;
}

AlgCochain pointwise_bracket(const AlgCochain& c, const AlgCochain& xi) {
    if (xi.degree() != 0) throw DegreeError("pointwise_bracket: xi must have degree 0");
    if (!(c.lattice() == xi.lattice()) || c.n() != xi.n())
        throw DegreeError("pointwise_bracket: operands incompatible");
    const CubicalComplex3& X = c.lattice();
    const int n = c.n();
    const int k = c.degree();
    const int nsets = CubicalComplex3::num_sets(k);
    AlgCochain out(X, k, n);
    const auto& kops = kern::ops();
    for (int site = 0; site < X.volume(); ++site) {
        const cplx* xv = xi.at(site, 0);
        for (int s = 0; s < nsets; ++s) {
            const cplx* cv = c.at(site, s);
            cplx* dst = out.at(site, s);
            kops.gemm_acc(n, 1.0, cv, xv, dst);
            kops.gemm_acc(n, -1.0, xv, cv, dst);
        }
    }
    return out;
}

AlgCochain remove_set_means(const AlgCochain& c) {
    const CubicalComplex3& X = c.lattice();
    const int nsets = CubicalComplex3::num_sets(c.degree());
    const int nn = c.nn();
    AlgCochain out = c;
    const double inv = 1.0 / static_cast<double>(X.volume());
    for (int s = 0; s < nsets; ++s) {
        for (int i = 0; i < nn; ++i) {
            cplx mean(0.0);
            for (int site = 0; site < X.volume(); ++site) mean += c.at(site, s)[i];
            mean *= inv;
            for (int site = 0; site < X.volume(); ++site) out.at(site, s)[i] -= mean;
        }
    }
    return out;
}

} // namespace ym
