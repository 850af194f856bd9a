#include "ym/lie/su.hpp"

#include <cmath>

#include "ym/kernels/kernels.hpp"

namespace ym {

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += o.m[i];
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] -= o.m[i];
    return *this;
}

AlgElement& AlgElement::operator*=(double a) {
    for (auto& z : m) z *= a;
    return *this;
}

AlgElement AlgElement::identity(int n) {
    AlgElement e(n);
    for (int i = 0; i < n; ++i) e(i, i) = 1.0;
    return e;
}

double AlgElement::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : m) s += std::norm(z);
    return std::sqrt(s);
}

double AlgElement::max_abs() const {
    double s = 0.0;
    for (const auto& z : m) s = std::max(s, std::abs(z));
    return s;
}

double AlgElement::su_defect() const {
    double worst = 0.0;
    cplx tr(0.0);
    for (int i = 0; i < n; ++i) {
        tr += (*this)(i, i);
        for (int j = 0; j < n; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) + std::conj((*this)(j, i))));
    }
    return std::max(worst, std::abs(tr));
}

double AlgElement::unitary_defect() const {
    AlgElement g = matmul(dagger(*this), *this);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx want = (i == j) ? cplx(1.0) : cplx(0.0);
            worst = std::max(worst, std::abs(g(i, j) - want));
        }
    return std::max(worst, std::abs(det(*this) - cplx(1.0)));
}

AlgElement matmul(const AlgElement& a, const AlgElement& b) {
    AlgElement c(a.n);
    kern::ops().gemm_acc(a.n, 1.0, a.data(), b.data(), c.data());
    return c;
}

AlgElement dagger(const AlgElement& a) {
    AlgElement d(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) d(i, j) = std::conj(a(j, i));
    return d;
}

cplx trace(const AlgElement& a) {
    cplx t(0.0);
    for (int i = 0; i < a.n; ++i) t += a(i, i);
    return t;
}

cplx det(const AlgElement& a) {
    const int n = a.n;
    if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (n == 3)
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
               a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    // Gaussian elimination with partial pivoting for larger n
    AlgElement u = a;
    cplx d(1.0);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(u(r, c)) > std::abs(u(piv, c))) piv = r;
        if (std::abs(u(piv, c)) == 0.0) return cplx(0.0);
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(u(piv, j), u(c, j));
            d = -d;
        }
        d *= u(c, c);
        for (int r = c + 1; r < n; ++r) {
            cplx f = u(r, c) / u(c, c);
            for (int j = c; j < n; ++j) u(r, j) -= f * u(c, j);
        }
    }
    return d;
}

AlgElement commutator(const AlgElement& x, const AlgElement& y) {
    // both products are formed separately and subtracted entrywise, so
    // [x, y] == -[y, x] holds bitwise (not just to rounding)
    AlgElement c = matmul(x, y);
    c -= matmul(y, x);
    return c;
}

double inner_su(const AlgElement& x, const AlgElement& y) {
    // -trace(XY); real for anti-Hermitian arguments
    cplx t(0.0);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) t += x(i, k) * y(k, i);
    return -t.real();
}

GroupElement expm(const AlgElement& x) {
    // scale so the norm is small, exponentiate by Taylor series, square back
    double nrm = x.frobenius_norm();
    int s = 0;
    while (nrm > 0.25) {
        nrm *= 0.5;
        ++s;
    }
    AlgElement y = x;
    y *= std::ldexp(1.0, -s);

    AlgElement r = AlgElement::identity(x.n);
    AlgElement term = AlgElement::identity(x.n);
    for (int k = 1; k <= 24; ++k) {
        term = matmul(term, y);
        term *= 1.0 / k;
        r += term;
        if (term.max_abs() < 1e-18) break;
    }
    for (int i = 0; i < s; ++i) r = matmul(r, r);
    return r;
}

AlgElement random_su(int n, Rng& rng, double amplitude) {
    AlgElement g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
    // project: X = (G - G^dagger)/2, then remove the trace
    AlgElement x(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            x(i, j) = 0.5 * (g(i, j) - std::conj(g(j, i)));
    cplx tr = trace(x);
    tr /= static_cast<double>(n);
    for (int i = 0; i < n; ++i) x(i, i) -= tr;
    x *= amplitude;
    return x;
}

AlgElement random_su_dyadic(int n, Rng& rng) {
    // anti-Hermitian traceless with all entries dyadic rationals: the
    // off-diagonal pairs are reflected, the last diagonal entry balances
    // the (purely imaginary) trace by exact summation
    AlgElement x(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            cplx z(rng.dyadic(), rng.dyadic());
            x(i, j) = z;
            x(j, i) = -std::conj(z);
        }
    double imsum = 0.0;
    for (int i = 0; i < n - 1; ++i) {
        double b = rng.dyadic();
        x(i, i) = cplx(0.0, b);
        imsum += b;
    }
    x(n - 1, n - 1) = cplx(0.0, -imsum);
    return x;
}

AlgCochain random_cochain(const CubicalComplex3& lat, int degree, int n, Rng& rng,
                          double amplitude) {
    AlgCochain c(lat, degree, n);
    for (int cell = 0; cell < c.num_cells(); ++cell) {
        AlgElement x = random_su(n, rng, amplitude);
        std::copy(x.m.begin(), x.m.end(), c.at(cell));
    }
    return c;
}

AlgCochain dyadic_cochain(const CubicalComplex3& lat, int degree, int n, Rng& rng) {
    AlgCochain c(lat, degree, n);
    for (int cell = 0; cell < c.num_cells(); ++cell) {
        AlgElement x = random_su_dyadic(n, rng);
        std::copy(x.m.begin(), x.m.end(), c.at(cell));
    }
    return c;
}

AlgCochain commuting_cochain(const CubicalComplex3& lat, int degree,
                             const AlgElement& dir, Rng& rng, double amplitude) {
    AlgCochain c(lat, degree, dir.n);
    for (int cell = 0; cell < c.num_cells(); ++cell) {
        double f = amplitude * rng.normal();
        cplx* out = c.at(cell);
        for (int i = 0; i < dir.n * dir.n; ++i) out[i] = f * dir.m[i];
    }
    return c;
}

AlgElement conjugate(const AlgElement& x, const GroupElement& u) {
    return matmul(dagger(u), matmul(x, u));
}

AlgCochain conjugate(const AlgCochain& c, const GroupElement& u) {
    AlgCochain out = c.zeros_like();
    GroupElement ud = dagger(u);
    AlgElement tmp(c.n());
    for (int cell = 0; cell < c.num_cells(); ++cell) {
        std::fill(tmp.m.begin(), tmp.m.end(), cplx(0.0));
        kern::ops().gemm_acc(c.n(), 1.0, c.at(cell), u.data(), tmp.data());
        kern::ops().gemm_acc(c.n(), 1.0, ud.data(), tmp.data(), out.at(cell));
    }
    return out;
}

} // namespace ym
