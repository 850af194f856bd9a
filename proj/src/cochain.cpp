#include "ym/core/cochain.hpp"

#include <cmath>

#include "ym/kernels/kernels.hpp"

namespace ym {

AlgCochain& AlgCochain::operator+=(const AlgCochain& o) {
    require_compatible(o);
    kern::ops().axpy(1.0, o.reals(), reals(), num_reals());
    return *this;
}

AlgCochain& AlgCochain::operator-=(const AlgCochain& o) {
    require_compatible(o);
    kern::ops().axpy(-1.0, o.reals(), reals(), num_reals());
    return *this;
}

AlgCochain& AlgCochain::operator*=(double a) {
    kern::ops().scal(a, reals(), num_reals());
    return *this;
}

AlgCochain& AlgCochain::add_scaled(double a, const AlgCochain& o) {
    require_compatible(o);
    kern::ops().axpy(a, o.reals(), reals(), num_reals());
    return *this;
}

double AlgCochain::max_abs() const {
    double m = 0.0;
    const double* r = reals();
    for (std::size_t i = 0; i < num_reals(); ++i) {
        double a = std::fabs(r[i]);
        if (a > m) m = a;
    }
    return m;
}

double AlgCochain::su_defect() const {
    double worst = 0.0;
    const int N = n_;
    for (int c = 0; c < num_cells(); ++c) {
        const cplx* X = at(c);
        cplx tr(0.0);
        for (int i = 0; i < N; ++i) {
            tr += X[i * N + i];
            for (int j = 0; j < N; ++j) {
                // anti-Hermitian means X[i][j] + conj(X[j][i]) = 0
                double d = std::abs(X[i * N + j] + std::conj(X[j * N + i]));
                if (d > worst) worst = d;
            }
        }
        double t = std::abs(tr);
        if (t > worst) worst = t;
    }
    return worst;
}

bool AlgCochain::all_finite() const {
    const double* r = reals();
    for (std::size_t i = 0; i < num_reals(); ++i)
        if (!std::isfinite(r[i])) return false;
    return true;
}

} // namespace ym
