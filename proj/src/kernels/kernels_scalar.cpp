#include "ym/kernels/kernels.hpp"

// reference kernels: plain loops, no intrinsics.  the AVX2 variants are
// checked against these, so keep them obviously correct.

namespace ym::kern {
namespace {

void s_axpy(double a, const double* x, double* y, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i) y[i] += a * x[i];
}

void s_scal(double a, double* x, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i) x[i] *= a;
}

void s_scale_add(double a, const double* x, double b, const double* y,
                 double* out, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i) out[i] = a * x[i] + b * y[i];
}

double s_dot(const double* x, const double* y, std::size_t m) {
    // fixed-order blocked accumulation: four independent partials over a
    // strided sweep, combined in a fixed order at the end
    double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        acc0 += x[i] * y[i];
        acc1 += x[i + 1] * y[i + 1];
        acc2 += x[i + 2] * y[i + 2];
        acc3 += x[i + 3] * y[i + 3];
    }
    double tail = 0.0;
    for (; i < m; ++i) tail += x[i] * y[i];
    return ((acc0 + acc1) + (acc2 + acc3)) + tail;
}

void s_gemm_acc(int n, double s, const cplx* A, const cplx* B, cplx* C) {
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx a = s * A[i * n + k];
            for (int j = 0; j < n; ++j) C[i * n + j] += a * B[k * n + j];
        }
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops = {"scalar", s_axpy, s_scal, s_scale_add, s_dot, s_gemm_acc};
    return ops;
}

} // namespace ym::kern
