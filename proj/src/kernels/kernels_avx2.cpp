// AVX2+FMA kernel variants.  this translation unit is compiled with
// -mavx2 -mfma on x86-64 and is dispatched to at runtime only when the
// CPU reports both features, so no other file may call these directly.

#include "ym/kernels/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace ym::kern {
namespace {

void v_axpy(double a, const double* x, double* y, std::size_t m) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < m; ++i) y[i] += a * x[i];
}

void v_scal(double a, double* x, std::size_t m) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < m; ++i) x[i] *= a;
}

void v_scale_add(double a, const double* x, double b, const double* y,
                 double* out, std::size_t m) {
    const __m256d va = _mm256_set1_pd(a), vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        __m256d t = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        t = _mm256_fmadd_pd(vb, _mm256_loadu_pd(y + i), t);
        _mm256_storeu_pd(out + i, t);
    }
    for (; i < m; ++i) out[i] = a * x[i] + b * y[i];
}

double v_dot(const double* x, const double* y, std::size_t m) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
    // combine lanes in the same ((l0+l1)+(l2+l3)) order as the scalar kernel
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    double r = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    for (; i < m; ++i) r += x[i] * y[i];
    return r;
}

// complex multiply-accumulate helper: given a packed pair of complex values
// b = [br0, bi0, br1, bi1] and a scalar complex a (broadcast as var/vai),
// acc += a*b is
//   acc = fmaddsub(var, b, fmul(vai, swap(b)))
// which evaluates [ar*br - ai*bi, ar*bi + ai*br] per complex slot.
static inline __m256d cplx_fmadd(__m256d var, __m256d vai, __m256d b, __m256d acc) {
    __m256d swapped = _mm256_permute_pd(b, 0b0101); // [bi0, br0, bi1, br1]
    __m256d t = _mm256_mul_pd(vai, swapped);
    // fmaddsub: even slots var*b - t, odd slots var*b + t
    return _mm256_add_pd(acc, _mm256_fmaddsub_pd(var, b, t));
}

void v_gemm_acc2(double s, const cplx* A, const cplx* B, cplx* C) {
    const double* a = reinterpret_cast<const double*>(A);
    const double* b = reinterpret_cast<const double*>(B);
    double* c = reinterpret_cast<double*>(C);
    __m256d row0 = _mm256_loadu_pd(b);     // B row 0: two complex values
    __m256d row1 = _mm256_loadu_pd(b + 4); // B row 1
    for (int i = 0; i < 2; ++i) {
        __m256d acc = _mm256_loadu_pd(c + 4 * i);
        // k = 0
        __m256d var = _mm256_set1_pd(s * a[4 * i]);
        __m256d vai = _mm256_set1_pd(s * a[4 * i + 1]);
        acc = cplx_fmadd(var, vai, row0, acc);
        // k = 1
        var = _mm256_set1_pd(s * a[4 * i + 2]);
        vai = _mm256_set1_pd(s * a[4 * i + 3]);
        acc = cplx_fmadd(var, vai, row1, acc);
        _mm256_storeu_pd(c + 4 * i, acc);
    }
}

void v_gemm_acc3(double s, const cplx* A, const cplx* B, cplx* C) {
    const double* a = reinterpret_cast<const double*>(A);
    double* c = reinterpret_cast<double*>(C);
    // rows of B split into a 2-complex vector part and a 1-complex tail
    for (int i = 0; i < 3; ++i) {
        __m256d acc = _mm256_loadu_pd(c + 6 * i);
        double tr = c[6 * i + 4], ti = c[6 * i + 5];
        for (int k = 0; k < 3; ++k) {
            const double ar = s * a[6 * i + 2 * k];
            const double ai = s * a[6 * i + 2 * k + 1];
            const double* brow = reinterpret_cast<const double*>(B) + 6 * k;
            acc = cplx_fmadd(_mm256_set1_pd(ar), _mm256_set1_pd(ai),
                             _mm256_loadu_pd(brow), acc);
            const double br = brow[4], bi = brow[5];
            tr += ar * br - ai * bi;
            ti += ar * bi + ai * br;
        }
        _mm256_storeu_pd(c + 6 * i, acc);
        c[6 * i + 4] = tr;
        c[6 * i + 5] = ti;
    }
}

void v_gemm_acc(int n, double s, const cplx* A, const cplx* B, cplx* C) {
    if (n == 2) {
        v_gemm_acc2(s, A, B, C);
    } else if (n == 3) {
        v_gemm_acc3(s, A, B, C);
    } else {
        // sizes beyond the fast paths fall back to the reference kernel
        scalar_ops().gemm_acc(n, s, A, B, C);
    }
}

} // namespace

const Ops* avx2_ops() {
    static const Ops ops = {"avx2", v_axpy, v_scal, v_scale_add, v_dot, v_gemm_acc};
    return &ops;
}

} // namespace ym::kern

#else

namespace ym::kern {
const Ops* avx2_ops() { return nullptr; }
} // namespace ym::kern

#endif
