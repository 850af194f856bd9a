#ifndef YM_KERNELS_KERNELS_HPP
#define YM_KERNELS_KERNELS_HPP

#include <complex>
#include <cstddef>

// Arithmetic kernels behind cochain linear algebra and cup products:
//   axpy/scal/scale_add  - elementwise ops on flattened real arrays
//   dot                  - real dot product, fixed summation order
//   gemm_acc             - C += s * A * B for small n x n complex matrices
//
// A scalar reference implementation always exists; an AVX2+FMA variant is
// compiled on x86-64 and selected at runtime when the CPU supports it.
// The environment variable YM_KERNEL=scalar|avx2 overrides the choice.
// Both variants are equivalence-tested against each other.

namespace ym::kern {

using cplx = std::complex<double>;

struct Ops {
    const char* name;
    // y += a*x
    void (*axpy)(double a, const double* x, double* y, std::size_t m);
    // x *= a
    void (*scal)(double a, double* x, std::size_t m);
    // out = a*x + b*y
    void (*scale_add)(double a, const double* x, double b, const double* y,
                      double* out, std::size_t m);
    // sum_i x[i]*y[i], deterministic fixed-order accumulation
    double (*dot)(const double* x, const double* y, std::size_t m);
    // C += s*A*B, n x n row-major complex; fast paths for n = 2, 3
    void (*gemm_acc)(int n, double s, const cplx* A, const cplx* B, cplx* C);
};

const Ops& scalar_ops();

// AVX2 variant; null when the build target or the running CPU lacks support
const Ops* avx2_ops();

// the runtime-selected implementation (scalar unless AVX2 is available and
// not overridden); stable for the lifetime of the process
const Ops& ops();

} // namespace ym::kern

#endif
