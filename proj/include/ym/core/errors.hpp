#ifndef YM_CORE_ERRORS_HPP
#define YM_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ym {

// all library failures derive from std::runtime_error so callers can catch
// one base type; each subclass marks a distinct failure mode.

// lattice extent < 2 on some axis (periodic wrap would alias cells) or h <= 0
struct DegenerateLattice : std::runtime_error {
    explicit DegenerateLattice(const std::string& what) : std::runtime_error(what) {}
};

// operation applied at an inadmissible cochain degree, or degree mismatch
struct DegreeError : std::runtime_error {
    explicit DegreeError(const std::string& what) : std::runtime_error(what) {}
};

// iterative solve exceeded its iteration budget
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, int iterations, double residual)
        : std::runtime_error(what), iterations(iterations), residual(residual) {}
    int iterations;
    double residual;
};

// the covariant Laplacian was found to be (numerically) singular: the
// connection is reducible and the Green operator does not exist
struct IrreducibilityError : std::runtime_error {
    IrreducibilityError(const std::string& what, double rayleigh)
        : std::runtime_error(what), rayleigh(rayleigh) {}
    double rayleigh; // Rayleigh quotient of the offending near-kernel direction
};

// malformed snapshot or config input
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what, long byte_offset = -1)
        : std::runtime_error(what), byte_offset(byte_offset) {}
    long byte_offset; // -1 when not applicable
};

// input violates a required constraint (e.g. fiber tangent not divergence-free)
struct ConstraintViolation : std::runtime_error {
    explicit ConstraintViolation(const std::string& what) : std::runtime_error(what) {}
};

// non-finite values appeared during time integration
struct NumericalBlowup : std::runtime_error {
    NumericalBlowup(const std::string& what, long step)
        : std::runtime_error(what), step(step) {}
    long step;
};

} // namespace ym

#endif
