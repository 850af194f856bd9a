#include "ym/kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace ym::kern {

namespace {

const Ops& select() {
    const Ops* avx2 = avx2_ops();
    if (const char* env = std::getenv("YM_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return scalar_ops();
        if (std::strcmp(env, "avx2") == 0 && avx2) return *avx2;
        // unknown value or unavailable variant: fall through to detection
    }
#if defined(__x86_64__) || defined(__i386__)
    if (avx2 && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return *avx2;
#endif
    return scalar_ops();
}

} // namespace

const Ops& ops() {
    static const Ops& chosen = select();
    return chosen;
}

} // namespace ym::kern
