#include "hbf/kernels.hpp"

#include <cstdlib>

namespace hbf::kernels {

#if defined(HBF_WITH_AVX2)
const Ops* avx2_ops_detail();  // defined in kernels_avx2.cpp
#endif

const Ops* avx2_or_null() {
#if defined(HBF_WITH_AVX2)
    if (__builtin_cpu_supports("avx2")) return avx2_ops_detail();
#endif
    return nullptr;
}

const Ops& active() {
    static const Ops* chosen = [] {
        const char* force = std::getenv("HOMBENT_FORCE_SCALAR");
        if (force && force[0] != '\0' && force[0] != '0') return &scalar();
        if (const Ops* simd = avx2_or_null()) return simd;
        return &scalar();
    }();
    return *chosen;
}

}  // namespace hbf::kernels
