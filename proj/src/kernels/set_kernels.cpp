#include "jwds/set_kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "set_kernels_avx2.hpp"

namespace jwds::kernels {

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

const SetOps& scalar_ops() noexcept {
    static const SetOps ops{Isa::scalar, &scalar::popcount, &scalar::and_count, &scalar::or_count,
                            &scalar::and_or_count};
    return ops;
}

bool cpu_supports_avx2() noexcept {
#if JWDS_HAVE_AVX2_KERNELS
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

const SetOps* avx2_ops() noexcept {
#if JWDS_HAVE_AVX2_KERNELS
    static const SetOps ops{Isa::avx2, &avx2::popcount, &avx2::and_count, &avx2::or_count,
                            &avx2::and_or_count};
    return cpu_supports_avx2() ? &ops : nullptr;
#else
    return nullptr;
#endif
}

namespace {

const SetOps& select_ops() noexcept {
    const char* forced = std::getenv("JWDS_ISA");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return scalar_ops();
    if (const SetOps* fast = avx2_ops()) return *fast;
    return scalar_ops();
}

}  // namespace

const SetOps& active_ops() noexcept {
    static const SetOps& ops = select_ops();
    return ops;
}

}  // namespace jwds::kernels
