#pragma once

#include "jwds/set_kernels.hpp"

namespace jwds::kernels::avx2 {

#if defined(__x86_64__) || defined(_M_X64)
#define JWDS_HAVE_AVX2_KERNELS 1
std::uint64_t popcount(const Word* a, std::size_t words) noexcept;
std::uint64_t and_count(const Word* a, const Word* b, std::size_t words) noexcept;
std::uint64_t or_count(const Word* a, const Word* b, std::size_t words) noexcept;
void and_or_count(const Word* a, const Word* b, std::size_t words,
                  std::uint64_t* inter, std::uint64_t* uni) noexcept;
#else
#define JWDS_HAVE_AVX2_KERNELS 0
#endif

}  // namespace jwds::kernels::avx2
