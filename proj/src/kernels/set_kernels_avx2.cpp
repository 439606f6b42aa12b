// AVX2 popcount kernels using the nibble-lookup (vpshufb) method: each byte
// is split into two 4-bit halves, both looked up in a 16-entry table, and the
// per-byte counts are folded into 64-bit lanes with vpsadbw.

#include "set_kernels_avx2.hpp"

#if JWDS_HAVE_AVX2_KERNELS

#include <immintrin.h>

// Helpers returning __m256i are internal to this file.
#pragma GCC diagnostic ignored "-Wpsabi"

#define JWDS_TARGET_AVX2 __attribute__((target("avx2,popcnt")))

namespace jwds::kernels::avx2 {
namespace {

JWDS_TARGET_AVX2 inline __m256i byte_counts(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

JWDS_TARGET_AVX2 inline std::uint64_t horizontal_sum(__m256i acc) {
    return static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
}

JWDS_TARGET_AVX2 inline __m256i load(const Word* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

}  // namespace

JWDS_TARGET_AVX2 std::uint64_t popcount(const Word* a, std::size_t words) noexcept {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(byte_counts(load(a + i)), zero));
    }
    std::uint64_t total = horizontal_sum(acc);
    for (; i < words; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i]));
    return total;
}

JWDS_TARGET_AVX2 std::uint64_t and_count(const Word* a, const Word* b, std::size_t words) noexcept {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i v = _mm256_and_si256(load(a + i), load(b + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(byte_counts(v), zero));
    }
    std::uint64_t total = horizontal_sum(acc);
    for (; i < words; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
    return total;
}

JWDS_TARGET_AVX2 std::uint64_t or_count(const Word* a, const Word* b, std::size_t words) noexcept {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i v = _mm256_or_si256(load(a + i), load(b + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(byte_counts(v), zero));
    }
    std::uint64_t total = horizontal_sum(acc);
    for (; i < words; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] | b[i]));
    return total;
}

JWDS_TARGET_AVX2 void and_or_count(const Word* a, const Word* b, std::size_t words,
                                   std::uint64_t* inter, std::uint64_t* uni) noexcept {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc_and = zero;
    __m256i acc_or = zero;
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = load(a + i);
        __m256i vb = load(b + i);
        acc_and = _mm256_add_epi64(acc_and, _mm256_sad_epu8(byte_counts(_mm256_and_si256(va, vb)), zero));
        acc_or = _mm256_add_epi64(acc_or, _mm256_sad_epu8(byte_counts(_mm256_or_si256(va, vb)), zero));
    }
    std::uint64_t in = horizontal_sum(acc_and);
    std::uint64_t un = horizontal_sum(acc_or);
    for (; i < words; ++i) {
        in += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
        un += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] | b[i]));
    }
    *inter = in;
    *uni = un;
}

}  // namespace jwds::kernels::avx2

#endif
