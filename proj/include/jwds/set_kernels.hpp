#pragma once
// Bit-parallel set algebra over packed 64-bit membership words.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The variant is chosen once at first use from CPUID; setting the
// environment variable JWDS_ISA=scalar forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace jwds::kernels {

using Word = std::uint64_t;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Function table for one instruction-set variant. All counts are bit counts.
struct SetOps {
    Isa isa;
    std::uint64_t (*popcount)(const Word* a, std::size_t words) noexcept;
    std::uint64_t (*and_count)(const Word* a, const Word* b, std::size_t words) noexcept;
    std::uint64_t (*or_count)(const Word* a, const Word* b, std::size_t words) noexcept;
    // Writes |a & b| and |a | b| in one pass.
    void (*and_or_count)(const Word* a, const Word* b, std::size_t words,
                         std::uint64_t* inter, std::uint64_t* uni) noexcept;
};

namespace scalar {
std::uint64_t popcount(const Word* a, std::size_t words) noexcept;
std::uint64_t and_count(const Word* a, const Word* b, std::size_t words) noexcept;
std::uint64_t or_count(const Word* a, const Word* b, std::size_t words) noexcept;
void and_or_count(const Word* a, const Word* b, std::size_t words,
                  std::uint64_t* inter, std::uint64_t* uni) noexcept;
}  // namespace scalar

const SetOps& scalar_ops() noexcept;

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks it.
const SetOps* avx2_ops() noexcept;

bool cpu_supports_avx2() noexcept;

/// The variant selected for this process.
const SetOps& active_ops() noexcept;

inline std::uint64_t popcount(std::span<const Word> a) noexcept {
    return active_ops().popcount(a.data(), a.size());
}

inline std::uint64_t intersection_count(std::span<const Word> a, std::span<const Word> b) noexcept {
    return active_ops().and_count(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline std::uint64_t union_count(std::span<const Word> a, std::span<const Word> b) noexcept {
    return active_ops().or_count(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

}  // namespace jwds::kernels
