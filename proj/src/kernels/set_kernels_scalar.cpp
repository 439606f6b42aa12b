#include "jwds/set_kernels.hpp"

#include <bit>

namespace jwds::kernels::scalar {

std::uint64_t popcount(const Word* a, std::size_t words) noexcept {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
    return total;
}

std::uint64_t and_count(const Word* a, const Word* b, std::size_t words) noexcept {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

std::uint64_t or_count(const Word* a, const Word* b, std::size_t words) noexcept {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] | b[i]);
    return total;
}

void and_or_count(const Word* a, const Word* b, std::size_t words,
                  std::uint64_t* inter, std::uint64_t* uni) noexcept {
    std::uint64_t in = 0, un = 0;
    for (std::size_t i = 0; i < words; ++i) {
        in += std::popcount(a[i] & b[i]);
        un += std::popcount(a[i] | b[i]);
    }
    *inter = in;
    *uni = un;
}

}  // namespace jwds::kernels::scalar
