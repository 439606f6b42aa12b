#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "jwds/set_kernels.hpp"

namespace jwds {

using VertexId = std::uint32_t;

/// Fixed-universe bitset of vertex ids in [0, universe).
class VertexSet {
public:
    using Word = kernels::Word;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
    VertexSet(std::size_t universe, std::span<const VertexId> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::span<const Word> words() const noexcept { return words_; }

    bool contains(VertexId v) const noexcept {
        return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1u) != 0;
    }
    void insert(VertexId v);
    void erase(VertexId v);

    std::size_t count() const noexcept { return kernels::popcount(words_); }
    bool empty() const noexcept;

    /// Calls fn(v) for every member in increasing order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                const int bit = std::countr_zero(bits);
                fn(static_cast<VertexId>(w * kWordBits + static_cast<std::size_t>(bit)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<VertexId> to_vector() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

std::size_t intersection_size(const VertexSet& a, const VertexSet& b) noexcept;
std::size_t union_size(const VertexSet& a, const VertexSet& b) noexcept;

}  // namespace jwds
