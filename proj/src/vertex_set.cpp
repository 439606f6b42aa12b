#include "jwds/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "jwds/error.hpp"

namespace jwds {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
    : VertexSet(universe) {
    for (VertexId v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members) : VertexSet(universe) {
    for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    if (const std::size_t tail = universe % kWordBits; tail != 0) {
        s.words_.back() = (Word{1} << tail) - 1;
    }
    return s;
}

void VertexSet::insert(VertexId v) {
    JWDS_EXPECTS(v < universe_, "vertex " + std::to_string(v) + " outside universe");
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(VertexId v) {
    JWDS_EXPECTS(v < universe_, "vertex " + std::to_string(v) + " outside universe");
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<VertexId> VertexSet::to_vector() const {
    std::vector<VertexId> out;
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
}

std::size_t intersection_size(const VertexSet& a, const VertexSet& b) noexcept {
    return kernels::intersection_count(a.words(), b.words());
}

std::size_t union_size(const VertexSet& a, const VertexSet& b) noexcept {
    return kernels::union_count(a.words(), b.words());
}

}  // namespace jwds
