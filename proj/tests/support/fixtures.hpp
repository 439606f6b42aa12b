#pragma once
// Shared test fixtures and from-scratch reference computations. Nothing here
// calls into the peeling, flow or bitset-kernel code paths.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jwds/scoring.hpp"
#include "jwds/temporal_graph.hpp"

namespace jwds::testing {

// The three toy snapshots over vertices a..f; ids a=0 .. f=5.
inline constexpr const char* kToyTriples =
    "# G_1\n"
    "a b 0\na d 0\nb d 0\nd f 0\n"
    "# G_2\n"
    "a b 1\na c 1\na f 1\nb c 1\nb d 1\nb f 1\nd e 1\nf c 1\n"
    "# G_3\n"
    "a b 2\na d 2\na f 2\na e 2\nb d 2\nd f 2\nd e 2\nf c 2\nf e 2\n";

inline TemporalGraph toy_graph() {
    std::istringstream in(kToyTriples);
    return parse_triples(in, "toy").graph;
}

inline VertexSet labelled_set(const TemporalGraph& g, std::initializer_list<const char*> labels) {
    VertexSet s(g.vertex_count());
    for (const char* l : labels) s.insert(*g.labels().find(l));
    return s;
}

// S_1 = {a,b,d,f}, S_2 = {a,b,c,f}, S_3 = {a,b,d,e,f}
inline SubgraphSequence toy_reference_sets(const TemporalGraph& g) {
    return SubgraphSequence({labelled_set(g, {"a", "b", "d", "f"}), labelled_set(g, {"a", "b", "c", "f"}),
                             labelled_set(g, {"a", "b", "d", "e", "f"})});
}

using TestRng = std::mt19937_64;

inline double unit(TestRng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

inline std::size_t uniform_int(TestRng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<Edge> random_edges(TestRng& rng, std::size_t n, double p) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (unit(rng) < p) edges.emplace_back(u, v);
        }
    }
    return edges;
}

inline Snapshot random_snapshot(TestRng& rng, std::size_t n, double p) {
    const auto edges = random_edges(rng, n, p);
    return Snapshot(n, edges);
}

inline TemporalGraph random_temporal(TestRng& rng, std::size_t n, std::size_t k, double p) {
    std::vector<std::vector<Edge>> lists;
    for (std::size_t i = 0; i < k; ++i) lists.push_back(random_edges(rng, n, p));
    return TemporalGraph::from_edge_lists(n, lists);
}

inline VertexSet random_nonempty_set(TestRng& rng, std::size_t n, double p) {
    VertexSet s(n);
    for (VertexId v = 0; v < n; ++v) {
        if (unit(rng) < p) s.insert(v);
    }
    if (s.empty()) s.insert(static_cast<VertexId>(uniform_int(rng, 0, n - 1)));
    return s;
}

inline SubgraphSequence random_sequence(TestRng& rng, std::size_t n, std::size_t k, double p) {
    SubgraphSequence seq;
    for (std::size_t i = 0; i < k; ++i) seq.sets.push_back(random_nonempty_set(rng, n, p));
    return seq;
}

inline std::set<VertexId> members(const VertexSet& s) {
    std::set<VertexId> out;
    for (VertexId v = 0; v < s.universe(); ++v) {
        if (s.contains(v)) out.insert(v);
    }
    return out;
}

// |E(S)| by scanning the full edge list.
inline std::size_t naive_edge_count(const Snapshot& g, const VertexSet& s) {
    std::size_t count = 0;
    for (auto [u, v] : g.edges()) count += (s.contains(u) && s.contains(v)) ? 1 : 0;
    return count;
}

inline double naive_jaccard(const VertexSet& a, const VertexSet& b) {
    const auto sa = members(a), sb = members(b);
    std::vector<VertexId> in, un;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(in));
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(un));
    return static_cast<double>(in.size()) / static_cast<double>(un.size());
}

// Score straight from the definition.
inline double naive_score(const TemporalGraph& g, const SubgraphSequence& seq, double lambda) {
    double total = 0.0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        total += static_cast<double>(naive_edge_count(g.snapshot(i), seq[i])) /
                 static_cast<double>(members(seq[i]).size());
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) total += lambda * naive_jaccard(seq[i], seq[j]);
    }
    return total;
}

// Largest density over all nonempty subsets, as an exact fraction.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    bool operator==(const Fraction& o) const { return num * o.den == o.num * den; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline Fraction enumerate_max_density(const Snapshot& g) {
    const std::size_t n = g.vertex_count();
    const auto edges = g.edges();
    Fraction best{0, 1};
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        std::uint64_t e = 0;
        for (auto [u, v] : edges) e += ((m >> u) & 1) && ((m >> v) & 1) ? 1 : 0;
        const std::uint64_t s = static_cast<std::uint64_t>(__builtin_popcountll(m));
        if (e * best.den > best.num * s) best = {e, s};
    }
    return best;
}

inline Fraction set_density(const Snapshot& g, const VertexSet& s) {
    return {naive_edge_count(g, s), members(s).size()};
}

}  // namespace jwds::testing
