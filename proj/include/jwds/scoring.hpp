#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jwds/temporal_graph.hpp"
#include "jwds/vertex_set.hpp"

namespace jwds {

/// One vertex set per snapshot.
struct SubgraphSequence {
    std::vector<VertexSet> sets;

    SubgraphSequence() = default;
    explicit SubgraphSequence(std::vector<VertexSet> s) : sets(std::move(s)) {}

    /// k copies of the full vertex set.
    static SubgraphSequence full(const TemporalGraph& g);
    /// k copies of `s`.
    static SubgraphSequence repeated(const VertexSet& s, std::size_t k);

    std::size_t size() const noexcept { return sets.size(); }
    const VertexSet& operator[](std::size_t i) const { return sets[i]; }
    VertexSet& operator[](std::size_t i) { return sets[i]; }

    friend bool operator==(const SubgraphSequence&, const SubgraphSequence&) = default;
};

struct ScoreBreakdown {
    double density_sum = 0.0;
    double jaccard_sum = 0.0;  // unweighted
    double lambda = 0.0;
    double total = 0.0;
};

/// Integer bookkeeping from which a score is formed: per-snapshot |E(S_i)|
/// and |S_i|, and the k-by-k matrices of |S_i & S_j| and |S_i | S_j|
/// (row-major, diagonal unused).
struct SetCounts {
    std::size_t k = 0;
    std::vector<std::uint64_t> edges;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint64_t> inter;
    std::vector<std::uint64_t> uni;

    explicit SetCounts(std::size_t snapshots = 0)
        : k(snapshots), edges(snapshots, 0), sizes(snapshots, 0),
          inter(snapshots * snapshots, 0), uni(snapshots * snapshots, 0) {}

    std::uint64_t& inter_at(std::size_t i, std::size_t j) { return inter[i * k + j]; }
    std::uint64_t& uni_at(std::size_t i, std::size_t j) { return uni[i * k + j]; }
    std::uint64_t inter_at(std::size_t i, std::size_t j) const { return inter[i * k + j]; }
    std::uint64_t uni_at(std::size_t i, std::size_t j) const { return uni[i * k + j]; }

    friend bool operator==(const SetCounts&, const SetCounts&) = default;
};

/// Counts for `seq` computed from scratch.
SetCounts count_sets(const TemporalGraph& g, const SubgraphSequence& seq);

/// The score assembled from counts. Every score in the library goes through
/// here, so identical sequences always produce bit-identical totals.
ScoreBreakdown breakdown_from_counts(const SetCounts& c, double lambda);

/// |E(S)| / |S|. Throws ContractViolation for empty s.
double density(const Snapshot& g, const VertexSet& s);

/// |S & T| / |S | T|. Throws ContractViolation when both are empty.
double jaccard(const VertexSet& s, const VertexSet& t);

/// Sum of densities plus lambda times the sum of pairwise Jaccard indices.
ScoreBreakdown score(const TemporalGraph& g, const SubgraphSequence& seq, double lambda);

/// score(seq with v removed from S_i) - score(seq), via the closed form
///   (|E(S_i)| - deg v)/(|S_i| - 1) - |E(S_i)|/|S_i|
///     + lambda * sum_{j != i} [J(S_i - v, S_j) - J(S_i, S_j)]
/// where deg v is the degree of v in g_i[S_i].
double removal_gain(const TemporalGraph& g, const SubgraphSequence& seq, std::size_t i, VertexId v,
                    double lambda);

}  // namespace jwds
