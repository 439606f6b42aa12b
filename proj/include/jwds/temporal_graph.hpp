#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jwds/vertex_set.hpp"

namespace jwds {

using Edge = std::pair<VertexId, VertexId>;

/// Bijection between external vertex labels and dense ids. Ids follow the
/// lexicographic order of the labels.
class LabelTable {
public:
    LabelTable() = default;
    /// Sorts and deduplicates `labels`, then assigns ids in that order.
    explicit LabelTable(std::vector<std::string> labels);

    /// Labels "0".."n-1" zero-padded to equal width, so id order equals label order.
    static LabelTable numbered(std::size_t n);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(VertexId v) const { return names_.at(v); }
    std::optional<VertexId> find(std::string_view label) const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    friend bool operator==(const LabelTable& a, const LabelTable& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
};

/// One undirected simple graph over the shared vertex universe, stored as
/// sorted adjacency lists (CSR).
class Snapshot {
public:
    Snapshot() = default;
    /// Self-loops are dropped and duplicate edges collapsed.
    Snapshot(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(VertexId u, VertexId v) const;

    /// Every edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Snapshot&, const Snapshot&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> neighbors_;
};

/// A sequence of k snapshots over one vertex universe of size n. Immutable.
class TemporalGraph {
public:
    TemporalGraph(LabelTable labels, std::vector<Snapshot> snapshots);

    /// Builds a graph with numbered labels from per-snapshot id edge lists.
    static TemporalGraph from_edge_lists(std::size_t n, const std::vector<std::vector<Edge>>& edges);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t snapshot_count() const noexcept { return snapshots_.size(); }
    const Snapshot& snapshot(std::size_t i) const { return snapshots_.at(i); }
    const std::vector<Snapshot>& snapshots() const noexcept { return snapshots_; }
    const LabelTable& labels() const noexcept { return labels_; }

    /// Sum of edge counts over all snapshots.
    std::size_t total_edges() const noexcept;

    friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;

private:
    LabelTable labels_;
    std::vector<Snapshot> snapshots_;
};

enum class InputFormat { triples, per_snapshot_files };

struct LoadStats {
    std::size_t lines = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
};

struct LoadResult {
    TemporalGraph graph;
    LoadStats stats;
};

/// Collects labelled edges and assigns ids once all labels are known.
class TemporalGraphBuilder {
public:
    void add_edge(std::string_view u, std::string_view v, std::size_t snapshot);
    /// Makes sure the graph has at least `k` snapshots even if the last ones are empty.
    void reserve_snapshots(std::size_t k);
    /// Adds a vertex with no edges.
    void add_vertex(std::string_view label);
    LoadResult build();

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::uint32_t> provisional_;
    std::vector<std::vector<Edge>> edges_;
    LoadStats stats_;
    std::uint32_t intern(std::string_view label);
};

/// Parses `u v t` lines; `#` lines and blank lines are skipped.
LoadResult parse_triples(std::istream& in, const std::string& source_name = "<stream>");

/// Parses one `u v` edge list as snapshot `snapshot` into `builder`.
void parse_edge_list(std::istream& in, const std::string& source_name, std::size_t snapshot,
                     TemporalGraphBuilder& builder, LoadStats& stats);

/// Reads a triples file, or a directory holding 0.edges, 1.edges, ...
LoadResult load_temporal_edgelist(const std::filesystem::path& path, InputFormat format);

/// Writes every edge as `label_u label_v t`.
void write_triples(const TemporalGraph& g, std::ostream& out);

/// Number of edges with both endpoints in s.
std::size_t induced_edge_count(const Snapshot& g, const VertexSet& s);

/// Degree of v inside g[s]. v need not be in s.
std::size_t induced_degree(const Snapshot& g, const VertexSet& s, VertexId v);

}  // namespace jwds
