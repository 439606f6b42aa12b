#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "jwds/scoring.hpp"
#include "jwds/temporal_graph.hpp"

namespace jwds {

/// A removal move and its exact score change.
struct Candidate {
    std::size_t snapshot = 0;
    VertexId vertex = 0;
    double gain = 0.0;
};

/// Snapshot of one membership group, for inspection and tests.
struct GroupInfo {
    std::size_t snapshot = 0;
    std::string signature;  // character j is '1' iff members are in S_j
    std::vector<VertexId> members;
    double jaccard_delta = 0.0;

    friend bool operator==(const GroupInfo&, const GroupInfo&) = default;
};

struct PeelOptions {
    /// Run audit() after every this many removals and throw on mismatch; 0 disables.
#ifdef NDEBUG
    std::size_t audit_interval = 0;
#else
    std::size_t audit_interval = 100;
#endif
};

/// Incremental bookkeeping for peeling vertices out of a subgraph sequence.
///
/// The members of each S_i are partitioned into groups of vertices that
/// belong to exactly the same sets S_j. All members of a group share the
/// Jaccard part of the removal gain, so the best vertex of a group is one of
/// minimum induced degree; each group keeps a lazy-deletion min-heap keyed by
/// (degree, id). Pairwise intersection and union sizes, induced edge counts
/// and induced degrees are maintained under removal.
class PeelState {
public:
    PeelState(const TemporalGraph& g, SubgraphSequence seq, double lambda, PeelOptions options = {});

    const TemporalGraph& graph() const noexcept { return *graph_; }
    double lambda() const noexcept { return lambda_; }
    const SubgraphSequence& sets() const noexcept { return seq_; }
    const SetCounts& counts() const noexcept { return counts_; }
    std::size_t set_size(std::size_t i) const { return counts_.sizes.at(i); }

    ScoreBreakdown score() const { return breakdown_from_counts(counts_, lambda_); }

    /// Induced degree of v in g_i[S_i]; only meaningful when v is in S_i.
    std::uint32_t degree(std::size_t i, VertexId v) const { return degree_[i * n_ + v]; }

    std::size_t group_count(std::size_t i) const { return active_.at(i).size(); }
    /// Largest group count seen in any snapshot since construction.
    std::size_t delta_max() const noexcept { return delta_max_; }
    std::size_t removals() const noexcept { return removals_; }

    /// Best removal from S_i. Requires |S_i| >= 2. Ties go to the smaller id.
    Candidate best_candidate_in_snapshot(std::size_t i);

    /// Best removal over all snapshots with |S_i| >= 2 that are not flagged in
    /// `forbidden` (indexed by snapshot; may be empty). Ties go to the smaller
    /// snapshot index, then the smaller id.
    Candidate best_candidate_global(std::span<const bool> forbidden = {});

    /// True when best_candidate_global would find a move.
    bool has_eligible(std::span<const bool> forbidden = {}) const;

    /// Removes v from S_i. Requires v in S_i and |S_i| >= 2.
    void remove(std::size_t i, VertexId v);

    /// Groups of every snapshot in canonical order (snapshot, signature).
    std::vector<GroupInfo> group_table() const;

    /// Recomputes everything from the graph and current sets by direct
    /// scanning and reports the first mismatch, if any.
    std::optional<std::string> audit() const;

private:
    using Signature = std::vector<std::uint64_t>;
    using GroupId = std::uint32_t;
    static constexpr GroupId kNoGroup = ~GroupId{0};

    struct HeapEntry {
        std::uint32_t degree;
        VertexId vertex;
        bool operator>(const HeapEntry& o) const noexcept {
            return degree != o.degree ? degree > o.degree : vertex > o.vertex;
        }
    };

    struct Group {
        std::size_t snapshot = 0;
        Signature signature;
        std::vector<HeapEntry> heap;
        std::size_t live = 0;
        std::size_t slot = 0;  // position in active_[snapshot]
        double jaccard_delta = 0.0;
        bool in_use = false;
    };

    struct SignatureHash {
        std::size_t operator()(const Signature& s) const noexcept;
    };

    const TemporalGraph* graph_;
    double lambda_;
    PeelOptions options_;
    SubgraphSequence seq_;
    SetCounts counts_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::size_t sig_words_ = 0;
    std::vector<std::uint32_t> degree_;      // k * n
    std::vector<std::uint64_t> signature_;   // n * sig_words_
    std::vector<GroupId> group_of_;          // k * n
    std::vector<Group> groups_;
    std::vector<GroupId> free_groups_;
    std::vector<std::vector<GroupId>> active_;
    std::vector<std::unordered_map<Signature, GroupId, SignatureHash>> lookup_;
    std::size_t delta_max_ = 0;
    std::size_t removals_ = 0;

    Signature signature_of(VertexId v) const;
    bool signature_bit(const Signature& sig, std::size_t j) const noexcept {
        return ((sig[j / 64] >> (j % 64)) & 1u) != 0;
    }
    double compute_jaccard_delta(std::size_t i, const Signature& sig) const;
    double gain_of(std::size_t i, std::uint32_t degree, double jaccard_delta) const noexcept;

    GroupId find_or_create_group(std::size_t i, const Signature& sig);
    void drop_group(GroupId id);
    void join_group(std::size_t i, VertexId v);
    void leave_group(std::size_t i, VertexId v);
    const HeapEntry* peek(GroupId id);
};

}  // namespace jwds
