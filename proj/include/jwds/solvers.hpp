#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "jwds/peel_state.hpp"
#include "jwds/scoring.hpp"
#include "jwds/temporal_graph.hpp"

namespace jwds {

struct WeightedEdge {
    VertexId u;
    VertexId v;
    std::int64_t weight;
};

/// Undirected graph with positive integer edge weights.
struct WeightedGraph {
    std::size_t n = 0;
    std::vector<WeightedEdge> edges;

    static WeightedGraph from_snapshot(const Snapshot& s);
    /// One edge per vertex pair; weight = number of snapshots containing it.
    static WeightedGraph flatten(const TemporalGraph& g);
};

/// A set maximizing total induced edge weight over size, found by binary
/// search on the density guess with one min-cut per probe. Capacities are
/// scaled by n(n-1) so every probe is an integer flow problem.
VertexSet densest_subgraph_exact(const WeightedGraph& g);
VertexSet densest_subgraph_exact(const Snapshot& g);

/// The densest common subgraph, repeated once per snapshot.
SubgraphSequence dcs_baseline(const TemporalGraph& g);

/// The exact densest subgraph of each snapshot, independently.
SubgraphSequence per_snapshot_baseline(const TemporalGraph& g);

/// Min-degree peeling (ties to the smaller id); returns the densest prefix,
/// the largest one among equally dense prefixes.
VertexSet charikar_peel(const Snapshot& g);

enum class InitKind { dcs, per_snapshot, all_vertices, custom };

std::string_view init_kind_name(InitKind kind) noexcept;

struct SolverReport {
    SubgraphSequence solution;
    ScoreBreakdown breakdown;
    ScoreBreakdown init_breakdown;
    std::size_t iterations = 0;  // outer passes (ITR); 0 for GRD
    std::size_t delta_max = 0;
    double wall_time = 0.0;      // seconds
    InitKind init_used = InitKind::custom;
    std::size_t removals = 0;
    /// ITR: the initial score then the score after every accepted
    /// replacement. GRD with record_trace: every evaluated sequence's score.
    std::vector<double> score_trace;
};

struct ItrOptions {
    std::size_t max_outer = 100;
    PeelOptions peel{};
};

struct GrdOptions {
    bool record_trace = false;
    PeelOptions peel{};
};

/// Iterative per-snapshot peeling from `init`. Each pass re-peels every
/// snapshot from the full vertex set with the others fixed and keeps the best
/// tested set when it strictly improves the score. Stops after a pass with
/// no replacement or after max_outer passes.
SolverReport itr(const TemporalGraph& g, double lambda, SubgraphSequence init, const ItrOptions& options = {},
                 InitKind init_kind = InitKind::custom);

/// Global greedy peeling over all snapshots from the full sets, keeping at
/// least one vertex per snapshot; returns the best sequence seen.
SolverReport grd(const TemporalGraph& g, double lambda, const GrdOptions& options = {});

/// ITR from both the DCS and the per-snapshot initialization; returns the
/// better result (ties go to DCS).
SolverReport solve(const TemporalGraph& g, double lambda, const ItrOptions& options = {});

}  // namespace jwds
