#include "jwds/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <queue>

#include "jwds/error.hpp"
#include "maxflow.hpp"

namespace jwds {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

WeightedGraph WeightedGraph::from_snapshot(const Snapshot& s) {
    WeightedGraph w;
    w.n = s.vertex_count();
    for (auto [u, v] : s.edges()) w.edges.push_back({u, v, 1});
    return w;
}

WeightedGraph WeightedGraph::flatten(const TemporalGraph& g) {
    std::map<Edge, std::int64_t> multiplicity;
    for (const Snapshot& s : g.snapshots()) {
        for (const Edge& e : s.edges()) ++multiplicity[e];
    }
    WeightedGraph w;
    w.n = g.vertex_count();
    w.edges.reserve(multiplicity.size());
    for (const auto& [e, count] : multiplicity) w.edges.push_back({e.first, e.second, count});
    return w;
}

VertexSet densest_subgraph_exact(const WeightedGraph& g) {
    JWDS_EXPECTS(g.n >= 1, "graph has no vertices");
    using Capacity = detail::FlowNetwork::Capacity;

    Capacity total_weight = 0;
    std::vector<Capacity> weighted_degree(g.n, 0);
    for (const WeightedEdge& e : g.edges) {
        JWDS_EXPECTS(e.weight > 0 && e.u != e.v && e.u < g.n && e.v < g.n, "invalid weighted edge");
        total_weight += e.weight;
        weighted_degree[e.u] += e.weight;
        weighted_degree[e.v] += e.weight;
    }
    if (g.n == 1 || total_weight == 0) return VertexSet(g.n, {0});

    // Density guesses are a / scale. Two distinct densities p/q, p'/q' with
    // q, q' <= n differ by at least 1 / (n(n-1)).
    const Capacity n = static_cast<Capacity>(g.n);
    const Capacity scale = n * (n - 1);
    const Capacity base = total_weight * scale;
    JWDS_EXPECTS(base <= std::numeric_limits<Capacity>::max() / (4 * (n + 2)),
                 "graph too large for 64-bit capacities");

    const std::size_t source = g.n;
    const std::size_t sink = g.n + 1;

    // Min cut for the guess num / den. Cut value minus n * W * den equals
    // 2 * (num * |S| - den * w(E(S))) for the source side S.
    auto network = [&](Capacity num, Capacity den, std::size_t forced) {
        const Capacity cap = total_weight * den;
        detail::FlowNetwork net(g.n + 2);
        for (std::size_t v = 0; v < g.n; ++v) {
            net.add_edge(source, v, v == forced ? cap * (n + 1) : cap);
            net.add_edge(v, sink, cap + 2 * num - weighted_degree[v] * den);
        }
        for (const WeightedEdge& e : g.edges) net.add_edge(e.u, e.v, e.weight * den, e.weight * den);
        return net;
    };
    auto source_set = [&](const detail::FlowNetwork& net) {
        const auto reach = net.source_side(source);
        VertexSet side(g.n);
        for (std::size_t v = 0; v < g.n; ++v) {
            if (reach[v]) side.insert(static_cast<VertexId>(v));
        }
        return side;
    };

    // Returns a nonempty S with density > a / scale, or an empty set.
    auto probe = [&](Capacity a) {
        auto net = network(a, scale, g.n);
        if (net.max_flow(source, sink) < base * n) return source_set(net);
        return VertexSet(g.n);
    };

    VertexSet best = probe(0);
    JWDS_EXPECTS(!best.empty(), "min-cut probe failed on a graph with edges");
    Capacity lo = 0;  // probe(lo) succeeds
    Capacity hi = total_weight * scale;  // probe(hi) fails: no density exceeds the total weight
    while (hi - lo > 1) {
        const Capacity mid = lo + (hi - lo) / 2;
        VertexSet s = probe(mid);
        if (s.empty()) {
            hi = mid;
        } else {
            lo = mid;
            best = std::move(s);
        }
    }

    // Smallest densest set: for each v, the minimal source side with v forced
    // in is the smallest densest set containing v.
    Capacity best_weight = 0;
    for (const WeightedEdge& e : g.edges) {
        if (best.contains(e.u) && best.contains(e.v)) best_weight += e.weight;
    }
    const Capacity num = best_weight;
    const Capacity den = static_cast<Capacity>(best.count());
    const Capacity optimal_cut = total_weight * den * n;
    VertexSet smallest = best;
    best.for_each([&](VertexId v) {
        auto net = network(num, den, v);
        if (net.max_flow(source, sink) != optimal_cut) return;
        VertexSet s = source_set(net);
        if (s.count() < smallest.count()) smallest = std::move(s);
    });
    return smallest;
}

VertexSet densest_subgraph_exact(const Snapshot& g) {
    return densest_subgraph_exact(WeightedGraph::from_snapshot(g));
}

SubgraphSequence dcs_baseline(const TemporalGraph& g) {
    return SubgraphSequence::repeated(densest_subgraph_exact(WeightedGraph::flatten(g)), g.snapshot_count());
}

SubgraphSequence per_snapshot_baseline(const TemporalGraph& g) {
    SubgraphSequence seq;
    seq.sets.reserve(g.snapshot_count());
    for (const Snapshot& s : g.snapshots()) seq.sets.push_back(densest_subgraph_exact(s));
    return seq;
}

VertexSet charikar_peel(const Snapshot& g) {
    const std::size_t n = g.vertex_count();
    JWDS_EXPECTS(n >= 1, "graph has no vertices");

    using Entry = std::pair<std::size_t, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    std::vector<std::size_t> degree(n);
    std::vector<bool> removed(n, false);
    for (VertexId v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        heap.emplace(degree[v], v);
    }

    std::size_t edges = g.edge_count();
    std::size_t size = n;
    std::size_t best_edges = edges, best_size = size, best_prefix = 0;
    std::vector<VertexId> order;
    order.reserve(n);
    while (size > 1) {
        auto [d, v] = heap.top();
        heap.pop();
        if (removed[v] || d != degree[v]) continue;
        removed[v] = true;
        order.push_back(v);
        edges -= d;
        --size;
        for (VertexId u : g.neighbors(v)) {
            if (!removed[u]) heap.emplace(--degree[u], u);
        }
        if (edges * best_size > best_edges * size) {
            best_edges = edges;
            best_size = size;
            best_prefix = order.size();
        }
    }

    VertexSet result = VertexSet::full(n);
    for (std::size_t r = 0; r < best_prefix; ++r) result.erase(order[r]);
    return result;
}

std::string_view init_kind_name(InitKind kind) noexcept {
    switch (kind) {
        case InitKind::dcs: return "dcs";
        case InitKind::per_snapshot: return "per-snapshot";
        case InitKind::all_vertices: return "all-vertices";
        case InitKind::custom: return "custom";
    }
    return "custom";
}

SolverReport itr(const TemporalGraph& g, double lambda, SubgraphSequence init, const ItrOptions& options,
                 InitKind init_kind) {
    JWDS_EXPECTS(lambda >= 0.0, "lambda must be non-negative");
    JWDS_EXPECTS(options.max_outer >= 1, "max_outer must be at least 1");
    const auto start = Clock::now();
    const std::size_t n = g.vertex_count();
    const std::size_t k = g.snapshot_count();

    SolverReport report;
    report.init_used = init_kind;
    report.solution = std::move(init);
    report.breakdown = score(g, report.solution, lambda);
    report.init_breakdown = report.breakdown;
    report.score_trace.push_back(report.breakdown.total);

    std::vector<VertexId> order;
    order.reserve(n);
    while (report.iterations < options.max_outer) {
        ++report.iterations;
        bool changed = false;
        for (std::size_t i = 0; i < k; ++i) {
            SubgraphSequence trial = report.solution;
            trial[i] = VertexSet::full(n);
            PeelState state(g, std::move(trial), lambda, options.peel);

            double best_total = state.score().total;
            std::size_t best_prefix = 0;
            order.clear();
            while (state.set_size(i) >= 2) {
                const Candidate c = state.best_candidate_in_snapshot(i);
                state.remove(i, c.vertex);
                order.push_back(c.vertex);
                const double total = state.score().total;
                if (total > best_total) {
                    best_total = total;
                    best_prefix = order.size();
                }
            }
            report.removals += state.removals();
            report.delta_max = std::max(report.delta_max, state.delta_max());

            if (best_total > report.breakdown.total) {
                VertexSet chosen = VertexSet::full(n);
                for (std::size_t r = 0; r < best_prefix; ++r) chosen.erase(order[r]);
                report.solution[i] = std::move(chosen);
                report.breakdown = score(g, report.solution, lambda);
                report.score_trace.push_back(report.breakdown.total);
                changed = true;
            }
        }
        if (!changed) break;
    }
    report.wall_time = seconds_since(start);
    return report;
}

SolverReport grd(const TemporalGraph& g, double lambda, const GrdOptions& options) {
    JWDS_EXPECTS(lambda >= 0.0, "lambda must be non-negative");
    const auto start = Clock::now();

    PeelState state(g, SubgraphSequence::full(g), lambda, options.peel);
    SolverReport report;
    report.init_used = InitKind::all_vertices;
    report.init_breakdown = state.score();
    double best_total = report.init_breakdown.total;
    report.solution = state.sets();
    if (options.record_trace) report.score_trace.push_back(best_total);

    while (state.has_eligible()) {
        const Candidate c = state.best_candidate_global();
        state.remove(c.snapshot, c.vertex);
        const double total = state.score().total;
        if (options.record_trace) report.score_trace.push_back(total);
        if (total > best_total) {
            best_total = total;
            report.solution = state.sets();
        }
    }
    report.removals = state.removals();
    report.delta_max = state.delta_max();
    report.breakdown = score(g, report.solution, lambda);
    report.wall_time = seconds_since(start);
    return report;
}

SolverReport solve(const TemporalGraph& g, double lambda, const ItrOptions& options) {
    const auto start = Clock::now();
    SolverReport from_dcs = itr(g, lambda, dcs_baseline(g), options, InitKind::dcs);
    SolverReport from_each = itr(g, lambda, per_snapshot_baseline(g), options, InitKind::per_snapshot);
    SolverReport best = from_each.breakdown.total > from_dcs.breakdown.total ? std::move(from_each)
                                                                           : std::move(from_dcs);
    best.wall_time = seconds_since(start);
    return best;
}

}  // namespace jwds
