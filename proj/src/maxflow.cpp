#include "maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace jwds::detail {

FlowNetwork::FlowNetwork(std::size_t nodes) : out_(nodes), level_(nodes), next_arc_(nodes) {}

void FlowNetwork::add_edge(std::size_t u, std::size_t v, Capacity forward, Capacity backward) {
    out_[u].push_back(arcs_.size());
    arcs_.push_back({v, forward});
    out_[v].push_back(arcs_.size());
    arcs_.push_back({u, backward});
}

bool FlowNetwork::build_levels(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> frontier;
    level_[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.pop();
        for (std::size_t e : out_[u]) {
            const Arc& a = arcs_[e];
            if (a.residual > 0 && level_[a.to] < 0) {
                level_[a.to] = level_[u] + 1;
                frontier.push(a.to);
            }
        }
    }
    return level_[sink] >= 0;
}

// Iterative blocking-flow search along the level graph.
FlowNetwork::Capacity FlowNetwork::augment(std::size_t source, std::size_t sink, Capacity limit) {
    std::vector<std::size_t> path;  // arc indices
    std::size_t u = source;
    Capacity pushed_total = 0;
    while (true) {
        if (u == sink) {
            Capacity bottleneck = limit;
            for (std::size_t e : path) bottleneck = std::min(bottleneck, arcs_[e].residual);
            for (std::size_t e : path) {
                arcs_[e].residual -= bottleneck;
                arcs_[e ^ 1].residual += bottleneck;
            }
            pushed_total += bottleneck;
            // restart from the tail of the first saturated arc
            std::size_t keep = 0;
            while (keep < path.size() && arcs_[path[keep]].residual > 0) ++keep;
            path.resize(keep);
            u = path.empty() ? source : arcs_[path.back()].to;
            continue;
        }
        bool advanced = false;
        for (std::size_t& idx = next_arc_[u]; idx < out_[u].size(); ++idx) {
            const std::size_t e = out_[u][idx];
            const Arc& a = arcs_[e];
            if (a.residual > 0 && level_[a.to] == level_[u] + 1) {
                path.push_back(e);
                u = a.to;
                advanced = true;
                break;
            }
        }
        if (advanced) continue;
        if (u == source) break;
        level_[u] = -1;  // dead end
        path.pop_back();
        u = path.empty() ? source : arcs_[path.back()].to;
        ++next_arc_[u];
    }
    return pushed_total;
}

FlowNetwork::Capacity FlowNetwork::max_flow(std::size_t source, std::size_t sink) {
    Capacity flow = 0;
    while (build_levels(source, sink)) {
        std::fill(next_arc_.begin(), next_arc_.end(), 0);
        flow += augment(source, sink, std::numeric_limits<Capacity>::max());
    }
    return flow;
}

std::vector<bool> FlowNetwork::source_side(std::size_t source) const {
    std::vector<bool> seen(out_.size(), false);
    std::queue<std::size_t> frontier;
    seen[source] = true;
    frontier.push(source);
    while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.pop();
        for (std::size_t e : out_[u]) {
            const Arc& a = arcs_[e];
            if (a.residual > 0 && !seen[a.to]) {
                seen[a.to] = true;
                frontier.push(a.to);
            }
        }
    }
    return seen;
}

}  // namespace jwds::detail
