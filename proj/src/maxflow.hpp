#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace jwds::detail {

/// Dinic's max-flow on integer capacities.
class FlowNetwork {
public:
    using Capacity = std::int64_t;

    explicit FlowNetwork(std::size_t nodes);

    /// Adds u->v with capacity `forward` and v->u with capacity `backward`.
    void add_edge(std::size_t u, std::size_t v, Capacity forward, Capacity backward = 0);

    Capacity max_flow(std::size_t source, std::size_t sink);

    /// Nodes reachable from `source` in the residual network after max_flow.
    std::vector<bool> source_side(std::size_t source) const;

private:
    struct Arc {
        std::size_t to;
        Capacity residual;
    };
    std::vector<Arc> arcs_;                       // arcs_[e ^ 1] is the reverse of arcs_[e]
    std::vector<std::vector<std::size_t>> out_;   // arc indices per node
    std::vector<int> level_;
    std::vector<std::size_t> next_arc_;

    bool build_levels(std::size_t source, std::size_t sink);
    Capacity augment(std::size_t source, std::size_t sink, Capacity limit);
};

}  // namespace jwds::detail
