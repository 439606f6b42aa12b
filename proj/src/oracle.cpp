#include "jwds/oracle.hpp"

#include <bit>
#include <vector>

#include "jwds/error.hpp"

namespace jwds {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Snapshot& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (VertexId u : g.neighbors(v)) adj[v] |= Mask{1} << u;
    }
    return adj;
}

std::uint64_t edges_in(const std::vector<Mask>& adj, Mask s) {
    std::uint64_t twice = 0;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
        twice += std::popcount(adj[std::countr_zero(rest)] & s);
    }
    return twice / 2;
}

VertexSet to_set(std::size_t n, Mask m) {
    VertexSet s(n);
    for (Mask rest = m; rest != 0; rest &= rest - 1) s.insert(static_cast<VertexId>(std::countr_zero(rest)));
    return s;
}

// Exact comparison of e1/s1 against e2/s2.
int compare_density(std::uint64_t e1, std::uint64_t s1, std::uint64_t e2, std::uint64_t s2) {
    const auto l = e1 * s2, r = e2 * s1;
    return l < r ? -1 : (l > r ? 1 : 0);
}

}  // namespace

OracleResult brute_force_jwds(const TemporalGraph& g, double lambda, std::uint64_t limit) {
    JWDS_EXPECTS(lambda >= 0.0, "lambda must be non-negative");
    const std::size_t n = g.vertex_count();
    const std::size_t k = g.snapshot_count();
    if (n > 30) throw BudgetExceeded("brute force limited to n <= 30, got " + std::to_string(n));
    const Mask last = (Mask{1} << n) - 1;  // also the number of nonempty subsets

    OracleResult result;
    if (lambda == 0.0) {
        if (last > limit / k) throw BudgetExceeded("k(2^n - 1) exceeds the state budget");
        result.best_seq.sets.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            const auto adj = adjacency_masks(g.snapshot(i));
            Mask best = 1;
            std::uint64_t best_e = 0, best_s = 1;
            for (Mask m = 1; m <= last; ++m) {
                const std::uint64_t e = edges_in(adj, m), s = std::popcount(m);
                if (compare_density(e, s, best_e, best_s) > 0) {
                    best = m;
                    best_e = e;
                    best_s = s;
                }
            }
            result.best_seq.sets.push_back(to_set(n, best));
            result.best_score += static_cast<double>(best_e) / static_cast<double>(best_s);
        }
        result.states_examined = k * last;
        return result;
    }

    std::uint64_t states = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (states > limit / last) throw BudgetExceeded("(2^n - 1)^k exceeds the state budget");
        states *= last;
    }

    std::vector<std::vector<double>> dens(k, std::vector<double>(last + 1, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        const auto adj = adjacency_masks(g.snapshot(i));
        for (Mask m = 1; m <= last; ++m) {
            dens[i][m] = static_cast<double>(edges_in(adj, m)) / static_cast<double>(std::popcount(m));
        }
    }

    std::vector<Mask> masks(k, 1);
    std::vector<Mask> best(k, 1);
    double best_score = -1.0;
    std::uint64_t examined = 0;
    while (true) {
        double density_sum = 0.0, jaccard_sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) density_sum += dens[i][masks[i]];
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                jaccard_sum += static_cast<double>(std::popcount(masks[i] & masks[j])) /
                               static_cast<double>(std::popcount(masks[i] | masks[j]));
            }
        }
        const double total = density_sum + lambda * jaccard_sum;
        ++examined;
        if (total > best_score) {
            best_score = total;
            best = masks;
        }
        // odometer, last snapshot fastest, so enumeration is lexicographic
        std::size_t pos = k;
        while (pos > 0 && masks[pos - 1] == last) masks[--pos] = 1;
        if (pos == 0) break;
        ++masks[pos - 1];
    }

    for (Mask m : best) result.best_seq.sets.push_back(to_set(n, m));
    result.best_score = best_score;
    result.states_examined = examined;
    return result;
}

DensestResult brute_force_densest(const Snapshot& g) {
    const std::size_t n = g.vertex_count();
    if (n > 20) throw BudgetExceeded("brute_force_densest limited to n <= 20, got " + std::to_string(n));
    JWDS_EXPECTS(n >= 1, "graph has no vertices");
    const auto adj = adjacency_masks(g);
    const Mask last = (Mask{1} << n) - 1;

    Mask best = 1;
    std::uint64_t best_e = 0, best_s = 1;
    for (Mask m = 2; m <= last; ++m) {
        const std::uint64_t e = edges_in(adj, m), s = std::popcount(m);
        const int cmp = compare_density(e, s, best_e, best_s);
        bool better = cmp > 0;
        if (cmp == 0) {
            if (s != best_s) {
                better = s < best_s;
            } else {
                // same size: the smaller sorted list holds the lowest differing vertex
                better = (m & ((m ^ best) & (~(m ^ best) + 1))) != 0;
            }
        }
        if (better) {
            best = m;
            best_e = e;
            best_s = s;
        }
    }
    return {to_set(n, best), best_e, best_s, static_cast<double>(best_e) / static_cast<double>(best_s)};
}

}  // namespace jwds
