#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "jwds/scoring.hpp"
#include "jwds/temporal_graph.hpp"

namespace jwds {

// Exhaustive solvers for tiny instances. They share no code with the
// peeling or flow solvers: subsets are plain bitmasks and every score is
// computed here from popcounts.

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct OracleResult {
    SubgraphSequence best_seq;
    double best_score = 0.0;
    std::uint64_t states_examined = 0;
};

/// Maximizes the score over every sequence of nonempty sets. Throws
/// BudgetExceeded when (2^n - 1)^k exceeds `limit` (k(2^n - 1) when lambda
/// is 0, where snapshots separate). Ties go to the lexicographically
/// smallest (mask_1, ..., mask_k), mask bit v standing for vertex v.
OracleResult brute_force_jwds(const TemporalGraph& g, double lambda, std::uint64_t limit = 10'000'000);

struct DensestResult {
    VertexSet set;
    std::uint64_t edges = 0;
    std::uint64_t size = 0;
    double density = 0.0;
};

/// Densest subset by enumeration (n <= 20). Ties go to the smaller set, then
/// to the lexicographically smaller sorted vertex list.
DensestResult brute_force_densest(const Snapshot& g);

}  // namespace jwds
