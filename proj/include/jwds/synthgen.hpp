#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "jwds/temporal_graph.hpp"
#include "jwds/vertex_set.hpp"

namespace jwds {

/// Parameters of the planted dense-block generator.
struct SynthSpec {
    std::size_t n_dense = 1;
    std::size_t n_sparse = 1;
    std::size_t k = 1;
    double p_dense = 0.0;
    double p_sparse = 0.0;
    double p_cross = 0.0;
    double eta_lo = 0.01;
    double eta_hi = 0.09;
    std::uint64_t seed = 0;

    /// Throws ContractViolation when a count is zero, a probability is
    /// outside [0, 1] or eta_lo > eta_hi.
    void validate() const;
};

struct GroundTruth {
    std::vector<VertexSet> dense_sets;  // V^d_i, one per snapshot
    std::vector<double> etas;           // migration probability per snapshot
};

struct SynthDataset {
    TemporalGraph graph;
    GroundTruth truth;
};

/// The generator's random source: std::mt19937_64 (whose output sequence the
/// C++ standard fixes) with uniform reals formed as (x >> 11) * 2^-53, so a
/// seed produces the same stream on every conforming platform.
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

/// Draws a dataset. Vertices 0..n_dense-1 form the base dense block V^d,
/// the rest are sparse. For each snapshot, in order: eta_i ~ U[eta_lo,
/// eta_hi]; each sparse vertex, in id order, joins V^d_i with probability
/// eta_i; then each pair u < v, in lexicographic order, becomes an edge with
/// probability p_dense (both in V^d_i), p_sparse (neither) or p_cross.
SynthDataset generate(const SynthSpec& spec);

/// Expected total edge count over all snapshots, integrating over the
/// uniform eta and the binomial migration.
double expected_edges(const SynthSpec& spec);

}  // namespace jwds
