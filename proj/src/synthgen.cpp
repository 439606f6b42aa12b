#include "jwds/synthgen.hpp"

#include <string>

#include "jwds/error.hpp"

namespace jwds {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void SynthSpec::validate() const {
    JWDS_EXPECTS(n_dense >= 1, "n_dense must be at least 1");
    JWDS_EXPECTS(n_sparse >= 1, "n_sparse must be at least 1");
    JWDS_EXPECTS(k >= 1, "k must be at least 1");
    JWDS_EXPECTS(is_probability(p_dense), "p_dense must lie in [0, 1]");
    JWDS_EXPECTS(is_probability(p_sparse), "p_sparse must lie in [0, 1]");
    JWDS_EXPECTS(is_probability(p_cross), "p_cross must lie in [0, 1]");
    JWDS_EXPECTS(is_probability(eta_lo) && is_probability(eta_hi), "eta range must lie in [0, 1]");
    JWDS_EXPECTS(eta_lo <= eta_hi, "eta_lo must not exceed eta_hi");
}

SynthDataset generate(const SynthSpec& spec) {
    spec.validate();
    const std::size_t n = spec.n_dense + spec.n_sparse;
    PortableRng rng(spec.seed);

    GroundTruth truth;
    std::vector<std::vector<Edge>> edges(spec.k);
    std::vector<bool> dense(n);
    for (std::size_t i = 0; i < spec.k; ++i) {
        const double eta = spec.eta_lo + (spec.eta_hi - spec.eta_lo) * rng.uniform();
        truth.etas.push_back(eta);

        VertexSet block(n);
        for (std::size_t v = 0; v < n; ++v) {
            dense[v] = v < spec.n_dense || rng.bernoulli(eta);
            if (dense[v]) block.insert(static_cast<VertexId>(v));
        }
        truth.dense_sets.push_back(std::move(block));

        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                const double p = dense[u] && dense[v]     ? spec.p_dense
                                 : !dense[u] && !dense[v] ? spec.p_sparse
                                                          : spec.p_cross;
                if (rng.bernoulli(p)) edges[i].emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
            }
        }
    }
    return {TemporalGraph::from_edge_lists(n, edges), std::move(truth)};
}

double expected_edges(const SynthSpec& spec) {
    spec.validate();
    const double nd = static_cast<double>(spec.n_dense);
    const double ns = static_cast<double>(spec.n_sparse);
    const double lo = spec.eta_lo, hi = spec.eta_hi;
    // Moments of eta ~ U[lo, hi] and of B ~ Binomial(ns, eta), the number of
    // migrated vertices.
    const double eta1 = (lo + hi) / 2.0;
    const double eta2 = (lo * lo + lo * hi + hi * hi) / 3.0;
    const double b1 = ns * eta1;
    const double b2 = ns * eta1 + ns * (ns - 1.0) * eta2;

    // X = nd + B dense vertices, Y = ns - B sparse ones.
    const double dense_pairs = (nd * (nd - 1.0) + (2.0 * nd - 1.0) * b1 + b2) / 2.0;
    const double sparse_pairs = (ns * (ns - 1.0) - (2.0 * ns - 1.0) * b1 + b2) / 2.0;
    const double cross_pairs = nd * ns + (ns - nd) * b1 - b2;
    const double per_snapshot =
        dense_pairs * spec.p_dense + sparse_pairs * spec.p_sparse + cross_pairs * spec.p_cross;
    return static_cast<double>(spec.k) * per_snapshot;
}

}  // namespace jwds
