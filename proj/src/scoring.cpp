#include "jwds/scoring.hpp"

#include <string>

#include "jwds/error.hpp"

namespace jwds {

SubgraphSequence SubgraphSequence::full(const TemporalGraph& g) {
    return repeated(VertexSet::full(g.vertex_count()), g.snapshot_count());
}

SubgraphSequence SubgraphSequence::repeated(const VertexSet& s, std::size_t k) {
    return SubgraphSequence(std::vector<VertexSet>(k, s));
}

namespace {

void check_shape(const TemporalGraph& g, const SubgraphSequence& seq) {
    JWDS_EXPECTS(seq.size() == g.snapshot_count(), "sequence has " + std::to_string(seq.size()) +
                                                       " sets but graph has " +
                                                       std::to_string(g.snapshot_count()) + " snapshots");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        JWDS_EXPECTS(seq[i].universe() == g.vertex_count(), "set universe differs from graph");
        JWDS_EXPECTS(!seq[i].empty(), "set " + std::to_string(i) + " is empty");
    }
}

}  // namespace

SetCounts count_sets(const TemporalGraph& g, const SubgraphSequence& seq) {
    check_shape(g, seq);
    const std::size_t k = seq.size();
    SetCounts c(k);
    const auto& ops = kernels::active_ops();
    for (std::size_t i = 0; i < k; ++i) {
        c.sizes[i] = seq[i].count();
        c.edges[i] = induced_edge_count(g.snapshot(i), seq[i]);
        for (std::size_t j = i + 1; j < k; ++j) {
            std::uint64_t in = 0, un = 0;
            const auto a = seq[i].words();
            ops.and_or_count(a.data(), seq[j].words().data(), a.size(), &in, &un);
            c.inter_at(i, j) = c.inter_at(j, i) = in;
            c.uni_at(i, j) = c.uni_at(j, i) = un;
        }
    }
    return c;
}

ScoreBreakdown breakdown_from_counts(const SetCounts& c, double lambda) {
    ScoreBreakdown b;
    b.lambda = lambda;
    for (std::size_t i = 0; i < c.k; ++i) {
        b.density_sum += static_cast<double>(c.edges[i]) / static_cast<double>(c.sizes[i]);
    }
    for (std::size_t i = 0; i < c.k; ++i) {
        for (std::size_t j = i + 1; j < c.k; ++j) {
            b.jaccard_sum += static_cast<double>(c.inter_at(i, j)) / static_cast<double>(c.uni_at(i, j));
        }
    }
    b.total = b.density_sum + lambda * b.jaccard_sum;
    return b;
}

double density(const Snapshot& g, const VertexSet& s) {
    const std::size_t size = s.count();
    JWDS_EXPECTS(size >= 1, "density of an empty set");
    return static_cast<double>(induced_edge_count(g, s)) / static_cast<double>(size);
}

double jaccard(const VertexSet& s, const VertexSet& t) {
    JWDS_EXPECTS(s.universe() == t.universe(), "sets over different universes");
    const std::size_t uni = union_size(s, t);
    JWDS_EXPECTS(uni >= 1, "Jaccard index of two empty sets");
    return static_cast<double>(intersection_size(s, t)) / static_cast<double>(uni);
}

ScoreBreakdown score(const TemporalGraph& g, const SubgraphSequence& seq, double lambda) {
    JWDS_EXPECTS(lambda >= 0.0, "lambda must be non-negative");
    return breakdown_from_counts(count_sets(g, seq), lambda);
}

double removal_gain(const TemporalGraph& g, const SubgraphSequence& seq, std::size_t i, VertexId v,
                    double lambda) {
    check_shape(g, seq);
    JWDS_EXPECTS(i < seq.size(), "snapshot index out of range");
    const VertexSet& si = seq[i];
    JWDS_EXPECTS(si.contains(v), "vertex " + std::to_string(v) + " is not in S_" + std::to_string(i));
    const std::size_t size = si.count();
    JWDS_EXPECTS(size >= 2, "cannot remove the last vertex of a set");

    const Snapshot& gi = g.snapshot(i);
    const double edges = static_cast<double>(induced_edge_count(gi, si));
    const double deg = static_cast<double>(induced_degree(gi, si, v));
    const double s = static_cast<double>(size);
    const double density_change = (edges - deg) / (s - 1.0) - edges / s;

    double jaccard_change = 0.0;
    for (std::size_t j = 0; j < seq.size(); ++j) {
        if (j == i) continue;
        const double in = static_cast<double>(intersection_size(si, seq[j]));
        const double un = static_cast<double>(union_size(si, seq[j]));
        if (seq[j].contains(v)) {
            jaccard_change += (in - 1.0) / un - in / un;
        } else {
            jaccard_change += in / (un - 1.0) - in / un;
        }
    }
    return density_change + lambda * jaccard_change;
}

}  // namespace jwds
