#include "jwds/evaluation.hpp"

#include <algorithm>
#include <cstdio>

#include "jwds/error.hpp"

namespace jwds {

EvaluationReport evaluate(const TemporalGraph& g, const SubgraphSequence& seq, const GroundTruth* truth,
                          double lambda) {
    const std::size_t k = g.snapshot_count();
    if (truth != nullptr) {
        JWDS_EXPECTS(truth->dense_sets.size() == k, "ground truth has " + std::to_string(truth->dense_sets.size()) +
                                                        " sets but graph has " + std::to_string(k) + " snapshots");
    }
    const ScoreBreakdown b = score(g, seq, lambda);

    EvaluationReport r;
    r.lambda = lambda;
    r.d_dis = b.density_sum;
    r.score_total = b.total;
    double rho_sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        SnapshotEvaluation s;
        s.size = seq[i].count();
        s.density = density(g.snapshot(i), seq[i]);
        if (truth != nullptr) {
            s.truth_jaccard = jaccard(seq[i], truth->dense_sets[i]);
            rho_sum += *s.truth_jaccard;
        }
        r.per_snapshot.push_back(s);
    }
    if (truth != nullptr) r.rho = rho_sum / static_cast<double>(k);

    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) r.j_min = std::min(r.j_min, jaccard(seq[i], seq[j]));
    }
    return r;
}

std::string_view csv_header() {
    return "dataset,lambda,algo,d_dis,score,j_min,rho,iterations,delta_max,time_s,removals";
}

namespace {

std::string fmt_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string csv_row(const ResultRow& row) {
    const EvaluationReport& e = row.evaluation;
    std::string out;
    out += csv_field(row.dataset) + ',';
    out += fmt_real(row.lambda) + ',';
    out += csv_field(row.algo) + ',';
    out += fmt_real(e.d_dis) + ',';
    out += fmt_real(e.score_total) + ',';
    out += fmt_real(e.j_min) + ',';
    out += (e.rho ? fmt_real(*e.rho) : std::string()) + ',';
    out += std::to_string(row.iterations) + ',';
    out += std::to_string(row.delta_max) + ',';
    char t[32];
    std::snprintf(t, sizeof t, "%.6f", row.time_s);
    out += std::string(t) + ',';
    out += std::to_string(row.removals);
    return out;
}

}  // namespace jwds
