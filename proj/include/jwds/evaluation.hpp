#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jwds/scoring.hpp"
#include "jwds/synthgen.hpp"
#include "jwds/temporal_graph.hpp"

namespace jwds {

struct SnapshotEvaluation {
    std::size_t size = 0;
    double density = 0.0;
    std::optional<double> truth_jaccard;  // J(S_i, V^d_i)
};

struct EvaluationReport {
    std::optional<double> rho;  // mean over i of J(S_i, V^d_i)
    double j_min = 1.0;         // min over i < j of J(S_i, S_j); 1 when k = 1
    double d_dis = 0.0;         // sum of densities
    double score_total = 0.0;
    double lambda = 0.0;
    std::vector<SnapshotEvaluation> per_snapshot;
};

/// Metrics of `seq`; rho and the per-snapshot truth terms are filled only
/// when `truth` is given. Truth sets are paired with snapshots by index.
EvaluationReport evaluate(const TemporalGraph& g, const SubgraphSequence& seq, const GroundTruth* truth,
                          double lambda);

/// One line of the results table.
struct ResultRow {
    std::string dataset;
    double lambda = 0.0;
    std::string algo;
    EvaluationReport evaluation;
    std::size_t iterations = 0;
    std::size_t delta_max = 0;
    double time_s = 0.0;
    std::size_t removals = 0;
};

/// `dataset,lambda,algo,d_dis,score,j_min,rho,iterations,delta_max,time_s,removals`
std::string_view csv_header();

/// Row matching csv_header(); rho is left empty without ground truth.
std::string csv_row(const ResultRow& row);

}  // namespace jwds
