#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "jwds/evaluation.hpp"
#include "jwds/peel_state.hpp"
#include "jwds/scoring.hpp"
#include "jwds/solvers.hpp"
#include "jwds/synthgen.hpp"
#include "jwds/temporal_graph.hpp"

namespace jwds {

inline constexpr int kSchemaVersion = 1;

/// A JSON document does not match the expected schema or the dataset.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct Solution {
    double lambda = 0.0;
    std::string algo;
    SubgraphSequence seq;
};

/// [[label, ...], ...], labels sorted by id.
nlohmann::json sets_to_json(const TemporalGraph& g, const SubgraphSequence& seq);
SubgraphSequence sets_from_json(const TemporalGraph& g, const nlohmann::json& sets);

/// {"schema": 1, "lambda": ..., "algo": ..., "sets": [[labels...], ...]}
nlohmann::json solution_to_json(const TemporalGraph& g, const Solution& s);
/// Throws SchemaError on a malformed document, an unknown label or a
/// snapshot-count mismatch.
Solution solution_from_json(const TemporalGraph& g, const nlohmann::json& doc);

nlohmann::json to_json(const ScoreBreakdown& b);
nlohmann::json to_json(const EvaluationReport& r);
/// Deterministic solver diagnostics (no wall time).
nlohmann::json solver_stats_to_json(const SolverReport& r);

nlohmann::json to_json(const SynthSpec& spec);
SynthSpec synth_spec_from_json(const nlohmann::json& doc);

/// {"schema": 1, "spec": {...}, "etas": [...], "dense_sets": [[labels...], ...]}
nlohmann::json truth_to_json(const TemporalGraph& g, const GroundTruth& truth, const SynthSpec& spec);
/// Labels absent from `g` (vertices that never received an edge) are
/// skipped and counted in `dropped` when it is non-null.
GroundTruth truth_from_json(const TemporalGraph& g, const nlohmann::json& doc, std::size_t* dropped = nullptr);

/// Sets, counters and group table of a peel state.
nlohmann::json debug_json(const PeelState& state);

}  // namespace jwds
