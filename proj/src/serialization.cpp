#include "jwds/serialization.hpp"

namespace jwds {

using nlohmann::json;

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw SchemaError(what);
}

void require_schema(const json& doc) {
    require(doc.is_object(), "document is not a JSON object");
    require(doc.contains("schema") && doc["schema"].is_number_integer(), "missing integer \"schema\" field");
    require(doc["schema"].get<int>() == kSchemaVersion,
            "unsupported schema version " + std::to_string(doc["schema"].get<int>()));
}

json labels_of(const TemporalGraph& g, const VertexSet& s) {
    json out = json::array();
    s.for_each([&](VertexId v) { out.push_back(g.labels().name(v)); });
    return out;
}

VertexSet set_from_labels(const TemporalGraph& g, const json& labels, std::size_t* dropped) {
    require(labels.is_array(), "set is not an array of labels");
    VertexSet s(g.vertex_count());
    for (const json& item : labels) {
        require(item.is_string(), "vertex label is not a string");
        const auto id = g.labels().find(item.get<std::string>());
        if (!id) {
            require(dropped != nullptr, "unknown vertex label \"" + item.get<std::string>() + "\"");
            ++*dropped;
            continue;
        }
        s.insert(*id);
    }
    return s;
}

}  // namespace

json sets_to_json(const TemporalGraph& g, const SubgraphSequence& seq) {
    json out = json::array();
    for (const VertexSet& s : seq.sets) out.push_back(labels_of(g, s));
    return out;
}

SubgraphSequence sets_from_json(const TemporalGraph& g, const json& sets) {
    require(sets.is_array(), "\"sets\" is not an array");
    require(sets.size() == g.snapshot_count(), "solution has " + std::to_string(sets.size()) +
                                                   " sets but the dataset has " +
                                                   std::to_string(g.snapshot_count()) + " snapshots");
    SubgraphSequence seq;
    for (const json& labels : sets) {
        seq.sets.push_back(set_from_labels(g, labels, nullptr));
        require(!seq.sets.back().empty(), "solution contains an empty set");
    }
    return seq;
}

json solution_to_json(const TemporalGraph& g, const Solution& s) {
    return json{{"schema", kSchemaVersion}, {"lambda", s.lambda}, {"algo", s.algo}, {"sets", sets_to_json(g, s.seq)}};
}

Solution solution_from_json(const TemporalGraph& g, const json& doc) {
    require_schema(doc);
    require(doc.contains("lambda") && doc["lambda"].is_number(), "missing numeric \"lambda\"");
    require(doc.contains("sets"), "missing \"sets\"");
    Solution s;
    s.lambda = doc["lambda"].get<double>();
    require(s.lambda >= 0.0, "\"lambda\" must be non-negative");
    if (doc.contains("algo")) {
        require(doc["algo"].is_string(), "\"algo\" is not a string");
        s.algo = doc["algo"].get<std::string>();
    }
    s.seq = sets_from_json(g, doc["sets"]);
    return s;
}

json to_json(const ScoreBreakdown& b) {
    return json{{"density_sum", b.density_sum}, {"jaccard_sum", b.jaccard_sum}, {"lambda", b.lambda}, {"total", b.total}};
}

json to_json(const EvaluationReport& r) {
    json per = json::array();
    for (const SnapshotEvaluation& s : r.per_snapshot) {
        json item{{"size", s.size}, {"density", s.density}};
        if (s.truth_jaccard) item["truth_jaccard"] = *s.truth_jaccard;
        per.push_back(std::move(item));
    }
    json out{{"schema", kSchemaVersion},  {"lambda", r.lambda}, {"d_dis", r.d_dis},
             {"score", r.score_total},    {"j_min", r.j_min},   {"per_snapshot", std::move(per)}};
    if (r.rho) out["rho"] = *r.rho;
    return out;
}

json solver_stats_to_json(const SolverReport& r) {
    return json{{"breakdown", to_json(r.breakdown)},
                {"init_breakdown", to_json(r.init_breakdown)},
                {"iterations", r.iterations},
                {"delta_max", r.delta_max},
                {"init_used", std::string(init_kind_name(r.init_used))},
                {"removals", r.removals}};
}

json to_json(const SynthSpec& spec) {
    return json{{"n_dense", spec.n_dense}, {"n_sparse", spec.n_sparse}, {"k", spec.k},
                {"p_dense", spec.p_dense}, {"p_sparse", spec.p_sparse}, {"p_cross", spec.p_cross},
                {"eta_lo", spec.eta_lo},   {"eta_hi", spec.eta_hi},     {"seed", spec.seed},
                {"rng", "mt19937_64"}};
}

SynthSpec synth_spec_from_json(const json& doc) {
    try {
        SynthSpec spec;
        spec.n_dense = doc.at("n_dense").get<std::size_t>();
        spec.n_sparse = doc.at("n_sparse").get<std::size_t>();
        spec.k = doc.at("k").get<std::size_t>();
        spec.p_dense = doc.at("p_dense").get<double>();
        spec.p_sparse = doc.at("p_sparse").get<double>();
        spec.p_cross = doc.at("p_cross").get<double>();
        spec.eta_lo = doc.at("eta_lo").get<double>();
        spec.eta_hi = doc.at("eta_hi").get<double>();
        spec.seed = doc.at("seed").get<std::uint64_t>();
        return spec;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad synthetic spec: ") + e.what());
    }
}

json truth_to_json(const TemporalGraph& g, const GroundTruth& truth, const SynthSpec& spec) {
    json sets = json::array();
    for (const VertexSet& s : truth.dense_sets) sets.push_back(labels_of(g, s));
    return json{{"schema", kSchemaVersion}, {"spec", to_json(spec)}, {"etas", truth.etas}, {"dense_sets", std::move(sets)}};
}

GroundTruth truth_from_json(const TemporalGraph& g, const json& doc, std::size_t* dropped) {
    require_schema(doc);
    require(doc.contains("dense_sets") && doc["dense_sets"].is_array(), "missing \"dense_sets\" array");
    GroundTruth truth;
    std::size_t skipped = 0;
    for (const json& labels : doc["dense_sets"]) truth.dense_sets.push_back(set_from_labels(g, labels, &skipped));
    if (doc.contains("etas")) {
        require(doc["etas"].is_array(), "\"etas\" is not an array");
        for (const json& e : doc["etas"]) {
            require(e.is_number(), "eta is not a number");
            truth.etas.push_back(e.get<double>());
        }
    }
    if (dropped != nullptr) *dropped = skipped;
    return truth;
}

json debug_json(const PeelState& state) {
    const TemporalGraph& g = state.graph();
    const SetCounts& c = state.counts();
    json inter = json::array(), uni = json::array();
    for (std::size_t i = 0; i < c.k; ++i) {
        json ri = json::array(), ru = json::array();
        for (std::size_t j = 0; j < c.k; ++j) {
            ri.push_back(i == j ? c.sizes[i] : c.inter_at(i, j));
            ru.push_back(i == j ? c.sizes[i] : c.uni_at(i, j));
        }
        inter.push_back(std::move(ri));
        uni.push_back(std::move(ru));
    }
    json groups = json::array();
    for (const GroupInfo& info : state.group_table()) {
        json members = json::array();
        for (VertexId v : info.members) members.push_back(g.labels().name(v));
        groups.push_back(json{{"snapshot", info.snapshot},
                              {"signature", info.signature},
                              {"members", std::move(members)},
                              {"jaccard_delta", info.jaccard_delta}});
    }
    return json{{"schema", kSchemaVersion},
                {"lambda", state.lambda()},
                {"sets", sets_to_json(g, state.sets())},
                {"edge_counts", c.edges},
                {"sizes", c.sizes},
                {"intersection", std::move(inter)},
                {"union", std::move(uni)},
                {"delta_max", state.delta_max()},
                {"removals", state.removals()},
                {"groups", std::move(groups)}};
}

}  // namespace jwds
