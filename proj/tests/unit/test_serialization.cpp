#include <doctest.h>

#include "fixtures.hpp"
#include "jwds/serialization.hpp"

using namespace jwds;
using namespace jwds::testing;
using nlohmann::json;

TEST_CASE("solution round trip") {
    const TemporalGraph g = toy_graph();
    const Solution s{0.3, "itr", toy_reference_sets(g)};
    const json doc = solution_to_json(g, s);
    CHECK(doc["schema"] == kSchemaVersion);
    CHECK(doc["sets"][0] == json::array({"a", "b", "d", "f"}));
    const Solution back = solution_from_json(g, json::parse(doc.dump()));
    CHECK(back.lambda == 0.3);
    CHECK(back.algo == "itr");
    CHECK(back.seq == s.seq);
}

TEST_CASE("malformed solutions are rejected") {
    const TemporalGraph g = toy_graph();
    json doc = solution_to_json(g, {0.3, "itr", toy_reference_sets(g)});
    json bad = doc;
    bad["schema"] = 2;
    CHECK_THROWS_AS(solution_from_json(g, bad), SchemaError);
    bad = doc;
    bad["sets"].erase(2);
    CHECK_THROWS_AS(solution_from_json(g, bad), SchemaError);
    bad = doc;
    bad["sets"][1] = json::array({"zz"});
    CHECK_THROWS_AS(solution_from_json(g, bad), SchemaError);
    bad = doc;
    bad["sets"][1] = json::array();
    CHECK_THROWS_AS(solution_from_json(g, bad), SchemaError);
    bad = doc;
    bad.erase("lambda");
    CHECK_THROWS_AS(solution_from_json(g, bad), SchemaError);
}

TEST_CASE("synthetic spec and truth round trip") {
    SynthSpec spec;
    spec.n_dense = 4;
    spec.n_sparse = 6;
    spec.k = 2;
    spec.p_dense = 0.9;
    spec.seed = 12345678901234ULL;
    const SynthDataset d = generate(spec);
    const json doc = json::parse(truth_to_json(d.graph, d.truth, spec).dump());
    const SynthSpec back = synth_spec_from_json(doc["spec"]);
    CHECK(back.seed == spec.seed);
    CHECK(back.p_dense == spec.p_dense);
    CHECK(back.eta_hi == spec.eta_hi);
    std::size_t dropped = 99;
    const GroundTruth t = truth_from_json(d.graph, doc, &dropped);
    CHECK(dropped == 0);
    CHECK(t.dense_sets == d.truth.dense_sets);
    CHECK(t.etas == d.truth.etas);
}

TEST_CASE("truth labels outside the graph are dropped and counted") {
    const TemporalGraph g = toy_graph();
    const json doc{{"schema", 1}, {"dense_sets", {{"a", "q"}, {"b"}, {"c"}}}};
    std::size_t dropped = 0;
    const GroundTruth t = truth_from_json(g, doc, &dropped);
    CHECK(dropped == 1);
    CHECK(t.dense_sets[0] == labelled_set(g, {"a"}));
}
