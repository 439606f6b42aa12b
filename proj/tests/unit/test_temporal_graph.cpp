#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "jwds/error.hpp"
#include "jwds/temporal_graph.hpp"

using namespace jwds;
using namespace jwds::testing;
namespace fs = std::filesystem;

namespace {

LoadResult parse(const std::string& text) {
    std::istringstream in(text);
    return parse_triples(in, "test");
}

void check_symmetric(const TemporalGraph& g) {
    for (const Snapshot& s : g.snapshots()) {
        std::size_t degree_sum = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            degree_sum += s.degree(v);
            for (VertexId u : s.neighbors(v)) {
                REQUIRE(u != v);
                REQUIRE(s.has_edge(u, v));
            }
        }
        REQUIRE(degree_sum == 2 * s.edge_count());
    }
}

}  // namespace

TEST_CASE("two-edge triples file") {
    auto r = parse("a b 0\nb c 1\n");
    CHECK(r.graph.vertex_count() == 3);
    CHECK(r.graph.snapshot_count() == 2);
    CHECK(r.graph.snapshot(0).edge_count() == 1);
    CHECK(r.graph.snapshot(1).edge_count() == 1);
    check_symmetric(r.graph);
}

TEST_CASE("self-loops are dropped and counted") {
    auto r = parse("a a 0\na b 0\n");
    CHECK(r.stats.self_loops_dropped == 1);
    CHECK(r.graph.snapshot(0).edge_count() == 1);
}

TEST_CASE("duplicate edges collapse, in either orientation") {
    auto r = parse("a b 0\nb a 0\na b 0\n");
    CHECK(r.graph.snapshot(0).edge_count() == 1);
    CHECK(r.stats.duplicates_collapsed == 2);
}

TEST_CASE("toy graph as triples") {
    const TemporalGraph g = toy_graph();
    CHECK(g.vertex_count() == 6);
    CHECK(g.snapshot_count() == 3);
    CHECK(g.snapshot(0).edge_count() == 4);
    CHECK(g.snapshot(1).edge_count() == 8);
    CHECK(g.snapshot(2).edge_count() == 9);
    check_symmetric(g);
    // labels sorted before ids are assigned
    for (VertexId v = 0; v < 6; ++v) CHECK(g.labels().name(v) == std::string(1, static_cast<char>('a' + v)));
}

TEST_CASE("comments, blank lines and tabs") {
    auto r = parse("# header\n\n  a\tb 0 \n# x y 9\n");
    CHECK(r.graph.snapshot_count() == 1);
    CHECK(r.graph.vertex_count() == 2);
}

TEST_CASE("malformed input reports the line number") {
    try {
        parse("a b 0\na b\n");
        FAIL("expected LoadError");
    } catch (const LoadError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse("a b x\n"), LoadError);
    CHECK_THROWS_AS(parse("a b 1.5\n"), LoadError);
    try {
        parse("a b 0\nc d -1\n");
        FAIL("expected LoadError");
    } catch (const LoadError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("negative") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("# nothing\n"), LoadError);
}

TEST_CASE("unreadable file") {
    CHECK_THROWS_AS(load_temporal_edgelist("/nonexistent/file.triples", InputFormat::triples), LoadError);
    CHECK_THROWS_AS(load_temporal_edgelist("/nonexistent/dir", InputFormat::per_snapshot_files), LoadError);
}

TEST_CASE("vertices absent from a snapshot are isolated there") {
    auto r = parse("a b 0\nc d 2\n");
    CHECK(r.graph.snapshot_count() == 3);
    CHECK(r.graph.vertex_count() == 4);
    CHECK(r.graph.snapshot(1).edge_count() == 0);
    CHECK(r.graph.snapshot(0).degree(*r.graph.labels().find("c")) == 0);
}

TEST_CASE("per-snapshot directory format") {
    const fs::path dir = fs::temp_directory_path() / "jwds_test_dir_format";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream(dir / "0.edges") << "a b\nb d\n";
    std::ofstream(dir / "1.edges") << "# comment\nc d\n";
    std::ofstream(dir / "notes.txt") << "ignored\n";
    auto r = load_temporal_edgelist(dir, InputFormat::per_snapshot_files);
    CHECK(r.graph.snapshot_count() == 2);
    CHECK(r.graph.vertex_count() == 4);
    CHECK(r.graph.snapshot(0).edge_count() == 2);
    CHECK(r.graph.snapshot(1).edge_count() == 1);

    std::ofstream(dir / "3.edges") << "a c\n";
    CHECK_THROWS_AS(load_temporal_edgelist(dir, InputFormat::per_snapshot_files), LoadError);
    fs::remove_all(dir);
}

TEST_CASE("triples round trip preserves adjacency") {
    TestRng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = uniform_int(rng, 2, 15);
        const std::size_t k = uniform_int(rng, 1, 4);
        std::vector<std::vector<Edge>> lists;
        for (std::size_t i = 0; i < k; ++i) lists.push_back(random_edges(rng, n, 0.4));
        // keep every vertex visible in the edge list
        for (VertexId v = 0; v + 1 < n; ++v) lists[0].emplace_back(v, v + 1);
        const TemporalGraph g = TemporalGraph::from_edge_lists(n, lists);

        std::stringstream buf;
        write_triples(g, buf);
        const TemporalGraph back = parse_triples(buf).graph;
        REQUIRE(back.vertex_count() == g.vertex_count());
        REQUIRE(back.labels().names() == g.labels().names());
        // trailing empty snapshots are not representable in triples
        for (std::size_t i = 0; i < back.snapshot_count(); ++i) CHECK(back.snapshot(i) == g.snapshot(i));
        for (std::size_t i = back.snapshot_count(); i < g.snapshot_count(); ++i) CHECK(g.snapshot(i).edge_count() == 0);
        check_symmetric(back);
    }
}

TEST_CASE("induced edge count") {
    const TemporalGraph g = toy_graph();
    CHECK(induced_edge_count(g.snapshot(0), labelled_set(g, {"a", "b", "d", "f"})) == 4);
    CHECK(induced_edge_count(g.snapshot(0), VertexSet(6)) == 0);
    for (const Snapshot& s : g.snapshots()) CHECK(induced_edge_count(s, VertexSet::full(6)) == s.edge_count());

    TestRng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Snapshot s = random_snapshot(rng, 8, 0.5);
        const VertexSet set = random_nonempty_set(rng, 8, 0.5);
        CHECK(induced_edge_count(s, set) == naive_edge_count(s, set));
    }
}

TEST_CASE("numbered labels keep id order") {
    const LabelTable t = LabelTable::numbered(12);
    CHECK(t.name(0) == "00");
    CHECK(t.name(11) == "11");
    CHECK(*t.find("07") == 7);
    CHECK_FALSE(t.find("7").has_value());
}
