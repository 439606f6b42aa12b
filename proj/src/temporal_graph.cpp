#include "jwds/temporal_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

#include "jwds/error.hpp"

namespace jwds {

LabelTable::LabelTable(std::vector<std::string> labels) : names_(std::move(labels)) {
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], static_cast<VertexId>(i));
}

LabelTable LabelTable::numbered(std::size_t n) {
    const std::size_t width = n <= 1 ? 1 : std::to_string(n - 1).size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string s = std::to_string(i);
        labels.push_back(std::string(width - s.size(), '0') + s);
    }
    return LabelTable(std::move(labels));
}

std::optional<VertexId> LabelTable::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Snapshot::Snapshot(std::size_t n, std::span<const Edge> edges) : offsets_(n + 1, 0) {
    std::vector<Edge> directed;
    directed.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        JWDS_EXPECTS(u < n && v < n, "edge endpoint outside universe");
        if (u == v) continue;
        directed.emplace_back(u, v);
        directed.emplace_back(v, u);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());
    neighbors_.reserve(directed.size());
    for (auto [u, v] : directed) {
        ++offsets_[u + 1];
        neighbors_.push_back(v);
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
}

bool Snapshot::has_edge(VertexId u, VertexId v) const {
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Snapshot::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (VertexId v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

TemporalGraph::TemporalGraph(LabelTable labels, std::vector<Snapshot> snapshots)
    : labels_(std::move(labels)), snapshots_(std::move(snapshots)) {
    JWDS_EXPECTS(labels_.size() >= 1, "temporal graph needs at least one vertex");
    JWDS_EXPECTS(!snapshots_.empty(), "temporal graph needs at least one snapshot");
    for (const Snapshot& s : snapshots_) {
        JWDS_EXPECTS(s.vertex_count() == labels_.size(), "snapshot universe differs from label table");
    }
}

TemporalGraph TemporalGraph::from_edge_lists(std::size_t n, const std::vector<std::vector<Edge>>& edges) {
    std::vector<Snapshot> snaps;
    snaps.reserve(edges.size());
    for (const auto& list : edges) snaps.emplace_back(n, list);
    return TemporalGraph(LabelTable::numbered(n), std::move(snaps));
}

std::size_t TemporalGraph::total_edges() const noexcept {
    std::size_t m = 0;
    for (const Snapshot& s : snapshots_) m += s.edge_count();
    return m;
}

std::uint32_t TemporalGraphBuilder::intern(std::string_view label) {
    auto [it, inserted] = provisional_.try_emplace(std::string(label), static_cast<std::uint32_t>(labels_.size()));
    if (inserted) labels_.emplace_back(label);
    return it->second;
}

void TemporalGraphBuilder::add_edge(std::string_view u, std::string_view v, std::size_t snapshot) {
    reserve_snapshots(snapshot + 1);
    const auto a = intern(u);
    const auto b = intern(v);
    if (a == b) {
        ++stats_.self_loops_dropped;
        return;
    }
    edges_[snapshot].emplace_back(std::min(a, b), std::max(a, b));
}

void TemporalGraphBuilder::reserve_snapshots(std::size_t k) {
    if (edges_.size() < k) edges_.resize(k);
}

void TemporalGraphBuilder::add_vertex(std::string_view label) { intern(label); }

LoadResult TemporalGraphBuilder::build() {
    if (labels_.empty()) throw LoadError("input contains no vertices");
    if (edges_.empty()) throw LoadError("input contains no snapshots");
    LabelTable table(labels_);
    // provisional id -> final id (lexicographic rank)
    std::vector<VertexId> remap(labels_.size());
    for (std::size_t p = 0; p < labels_.size(); ++p) remap[p] = *table.find(labels_[p]);

    const std::size_t n = table.size();
    std::vector<Snapshot> snaps;
    snaps.reserve(edges_.size());
    for (auto& list : edges_) {
        for (auto& [u, v] : list) {
            u = remap[u];
            v = remap[v];
            if (u > v) std::swap(u, v);
        }
        std::sort(list.begin(), list.end());
        const auto before = list.size();
        list.erase(std::unique(list.begin(), list.end()), list.end());
        stats_.duplicates_collapsed += before - list.size();
        snaps.emplace_back(n, list);
    }
    LoadResult result{TemporalGraph(std::move(table), std::move(snaps)), stats_};
    *this = TemporalGraphBuilder{};
    return result;
}

namespace {

bool skip_line(std::string_view line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

LoadResult parse_triples(std::istream& in, const std::string& source_name) {
    TemporalGraphBuilder builder;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        const auto tokens = split_ws(line);
        if (tokens.size() != 3) {
            throw LoadError(source_name, lineno, "expected `u v t`, got " + std::to_string(tokens.size()) + " fields");
        }
        long long t = 0;
        const auto tok = tokens[2];
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), t);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw LoadError(source_name, lineno, "snapshot index is not an integer: " + std::string(tok));
        }
        if (t < 0) throw LoadError(source_name, lineno, "negative snapshot index " + std::to_string(t));
        builder.add_edge(tokens[0], tokens[1], static_cast<std::size_t>(t));
    }
    if (in.bad()) throw LoadError(source_name + ": read failure");
    LoadResult r = builder.build();
    r.stats.lines = lineno;
    return r;
}

void parse_edge_list(std::istream& in, const std::string& source_name, std::size_t snapshot,
                     TemporalGraphBuilder& builder, LoadStats& stats) {
    builder.reserve_snapshots(snapshot + 1);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        const auto tokens = split_ws(line);
        if (tokens.size() != 2) {
            throw LoadError(source_name, lineno, "expected `u v`, got " + std::to_string(tokens.size()) + " fields");
        }
        builder.add_edge(tokens[0], tokens[1], snapshot);
    }
    if (in.bad()) throw LoadError(source_name + ": read failure");
    stats.lines += lineno;
}

LoadResult load_temporal_edgelist(const std::filesystem::path& path, InputFormat format) {
    namespace fs = std::filesystem;
    if (format == InputFormat::triples) {
        std::ifstream in(path);
        if (!in) throw LoadError("cannot open " + path.string());
        return parse_triples(in, path.string());
    }

    if (!fs::is_directory(path)) throw LoadError("not a directory: " + path.string());
    static const std::regex numbered(R"((\d+)\.edges)");
    std::vector<std::pair<std::size_t, fs::path>> files;
    for (const auto& entry : fs::directory_iterator(path)) {
        std::smatch m;
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && std::regex_match(name, m, numbered)) {
            files.emplace_back(std::stoull(m[1].str()), entry.path());
        }
    }
    if (files.empty()) throw LoadError("no <i>.edges files in " + path.string());
    std::sort(files.begin(), files.end());
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (files[i].first != i) {
            throw LoadError("snapshot files are not numbered 0.." + std::to_string(files.size() - 1) +
                            " in " + path.string() + " (missing " + std::to_string(i) + ".edges)");
        }
    }

    TemporalGraphBuilder builder;
    LoadStats stats;
    for (const auto& [idx, file] : files) {
        std::ifstream in(file);
        if (!in) throw LoadError("cannot open " + file.string());
        parse_edge_list(in, file.string(), idx, builder, stats);
    }
    LoadResult r = builder.build();
    r.stats.lines = stats.lines;
    return r;
}

void write_triples(const TemporalGraph& g, std::ostream& out) {
    const auto& labels = g.labels();
    for (std::size_t t = 0; t < g.snapshot_count(); ++t) {
        for (auto [u, v] : g.snapshot(t).edges()) {
            out << labels.name(u) << ' ' << labels.name(v) << ' ' << t << '\n';
        }
    }
}

std::size_t induced_edge_count(const Snapshot& g, const VertexSet& s) {
    std::size_t twice = 0;
    s.for_each([&](VertexId v) { twice += induced_degree(g, s, v); });
    return twice / 2;
}

std::size_t induced_degree(const Snapshot& g, const VertexSet& s, VertexId v) {
    std::size_t d = 0;
    for (VertexId u : g.neighbors(v)) d += s.contains(u) ? 1 : 0;
    return d;
}

}  // namespace jwds
