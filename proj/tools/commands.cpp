#include "commands.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include "jwds/error.hpp"
#include "jwds/evaluation.hpp"
#include "jwds/oracle.hpp"
#include "jwds/serialization.hpp"
#include "jwds/solvers.hpp"
#include "jwds/synthgen.hpp"
#include "jwds/temporal_graph.hpp"

namespace jwds::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SynthFlags {
    SynthSpec spec;
    std::optional<std::uint64_t> seed;
};

void add_synth_flags(CLI::App& cmd, SynthFlags& f) {
    cmd.add_option("--nd", f.spec.n_dense, "dense vertices")->check(CLI::PositiveNumber);
    cmd.add_option("--ns", f.spec.n_sparse, "sparse vertices")->check(CLI::PositiveNumber);
    cmd.add_option("--k", f.spec.k, "snapshots")->check(CLI::PositiveNumber);
    cmd.add_option("--pd", f.spec.p_dense, "dense edge probability")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--ps", f.spec.p_sparse, "sparse edge probability")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--pc", f.spec.p_cross, "cross edge probability")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--eta-lo", f.spec.eta_lo, "lower migration probability")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--eta-hi", f.spec.eta_hi, "upper migration probability")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--seed", f.seed, "generator seed");
}

SynthSpec checked_spec(const SynthFlags& f) {
    if (!f.seed) throw UsageError("--seed is required: synthetic datasets must be reproducible");
    SynthSpec spec = f.spec;
    spec.seed = *f.seed;
    spec.validate();
    return spec;
}

fs::path default_out_dir() {
    const char* env = std::getenv("JWDS_OUT_DIR");
    return env != nullptr && *env != '\0' ? fs::path(env) : fs::path(".");
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

std::ofstream open_out(const fs::path& path, std::ios::openmode mode = std::ios::trunc) {
    std::ofstream f(path, std::ios::out | mode);
    if (!f) throw IoError("cannot write " + path.string());
    return f;
}

json read_json(const fs::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot read " + path.string());
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

InputFormat parse_format(const std::string& s) {
    return s == "dir" ? InputFormat::per_snapshot_files : InputFormat::triples;
}

TemporalGraph load_graph(const fs::path& path, const std::string& format, std::ostream& err) {
    LoadResult r = load_temporal_edgelist(path, parse_format(format));
    if (r.stats.self_loops_dropped > 0 || r.stats.duplicates_collapsed > 0) {
        err << "note: " << r.stats.self_loops_dropped << " self-loops dropped, " << r.stats.duplicates_collapsed
            << " duplicate edges collapsed\n";
    }
    return std::move(r.graph);
}

GroundTruth load_truth(const TemporalGraph& g, const fs::path& path, std::ostream& err) {
    std::size_t dropped = 0;
    GroundTruth t = truth_from_json(g, read_json(path), &dropped);
    if (dropped > 0) err << "note: " << dropped << " ground-truth labels not in the graph were ignored\n";
    return t;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// ---- generate --------------------------------------------------------------

struct GenerateArgs {
    SynthFlags synth;
    std::string out_dir;
    std::string name = "synth";
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
    const SynthSpec spec = checked_spec(a.synth);
    const SynthDataset d = generate(spec);
    const fs::path dir = a.out_dir.empty() ? default_out_dir() : fs::path(a.out_dir);
    ensure_dir(dir);
    const fs::path triples = dir / (a.name + ".triples");
    const fs::path truth = dir / (a.name + ".truth.json");
    {
        auto f = open_out(triples);
        write_triples(d.graph, f);
    }
    {
        auto f = open_out(truth);
        f << truth_to_json(d.graph, d.truth, spec).dump(2) << '\n';
    }
    out << "generated " << triples.string() << ": n=" << d.graph.vertex_count() << " k=" << d.graph.snapshot_count()
        << " edges=" << d.graph.total_edges() << " expected=" << fmt(expected_edges(spec)) << '\n';
    return kExitOk;
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
    std::string input;
    std::string format = "triples";
    std::string truth;
    SynthFlags synth;
    std::string name;
    std::vector<std::string> lambdas;
    std::string algo = "itr";
    std::size_t max_outer = 100;
    std::size_t jobs = 1;
    std::string out_dir;
};

struct Cell {
    double lambda;
    std::string algo;
};

struct CellResult {
    SolverReport report;
    EvaluationReport evaluation;
};

CellResult run_cell(const TemporalGraph& g, const GroundTruth* truth, const Cell& cell, std::size_t max_outer) {
    CellResult r;
    ItrOptions opts;
    opts.max_outer = max_outer;
    if (cell.algo == "itr") {
        r.report = solve(g, cell.lambda, opts);
    } else if (cell.algo == "grd") {
        r.report = grd(g, cell.lambda);
    } else {
        const auto start = std::chrono::steady_clock::now();
        const bool dcs = cell.algo == "dcs";
        r.report.solution = dcs ? dcs_baseline(g) : per_snapshot_baseline(g);
        r.report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.report.breakdown = r.report.init_breakdown = score(g, r.report.solution, cell.lambda);
        r.report.init_used = dcs ? InitKind::dcs : InitKind::per_snapshot;
    }
    r.evaluation = evaluate(g, r.report.solution, truth, cell.lambda);
    return r;
}

std::vector<CellResult> run_cells(const TemporalGraph& g, const GroundTruth* truth, const std::vector<Cell>& cells,
                                  std::size_t max_outer, std::size_t jobs) {
    std::vector<std::optional<CellResult>> results(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                results[i] = run_cell(g, truth, cells[i], max_outer);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t n = std::max<std::size_t>(1, std::min(jobs, cells.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<CellResult> out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*results[i]));
    }
    return out;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    const bool synthetic = a.input.empty();
    std::optional<SynthDataset> data;
    std::optional<GroundTruth> truth;
    std::string dataset = a.name;
    if (synthetic) {
        data = generate(checked_spec(a.synth));
        truth = data->truth;
        if (dataset.empty()) dataset = "synth";
    } else {
        data = SynthDataset{load_graph(a.input, a.format, err), {}};
        if (!a.truth.empty()) truth = load_truth(data->graph, a.truth, err);
        if (dataset.empty()) dataset = fs::path(a.input).stem().string();
    }
    const TemporalGraph& g = data->graph;
    const GroundTruth* truth_ptr = truth ? &*truth : nullptr;
    if (truth_ptr != nullptr && truth_ptr->dense_sets.size() != g.snapshot_count()) {
        throw SchemaError("ground truth has " + std::to_string(truth_ptr->dense_sets.size()) +
                          " sets but the dataset has " + std::to_string(g.snapshot_count()) + " snapshots");
    }

    const std::vector<double> lambdas = parse_lambdas(a.lambdas.empty() ? std::vector<std::string>{"1"} : a.lambdas);
    std::vector<std::string> algos = a.algo == "both" ? std::vector<std::string>{"itr", "grd"}
                                                      : std::vector<std::string>{a.algo};
    std::vector<Cell> cells;
    for (double lambda : lambdas)
        for (const auto& algo : algos) cells.push_back({lambda, algo});

    const std::vector<CellResult> results = run_cells(g, truth_ptr, cells, a.max_outer, a.jobs);

    const fs::path dir = a.out_dir.empty() ? default_out_dir() : fs::path(a.out_dir);
    ensure_dir(dir);
    const fs::path csv = dir / "results.csv";
    const bool fresh = !fs::exists(csv) || fs::file_size(csv) == 0;
    auto table = open_out(csv, std::ios::app);
    if (fresh) table << csv_header() << '\n';

    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        const CellResult& r = results[i];
        const std::string stem = dataset + "_lambda" + fmt(c.lambda) + "_" + c.algo;
        {
            auto f = open_out(dir / (stem + ".json"));
            f << solution_to_json(g, {c.lambda, c.algo, r.report.solution}).dump(2) << '\n';
        }
        {
            auto f = open_out(dir / (stem + ".report.json"));
            f << json{{"schema", kSchemaVersion}, {"solver", solver_stats_to_json(r.report)},
                      {"evaluation", to_json(r.evaluation)}}
                         .dump(2)
              << '\n';
        }
        ResultRow row;
        row.dataset = dataset;
        row.lambda = c.lambda;
        row.algo = c.algo;
        row.evaluation = r.evaluation;
        row.iterations = r.report.iterations;
        row.delta_max = r.report.delta_max;
        row.time_s = r.report.wall_time;
        row.removals = r.report.removals;
        const std::string line = csv_row(row);
        table << line << '\n';
        out << line << '\n';
    }
    if (!table) throw IoError("failed writing " + csv.string());
    return kExitOk;
}

// ---- evaluate --------------------------------------------------------------

struct EvaluateArgs {
    std::string solution;
    std::string input;
    std::string format = "triples";
    std::string truth;
    std::optional<double> lambda;
};

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out, std::ostream& err) {
    const TemporalGraph g = load_graph(a.input, a.format, err);
    const Solution s = solution_from_json(g, read_json(a.solution));
    std::optional<GroundTruth> truth;
    if (!a.truth.empty()) {
        truth = load_truth(g, a.truth, err);
        if (truth->dense_sets.size() != g.snapshot_count()) {
            throw SchemaError("ground truth has " + std::to_string(truth->dense_sets.size()) +
                              " sets but the dataset has " + std::to_string(g.snapshot_count()) + " snapshots");
        }
    }
    const double lambda = a.lambda.value_or(s.lambda);
    if (lambda < 0.0) throw UsageError("lambda must be non-negative");
    out << to_json(evaluate(g, s.seq, truth ? &*truth : nullptr, lambda)).dump(2) << '\n';
    return kExitOk;
}

// ---- oracle ----------------------------------------------------------------

struct OracleArgs {
    std::string input;
    std::string format = "triples";
    double lambda = 1.0;
    std::uint64_t limit = 10'000'000;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
    const TemporalGraph g = load_graph(a.input, a.format, err);
    const OracleResult r = brute_force_jwds(g, a.lambda, a.limit);
    out << json{{"schema", kSchemaVersion},
                {"lambda", a.lambda},
                {"best_score", r.best_score},
                {"states_examined", r.states_examined},
                {"sets", sets_to_json(g, r.best_seq)}}
               .dump(2)
        << '\n';
    return kExitOk;
}

}  // namespace

std::vector<double> parse_lambdas(const std::vector<std::string>& items) {
    auto number = [](const std::string& s) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || !std::isfinite(x)) throw UsageError("bad lambda value \"" + s + "\"");
        if (x < 0.0) throw UsageError("lambda must be non-negative, got " + s);
        return x;
    };
    std::vector<double> out;
    for (const std::string& item : items) {
        const auto c1 = item.find(':');
        if (c1 == std::string::npos) {
            out.push_back(number(item));
            continue;
        }
        const auto c2 = item.find(':', c1 + 1);
        if (c2 == std::string::npos) throw UsageError("sweep must be start:stop:step, got \"" + item + "\"");
        const double lo = number(item.substr(0, c1));
        const double hi = number(item.substr(c1 + 1, c2 - c1 - 1));
        const double step = number(item.substr(c2 + 1));
        if (step <= 0.0 || hi < lo) throw UsageError("empty sweep \"" + item + "\"");
        const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i) {
            // round away accumulated binary noise so 0.3 + 0.5 prints as 0.8
            out.push_back(std::stod(fmt(lo + static_cast<double>(i) * step)));
        }
    }
    if (out.empty()) throw UsageError("no lambda values given");
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jaccard-weighted densest subgraphs in temporal graphs"};
    app.name(args.empty() ? "jwds" : fs::path(args[0]).filename().string());
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate_cmd = app.add_subcommand("generate", "draw a planted dense-block dataset");
    add_synth_flags(*generate_cmd, gen.synth);
    generate_cmd->add_option("--out", gen.out_dir, "output directory (default $JWDS_OUT_DIR or .)");
    generate_cmd->add_option("--name", gen.name, "file name stem");

    SolveArgs sol;
    auto* solve_cmd = app.add_subcommand("solve", "run solvers over a lambda grid");
    solve_cmd->add_option("--input", sol.input, "temporal edge list");
    solve_cmd->add_option("--format", sol.format, "input format")->check(CLI::IsMember({"triples", "dir"}));
    solve_cmd->add_option("--truth", sol.truth, "ground-truth JSON");
    add_synth_flags(*solve_cmd, sol.synth);
    solve_cmd->add_option("--name", sol.name, "dataset name in outputs");
    solve_cmd->add_option("--lambda", sol.lambdas, "values or start:stop:step sweeps")->delimiter(',');
    solve_cmd->add_option("--algo", sol.algo, "algorithm")
        ->check(CLI::IsMember({"itr", "grd", "both", "dcs", "per-snapshot"}));
    solve_cmd->add_option("--max-outer", sol.max_outer, "ITR pass limit")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--jobs", sol.jobs, "parallel cells")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--out", sol.out_dir, "output directory (default $JWDS_OUT_DIR or .)");

    EvaluateArgs ev;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "score a solution file");
    evaluate_cmd->add_option("--solution", ev.solution, "solution JSON")->required();
    evaluate_cmd->add_option("--input", ev.input, "temporal edge list")->required();
    evaluate_cmd->add_option("--format", ev.format, "input format")->check(CLI::IsMember({"triples", "dir"}));
    evaluate_cmd->add_option("--truth", ev.truth, "ground-truth JSON");
    evaluate_cmd->add_option("--lambda", ev.lambda, "override the solution's lambda");

    OracleArgs orc;
    auto* oracle_cmd = app.add_subcommand("oracle", "");
    oracle_cmd->group("");
    oracle_cmd->add_option("--input", orc.input, "temporal edge list")->required();
    oracle_cmd->add_option("--format", orc.format, "input format")->check(CLI::IsMember({"triples", "dir"}));
    oracle_cmd->add_option("--lambda", orc.lambda, "lambda")->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("--limit", orc.limit, "state budget");

    // CLI11 consumes arguments from the back
    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back();
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*generate_cmd) return cmd_generate(gen, out);
        if (*solve_cmd) return cmd_solve(sol, out, err);
        if (*evaluate_cmd) return cmd_evaluate(ev, out, err);
        if (*oracle_cmd) return cmd_oracle(orc, out, err);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const LoadError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace jwds::cli
