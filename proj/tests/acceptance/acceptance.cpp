// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "commands.hpp"
#include "fixtures.hpp"
#include "jwds/evaluation.hpp"
#include "jwds/oracle.hpp"
#include "jwds/peel_state.hpp"
#include "jwds/scoring.hpp"
#include "jwds/solvers.hpp"
#include "jwds/synthgen.hpp"

using namespace jwds;
using namespace jwds::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// ---- 1 -----------------------------------------------------------------------

Outcome golden_toy() {
    std::istringstream in(kToyTriples);
    const TemporalGraph g = parse_triples(in, "toy").graph;
    const SubgraphSequence seq = toy_reference_sets(g);
    const ScoreBreakdown b = score(g, seq, 0.3);
    const double j12 = jaccard(seq[0], seq[1]), j13 = jaccard(seq[0], seq[2]), j23 = jaccard(seq[1], seq[2]);
    Outcome o;
    o.pass = close(b.total, 4.67, 1e-9) && close(b.density_sum, 4.1, 1e-9) && close(j12, 0.6, 1e-12) &&
             close(j13, 0.8, 1e-12) && close(j23, 0.5, 1e-12);
    char buf[160];
    std::snprintf(buf, sizeof buf, "score %.12g, density sum %.12g, jaccard {%g, %g, %g}", b.total, b.density_sum,
                  j12, j13, j23);
    o.detail = buf;
    return o;
}

// ---- 2 -----------------------------------------------------------------------

Outcome oracle_dominance() {
    std::vector<TemporalGraph> instances{toy_graph()};
    TestRng rng(2002);
    while (instances.size() < 21) {
        instances.push_back(random_temporal(rng, uniform_int(rng, 1, 6), uniform_int(rng, 1, 3), 0.2 + 0.6 * unit(rng)));
    }
    std::size_t checks = 0, violations = 0;
    for (const TemporalGraph& g : instances) {
        for (double lambda : {0.0, 0.3, 1.0, 10.0}) {
            const double opt = brute_force_jwds(g, lambda).best_score + 1e-9;
            const SolverReport it = solve(g, lambda);
            const SolverReport gr = grd(g, lambda);
            const double dcs = score(g, dcs_baseline(g), lambda).total;
            const double each = score(g, per_snapshot_baseline(g), lambda).total;
            for (double v : {it.breakdown.total, gr.breakdown.total, dcs, each}) violations += v > opt;
            violations += it.breakdown.total < it.init_breakdown.total;
            violations += gr.breakdown.total < gr.init_breakdown.total;
            checks += 6;
        }
    }
    return {violations == 0, std::to_string(instances.size()) + " instances, " + std::to_string(checks) +
                                 " comparisons, " + std::to_string(violations) + " violations"};
}

// ---- 3, 4 ----------------------------------------------------------------------

std::vector<Snapshot> density_corpus() {
    std::vector<Snapshot> out;
    TestRng rng(3003);
    const double ps[] = {0.2, 0.5, 0.8};
    for (int t = 0; t < 500; ++t) out.push_back(random_snapshot(rng, uniform_int(rng, 1, 12), ps[t % 3]));
    return out;
}

Outcome exact_equivalence(const std::vector<Snapshot>& corpus) {
    std::size_t mismatches = 0;
    for (const Snapshot& s : corpus) {
        const DensestResult d = brute_force_densest(s);
        mismatches += !(set_density(s, densest_subgraph_exact(s)) == Fraction{d.edges, d.size});
    }
    return {mismatches == 0, std::to_string(corpus.size()) + " graphs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome approximation_bound(const std::vector<Snapshot>& corpus) {
    std::size_t violations = 0;
    double worst = 1.0;
    for (const Snapshot& s : corpus) {
        const DensestResult d = brute_force_densest(s);
        const Fraction got = set_density(s, charikar_peel(s));
        violations += 2 * got.num * d.size < d.edges * got.den;
        if (d.edges > 0) worst = std::min(worst, got.value() / d.density);
    }
    return {violations == 0,
            std::to_string(violations) + " violations, worst ratio " + fmt("%.4f", worst)};
}

// ---- 5 -----------------------------------------------------------------------

Outcome incremental_state() {
    TestRng rng(5005);
    std::size_t removals = 0, gains = 0, violations = 0;
    std::string first;
    auto fail = [&](const std::string& what) {
        if (violations++ == 0) first = what;
    };
    for (int trajectory = 0; trajectory < 100; ++trajectory) {
        const std::size_t n = uniform_int(rng, 2, 40), k = uniform_int(rng, 1, 4);
        const TemporalGraph g = random_temporal(rng, n, k, 0.05 + 0.4 * unit(rng));
        const double lambda = 3.0 * unit(rng);
        PeelState state(g, random_sequence(rng, n, k, 0.3 + 0.7 * unit(rng)), lambda, PeelOptions{0});
        while (state.has_eligible()) {
            const double before = naive_score(g, state.sets(), lambda);
            for (std::size_t i = 0; i < k; ++i) {
                if (state.set_size(i) < 2) continue;
                const Candidate c = state.best_candidate_in_snapshot(i);
                SubgraphSequence next = state.sets();
                next.sets[i].erase(c.vertex);
                ++gains;
                if (!close(c.gain, naive_score(g, next, lambda) - before, 1e-9)) fail("gain mismatch");
            }
            Candidate pick = state.best_candidate_global();
            if (unit(rng) < 0.3) {
                // occasionally take a non-greedy step to reach other states
                std::vector<Candidate> options;
                for (std::size_t i = 0; i < k; ++i) {
                    if (state.set_size(i) >= 2) state.sets()[i].for_each([&](VertexId v) { options.push_back({i, v, 0}); });
                }
                pick = options[uniform_int(rng, 0, options.size() - 1)];
            }
            state.remove(pick.snapshot, pick.vertex);
            ++removals;

            const PeelState rebuilt(g, state.sets(), lambda, PeelOptions{0});
            if (!(state.counts() == rebuilt.counts())) fail("counters differ from rebuild");
            if (!(state.group_table() == rebuilt.group_table())) fail("groups differ from rebuild");
            for (std::size_t i = 0; i < k; ++i) {
                state.sets()[i].for_each([&](VertexId v) {
                    if (state.degree(i, v) != rebuilt.degree(i, v)) fail("degree differs from rebuild");
                });
            }
            if (auto msg = state.audit()) fail("audit: " + *msg);
        }
    }
    std::string detail = "100 trajectories, " + std::to_string(removals) + " removals, " + std::to_string(gains) +
                         " gains checked, " + std::to_string(violations) + " violations";
    if (violations > 0) detail += " (first: " + first + ")";
    return {violations == 0, detail};
}

// ---- 6, 7, 9 -------------------------------------------------------------------

SynthSpec trend_spec() {
    SynthSpec s;
    s.n_dense = 20;
    s.n_sparse = 80;
    s.k = 5;
    s.p_dense = 0.8;
    s.p_sparse = 0.03;
    s.p_cross = 0.01;
    s.seed = 20240601;
    return s;
}

std::vector<double> ranks(const std::vector<double>& xs) {
    std::vector<std::size_t> order(xs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> r(xs.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
        for (std::size_t t = i; t <= j; ++t) r[order[t]] = (static_cast<double>(i + j) / 2.0) + 1.0;
        i = j + 1;
    }
    return r;
}

// Pearson correlation of average ranks; 0 when either side is constant.
double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    const auto rx = ranks(x), ry = ranks(y);
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += rx[i] / n, my += ry[i] / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    return sxx == 0 || syy == 0 ? 0.0 : sxy / std::sqrt(sxx * syy);
}

struct SweepPoint {
    double lambda;
    SolverReport report;
    EvaluationReport evaluation;
};

const std::vector<SweepPoint>& sweep() {
    static const std::vector<SweepPoint> points = [] {
        const SynthDataset d = generate(trend_spec());
        std::vector<SweepPoint> out;
        for (double lambda : {0.3, 0.8, 1.3, 1.8, 2.3}) {
            SweepPoint p{lambda, solve(d.graph, lambda), {}};
            p.evaluation = evaluate(d.graph, p.report.solution, &d.truth, lambda);
            out.push_back(std::move(p));
        }
        return out;
    }();
    return points;
}

Outcome lambda_trend() {
    const auto& pts = sweep();
    std::vector<double> lambdas, scores, d_dis, rho;
    for (const auto& p : pts) {
        lambdas.push_back(p.lambda);
        scores.push_back(p.evaluation.score_total);
        d_dis.push_back(p.evaluation.d_dis);
        rho.push_back(*p.evaluation.rho);
    }
    std::size_t inversions = 0;
    bool small = true;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (scores[i] < scores[i - 1]) {
            ++inversions;
            small = small && (scores[i - 1] - scores[i]) <= 0.01 * scores[i - 1];
        }
    }
    const double s_d = spearman(d_dis, lambdas), s_rho = spearman(rho, lambdas);
    const bool a = inversions == 0 || (inversions == 1 && small);
    const bool b = s_d <= 0.0;
    const bool c = rho[0] >= 0.8 && s_rho <= 0.0;

    std::string detail = "score";
    for (double s : scores) detail += fmt(" %.4g", s);
    detail += "; d_dis";
    for (double s : d_dis) detail += fmt(" %.4g", s);
    detail += "; rho";
    for (double s : rho) detail += fmt(" %.3f", s);
    detail += "; spearman(d_dis) " + fmt("%.3f", s_d) + ", spearman(rho) " + fmt("%.3f", s_rho);
    detail += std::string(" [a ") + (a ? "ok" : "FAIL") + ", b " + (b ? "ok" : "FAIL") + ", c " + (c ? "ok" : "FAIL") + "]";
    return {a && b && c, detail};
}

Outcome recovery() {
    const SynthDataset d = generate(trend_spec());
    const SolverReport r = solve(d.graph, 0.5);
    const EvaluationReport e = evaluate(d.graph, r.solution, &d.truth, 0.5);
    return {*e.rho >= 0.9, "rho " + fmt("%.4f", *e.rho) + " at lambda 0.5"};
}

Outcome iteration_budget() {
    std::size_t worst = 0;
    for (const auto& p : sweep()) worst = std::max(worst, p.report.iterations);
    const SynthDataset d = generate(trend_spec());
    worst = std::max(worst, solve(d.graph, 0.5).iterations);
    std::string detail = "max ITR passes " + std::to_string(worst);
    if (worst > 10 && worst <= 100) detail += " (above 10, below the hard limit of 100)";
    return {worst <= 100, detail};
}

// ---- 8 -----------------------------------------------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

Outcome determinism() {
    const fs::path root = fs::temp_directory_path() / ("jwds_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    const SynthSpec s = trend_spec();
    std::vector<std::string> base{"jwds", "solve", "--nd", std::to_string(s.n_dense), "--ns",
                                  std::to_string(s.n_sparse), "--k", std::to_string(s.k), "--pd", "0.8", "--ps",
                                  "0.03", "--pc", "0.01", "--seed", std::to_string(s.seed), "--lambda",
                                  "0.3:2.3:0.5", "--algo", "both", "--jobs", "2", "--out"};
    std::ostringstream sink;
    std::size_t files = 0, differ = 0;
    for (const char* run : {"a", "b"}) {
        auto args = base;
        args.push_back((root / run).string());
        if (cli::run(args, sink, sink) != 0) {
            fs::remove_all(root);
            return {false, "solve exited with an error: " + sink.str()};
        }
    }
    for (const auto& entry : fs::directory_iterator(root / "a")) {
        const std::string name = entry.path().filename().string();
        if (name.size() < 5 || name.substr(name.size() - 5) != ".json" || name.find(".report.") != std::string::npos)
            continue;
        ++files;
        differ += slurp(root / "a" / name) != slurp(root / "b" / name);
    }
    fs::remove_all(root);
    return {files == 10 && differ == 0,
            std::to_string(files) + " solution files compared, " + std::to_string(differ) + " differ"};
}

// ---- 10 ----------------------------------------------------------------------

Outcome performance() {
    SynthSpec s;
    s.n_dense = 200;
    s.n_sparse = 1800;
    s.k = 8;
    s.p_dense = 0.5;
    s.p_sparse = 0.002;
    s.p_cross = 0.002;
    s.seed = 10;
    const SynthDataset d = generate(s);
    const auto start = std::chrono::steady_clock::now();
    const SolverReport r = grd(d.graph, 1.0);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::size_t n = d.graph.vertex_count();
    char buf[200];
    std::snprintf(buf, sizeof buf, "n=%zu k=%zu m=%zu, grd %.2f s, delta_max %zu", n, d.graph.snapshot_count(),
                  d.graph.total_edges(), secs, r.delta_max);
    return {secs < 600.0 && r.delta_max <= n, buf};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0 when the criterion states no runtime bound
        std::function<Outcome()> run;
    };
    const std::vector<Snapshot> corpus = density_corpus();
    const std::vector<Criterion> criteria{
        {1, "golden toy value", 1.0, golden_toy},
        {2, "oracle dominance on toy scale", 120.0, oracle_dominance},
        {3, "exact solver equivalence", 120.0, [&] { return exact_equivalence(corpus); }},
        {4, "half-approximation bound", 0.0, [&] { return approximation_bound(corpus); }},
        {5, "incremental state correctness", 300.0, incremental_state},
        {6, "lambda trend", 300.0, lambda_trend},
        {7, "ground-truth recovery", 60.0, recovery},
        {8, "determinism", 0.0, determinism},
        {9, "iteration budget", 0.0, iteration_budget},
        {10, "performance smoke", 600.0, performance},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            o.pass = false;
            o.detail += fmt("; over the %.0f s limit", c.limit_s);
        }
        failures += !o.pass;
        std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
