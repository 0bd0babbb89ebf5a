// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "linlay/assign.hpp"
#include "linlay/exact.hpp"
#include "linlay/gadgets.hpp"
#include "linlay/gen.hpp"
#include "linlay/lab.hpp"
#include "linlay/order.hpp"
#include "linlay/rng.hpp"
#include "oracles.hpp"

using namespace linlay;

namespace {

// Pinned tolerances.
constexpr int kOracleInstances = 1000;
constexpr std::size_t kOracleMaxN = 50;
constexpr double kRatioLow = 0.5;
constexpr double kRatioHigh = 0.85;
constexpr std::size_t kRatioInstances = 10;
constexpr double kMinWinPercent = 45.0;
constexpr double kCpeSlack = 1.02;
constexpr std::size_t kWinInstances = 100;
constexpr std::size_t kGeneratorSeeds = 100;
constexpr int kRoundTripInstances = 50;
constexpr double kMaxSeconds = 2.5;
constexpr double kMaxDoublingRatio = 5.0;
constexpr int kTimingRuns = 10;

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

Outcome validator_oracle() {
    Rng rng(1);
    int mismatches = 0;
    for (int trial = 0; trial < kOracleInstances; ++trial) {
        const std::size_t n = 2 + rng.below(kOracleMaxN - 1);
        // A random edge set of up to 4n edges, then a random subset of it.
        const std::size_t m = rng.below(std::min(n * (n - 1) / 2, 4 * n) + 1);
        std::set<std::pair<Vertex, Vertex>> chosen;
        while (chosen.size() < m) {
            const auto a = static_cast<Vertex>(rng.below(n)), b = static_cast<Vertex>(rng.below(n));
            if (a != b) chosen.insert(std::minmax(a, b));
        }
        std::vector<Edge> subset;
        const std::uint64_t keep_percent = 10 + rng.below(91);
        for (auto [a, b] : chosen) {
            if (rng.below(100) < keep_percent) subset.push_back({a, b});
        }
        std::vector<Vertex> seq = VertexOrder::identity(n).sequence();
        rng.shuffle(std::span(seq));
        const VertexOrder order = VertexOrder::from_sequence(seq);
        const auto rank = oracle::ranks_of(seq);
        mismatches += validate_stack_page(subset, order) != (oracle::crossings(subset, rank) == 0);
        mismatches += validate_queue_page(subset, order) != (oracle::nestings(subset, rank) == 0);
    }
    return {mismatches == 0, std::to_string(kOracleInstances) + " instances, " + std::to_string(mismatches) +
                                 " mismatches"};
}

Outcome k8_observation() {
    const ObservationReport r = verify_k8_observations();
    std::string detail = std::to_string(r.orders_examined) + " orders, " + std::to_string(r.orders_with_layout) +
                         " with a layout, " + std::to_string(r.layouts_inspected) + " layouts inspected";
    if (!r.violation.empty()) detail += ", " + r.violation;
    return {r.passed() && r.orders_with_layout > 0, detail};
}

Outcome k8_existence() {
    const Graph k8 = complete(8);
    const Decision d = decide_layout(k8, {2, 1});
    const bool ok = d.verdict == Verdict::yes && d.certificate && is_valid_layout(k8, *d.certificate) &&
                    oracle::conflicts(k8, *d.certificate) == 0;
    return {ok, "verdict " + std::string(to_string(d.verdict)) + ", " + std::to_string(d.nodes) + " nodes"};
}

Outcome small_completeness() {
    std::size_t graphs = 0, disagreements = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const Graph& g : oracle::connected_graphs_up_to_iso(n)) {
            ++graphs;
            for (PageSpec spec : {PageSpec{1, 0}, PageSpec{0, 1}, PageSpec{1, 1}, PageSpec{2, 0}}) {
                const Decision d = decide_layout(g, spec);
                const bool cert_ok = !d.certificate || oracle::conflicts(g, *d.certificate) == 0;
                disagreements += (d.verdict == Verdict::yes) != oracle::layout_exists(g, spec) || !cert_ok;
            }
        }
    }
    return {disagreements == 0, std::to_string(graphs) + " graphs x 4 specs, " + std::to_string(disagreements) +
                                    " disagreements"};
}

double mean_cpe(const CellSummary& cell, AssignHeuristic h) {
    for (const HeuristicSummary& s : cell.heuristics) {
        if (s.assign == h) return s.mean_conflicts_per_edge;
    }
    return 0;
}

double win_percent(const CellSummary& cell, AssignHeuristic h) {
    for (const HeuristicSummary& s : cell.heuristics) {
        if (s.assign == h) return s.win_percent;
    }
    return 0;
}

Outcome complete_ratio() {
    ExperimentConfig cfg;
    cfg.graph_class = GraphClass::complete;
    cfg.sizes = {10, 20, 30, 40, 50};
    cfg.instances = kRatioInstances;
    cfg.base_seed = 5;
    const ExperimentResult r = run_experiment(cfg);
    double elen = 0, cf = 0;
    int cells = 0;
    for (const CellSummary& cell : r.summary) {
        if (cell.n < 20) continue;
        const double sq = mean_cpe(cell, AssignHeuristic::stack_queue);
        elen += sq / mean_cpe(cell, AssignHeuristic::elen);
        cf += sq / mean_cpe(cell, AssignHeuristic::ceil_floor);
        ++cells;
    }
    elen /= cells;
    cf /= cells;
    const bool ok = elen >= kRatioLow && elen <= kRatioHigh && cf >= kRatioLow && cf <= kRatioHigh;
    return {ok, fmt("stack-queue/eLen %.3f, stack-queue/ceilFloor %.3f", elen, cf) +
                    fmt(", band [%.2f, %.2f] over n >= 20", kRatioLow, kRatioHigh)};
}

Outcome winner_direction() {
    std::string detail;
    bool ok = true;
    for (GraphClass c : {GraphClass::gnm3, GraphClass::gnm6}) {
        ExperimentConfig cfg;
        cfg.graph_class = c;
        cfg.sizes = {25, 50, 100};
        cfg.instances = kWinInstances;
        cfg.base_seed = 6;
        cfg.order = OrderHeuristic::con_greedy;
        for (const CellSummary& cell : run_experiment(cfg).summary) {
            const double win = win_percent(cell, AssignHeuristic::stack_queue);
            const double sq = mean_cpe(cell, AssignHeuristic::stack_queue);
            const double cf = mean_cpe(cell, AssignHeuristic::ceil_floor);
            const bool cell_ok = win >= kMinWinPercent && sq <= cf * kCpeSlack;
            ok = ok && cell_ok;
            if (!detail.empty()) detail += "; ";
            detail += std::string(to_string(c)) + " n=" + std::to_string(cell.n) +
                      fmt(" win %.0f%% cpe %.3f vs %.3f", win, sq, cf);
        }
    }
    return {ok, detail};
}

Outcome generator_invariants() {
    std::size_t failures = 0;
    for (Seed s = 0; s < kGeneratorSeeds; ++s) {
        const std::size_t n_even = 4 + 2 * (s % 24);
        const BipartiteInstance b = max_planar_bipartite(n_even, s);
        failures += b.graph.m() != 2 * n_even - 4 || !oracle::two_colourable(b.graph) ||
                    b.witness.spec != PageSpec{2, 0} || oracle::conflicts(b.graph, b.witness) != 0;

        const std::size_t n2 = 3 + s % 60;
        failures += k_tree(n2, 2, s).graph.m() != 2 * n2 - 3;

        const std::size_t n3 = 4 + s % 60;
        const KTreeInstance t3 = k_tree(n3, 3, s);
        failures += t3.graph.m() != 3 * n3 - 6 || !oracle::stacked_triangulation(t3);

        const std::size_t nd = 3 + s % 48;
        const Triangulation d = delaunay_triangulation(nd, s);
        bool delaunay_ok = d.graph.m() <= (nd == 3 ? 3 : 3 * nd - 6);
        for (const auto& tri : d.triangles) {
            const GridPoint &p = d.points[tri[0]], &q = d.points[tri[1]], &r = d.points[tri[2]];
            delaunay_ok = delaunay_ok && oracle::orient_det(p, q, r) > 0;
            for (Vertex v = 0; v < nd; ++v) {
                if (v != tri[0] && v != tri[1] && v != tri[2])
                    delaunay_ok = delaunay_ok && oracle::incircle_det(p, q, r, d.points[v]) <= 0;
            }
        }
        failures += !delaunay_ok;
    }
    return {failures == 0, std::to_string(kGeneratorSeeds) + " seeds per class, " + std::to_string(failures) +
                               " failures"};
}

Outcome augmentation_round_trip() {
    Rng rng(8);
    std::size_t checks = 0, mismatches = 0, yes = 0;
    auto decides = [](const Graph& g, const VertexOrder& o, PageSpec spec) {
        return decide_assignment(g, o, spec).verdict == Verdict::yes;
    };
    for (int trial = 0; trial < kRoundTripInstances; ++trial) {
        const std::size_t n = 2 + rng.below(4);
        const std::size_t max_m = n * (n - 1) / 2;
        const Graph g = random_gnm_connected(n, n - 1 + rng.below(max_m - (n - 1) + 1), rng.next_u64());
        std::vector<Vertex> seq = VertexOrder::identity(n).sequence();
        rng.shuffle(std::span(seq));
        const VertexOrder order = VertexOrder::from_sequence(seq);
        for (PageSpec spec : {PageSpec{1, 0}, PageSpec{1, 1}}) {
            const bool base = decides(g, order, spec);
            yes += base;
            const Augmented q = augment_queue_page(g, order, spec);
            const Augmented s = augment_stack_page(g, order, spec);
            mismatches += decides(q.graph, q.order, {spec.stacks, spec.queues + 1}) != base;
            mismatches += decides(s.graph, s.order, {spec.stacks + 1, spec.queues}) != base;
            checks += 2;
        }
    }
    return {mismatches == 0, std::to_string(checks) + " checks (" + std::to_string(yes) + " of " +
                                 std::to_string(checks / 2) + " base instances yes), " + std::to_string(mismatches) +
                                 " mismatches"};
}

Outcome scaling() {
    struct Timed {
        std::string name;
        std::function<void(const Graph&, const VertexOrder&)> run;
    };
    const std::vector<Timed> heuristics{
        {"random", [](const Graph& g, const VertexOrder&) { random_order(g, 1); }},
        {"rbfs", [](const Graph& g, const VertexOrder&) { rbfs(g, 1); }},
        {"avsdf", [](const Graph& g, const VertexOrder&) { avsdf(g, 1); }},
        {"congreedy", [](const Graph& g, const VertexOrder&) { con_greedy(g, 1); }},
        {"stack-queue", [](const Graph& g, const VertexOrder& o) { stack_queue(g, o, {1, 1}); }},
        {"elen", [](const Graph& g, const VertexOrder& o) { e_len(g, o, {1, 1}); }},
        {"ceilfloor", [](const Graph& g, const VertexOrder& o) { ceil_floor(g, o, {1, 1}); }},
    };
    // Mean time over kTimingRuns instances of m = 6n with n vertices.
    auto mean_time = [&](const Timed& h, std::size_t n, double* worst) {
        double total = 0;
        for (int run = 0; run < kTimingRuns; ++run) {
            const Graph g = random_gnm_connected(n, 6 * n, static_cast<Seed>(run));
            const VertexOrder order = random_order(g, static_cast<Seed>(run));
            const auto start = Clock::now();
            h.run(g, order);
            const double t = seconds_since(start);
            total += t;
            if (worst) *worst = std::max(*worst, t);
        }
        return total / kTimingRuns;
    };
    bool ok = true;
    std::string detail;
    for (const Timed& h : heuristics) {
        double worst = 0;
        const double small = mean_time(h, 200, nullptr);
        const double big = mean_time(h, 400, &worst);
        // Sub-millisecond runs are dominated by noise; their ratio is not meaningful.
        const double ratio = big < 1e-3 ? 0 : big / small;
        ok = ok && worst <= kMaxSeconds && ratio <= kMaxDoublingRatio;
        if (!detail.empty()) detail += "; ";
        detail += h.name + fmt(" max %.3fs ratio %.2f", worst, ratio);
    }
    return {ok, "n=400 m=6n, " + detail};
}

Outcome determinism() {
    auto campaign = [] {
        std::ostringstream out;
        for (GraphClass c : {GraphClass::complete, GraphClass::gnm3, GraphClass::gnm6, GraphClass::delaunay,
                             GraphClass::bipartite, GraphClass::tree2, GraphClass::tree3}) {
            ExperimentConfig cfg;
            cfg.graph_class = c;
            cfg.sizes = {20, 40, 60};
            cfg.instances = 10;
            cfg.base_seed = 10;
            write_csv(out, run_experiment(cfg).records);
        }
        return out.str();
    };
    const std::string first = campaign();
    const std::string second = campaign();
    return {first == second, std::to_string(first.size()) + " bytes per campaign"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "validator/oracle equivalence", validator_oracle},
        {2, "K8 layout clauses over all orders", k8_observation},
        {3, "K8 has a 2-stack 1-queue layout", k8_existence},
        {4, "exact solver complete for n <= 5", small_completeness},
        {5, "complete-graph conflict ratio", complete_ratio},
        {6, "stack-queue winner statistics", winner_direction},
        {7, "generator invariants", generator_invariants},
        {8, "page augmentation round trip", augmentation_round_trip},
        {9, "heuristic runtime and scaling", scaling},
        {10, "bench determinism", determinism},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        failed += !o.pass;
        std::printf("%s %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
