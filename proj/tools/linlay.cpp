// Command line front end for the linlay library.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linlay/assign.hpp"
#include "linlay/core.hpp"
#include "linlay/exact.hpp"
#include "linlay/gadgets.hpp"
#include "linlay/gen.hpp"
#include "linlay/io.hpp"
#include "linlay/lab.hpp"
#include "linlay/order.hpp"
#include "linlay/svg.hpp"

namespace {

using namespace linlay;

// "-" or empty means standard input/output.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    bool is_stdout() const { return !file_; }
    void close() {
        if (file_ && !file_->flush()) throw std::runtime_error("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

template <typename F>
auto with_input(const std::string& path, F&& read) {
    if (path.empty() || path == "-") return read(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read(in);
}

Graph load_graph(const std::string& path) {
    return with_input(path, [](std::istream& in) { return read_edge_list(in); });
}

VertexOrder load_order(const std::string& path, std::size_t n) {
    if (path.empty()) return VertexOrder::identity(n);
    return with_input(path, [n](std::istream& in) { return read_order(in, n); });
}

MixedLayout load_layout(const std::string& path, const Graph& g) {
    return with_input(path, [&g](std::istream& in) { return read_layout(in, g); });
}

void save_layout(const std::string& path, const Graph& g, const MixedLayout& layout) {
    Output out(path);
    write_layout(out.stream(), g, layout);
    out.close();
}

std::string conflict_summary(const ConflictReport& r) {
    std::ostringstream s;
    s << "conflicts total=" << r.total << " per_edge=" << r.per_edge << " crossings=";
    for (std::size_t i = 0; i < r.crossings_per_stack.size(); ++i) s << (i ? "," : "") << r.crossings_per_stack[i];
    s << " nestings=";
    for (std::size_t i = 0; i < r.nestings_per_queue.size(); ++i) s << (i ? "," : "") << r.nestings_per_queue[i];
    return s.str();
}

SearchBudget budget_from(std::uint64_t nodes, double seconds) {
    SearchBudget b;
    if (nodes > 0) b.max_nodes = nodes;
    if (seconds > 0) b.max_seconds = seconds;
    return b;
}

void print_report(const char* name, const ObservationReport& r, double seconds) {
    std::cout << name << ": " << (r.passed() ? "passed" : r.status == Verdict::no ? "FAILED" : "inconclusive")
              << '\n';
    if (!r.violation.empty()) std::cout << "  " << r.violation << '\n';
    std::cout << "result status=" << to_string(r.status) << " orders=" << r.orders_examined
              << " orders_with_layout=" << r.orders_with_layout << " layouts=" << r.layouts_inspected
              << " nodes=" << r.nodes << " seconds=" << seconds << '\n';
}

void write_labels(std::ostream& out, const GadgetLabels& labels) {
    out << "# shared " << labels.shared.first << ' ' << labels.shared.second << '\n';
    out << "# outer " << labels.outer.first << ' ' << labels.outer.second << '\n';
    if (labels.anchor) out << "# anchor " << *labels.anchor << '\n';
    if (labels.connectors) {
        const Connectors& c = *labels.connectors;
        out << "# connectors x1=" << c.x1 << " x2=" << c.x2 << " y1=" << c.y1 << " y2=" << c.y2 << " w1=" << c.w1
            << " w2=" << c.w2 << '\n';
    }
    for (const auto& clique : labels.cliques) {
        out << "# clique";
        for (Vertex v : clique) out << ' ' << v;
        out << '\n';
    }
}

void write_order_comment(std::ostream& out, const VertexOrder& order) {
    out << "# order";
    for (Vertex v : order.sequence()) out << ' ' << v;
    out << '\n';
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <typename T>
T require(std::optional<T> value, const std::string& what, const std::string& name) {
    if (!value) throw CLI::ValidationError(what, "unknown value '" + name + "'");
    return *value;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mixed stack/queue linear layouts: heuristics, exact search, gadgets, experiments"};
    app.require_subcommand(1);
    app.set_config("--config", "", "INI/TOML file with option values");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
    std::string gen_class, gen_out, gen_witness;
    std::size_t gen_n = 0, gen_m = 0;
    int gen_k = 0;
    Seed gen_seed = 0;
    gen->add_option("class", gen_class,
                    "complete|gnm|gnm3|gnm6|delaunay|bipartite|ktree|tree2|tree3")
        ->required();
    gen->add_option("--n", gen_n, "Number of vertices")->required();
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("-m,--edges", gen_m, "Edge count for gnm");
    gen->add_option("--k", gen_k, "Clique size for ktree (2 or 3)");
    gen->add_option("-o,--out", gen_out, "Output file (default: stdout)");
    gen->add_option("--witness", gen_witness, "bipartite: also write the 2-stack witness layout here");

    // order
    auto* ord = app.add_subcommand("order", "Compute a vertex order");
    std::string ord_name, ord_graph, ord_out;
    Seed ord_seed = 0;
    ord->add_option("heuristic", ord_name, "random|rbfs|avsdf|congreedy")->required();
    ord->add_option("-g,--graph", ord_graph, "Edge list (default: stdin)");
    ord->add_option("--seed", ord_seed, "Random seed");
    ord->add_option("-o,--out", ord_out, "Output file (default: stdout)");

    // assign
    auto* asg = app.add_subcommand("assign", "Assign edges to pages on a fixed order");
    std::string asg_name, asg_graph, asg_order, asg_out;
    PageSpec asg_spec;
    asg->add_option("heuristic", asg_name, "stack-queue|elen|ceilfloor")->required();
    asg->add_option("-g,--graph", asg_graph, "Edge list (default: stdin)");
    asg->add_option("--order", asg_order, "Order file (default: identity)");
    asg->add_option("--stacks", asg_spec.stacks, "Stack pages")->capture_default_str();
    asg->add_option("--queues", asg_spec.queues, "Queue pages")->capture_default_str();
    asg->add_option("-o,--out", asg_out, "Layout output (default: stdout)");

    // exact
    auto* exact = app.add_subcommand("exact", "Exact search on small instances");
    exact->require_subcommand(1);
    std::uint64_t budget_nodes = 0;
    double budget_seconds = 0;
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-nodes", budget_nodes, "Node limit (0 = none)");
        sub->add_option("--budget-seconds", budget_seconds, "Time limit in seconds (0 = none)");
    };
    std::string ex_graph, ex_order, ex_out;
    PageSpec ex_spec;
    auto* decide = exact->add_subcommand("decide", "Is there a conflict-free layout?");
    decide->add_option("-g,--graph", ex_graph, "Edge list (default: stdin)");
    decide->add_option("--order", ex_order, "Fix this order (default: search all orders)");
    decide->add_option("--stacks", ex_spec.stacks)->capture_default_str();
    decide->add_option("--queues", ex_spec.queues)->capture_default_str();
    decide->add_option("-o,--out", ex_out, "Write the certificate layout here");
    add_budget(decide);

    auto* enumerate = exact->add_subcommand("enumerate", "List conflict-free layouts on a fixed order");
    std::uint64_t enum_limit = 0;
    bool enum_all_labels = false, enum_count_only = false;
    enumerate->add_option("-g,--graph", ex_graph, "Edge list (default: stdin)");
    enumerate->add_option("--order", ex_order, "Order file (default: identity)");
    enumerate->add_option("--stacks", ex_spec.stacks)->capture_default_str();
    enumerate->add_option("--queues", ex_spec.queues)->capture_default_str();
    enumerate->add_option("--limit", enum_limit, "Stop after this many layouts (0 = all)");
    enumerate->add_flag("--all-labelings", enum_all_labels, "Do not identify layouts that differ by page relabeling");
    enumerate->add_flag("--count", enum_count_only, "Only print the count");
    add_budget(enumerate);

    auto* vk8 = exact->add_subcommand("verify-k8", "Check the K8 layout clauses over all orders");
    add_budget(vk8);
    auto* vdk8 = exact->add_subcommand("verify-double-k8", "Check double-K8 rigidity over all orders");
    add_budget(vdk8);

    // gadget
    auto* gadget = app.add_subcommand("gadget", "Build hardness gadgets");
    std::string gd_kind, gd_graph, gd_order, gd_layout, gd_out, gd_layout_out;
    PageSpec gd_spec;
    gadget->add_option("kind", gd_kind, "double-k8|positioning|reduce|augment-queue|augment-stack")->required();
    gadget->add_option("-g,--graph", gd_graph, "Input graph for reduce/augment-* (default: stdin)");
    gadget->add_option("--order", gd_order, "Input order for augment-* (default: identity)");
    gadget->add_option("--stacks", gd_spec.stacks, "Spec of the input for augment-*")->capture_default_str();
    gadget->add_option("--queues", gd_spec.queues, "Spec of the input for augment-*")->capture_default_str();
    gadget->add_option("--two-stack", gd_layout, "reduce: 2-stack layout of the input, turned into a witness");
    gadget->add_option("-o,--out", gd_out, "Edge list output (default: stdout)");
    gadget->add_option("--layout-out", gd_layout_out, "Write the witness layout here");

    // bench
    auto* bench = app.add_subcommand("bench", "Run a benchmark campaign and write CSV");
    std::string bn_class = "gnm3", bn_sizes, bn_order = "auto", bn_assign = "stack-queue,elen,ceilfloor", bn_out;
    ExperimentConfig cfg;
    bool bn_quiet = false;
    bench->add_option("--class", bn_class, "complete|gnm3|gnm6|delaunay|bipartite|tree2|tree3")->capture_default_str();
    bench->add_option("--sizes", bn_sizes, "Comma separated vertex counts")->required();
    bench->add_option("--instances", cfg.instances, "Instances per size")->capture_default_str();
    bench->add_option("--seed", cfg.base_seed, "Base seed")->capture_default_str();
    bench->add_option("--order", bn_order, "auto|random|rbfs|avsdf|congreedy")->capture_default_str();
    bench->add_option("--assign", bn_assign, "Comma separated assignment heuristics")->capture_default_str();
    bench->add_option("--stacks", cfg.spec.stacks)->capture_default_str();
    bench->add_option("--queues", cfg.spec.queues)->capture_default_str();
    bench->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    bench->add_flag("--timing", cfg.measure_time, "Record wall time per run (single-threaded)");
    bench->add_option("-o,--out", bn_out, "CSV output (default: stdout)");
    bench->add_flag("-q,--quiet", bn_quiet, "Do not print the summary table");

    // render
    auto* render = app.add_subcommand("render", "Draw a layout as an SVG arc diagram");
    std::string rd_graph, rd_layout, rd_out;
    bool rd_highlight = false;
    render->add_option("-g,--graph", rd_graph, "Edge list")->required();
    render->add_option("-l,--layout", rd_layout, "Layout file")->required();
    render->add_option("-o,--out", rd_out, "SVG output (default: stdout)");
    render->add_flag("--highlight", rd_highlight, "Mark conflicting edges");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Graph g;
            std::optional<MixedLayout> witness;
            if (gen_class == "complete") {
                g = complete(gen_n);
            } else if (gen_class == "gnm") {
                if (gen->count("--edges") == 0) throw CLI::ValidationError("-m", "gnm needs -m");
                g = random_gnm_connected(gen_n, gen_m, gen_seed);
            } else if (gen_class == "delaunay") {
                g = delaunay(gen_n, gen_seed);
            } else if (gen_class == "bipartite") {
                BipartiteInstance b = max_planar_bipartite(gen_n, gen_seed);
                g = std::move(b.graph);
                witness = std::move(b.witness);
            } else if (gen_class == "ktree") {
                g = k_tree(gen_n, gen_k, gen_seed).graph;
            } else {
                g = generate(require(parse_graph_class(gen_class), "class", gen_class), gen_n, gen_seed);
            }
            Output out(gen_out);
            write_edge_list(out.stream(), g);
            out.close();
            if (!gen_witness.empty()) {
                if (!witness) throw CLI::ValidationError("--witness", "only the bipartite generator has a witness");
                save_layout(gen_witness, g, *witness);
            }
        } else if (*ord) {
            const OrderHeuristic h = require(parse_order_heuristic(ord_name), "heuristic", ord_name);
            const Graph g = load_graph(ord_graph);
            Output out(ord_out);
            write_order(out.stream(), compute_order(h, g, ord_seed));
            out.close();
        } else if (*asg) {
            const AssignHeuristic h = require(parse_assign_heuristic(asg_name), "heuristic", asg_name);
            const Graph g = load_graph(asg_graph);
            const VertexOrder order = load_order(asg_order, g.n());
            const MixedLayout layout = run_assignment(h, g, order, asg_spec);
            Output out(asg_out);
            write_layout(out.stream(), g, layout);
            out.close();
            (out.is_stdout() ? std::cerr : std::cout) << conflict_summary(count_conflicts(g, layout)) << '\n';
        } else if (*exact) {
            const SearchBudget budget = budget_from(budget_nodes, budget_seconds);
            const auto start = std::chrono::steady_clock::now();
            auto elapsed = [&] {
                return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            };
            if (*decide) {
                const Graph g = load_graph(ex_graph);
                const Decision d = ex_order.empty() ? decide_layout(g, ex_spec, budget)
                                                    : decide_assignment(g, load_order(ex_order, g.n()), ex_spec, budget);
                std::cout << "(" << ex_spec.stacks << ", " << ex_spec.queues << ") layout "
                          << (ex_order.empty() ? "for some order" : "for the given order") << ": "
                          << to_string(d.verdict) << '\n';
                if (d.certificate && ex_out.empty()) write_layout(std::cout, g, *d.certificate);
                if (d.certificate && !ex_out.empty()) save_layout(ex_out, g, *d.certificate);
                std::cout << "result verdict=" << to_string(d.verdict) << " nodes=" << d.nodes
                          << " seconds=" << elapsed() << '\n';
                return d.verdict == Verdict::inconclusive ? 2 : 0;
            }
            if (*enumerate) {
                const Graph g = load_graph(ex_graph);
                const VertexOrder order = load_order(ex_order, g.n());
                std::uint64_t shown = 0;
                const std::uint64_t count = enumerate_layouts(
                    g, ex_spec, order,
                    [&](const MixedLayout& layout) {
                        ++shown;
                        if (!enum_count_only) {
                            write_layout(std::cout, g, layout);
                            std::cout << '\n';
                        }
                        return enum_limit == 0 || shown < enum_limit;
                    },
                    EnumerateOptions{!enum_all_labels});
                std::cout << "result layouts=" << count << " seconds=" << elapsed() << '\n';
                return 0;
            }
            if (*vk8) {
                const ObservationReport r = verify_k8_observations(budget);
                print_report("K8 observation", r, elapsed());
                return r.passed() ? 0 : 1;
            }
            if (*vdk8) {
                const ObservationReport r = verify_double_k8_observations(budget);
                print_report("double-K8 observation", r, elapsed());
                return r.passed() ? 0 : 1;
            }
        } else if (*gadget) {
            Output out(gd_out);
            std::ostream& os = out.stream();
            if (gd_kind == "double-k8" || gd_kind == "positioning") {
                const bool dk = gd_kind == "double-k8";
                const Gadget gd = dk ? double_k8() : positioning_gadget();
                const MixedLayout witness = dk ? double_k8_witness() : positioning_witness();
                write_labels(os, gd.labels);
                write_order_comment(os, witness.order);
                write_edge_list(os, gd.graph);
                if (!gd_layout_out.empty()) save_layout(gd_layout_out, gd.graph, witness);
            } else if (gd_kind == "reduce") {
                const Graph g = load_graph(gd_graph);
                const Gadget gd = reduce_subhamiltonian(g);
                write_labels(os, gd.labels);
                std::optional<MixedLayout> witness;
                if (!gd_layout.empty()) {
                    witness = reduction_witness(g, load_layout(gd_layout, g));
                    write_order_comment(os, witness->order);
                }
                write_edge_list(os, gd.graph);
                if (!gd_layout_out.empty()) {
                    if (!witness) throw CLI::ValidationError("--layout-out", "reduce needs --two-stack for a witness");
                    save_layout(gd_layout_out, gd.graph, *witness);
                }
            } else if (gd_kind == "augment-queue" || gd_kind == "augment-stack") {
                const Graph g = load_graph(gd_graph);
                const VertexOrder order = load_order(gd_order, g.n());
                const Augmented a = gd_kind == "augment-queue" ? augment_queue_page(g, order, gd_spec)
                                                               : augment_stack_page(g, order, gd_spec);
                if (a.star_center) os << "# star_center " << *a.star_center << '\n';
                write_order_comment(os, a.order);
                write_edge_list(os, a.graph);
                if (!gd_layout_out.empty()) throw CLI::ValidationError("--layout-out", "augment-* has no witness");
            } else {
                throw CLI::ValidationError("kind", "unknown gadget '" + gd_kind + "'");
            }
            out.close();
        } else if (*bench) {
            cfg.graph_class = require(parse_graph_class(bn_class), "--class", bn_class);
            for (const std::string& s : split_list(bn_sizes)) cfg.sizes.push_back(std::stoul(s));
            if (bn_order != "auto" && bn_order != "paper-best") {
                cfg.order = require(parse_order_heuristic(bn_order), "--order", bn_order);
            }
            cfg.assign.clear();
            for (const std::string& s : split_list(bn_assign)) {
                cfg.assign.push_back(require(parse_assign_heuristic(s), "--assign", s));
            }
            const ExperimentResult result = run_experiment(cfg);
            Output out(bn_out);
            write_csv(out.stream(), result.records);
            out.close();
            if (!bn_quiet) write_summary(out.is_stdout() ? std::cerr : std::cout, result.summary);
        } else if (*render) {
            const Graph g = load_graph(rd_graph);
            const MixedLayout layout = load_layout(rd_layout, g);
            SvgOptions options;
            options.highlight_conflicts = rd_highlight;
            Output out(rd_out);
            out.stream() << render_arc_svg(g, layout, options);
            out.close();
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
