#ifndef LINLAY_LAB_HPP
#define LINLAY_LAB_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linlay/assign.hpp"
#include "linlay/core.hpp"
#include "linlay/gen.hpp"
#include "linlay/order.hpp"

namespace linlay {

struct ExperimentConfig {
    GraphClass graph_class = GraphClass::gnm3;
    std::vector<std::size_t> sizes;
    std::size_t instances = 1;
    Seed base_seed = 0;
    /// Empty means the per-class preset (best_order_for).
    std::optional<OrderHeuristic> order;
    std::vector<AssignHeuristic> assign{AssignHeuristic::stack_queue, AssignHeuristic::elen,
                                        AssignHeuristic::ceil_floor};
    PageSpec spec{1, 1};
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Wall times are measured only on request; otherwise millis is 0 so
    /// the CSV depends on the configuration alone.
    bool measure_time = false;

    /// Throws std::invalid_argument on an unusable configuration.
    void validate() const;
};

struct Job {
    GraphClass graph_class;
    std::size_t n;
    std::size_t instance;
    Seed seed;  ///< generator seed; the order seed is derived from it
};

/// Jobs in run order: sizes as listed, then instances 0..k-1.
std::vector<Job> expand_jobs(const ExperimentConfig& cfg);

struct RunRecord {
    GraphClass graph_class = GraphClass::gnm3;
    std::size_t n = 0;
    Seed seed = 0;
    OrderHeuristic order = OrderHeuristic::random;
    AssignHeuristic assign = AssignHeuristic::stack_queue;
    PageSpec spec{};
    std::size_t m = 0;
    std::uint64_t conflicts = 0;
    double conflicts_per_edge = 0;
    double millis = 0;

    bool operator==(const RunRecord&) const = default;
};

struct HeuristicSummary {
    AssignHeuristic assign;
    double mean_conflicts_per_edge = 0;
    double win_percent = 0;  ///< ties award a win to every tied heuristic
};

struct CellSummary {
    GraphClass graph_class;
    std::size_t n;
    std::size_t instances;
    std::vector<HeuristicSummary> heuristics;  ///< in configuration order
};

struct ExperimentResult {
    std::vector<RunRecord> records;  ///< job order, then heuristic order
    std::vector<CellSummary> summary;
};

class ExperimentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs every job on a thread pool. Each job generates its graph, computes
/// one order and runs every assignment heuristic on that same order.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Mean conflicts per edge and win percentages per (class, n) cell.
std::vector<CellSummary> summarize(const std::vector<RunRecord>& records);

inline constexpr std::string_view kCsvHeader = "class,n,seed,order,assign,s,q,m,conflicts,conflicts_per_edge,millis";

void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_csv(std::istream& in);

void save_csv(const std::string& path, const std::vector<RunRecord>& records);
std::vector<RunRecord> load_csv(const std::string& path);

/// Human-readable summary table.
void write_summary(std::ostream& out, const std::vector<CellSummary>& summary);

}  // namespace linlay

#endif  // LINLAY_LAB_HPP
