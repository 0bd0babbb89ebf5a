#include "linlay/lab.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "linlay/io.hpp"
#include "linlay/rng.hpp"

namespace linlay {

void ExperimentConfig::validate() const {
    spec.validate();
    if (instances == 0) throw std::invalid_argument("instances must be at least 1");
    if (sizes.empty()) throw std::invalid_argument("no sizes given");
    if (assign.empty()) throw std::invalid_argument("no assignment heuristics given");
    for (std::size_t i = 0; i < assign.size(); ++i) {
        if (std::find(assign.begin(), assign.begin() + static_cast<std::ptrdiff_t>(i), assign[i]) !=
            assign.begin() + static_cast<std::ptrdiff_t>(i)) {
            throw std::invalid_argument("assignment heuristic listed twice: " + std::string(to_string(assign[i])));
        }
    }
}

std::vector<Job> expand_jobs(const ExperimentConfig& cfg) {
    std::vector<Job> jobs;
    jobs.reserve(cfg.sizes.size() * cfg.instances);
    const auto class_id = static_cast<std::uint64_t>(cfg.graph_class);
    for (std::size_t n : cfg.sizes) {
        for (std::size_t i = 0; i < cfg.instances; ++i) {
            jobs.push_back({cfg.graph_class, n, i, derive_seed(cfg.base_seed, {class_id, n, i})});
        }
    }
    return jobs;
}

namespace {

std::vector<RunRecord> run_job(const ExperimentConfig& cfg, const Job& job) {
    const Graph g = generate(job.graph_class, job.n, job.seed);
    const OrderHeuristic oh = cfg.order.value_or(best_order_for(job.graph_class));
    const VertexOrder order = compute_order(oh, g, mix64(job.seed));

    std::vector<RunRecord> out;
    for (AssignHeuristic ah : cfg.assign) {
        const auto start = std::chrono::steady_clock::now();
        const MixedLayout layout = run_assignment(ah, g, order, cfg.spec);
        const auto stop = std::chrono::steady_clock::now();
        const ConflictReport report = count_conflicts(g, layout);

        RunRecord r;
        r.graph_class = job.graph_class;
        r.n = job.n;
        r.seed = job.seed;
        r.order = oh;
        r.assign = ah;
        r.spec = cfg.spec;
        r.m = g.m();
        r.conflicts = report.total;
        r.conflicts_per_edge = g.m() == 0 ? 0.0 : static_cast<double>(report.total) / static_cast<double>(g.m());
        if (cfg.measure_time) r.millis = std::chrono::duration<double, std::milli>(stop - start).count();
        out.push_back(r);
    }
    return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::vector<Job> jobs = expand_jobs(cfg);
    std::vector<std::vector<RunRecord>> per_job(jobs.size());

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::string error;
    std::size_t error_job = jobs.size();

    auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size() && !failed; j = next++) {
            try {
                per_job[j] = run_job(cfg, jobs[j]);
            } catch (const std::exception& ex) {
                std::lock_guard lock(error_mutex);
                // Report the earliest failing job so the message is reproducible.
                if (j < error_job) {
                    error_job = j;
                    error = "job class=" + std::string(to_string(jobs[j].graph_class)) +
                            " n=" + std::to_string(jobs[j].n) + " seed=" + std::to_string(jobs[j].seed) + ": " +
                            ex.what();
                }
                failed = true;
            }
        }
    };

    unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, jobs.size())));
    // Timing runs one job at a time so measurements do not compete.
    if (cfg.measure_time) threads = 1;
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failed) throw ExperimentError(error);

    ExperimentResult result;
    for (auto& records : per_job) result.records.insert(result.records.end(), records.begin(), records.end());
    result.summary = summarize(result.records);
    return result;
}

std::vector<CellSummary> summarize(const std::vector<RunRecord>& records) {
    std::vector<CellSummary> cells;
    std::size_t i = 0;
    while (i < records.size()) {
        // One instance is the run of consecutive records with the same job identity.
        CellSummary cell{records[i].graph_class, records[i].n, 0, {}};
        std::map<AssignHeuristic, std::size_t> slot;
        std::vector<double> cpe_sum;
        std::vector<std::size_t> wins, runs;
        while (i < records.size() && records[i].graph_class == cell.graph_class && records[i].n == cell.n) {
            std::size_t j = i;
            while (j < records.size() && records[j].graph_class == records[i].graph_class &&
                   records[j].n == records[i].n && records[j].seed == records[i].seed) {
                ++j;
            }
            std::uint64_t best = UINT64_MAX;
            for (std::size_t k = i; k < j; ++k) best = std::min(best, records[k].conflicts);
            for (std::size_t k = i; k < j; ++k) {
                auto [it, inserted] = slot.try_emplace(records[k].assign, cell.heuristics.size());
                if (inserted) {
                    cell.heuristics.push_back({records[k].assign, 0, 0});
                    cpe_sum.push_back(0);
                    wins.push_back(0);
                    runs.push_back(0);
                }
                const std::size_t h = it->second;
                cpe_sum[h] += records[k].conflicts_per_edge;
                wins[h] += records[k].conflicts == best;
                ++runs[h];
            }
            ++cell.instances;
            i = j;
        }
        for (std::size_t h = 0; h < cell.heuristics.size(); ++h) {
            cell.heuristics[h].mean_conflicts_per_edge = cpe_sum[h] / static_cast<double>(runs[h]);
            cell.heuristics[h].win_percent = 100.0 * static_cast<double>(wins[h]) / static_cast<double>(runs[h]);
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

namespace {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, const char* what) {
    T value{};
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw ParseError("csv line " + std::to_string(line) + ": bad " + what + " '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    out << kCsvHeader << '\n';
    for (const RunRecord& r : records) {
        out << to_string(r.graph_class) << ',' << r.n << ',' << r.seed << ',' << to_string(r.order) << ','
            << to_string(r.assign) << ',' << r.spec.stacks << ',' << r.spec.queues << ',' << r.m << ','
            << r.conflicts << ',' << format_double(r.conflicts_per_edge) << ',' << format_double(r.millis) << '\n';
    }
}

std::vector<RunRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw ParseError("csv: missing or unexpected header");
    std::vector<RunRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string_view> f;
        std::string_view rest(line);
        for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1)) {
            f.push_back(rest.substr(0, pos));
        }
        f.push_back(rest);
        if (f.size() != 11) throw ParseError("csv line " + std::to_string(line_no) + ": expected 11 fields");

        RunRecord r;
        const auto gc = parse_graph_class(f[0]);
        const auto oh = parse_order_heuristic(f[3]);
        const auto ah = parse_assign_heuristic(f[4]);
        if (!gc || !oh || !ah) throw ParseError("csv line " + std::to_string(line_no) + ": unknown name");
        r.graph_class = *gc;
        r.n = parse_number<std::size_t>(f[1], line_no, "n");
        r.seed = parse_number<Seed>(f[2], line_no, "seed");
        r.order = *oh;
        r.assign = *ah;
        r.spec.stacks = parse_number<int>(f[5], line_no, "s");
        r.spec.queues = parse_number<int>(f[6], line_no, "q");
        r.m = parse_number<std::size_t>(f[7], line_no, "m");
        r.conflicts = parse_number<std::uint64_t>(f[8], line_no, "conflicts");
        r.conflicts_per_edge = parse_number<double>(f[9], line_no, "conflicts_per_edge");
        r.millis = parse_number<double>(f[10], line_no, "millis");
        records.push_back(r);
    }
    return records;
}

void save_csv(const std::string& path, const std::vector<RunRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_csv(out, records);
    if (!out.flush()) throw std::runtime_error("write to " + path + " failed");
}

std::vector<RunRecord> load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_csv(in);
}

void write_summary(std::ostream& out, const std::vector<CellSummary>& summary) {
    std::ostringstream s;
    s << std::fixed;
    for (const CellSummary& cell : summary) {
        s << to_string(cell.graph_class) << " n=" << cell.n << " instances=" << cell.instances << '\n';
        for (const HeuristicSummary& h : cell.heuristics) {
            s << "  " << std::left << std::setw(12) << to_string(h.assign) << std::right
              << " cpe=" << std::setprecision(4) << h.mean_conflicts_per_edge << " wins=" << std::setprecision(1)
              << h.win_percent << "%\n";
        }
    }
    out << s.str();
}

}  // namespace linlay
