#include "linlay/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "linlay/gadgets.hpp"
#include "linlay/gen.hpp"

namespace linlay {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

    void grow(std::size_t n) { words_.resize((n + 63) / 64, 0); }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    bool intersects(const Bits& other) const {
        const std::size_t w = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < w; ++i) {
            if (words_[i] & other.words_[i]) return true;
        }
        return false;
    }

private:
    std::vector<std::uint64_t> words_;
};

class Budget {
public:
    explicit Budget(SearchBudget limits) : limits_(limits), start_(std::chrono::steady_clock::now()) {}

    /// Counts one node; false once the budget is gone.
    bool tick() {
        if (exhausted_) return false;
        ++nodes_;
        if (nodes_ > limits_.max_nodes) exhausted_ = true;
        if ((nodes_ & 255) == 0 && elapsed() > limits_.max_seconds) exhausted_ = true;
        return !exhausted_;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    SearchBudget limits_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

/**
 * Page assignment by backtracking over the edges in the order they were
 * pushed. For edge j only the conflicts with edges i < j are stored, which
 * is all the in-order search needs.
 */
class AssignmentSearch {
public:
    AssignmentSearch(PageSpec spec, Budget& budget)
        : spec_(spec), budget_(budget), pages_(static_cast<std::size_t>(spec.pages())) {}

    const std::vector<PageId>& assignment() const { return assign_; }

    void push(Interval iv) {
        const std::size_t j = intervals_.size();
        Bits cross(j + 1), nest(j + 1);
        for (std::size_t i = 0; i < j; ++i) {
            if (intervals_cross(intervals_[i], iv)) cross.set(i);
            if (intervals_nest(intervals_[i], iv)) nest.set(i);
        }
        intervals_.push_back(iv);
        cross_.push_back(std::move(cross));
        nest_.push_back(std::move(nest));
        assign_.push_back(kUnassigned);
        for (Bits& b : pages_) b.grow(j + 1);
    }

    /// Assigns every edge; false if no conflict-free assignment exists.
    bool solve() {
        unassign_all();
        return solve(0, 0, 0, nullptr);
    }

    /// Visits every assignment of edges 0..size()-1; `emit` returns false to stop.
    void enumerate(bool quotient, const std::function<bool()>& emit) {
        quotient_ = quotient;
        unassign_all();
        solve(0, 0, 0, &emit);
        quotient_ = true;
    }

private:
    void unassign_all() {
        for (Bits& b : pages_) b.clear();
        std::fill(assign_.begin(), assign_.end(), kUnassigned);
    }

    bool fits(std::size_t j, PageId p) const {
        const Bits& conflicts = spec_.is_stack(p) ? cross_[j] : nest_[j];
        return !conflicts.intersects(pages_[static_cast<std::size_t>(p)]);
    }

    // With the quotient, unused pages of a kind are only entered in id
    // order, so one fresh page per kind suffices.
    bool solve(std::size_t j, int used_stacks, int used_queues, const std::function<bool()>* emit) {
        if (j == assign_.size()) {
            if (!emit) return true;
            return !(*emit)();  // true stops the enumeration
        }
        if (!budget_.tick()) return false;
        const int stack_limit = quotient_ ? std::min(spec_.stacks, used_stacks + 1) : spec_.stacks;
        const int queue_limit = quotient_ ? std::min(spec_.queues, used_queues + 1) : spec_.queues;
        auto attempt = [&](PageId p) {
            if (!fits(j, p)) return false;
            assign_[j] = p;
            pages_[static_cast<std::size_t>(p)].set(j);
            const bool stack = spec_.is_stack(p);
            const int s = stack ? std::max(used_stacks, p + 1) : used_stacks;
            const int q = stack ? used_queues : std::max(used_queues, p - spec_.stacks + 1);
            if (solve(j + 1, s, q, emit)) return true;
            pages_[static_cast<std::size_t>(p)].reset(j);
            assign_[j] = kUnassigned;
            return false;
        };
        auto allowed = [&](PageId p) {
            return spec_.is_stack(p) ? p < stack_limit : p - spec_.stacks < queue_limit;
        };

        for (PageId p = 0; p < spec_.pages(); ++p) {
            if (!allowed(p)) continue;
            if (attempt(p)) return true;
            if (budget_.exhausted()) return false;
        }
        return false;
    }

    PageSpec spec_;
    Budget& budget_;
    bool quotient_ = true;
    std::vector<Interval> intervals_;
    std::vector<Bits> cross_, nest_;
    std::vector<Bits> pages_;
    std::vector<PageId> assign_;
};

/**
 * Feasibility of a page assignment for a set of intervals, searched most
 * constrained edge first with forward checking. Each edge keeps a bit
 * mask of the pages still open to it; assigning an edge removes that page
 * from every conflicting unassigned edge. Pages of one kind that no edge
 * uses yet are interchangeable, so only the lowest such page is tried.
 */
class ConstraintSearch {
public:
    ConstraintSearch(PageSpec spec, Budget& budget) : spec_(spec), budget_(budget) {
        if (spec.pages() > 64) throw StructureError("exact search supports at most 64 pages");
        for (PageId p = 0; p < spec.stacks; ++p) stack_mask_ |= bit(p);
        all_mask_ = spec.pages() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << spec.pages()) - 1;
    }

    void reset(const std::vector<Interval>& intervals) {
        const std::size_t n = intervals.size();
        cross_.assign(n, {});
        nest_.assign(n, {});
        degree_.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                if (intervals_cross(intervals[a], intervals[b])) {
                    cross_[a].push_back(b);
                    cross_[b].push_back(a);
                } else if (intervals_nest(intervals[a], intervals[b])) {
                    nest_[a].push_back(b);
                    nest_[b].push_back(a);
                } else {
                    continue;
                }
                ++degree_[a];
                ++degree_[b];
            }
        }
        assign_.assign(n, kUnassigned);
    }

    /// Pages tried first per edge, if still open.
    bool solve(const std::vector<PageId>& hint) {
        hint_ = &hint;
        std::vector<std::uint64_t> domain(assign_.size(), all_mask_);
        std::fill(assign_.begin(), assign_.end(), kUnassigned);
        return search(domain, 0, assign_.size());
    }

    const std::vector<PageId>& assignment() const { return assign_; }

private:
    static std::uint64_t bit(PageId p) { return std::uint64_t{1} << p; }

    bool search(std::vector<std::uint64_t>& domain, std::uint64_t used, std::size_t left) {
        if (left == 0) return true;
        if (!budget_.tick()) return false;

        std::size_t var = assign_.size();
        int best_size = 65;
        for (std::size_t v = 0; v < assign_.size(); ++v) {
            if (assign_[v] != kUnassigned) continue;
            const int size = std::popcount(domain[v]);
            if (size < best_size || (size == best_size && degree_[v] > degree_[var])) {
                var = v;
                best_size = size;
            }
        }

        // One fresh page per kind.
        std::uint64_t options = domain[var] & used;
        const std::uint64_t fresh = domain[var] & ~used;
        if (const std::uint64_t s = fresh & stack_mask_) options |= s & -s;
        if (const std::uint64_t q = fresh & ~stack_mask_) options |= q & -q;

        const PageId preferred = var < hint_->size() ? (*hint_)[var] : kUnassigned;
        if (preferred != kUnassigned && (options & bit(preferred)) == 0 && (fresh & bit(preferred)) != 0) {
            // A fresh hinted page is as good as the fresh page it replaces.
            const std::uint64_t same_kind = spec_.is_stack(preferred) ? stack_mask_ : ~stack_mask_;
            options &= ~(fresh & same_kind);
            options |= bit(preferred);
        }

        auto attempt = [&](PageId p) {
            std::vector<std::uint64_t> next = domain;
            for (std::size_t u : spec_.is_stack(p) ? cross_[var] : nest_[var]) {
                if (assign_[u] != kUnassigned) continue;
                next[u] &= ~bit(p);
                if (next[u] == 0) return false;
            }
            assign_[var] = p;
            if (search(next, used | bit(p), left - 1)) return true;
            assign_[var] = kUnassigned;
            return false;
        };

        if (preferred != kUnassigned && (options & bit(preferred))) {
            if (attempt(preferred)) return true;
            if (budget_.exhausted()) return false;
            options &= ~bit(preferred);
        }
        for (; options != 0; options &= options - 1) {
            if (attempt(static_cast<PageId>(std::countr_zero(options)))) return true;
            if (budget_.exhausted()) return false;
        }
        return false;
    }

    PageSpec spec_;
    Budget& budget_;
    std::uint64_t stack_mask_ = 0;
    std::uint64_t all_mask_ = 0;
    std::vector<std::vector<std::size_t>> cross_, nest_;
    std::vector<std::size_t> degree_;
    std::vector<PageId> assign_;
    const std::vector<PageId>* hint_ = nullptr;
};

// Edge indices by left rank, then decreasing right rank.
std::vector<std::size_t> search_sequence(const Graph& g, const VertexOrder& order) {
    std::vector<std::size_t> seq(g.m());
    std::iota(seq.begin(), seq.end(), std::size_t{0});
    std::sort(seq.begin(), seq.end(), [&](std::size_t a, std::size_t b) {
        const Interval ia = interval_of(g.edge(a), order);
        const Interval ib = interval_of(g.edge(b), order);
        if (ia.left != ib.left) return ia.left < ib.left;
        return ia.right > ib.right;
    });
    return seq;
}

void check_order(const Graph& g, const VertexOrder& order, PageSpec spec) {
    spec.validate();
    if (order.size() != g.n()) throw StructureError("order size does not match the graph");
}

}  // namespace

Decision decide_assignment(const Graph& g, const VertexOrder& order, PageSpec spec, SearchBudget limits) {
    check_order(g, order, spec);
    Budget budget(limits);
    AssignmentSearch search(spec, budget);
    const std::vector<std::size_t> seq = search_sequence(g, order);
    for (std::size_t e : seq) search.push(interval_of(g.edge(e), order));

    Decision d;
    const bool found = search.solve();
    d.nodes = budget.nodes();
    if (found) {
        MixedLayout layout{order, spec, std::vector<PageId>(g.m(), kUnassigned)};
        for (std::size_t k = 0; k < seq.size(); ++k) layout.page_of[seq[k]] = search.assignment()[k];
        d.verdict = Verdict::yes;
        d.certificate = std::move(layout);
    } else {
        d.verdict = budget.exhausted() ? Verdict::inconclusive : Verdict::no;
    }
    return d;
}

std::uint64_t enumerate_layouts(const Graph& g, PageSpec spec, const VertexOrder& order,
                                const std::function<bool(const MixedLayout&)>& sink, EnumerateOptions options) {
    check_order(g, order, spec);
    Budget budget(SearchBudget::unlimited());
    AssignmentSearch search(spec, budget);
    const std::vector<std::size_t> seq = search_sequence(g, order);
    for (std::size_t e : seq) search.push(interval_of(g.edge(e), order));

    std::uint64_t emitted = 0;
    MixedLayout layout{order, spec, std::vector<PageId>(g.m(), kUnassigned)};
    search.enumerate(options.quotient_page_symmetry, [&] {
        for (std::size_t k = 0; k < seq.size(); ++k) layout.page_of[seq[k]] = search.assignment()[k];
        ++emitted;
        return sink(layout);
    });
    return emitted;
}

namespace {

class OrderSearch {
public:
    OrderSearch(const Graph& g, PageSpec spec, Budget& budget, const OrderSearchOptions& options,
                const OrderVisitor& visit)
        : g_(g), spec_(spec), budget_(budget), visit_(visit), solver_(spec, budget),
          pos_(g.n(), kFree), must_follow_(g.n(), kNoVertex), page_(g.m(), kUnassigned) {
        std::optional<std::pair<Vertex, Vertex>> pair = options.reversal_pair;
        if (!pair && g.n() >= 2) pair = std::pair<Vertex, Vertex>{0, 1};
        if (pair) must_follow_[pair->second] = pair->first;
        for (const auto& cls : options.interchangeable) {
            for (std::size_t i = 1; i < cls.size(); ++i) {
                // A vertex can only carry one predecessor; chaining keeps the cut exact.
                if (must_follow_[cls[i]] == kNoVertex) must_follow_[cls[i]] = cls[i - 1];
                else extra_.push_back({cls[i - 1], cls[i]});
            }
        }
    }

    OrderSearchStats run() {
        dfs();
        stats_.nodes = budget_.nodes();
        stats_.exhausted = budget_.exhausted() && !stopped_;
        if (stats_.orders > 0) stats_.verdict = Verdict::yes;
        else stats_.verdict = stats_.exhausted ? Verdict::inconclusive : Verdict::no;
        return stats_;
    }

private:
    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    static constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

    bool allowed(Vertex v) const {
        if (must_follow_[v] != kNoVertex && pos_[must_follow_[v]] == kFree) return false;
        for (const auto& [before, after] : extra_) {
            if (after == v && pos_[before] == kFree) return false;
        }
        return true;
    }

    // Solves the edges touching the prefix. An edge with one placed end
    // gets its right end just past the prefix: wherever that end lands, it
    // crosses or nests exactly the same closed edges.
    bool feasible() {
        const std::size_t beyond = seq_.size();
        std::vector<Interval> intervals;
        std::vector<PageId> hint;
        vars_.clear();
        for (std::size_t e = 0; e < g_.m(); ++e) {
            const Edge& edge = g_.edge(e);
            const std::size_t a = pos_[edge.u], b = pos_[edge.v];
            if (a == kFree && b == kFree) continue;
            if (a == kFree || b == kFree) intervals.push_back({a == kFree ? b : a, beyond});
            else intervals.push_back({std::min(a, b), std::max(a, b)});
            hint.push_back(page_[e]);
            vars_.push_back(e);
        }
        solver_.reset(intervals);
        return solver_.solve(hint);
    }

    void dfs() {
        if (seq_.size() == g_.n()) {
            ++stats_.orders;
            const MixedLayout layout{VertexOrder::from_sequence(seq_), spec_, page_};
            if (!visit_(layout)) stopped_ = true;
            return;
        }
        for (Vertex v = 0; v < g_.n(); ++v) {
            if (stopped_ || budget_.exhausted()) return;
            if (pos_[v] != kFree || !allowed(v)) continue;
            if (!budget_.tick()) return;

            pos_[v] = seq_.size();
            seq_.push_back(v);
            if (feasible()) {
                ++stats_.prefixes;
                const std::vector<PageId> saved = page_;
                for (std::size_t i = 0; i < vars_.size(); ++i) page_[vars_[i]] = solver_.assignment()[i];
                dfs();
                page_ = saved;
            }
            seq_.pop_back();
            pos_[v] = kFree;
        }
    }

    const Graph& g_;
    PageSpec spec_;
    Budget& budget_;
    const OrderVisitor& visit_;
    ConstraintSearch solver_;
    std::vector<std::size_t> pos_;
    std::vector<Vertex> must_follow_;
    std::vector<std::pair<Vertex, Vertex>> extra_;
    std::vector<Vertex> seq_;
    std::vector<PageId> page_;       // last feasible page per edge, the hint for the next prefix
    std::vector<std::size_t> vars_;  // edge index per solver variable
    OrderSearchStats stats_;
    bool stopped_ = false;
};

}  // namespace

OrderSearchStats search_orders(const Graph& g, PageSpec spec, SearchBudget limits, const OrderSearchOptions& options,
                               const OrderVisitor& visit) {
    spec.validate();
    Budget budget(limits);
    OrderSearch search(g, spec, budget, options, visit);
    return search.run();
}

Decision decide_layout(const Graph& g, PageSpec spec, SearchBudget budget, const OrderSearchOptions& options) {
    Decision d;
    const OrderSearchStats stats = search_orders(g, spec, budget, options, [&](const MixedLayout& layout) {
        d.certificate = layout;
        return false;
    });
    d.verdict = d.certificate ? Verdict::yes : stats.verdict;
    if (d.verdict == Verdict::yes && !d.certificate) d.verdict = Verdict::inconclusive;
    d.nodes = stats.nodes;
    return d;
}

std::optional<std::string> check_k8_clauses(const Graph& k8, const MixedLayout& layout) {
    auto page = [&](std::size_t a, std::size_t b) {
        // Vertices named v1..v8 by rank.
        return layout.page_of[*k8.edge_index(layout.order.at(a - 1), layout.order.at(b - 1))];
    };
    const PageSpec& spec = layout.spec;
    for (auto [a, b] : {std::pair{1, 8}, std::pair{1, 7}, std::pair{2, 8}}) {
        if (!spec.is_stack(page(a, b))) {
            return "v" + std::to_string(a) + "v" + std::to_string(b) + " is not on a stack page";
        }
    }
    if (page(1, 7) == page(2, 8)) return std::string("v1v7 and v2v8 share a stack page");
    for (auto [a, b] : {std::pair{1, 3}, std::pair{6, 8}}) {
        if (!spec.is_queue(page(a, b))) {
            return "v" + std::to_string(a) + "v" + std::to_string(b) + " is not on the queue page";
        }
    }
    return std::nullopt;
}

namespace {

std::string describe_order(const VertexOrder& order) {
    std::string out = "order";
    for (Vertex v : order.sequence()) out += " " + std::to_string(v);
    return out;
}

}  // namespace

ObservationReport verify_k8_observations(SearchBudget limits, const LayoutCheck& check) {
    const Graph k8 = complete(8);
    const PageSpec spec{2, 1};
    Budget budget(limits);
    ObservationReport report;

    std::vector<Vertex> seq(8);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    bool violated = false;
    do {
        // Reversal quotient: vertex 0 precedes vertex 1.
        if (std::find(seq.begin(), seq.end(), Vertex{0}) > std::find(seq.begin(), seq.end(), Vertex{1})) continue;
        if (!budget.tick()) break;
        const VertexOrder order = VertexOrder::from_sequence(seq);
        ++report.orders_examined;
        const std::uint64_t found = enumerate_layouts(k8, spec, order, [&](const MixedLayout& layout) {
            ++report.layouts_inspected;
            if (auto problem = check(k8, layout)) {
                report.violation = *problem + " (" + describe_order(layout.order) + ")";
                violated = true;
                return false;
            }
            return true;
        });
        if (found > 0) ++report.orders_with_layout;
    } while (!violated && std::next_permutation(seq.begin(), seq.end()));

    report.nodes = budget.nodes();
    if (violated) report.status = Verdict::no;
    else if (budget.exhausted()) report.status = Verdict::inconclusive;
    else report.status = report.layouts_inspected > 0 ? Verdict::yes : Verdict::no;
    if (report.status == Verdict::no && report.violation.empty()) report.violation = "no (2, 1) layout of K8 found";
    return report;
}

std::optional<std::string> check_double_k8_positions(const Graph& g, const MixedLayout& layout) {
    const Gadget dk = double_k8();
    if (g.n() != dk.graph.n()) return std::string("not a double-K8");
    const auto rank = [&](Vertex v) { return layout.order.rank(v); };
    const auto [u, v] = dk.labels.shared;
    const auto [w, z] = dk.labels.outer;
    const auto lo = std::min(rank(u), rank(v));
    const auto hi = std::max(rank(u), rank(v));
    if (lo != 6 || hi != 7) return std::string("shared vertices are not the two middle vertices");
    if (std::min(rank(w), rank(z)) != 0 || std::max(rank(w), rank(z)) != 13) {
        return std::string("outer vertices are not the first and last vertices");
    }
    return std::nullopt;
}

ObservationReport verify_double_k8_observations(SearchBudget limits) {
    const Gadget dk = double_k8();
    OrderSearchOptions options;
    options.reversal_pair = dk.labels.outer;
    // Automorphisms: the five inner vertices of each K8 and the two shared ones.
    options.interchangeable = {{1, 2, 3, 4, 5}, {8, 9, 10, 11, 12}, {6, 7}};

    ObservationReport report;
    bool violated = false;
    const OrderSearchStats stats = search_orders(dk.graph, PageSpec{2, 1}, limits, options, [&](const MixedLayout& layout) {
        ++report.orders_with_layout;
        ++report.layouts_inspected;
        if (auto problem = check_double_k8_positions(dk.graph, layout)) {
            report.violation = *problem + " (" + describe_order(layout.order) + ")";
            violated = true;
            return false;
        }
        return true;
    });
    report.orders_examined = stats.prefixes;
    report.nodes = stats.nodes;
    if (violated) report.status = Verdict::no;
    else if (stats.exhausted) report.status = Verdict::inconclusive;
    else report.status = report.layouts_inspected > 0 ? Verdict::yes : Verdict::no;
    if (report.status == Verdict::no && report.violation.empty()) report.violation = "no (2, 1) layout found";
    return report;
}

}  // namespace linlay
