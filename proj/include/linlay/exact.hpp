#ifndef LINLAY_EXACT_HPP
#define LINLAY_EXACT_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linlay/core.hpp"

namespace linlay {

/// Search limits. Running out yields Verdict::inconclusive, never a wrong answer.
struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();

    static SearchBudget unlimited() { return {}; }
};

enum class Verdict { yes, no, inconclusive };

std::string_view to_string(Verdict v);

struct Decision {
    Verdict verdict = Verdict::inconclusive;
    std::optional<MixedLayout> certificate;  ///< set iff verdict == yes
    std::uint64_t nodes = 0;
};

/// Exact page assignment for a fixed order: backtracking over the edges
/// sorted by left rank, then decreasing right rank, with forward conflict
/// checks. Interchangeable pages are tried only in first-use order.
Decision decide_assignment(const Graph& g, const VertexOrder& order, PageSpec spec,
                           SearchBudget budget = SearchBudget::unlimited());

/// Symmetry cuts for the search over vertex orders.
struct OrderSearchOptions {
    /// Reversal quotient: orders are kept only if `first` precedes `second`.
    /// Defaults to vertices (0, 1) when the graph has at least two vertices.
    std::optional<std::pair<Vertex, Vertex>> reversal_pair;
    /// Sets of vertices that an automorphism may permute freely while the
    /// other cuts stay intact; each set must appear in increasing id order.
    std::vector<std::vector<Vertex>> interchangeable;
};

/// Called for every complete order together with one conflict-free
/// assignment for it. Return false to stop the search.
using OrderVisitor = std::function<bool(const MixedLayout&)>;

struct OrderSearchStats {
    Verdict verdict = Verdict::no;  ///< yes if any order was visited
    bool exhausted = false;         ///< the budget ran out before the search finished
    std::uint64_t nodes = 0;
    std::uint64_t prefixes = 0;
    std::uint64_t orders = 0;
};

/**
 * Branch and bound over vertex-order prefixes. Appending a vertex closes
 * the edges to already placed vertices; their mutual conflicts are then
 * fixed, and the prefix is pruned as soon as the closed edges admit no
 * conflict-free assignment. The assignment of the parent prefix is
 * extended first and re-solved from scratch only when that fails.
 */
OrderSearchStats search_orders(const Graph& g, PageSpec spec, SearchBudget budget,
                               const OrderSearchOptions& options, const OrderVisitor& visit);

/// Existence of an s-stack q-queue layout for some vertex order.
Decision decide_layout(const Graph& g, PageSpec spec, SearchBudget budget = SearchBudget::unlimited(),
                       const OrderSearchOptions& options = {});

struct EnumerateOptions {
    /// Emit one representative per relabeling of same-kind pages.
    bool quotient_page_symmetry = true;
};

/// Emits every conflict-free assignment for the fixed order, in a
/// deterministic order. The sink returns false to stop early. Returns the
/// number of layouts emitted.
std::uint64_t enumerate_layouts(const Graph& g, PageSpec spec, const VertexOrder& order,
                                const std::function<bool(const MixedLayout&)>& sink,
                                EnumerateOptions options = {});

/// Returns a description of the first violated clause, or nothing.
using LayoutCheck = std::function<std::optional<std::string>(const Graph&, const MixedLayout&)>;

struct ObservationReport {
    Verdict status = Verdict::inconclusive;  ///< yes = every clause held, no = violation found
    std::uint64_t orders_examined = 0;
    std::uint64_t orders_with_layout = 0;
    std::uint64_t layouts_inspected = 0;
    std::uint64_t nodes = 0;
    std::string violation;

    bool passed() const { return status == Verdict::yes; }
};

/// Clauses on a (2, 1) layout of K8 with vertices v1..v8 named by rank:
/// v1v8, v1v7, v2v8 on stacks, v1v7 and v2v8 on different stacks,
/// v1v3 and v6v8 on the queue.
std::optional<std::string> check_k8_clauses(const Graph& k8, const MixedLayout& layout);

/// Every order of K8 up to reversal, every conflict-free (2, 1) layout up
/// to swapping the stacks, checked against `check`.
ObservationReport verify_k8_observations(SearchBudget budget = SearchBudget::unlimited(),
                                         const LayoutCheck& check = check_k8_clauses);

/// Shared vertices at the two middle ranks, outer vertices at the ends.
std::optional<std::string> check_double_k8_positions(const Graph& g, const MixedLayout& layout);

/// Exhaustive search over orders of the double-K8 (up to its automorphisms
/// and reversal) for (2, 1) layouts, each checked with
/// check_double_k8_positions. Expensive; meant to run with a budget.
ObservationReport verify_double_k8_observations(SearchBudget budget = SearchBudget::unlimited());

}  // namespace linlay

#endif  // LINLAY_EXACT_HPP
