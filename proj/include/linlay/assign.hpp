#ifndef LINLAY_ASSIGN_HPP
#define LINLAY_ASSIGN_HPP

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "linlay/core.hpp"

namespace linlay {

/// What the stack-queue sweep knew when it closed one edge.
struct SweepStep {
    std::size_t edge;           ///< index into Graph::edges()
    std::uint64_t crossing_counter;  ///< c(e)
    std::uint64_t nesting_counter;   ///< n(e)
    std::uint64_t open_above;   ///< s_e: open edges above e in S that can still cross it
    std::uint64_t open_front;   ///< q_e: open edges in front of e in Q that nest it
    bool to_stack;
    PageId page;
};

using SweepObserver = std::function<void(const SweepStep&)>;

/**
 * Stack-queue page assignment.
 *
 * Sweeps the vertices left to right. At a vertex the edges to the right
 * are pushed on a stack S (longest first) and appended to a queue Q
 * (shortest first). When an edge e closes it is assigned to the stack side
 * iff c(e) + s_e/2 <= n(e) + q_e/2, where s_e counts open edges above e in
 * S that will cross it and q_e open edges in front of e in Q that nest it.
 * A stack assignment increments c of those s_e edges, a queue assignment
 * increments n of the q_e edges, so c(e) and n(e) always equal the number
 * of conflicts e already has with assigned edges on the respective side.
 *
 * Edges closing at the same vertex are handled innermost first and never
 * count against each other. With several pages of the chosen kind, the
 * page with the fewest conflicts against already assigned edges wins
 * (lowest id on ties). With s = 0 or q = 0 every edge goes to the only
 * available side. O(m^2).
 *
 * Throws StructureError if the order does not match g or the spec is invalid.
 */
MixedLayout stack_queue(const Graph& g, const VertexOrder& order, PageSpec spec,
                        const SweepObserver& observer = {});

/**
 * Greedy page assignment in a fixed edge sequence: each edge goes to the
 * page where it has the fewest conflicts with the edges assigned so far.
 * Ties prefer stack pages over queue pages and then the lowest page id.
 * `edge_sequence` holds edge indices and must be a permutation of 0..m-1.
 */
MixedLayout greedy_assign(const Graph& g, const VertexOrder& order, PageSpec spec,
                          std::span<const std::size_t> edge_sequence);

/// Edge indices by decreasing linear length, ties by (left rank, right rank).
std::vector<std::size_t> elen_sequence(const Graph& g, const VertexOrder& order);

/// Edge indices by decreasing cyclic length min(d, n - d), ties as above.
std::vector<std::size_t> ceil_floor_sequence(const Graph& g, const VertexOrder& order);

MixedLayout e_len(const Graph& g, const VertexOrder& order, PageSpec spec);
MixedLayout ceil_floor(const Graph& g, const VertexOrder& order, PageSpec spec);

enum class AssignHeuristic { stack_queue, elen, ceil_floor };

std::string_view to_string(AssignHeuristic h);
std::optional<AssignHeuristic> parse_assign_heuristic(std::string_view name);

MixedLayout run_assignment(AssignHeuristic h, const Graph& g, const VertexOrder& order, PageSpec spec);

}  // namespace linlay

#endif  // LINLAY_ASSIGN_HPP
