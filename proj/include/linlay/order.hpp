#ifndef LINLAY_ORDER_HPP
#define LINLAY_ORDER_HPP

#include <optional>
#include <string_view>

#include "linlay/core.hpp"
#include "linlay/gen.hpp"

namespace linlay {

/// Uniform random permutation.
VertexOrder random_order(const Graph& g, Seed seed);

/// Breadth-first order from a uniformly random start vertex. Neighbors are
/// enqueued by ascending degree, ties by id. Throws on disconnected input.
VertexOrder rbfs(const Graph& g, Seed seed);

/// Adjacent Vertex Smallest Degree First: stack-based depth-first order
/// starting at a minimum-degree vertex (lowest id on ties). Unvisited
/// neighbors are pushed by descending degree so the smallest-degree one is
/// expanded next. Deterministic; the seed is accepted for interface
/// uniformity. Throws on disconnected input.
VertexOrder avsdf(const Graph& g, Seed seed);

/**
 * Connectivity-driven greedy insertion.
 *
 * Starts from a random maximum-degree vertex. Each step takes the unplaced
 * vertex with the most placed neighbors (then higher degree, then lower
 * id) and inserts it into the slot of the partial order where its edges to
 * placed neighbors cross the fewest already realized edges, all edges
 * treated as one stack page. Ties between slots go to the smallest total
 * distance to the placed neighbors, then to the leftmost slot.
 * Throws on disconnected input.
 */
VertexOrder con_greedy(const Graph& g, Seed seed);

enum class OrderHeuristic { random, rbfs, avsdf, con_greedy };

std::string_view to_string(OrderHeuristic h);
std::optional<OrderHeuristic> parse_order_heuristic(std::string_view name);

VertexOrder compute_order(OrderHeuristic h, const Graph& g, Seed seed);

/// Order heuristic that performed best per graph class in the reference
/// experiments (used by the "auto" / "paper-best" preset).
OrderHeuristic best_order_for(GraphClass c);

}  // namespace linlay

#endif  // LINLAY_ORDER_HPP
