#ifndef LINLAY_CORE_HPP
#define LINLAY_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace linlay {

using Vertex = std::uint32_t;

/// Page id inside a layout. Ids [0, s) are stack pages, [s, s+q) queue pages.
using PageId = int;
inline constexpr PageId kUnassigned = -1;

/// Undirected edge stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds the canonical form of the edge {a, b}. Throws on a self-loop.
Edge make_edge(Vertex a, Vertex b);

/// Thrown when an input violates a structural invariant of the data model.
class StructureError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Simple undirected graph on the vertices 0..n-1.
 *
 * The edge list is kept sorted lexicographically, which fixes the edge
 * indices used by layouts. Self-loops, duplicates and out-of-range
 * endpoints are rejected.
 */
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t n() const { return adjacency_.size(); }
    std::size_t m() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_[index]; }

    /// Neighbors of v in increasing id order.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

    bool has_edge(Vertex a, Vertex b) const;
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n() == b.n() && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// A linear order of the vertices, stored in both directions.
class VertexOrder {
public:
    VertexOrder() = default;

    /// `sequence[r]` is the vertex placed at rank r. Must be a permutation.
    static VertexOrder from_sequence(std::vector<Vertex> sequence);
    static VertexOrder identity(std::size_t n);

    std::size_t size() const { return sequence_.size(); }
    std::size_t rank(Vertex v) const { return rank_[v]; }
    Vertex at(std::size_t rank) const { return sequence_[rank]; }
    const std::vector<Vertex>& sequence() const { return sequence_; }

    VertexOrder reversed() const;

    friend bool operator==(const VertexOrder& a, const VertexOrder& b) {
        return a.sequence_ == b.sequence_;
    }

private:
    std::vector<Vertex> sequence_;
    std::vector<std::size_t> rank_;
};

/// Number of stack and queue pages.
struct PageSpec {
    int stacks = 1;
    int queues = 1;

    int pages() const { return stacks + queues; }
    bool is_stack(PageId p) const { return p >= 0 && p < stacks; }
    bool is_queue(PageId p) const { return p >= stacks && p < pages(); }

    /// Throws StructureError unless s >= 0, q >= 0 and s + q >= 1.
    void validate() const;

    friend bool operator==(const PageSpec&, const PageSpec&) = default;
};

/// A vertex order plus one page per edge, indexed like `Graph::edges()`.
struct MixedLayout {
    VertexOrder order;
    PageSpec spec;
    std::vector<PageId> page_of;

    friend bool operator==(const MixedLayout&, const MixedLayout&) = default;
};

struct ConflictReport {
    std::vector<std::uint64_t> crossings_per_stack;
    std::vector<std::uint64_t> nestings_per_queue;
    std::uint64_t total = 0;
    double per_edge = 0.0;
};

/// Edge endpoints as ranks under an order, left < right.
struct Interval {
    std::size_t left;
    std::size_t right;
};

inline Interval interval_of(const Edge& e, const VertexOrder& order) {
    const std::size_t a = order.rank(e.u);
    const std::size_t b = order.rank(e.v);
    return a < b ? Interval{a, b} : Interval{b, a};
}

/// Strict interleaving l1 < l2 < r1 < r2 (either way round).
inline bool intervals_cross(Interval a, Interval b) {
    return (a.left < b.left && b.left < a.right && a.right < b.right) ||
           (b.left < a.left && a.left < b.right && b.right < a.right);
}

/// Strict enclosure l1 < l2 < r2 < r1 (either way round).
inline bool intervals_nest(Interval a, Interval b) {
    return (a.left < b.left && b.right < a.right) || (b.left < a.left && a.right < b.right);
}

bool crosses(const Edge& e1, const Edge& e2, const VertexOrder& order);
bool nests(const Edge& e1, const Edge& e2, const VertexOrder& order);

/// Pairwise O(m^2) count of crossings on stack pages and nestings on queue pages.
ConflictReport count_conflicts(const Graph& g, const MixedLayout& layout);

/// Linear sweep with a stack; true iff no two of the edges cross.
bool validate_stack_page(std::span<const Edge> edges, const VertexOrder& order);

/// Linear sweep with a FIFO queue; true iff no edge nests another.
bool validate_queue_page(std::span<const Edge> edges, const VertexOrder& order);

/// Runs the per-page validators over every page of the layout.
bool is_valid_layout(const Graph& g, const MixedLayout& layout);

/// Throws StructureError if the layout does not fit g (sizes, page ids).
void check_layout_shape(const Graph& g, const MixedLayout& layout);

/// Edges of g that the layout puts on page p, in canonical order.
std::vector<Edge> page_edges(const Graph& g, const MixedLayout& layout, PageId p);

}  // namespace linlay

#endif  // LINLAY_CORE_HPP
