#include "linlay/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace linlay {

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw StructureError("self-loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(n) {
    for (Edge& e : edges_) {
        e = make_edge(e.u, e.v);
        if (e.v >= n) {
            throw StructureError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                 ") out of range for n = " + std::to_string(n));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw StructureError("duplicate edge (" + std::to_string(dup->u) + ", " +
                             std::to_string(dup->v) + ")");
    }
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
    if (a == b || a >= n() || b >= n()) return std::nullopt;
    const Edge key = make_edge(a, b);
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::is_connected() const {
    if (n() <= 1) return true;
    std::vector<char> seen(n(), 0);
    std::vector<Vertex> todo{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!todo.empty()) {
        const Vertex v = todo.back();
        todo.pop_back();
        for (Vertex w : adjacency_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                todo.push_back(w);
            }
        }
    }
    return reached == n();
}

VertexOrder VertexOrder::from_sequence(std::vector<Vertex> sequence) {
    VertexOrder order;
    order.rank_.assign(sequence.size(), sequence.size());
    for (std::size_t r = 0; r < sequence.size(); ++r) {
        const Vertex v = sequence[r];
        if (v >= sequence.size() || order.rank_[v] != sequence.size()) {
            throw StructureError("vertex order is not a permutation of 0.." +
                                 std::to_string(sequence.size() == 0 ? 0 : sequence.size() - 1));
        }
        order.rank_[v] = r;
    }
    order.sequence_ = std::move(sequence);
    return order;
}

VertexOrder VertexOrder::identity(std::size_t n) {
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    return from_sequence(std::move(seq));
}

VertexOrder VertexOrder::reversed() const {
    return from_sequence(std::vector<Vertex>(sequence_.rbegin(), sequence_.rend()));
}

void PageSpec::validate() const {
    if (stacks < 0 || queues < 0 || stacks + queues < 1) {
        throw StructureError("page spec needs s >= 0, q >= 0 and s + q >= 1 (got s = " +
                             std::to_string(stacks) + ", q = " + std::to_string(queues) + ")");
    }
}

bool crosses(const Edge& e1, const Edge& e2, const VertexOrder& order) {
    return intervals_cross(interval_of(e1, order), interval_of(e2, order));
}

bool nests(const Edge& e1, const Edge& e2, const VertexOrder& order) {
    return intervals_nest(interval_of(e1, order), interval_of(e2, order));
}

void check_layout_shape(const Graph& g, const MixedLayout& layout) {
    layout.spec.validate();
    if (layout.order.size() != g.n()) {
        throw StructureError("layout order has " + std::to_string(layout.order.size()) +
                             " vertices, graph has " + std::to_string(g.n()));
    }
    if (layout.page_of.size() != g.m()) {
        throw StructureError("layout pages " + std::to_string(layout.page_of.size()) +
                             " edges, graph has " + std::to_string(g.m()));
    }
    for (std::size_t i = 0; i < g.m(); ++i) {
        const PageId p = layout.page_of[i];
        if (p < 0 || p >= layout.spec.pages()) {
            throw StructureError("edge (" + std::to_string(g.edge(i).u) + ", " +
                                 std::to_string(g.edge(i).v) + ") has no valid page");
        }
    }
}

ConflictReport count_conflicts(const Graph& g, const MixedLayout& layout) {
    check_layout_shape(g, layout);
    const PageSpec& spec = layout.spec;
    std::vector<std::vector<Interval>> pages(static_cast<std::size_t>(spec.pages()));
    for (std::size_t i = 0; i < g.m(); ++i) {
        pages[static_cast<std::size_t>(layout.page_of[i])].push_back(interval_of(g.edge(i), layout.order));
    }

    ConflictReport report;
    for (PageId p = 0; p < spec.pages(); ++p) {
        const auto& page = pages[static_cast<std::size_t>(p)];
        const bool stack = spec.is_stack(p);
        std::uint64_t count = 0;
        for (std::size_t i = 0; i < page.size(); ++i) {
            for (std::size_t j = i + 1; j < page.size(); ++j) {
                if (stack ? intervals_cross(page[i], page[j]) : intervals_nest(page[i], page[j])) ++count;
            }
        }
        (stack ? report.crossings_per_stack : report.nestings_per_queue).push_back(count);
        report.total += count;
    }
    report.per_edge = g.m() == 0 ? 0.0 : static_cast<double>(report.total) / static_cast<double>(g.m());
    return report;
}

namespace {

// Buckets the intervals by left rank; inside a bucket the right ranks are
// descending (longest first) or ascending, without a comparison sort.
struct SweepBuckets {
    std::vector<std::vector<std::size_t>> opens;  // right ranks, per left rank
    std::vector<std::size_t> closes;              // number of edges per right rank
};

SweepBuckets bucket_intervals(std::span<const Edge> edges, const VertexOrder& order, bool longest_first) {
    const std::size_t n = order.size();
    std::vector<std::vector<std::size_t>> by_right(n);
    SweepBuckets b{std::vector<std::vector<std::size_t>>(n), std::vector<std::size_t>(n, 0)};
    for (const Edge& e : edges) {
        const Interval iv = interval_of(e, order);
        by_right[iv.right].push_back(iv.left);
        ++b.closes[iv.right];
    }
    auto distribute = [&](std::size_t r) {
        for (std::size_t l : by_right[r]) b.opens[l].push_back(r);
    };
    if (longest_first) {
        for (std::size_t r = n; r-- > 0;) distribute(r);
    } else {
        for (std::size_t r = 0; r < n; ++r) distribute(r);
    }
    return b;
}

}  // namespace

bool validate_stack_page(std::span<const Edge> edges, const VertexOrder& order) {
    const SweepBuckets b = bucket_intervals(edges, order, true);
    std::vector<std::size_t> stack;
    stack.reserve(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t k = 0; k < b.closes[i]; ++k) {
            if (stack.empty() || stack.back() != i) return false;
            stack.pop_back();
        }
        for (std::size_t r : b.opens[i]) stack.push_back(r);
    }
    return true;
}

bool validate_queue_page(std::span<const Edge> edges, const VertexOrder& order) {
    const SweepBuckets b = bucket_intervals(edges, order, false);
    std::vector<std::size_t> queue;
    queue.reserve(edges.size());
    std::size_t front = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t k = 0; k < b.closes[i]; ++k) {
            if (front == queue.size() || queue[front] != i) return false;
            ++front;
        }
        for (std::size_t r : b.opens[i]) queue.push_back(r);
    }
    return true;
}

std::vector<Edge> page_edges(const Graph& g, const MixedLayout& layout, PageId p) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < g.m(); ++i) {
        if (layout.page_of[i] == p) out.push_back(g.edge(i));
    }
    return out;
}

bool is_valid_layout(const Graph& g, const MixedLayout& layout) {
    check_layout_shape(g, layout);
    for (PageId p = 0; p < layout.spec.pages(); ++p) {
        const std::vector<Edge> edges = page_edges(g, layout, p);
        const bool ok = layout.spec.is_stack(p) ? validate_stack_page(edges, layout.order)
                                                : validate_queue_page(edges, layout.order);
        if (!ok) return false;
    }
    return true;
}

}  // namespace linlay
