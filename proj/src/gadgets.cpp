#include "linlay/gadgets.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <string_view>

namespace linlay {

namespace {

constexpr std::size_t kDoubleK8Size = 14;

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) edges.push_back(make_edge(vs[i], vs[j]));
    }
}

// The two K8s of a double-K8 whose ids start at `base`.
std::array<std::vector<Vertex>, 2> double_k8_cliques(Vertex base) {
    std::array<std::vector<Vertex>, 2> cliques;
    for (Vertex i = 0; i < 8; ++i) {
        cliques[0].push_back(base + i);
        cliques[1].push_back(base + 6 + i);
    }
    return cliques;
}

void add_double_k8(std::vector<Edge>& edges, Vertex base) {
    const auto cliques = double_k8_cliques(base);
    // The shared edge uv lies in both cliques; keep one copy.
    std::vector<Edge> local;
    add_clique(local, cliques[0]);
    add_clique(local, cliques[1]);
    local.push_back(make_edge(base, base + 13));
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    edges.insert(edges.end(), local.begin(), local.end());
}

// Pages of the frozen double-K8 witness on the canonical order, one row
// per vertex u listing the page of (u, v) for v = u+1, u+2, ... among the
// neighbors of u. 0 and 1 are stacks, 2 is the queue.
// clang-format off
constexpr std::array<std::string_view, kDoubleK8Size> kDoubleK8Pages = {
    "02221100",   // 0: 1..7, 13
    "002100",     // 1: 2..7
    "02122",      // 2: 3..7
    "0102",       // 3: 4..7
    "002",        // 4: 5..7
    "02",         // 5: 6, 7
    "0222111",    // 6: 7..13
    "002100",     // 7: 8..13
    "02122",      // 8: 9..13
    "0102",       // 9: 10..13
    "002",        // 10: 11..13
    "02",         // 11: 12, 13
    "0",          // 12: 13
    "",           // 13
};
// clang-format on

}  // namespace

Gadget double_k8() {
    std::vector<Edge> edges;
    add_double_k8(edges, 0);
    Gadget out{Graph(kDoubleK8Size, std::move(edges)), {}};
    out.labels.shared = {6, 7};
    out.labels.outer = {0, 13};
    const auto cliques = double_k8_cliques(0);
    out.labels.cliques = {cliques[0], cliques[1]};
    return out;
}

MixedLayout double_k8_witness() {
    const Gadget dk = double_k8();
    MixedLayout layout{VertexOrder::identity(kDoubleK8Size), PageSpec{2, 1},
                       std::vector<PageId>(dk.graph.m(), kUnassigned)};
    for (Vertex u = 0; u < kDoubleK8Size; ++u) {
        std::size_t k = 0;
        for (Vertex v : dk.graph.neighbors(u)) {
            if (v < u) continue;
            layout.page_of[*dk.graph.edge_index(u, v)] = kDoubleK8Pages[u][k++] - '0';
        }
    }
    return layout;
}

Gadget positioning_gadget() {
    std::vector<Edge> edges;
    add_double_k8(edges, 0);
    add_double_k8(edges, 14);
    const Connectors c{11, 12, 15, 16, 13, 14};
    const Vertex anchor = 28;
    edges.push_back(make_edge(c.x1, c.y1));
    edges.push_back(make_edge(c.x2, c.y2));
    edges.push_back(make_edge(c.w1, anchor));
    edges.push_back(make_edge(c.w2, anchor));

    Gadget out{Graph(29, std::move(edges)), {}};
    out.labels.shared = {6, 7};
    out.labels.outer = {0, 13};
    out.labels.anchor = anchor;
    out.labels.connectors = c;
    for (Vertex base : {Vertex{0}, Vertex{14}}) {
        for (auto& clique : double_k8_cliques(base)) out.labels.cliques.push_back(clique);
    }
    return out;
}

namespace {

// Copies the double-K8 witness pages onto the copy whose ids start at base.
void copy_witness_pages(const Graph& target, MixedLayout& layout, Vertex base) {
    const Gadget dk = double_k8();
    const MixedLayout w = double_k8_witness();
    for (std::size_t i = 0; i < dk.graph.m(); ++i) {
        const Edge& e = dk.graph.edge(i);
        layout.page_of[*target.edge_index(base + e.u, base + e.v)] = w.page_of[i];
    }
}

}  // namespace

MixedLayout positioning_witness() {
    const Gadget pg = positioning_gadget();
    const Connectors& c = *pg.labels.connectors;
    std::vector<Vertex> seq(14);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    seq.push_back(*pg.labels.anchor);
    for (Vertex v = 14; v < 28; ++v) seq.push_back(v);

    MixedLayout layout{VertexOrder::from_sequence(seq), PageSpec{2, 1},
                       std::vector<PageId>(pg.graph.m(), kUnassigned)};
    copy_witness_pages(pg.graph, layout, 0);
    copy_witness_pages(pg.graph, layout, 14);
    layout.page_of[*pg.graph.edge_index(c.x1, c.y1)] = 2;
    layout.page_of[*pg.graph.edge_index(c.x2, c.y2)] = 2;
    layout.page_of[*pg.graph.edge_index(c.w1, *pg.labels.anchor)] = 0;
    layout.page_of[*pg.graph.edge_index(c.w2, *pg.labels.anchor)] = 0;
    return layout;
}

namespace {

Vertex reduced_id(Vertex v, Vertex anchor) { return v == 0 ? anchor : static_cast<Vertex>(anchor + v); }

}  // namespace

Gadget reduce_subhamiltonian(const Graph& g) {
    if (g.n() == 0) throw StructureError("reduction needs a graph with at least one vertex");
    Gadget out = positioning_gadget();
    const Vertex anchor = *out.labels.anchor;
    std::vector<Edge> edges = out.graph.edges();
    for (const Edge& e : g.edges()) edges.push_back(make_edge(reduced_id(e.u, anchor), reduced_id(e.v, anchor)));
    out.graph = Graph(out.graph.n() + g.n() - 1, std::move(edges));
    return out;
}

MixedLayout reduction_witness(const Graph& g, const MixedLayout& two_stack) {
    check_layout_shape(g, two_stack);
    if (two_stack.spec != PageSpec{2, 0}) throw StructureError("reduction witness needs a (2, 0) layout");
    const Gadget red = reduce_subhamiltonian(g);
    const MixedLayout pw = positioning_witness();
    const Gadget pg = positioning_gadget();
    const Vertex anchor = *red.labels.anchor;

    // Rotating a stack layout keeps every page crossing-free.
    std::vector<Vertex> rotated = two_stack.order.sequence();
    std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(two_stack.order.rank(0)),
                rotated.end());

    std::vector<Vertex> seq(14);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    for (Vertex v : rotated) seq.push_back(reduced_id(v, anchor));
    for (Vertex v = 14; v < 28; ++v) seq.push_back(v);

    MixedLayout layout{VertexOrder::from_sequence(seq), PageSpec{2, 1},
                       std::vector<PageId>(red.graph.m(), kUnassigned)};
    for (std::size_t i = 0; i < pg.graph.m(); ++i) {
        const Edge& e = pg.graph.edge(i);
        layout.page_of[*red.graph.edge_index(e.u, e.v)] = pw.page_of[i];
    }
    for (std::size_t i = 0; i < g.m(); ++i) {
        const Edge& e = g.edge(i);
        layout.page_of[*red.graph.edge_index(reduced_id(e.u, anchor), reduced_id(e.v, anchor))] =
            two_stack.page_of[i];
    }
    return layout;
}

Augmented augment_queue_page(const Graph& g, const VertexOrder& order, PageSpec spec) {
    spec.validate();
    if (order.size() != g.n()) throw StructureError("order size does not match the graph");
    const auto n = static_cast<Vertex>(g.n());
    const auto k = static_cast<Vertex>(spec.stacks + 1);

    std::vector<Edge> edges = g.edges();
    std::vector<Vertex> seq;
    seq.reserve(n + 2 * k);
    for (Vertex i = 0; i < k; ++i) seq.push_back(n + i);
    seq.insert(seq.end(), order.sequence().begin(), order.sequence().end());
    for (Vertex i = 0; i < k; ++i) {
        seq.push_back(n + k + i);
        edges.push_back({n + i, n + k + i});
    }
    return {Graph(n + 2 * k, std::move(edges)), VertexOrder::from_sequence(std::move(seq)), std::nullopt};
}

Augmented augment_stack_page(const Graph& g, const VertexOrder& order, PageSpec spec) {
    spec.validate();
    if (order.size() != g.n()) throw StructureError("order size does not match the graph");
    if (g.n() == 0) throw StructureError("stack augmentation needs at least one vertex");
    const auto n = static_cast<Vertex>(g.n());
    const auto s = static_cast<Vertex>(spec.stacks);
    const auto q = static_cast<Vertex>(spec.queues);
    const Vertex width = s + 2;  // edges per matching M_i

    std::vector<Edge> edges = g.edges();
    Vertex next = n;
    auto fresh = [&] { return next++; };

    const Vertex center = fresh();
    std::vector<Vertex> leaves(n - 1);
    for (Vertex& leaf : leaves) {
        leaf = fresh();
        edges.push_back(make_edge(center, leaf));
    }
    // matchings[i] holds M_{i+1} as (left ends, right ends).
    std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> matchings(q);
    for (auto& [lefts, rights] : matchings) {
        for (Vertex j = 0; j < width; ++j) lefts.push_back(fresh());
        for (Vertex j = 0; j < width; ++j) {
            rights.push_back(fresh());
            edges.push_back(make_edge(lefts[j], rights[j]));
        }
    }
    std::vector<Vertex> m_left(s), m_right(s);
    for (Vertex& v : m_left) v = fresh();
    for (Vertex j = 0; j < s; ++j) {
        m_right[j] = fresh();
        edges.push_back(make_edge(m_left[j], m_right[j]));
    }

    std::vector<Vertex> seq(m_left);
    seq.push_back(center);
    for (Vertex i = q; i-- > 0;) seq.insert(seq.end(), matchings[i].first.begin(), matchings[i].first.end());
    for (Vertex i = 0; i < q; ++i) seq.insert(seq.end(), matchings[i].second.begin(), matchings[i].second.end());
    seq.insert(seq.end(), m_right.begin(), m_right.end());
    for (std::size_t r = 0; r < n; ++r) {
        seq.push_back(order.at(r));
        if (r + 1 < n) seq.push_back(leaves[r]);
    }
    return {Graph(next, std::move(edges)), VertexOrder::from_sequence(std::move(seq)), center};
}

}  // namespace linlay
