#include "linlay/order.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>

#include "linlay/rng.hpp"

namespace linlay {

namespace {

void require_connected(const Graph& g, const char* who) {
    if (!g.is_connected()) throw std::invalid_argument(std::string(who) + " needs a connected graph");
}

}  // namespace

VertexOrder random_order(const Graph& g, Seed seed) {
    std::vector<Vertex> seq(g.n());
    std::iota(seq.begin(), seq.end(), Vertex{0});
    Rng rng(seed);
    rng.shuffle(std::span(seq));
    return VertexOrder::from_sequence(std::move(seq));
}

VertexOrder rbfs(const Graph& g, Seed seed) {
    require_connected(g, "rbfs");
    if (g.n() == 0) return {};
    Rng rng(seed);
    const auto start = static_cast<Vertex>(rng.below(g.n()));

    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> seq;
    seq.reserve(g.n());
    std::deque<Vertex> queue{start};
    seen[start] = 1;
    std::vector<Vertex> next;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        seq.push_back(v);
        next.clear();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) next.push_back(w);
        }
        std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
        });
        for (Vertex w : next) {
            seen[w] = 1;
            queue.push_back(w);
        }
    }
    return VertexOrder::from_sequence(std::move(seq));
}

VertexOrder avsdf(const Graph& g, Seed /*seed*/) {
    require_connected(g, "avsdf");
    if (g.n() == 0) return {};
    Vertex start = 0;
    for (Vertex v = 1; v < g.n(); ++v) {
        if (g.degree(v) < g.degree(start)) start = v;
    }

    std::vector<char> visited(g.n(), 0);
    std::vector<Vertex> seq;
    seq.reserve(g.n());
    std::vector<Vertex> stack{start};
    std::vector<Vertex> next;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        if (visited[v]) continue;
        visited[v] = 1;
        seq.push_back(v);
        next.clear();
        for (Vertex w : g.neighbors(v)) {
            if (!visited[w]) next.push_back(w);
        }
        // Descending (degree, id): the smallest-degree, lowest-id neighbor ends on top.
        std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a > b;
        });
        stack.insert(stack.end(), next.begin(), next.end());
    }
    return VertexOrder::from_sequence(std::move(seq));
}

VertexOrder con_greedy(const Graph& g, Seed seed) {
    require_connected(g, "con_greedy");
    const std::size_t n = g.n();
    if (n == 0) return {};
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    Rng rng(seed);
    std::size_t max_deg = 0;
    for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == max_deg) candidates.push_back(v);
    }

    std::vector<Vertex> seq{candidates[rng.below(candidates.size())]};
    seq.reserve(n);
    std::vector<std::size_t> pos(n, kNone);
    pos[seq[0]] = 0;
    std::vector<std::size_t> placed_nbrs(n, 0);
    for (Vertex w : g.neighbors(seq[0])) ++placed_nbrs[w];

    std::vector<Vertex> nbrs;        // placed neighbors of the vertex being inserted
    std::vector<std::int64_t> cost;  // per neighbor, crossings of the edge to it
    while (seq.size() < n) {
        Vertex v = 0;
        bool found = false;
        for (Vertex c = 0; c < n; ++c) {
            if (pos[c] != kNone) continue;
            if (!found || placed_nbrs[c] > placed_nbrs[v] ||
                (placed_nbrs[c] == placed_nbrs[v] && g.degree(c) > g.degree(v))) {
                v = c;
                found = true;
            }
        }

        nbrs.clear();
        for (Vertex x : g.neighbors(v)) {
            if (pos[x] != kNone) nbrs.push_back(x);
        }
        const std::size_t k = seq.size();

        // Slot 0: the edge to x spans positions [0, pos[x]).
        cost.assign(nbrs.size(), 0);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const std::size_t px = pos[nbrs[i]];
            for (std::size_t a = 0; a < px; ++a) {
                const Vertex w = seq[a];
                if (w == nbrs[i]) continue;
                for (Vertex y : g.neighbors(w)) {
                    if (y == nbrs[i] || pos[y] == kNone) continue;
                    if (pos[y] > px) ++cost[i];  // one endpoint inside, one beyond x
                }
            }
        }
        auto slot_total = [&] { return std::accumulate(cost.begin(), cost.end(), std::int64_t{0}); };
        auto slot_spread = [&](std::size_t t) {
            std::int64_t s = 0;
            for (Vertex x : nbrs) s += std::llabs(2 * static_cast<std::int64_t>(t) - 2 * static_cast<std::int64_t>(pos[x]) - 1);
            return s;
        };

        std::size_t best_slot = 0;
        std::int64_t best_cost = slot_total();
        std::int64_t best_spread = slot_spread(0);
        for (std::size_t t = 0; t < k; ++t) {
            // Move v from slot t to slot t+1, past w = seq[t].
            const Vertex w = seq[t];
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const Vertex x = nbrs[i];
                if (w == x) continue;
                const std::size_t px = pos[x];
                std::int64_t inside = 0, outside = 0;
                if (px > t) {
                    // w leaves the open span (t, px) once v sits after it.
                    for (Vertex y : g.neighbors(w)) {
                        if (y == x || pos[y] == kNone) continue;
                        (pos[y] > t && pos[y] < px ? inside : outside) += 1;
                    }
                    cost[i] += inside - outside;
                } else {
                    // w joins the span between x and v.
                    for (Vertex y : g.neighbors(w)) {
                        if (y == x || pos[y] == kNone) continue;
                        (pos[y] > px && pos[y] < t ? inside : outside) += 1;
                    }
                    cost[i] += outside - inside;
                }
            }
            const std::int64_t total = slot_total();
            if (total > best_cost) continue;
            const std::int64_t spread = slot_spread(t + 1);
            if (total < best_cost || spread < best_spread) {
                best_cost = total;
                best_spread = spread;
                best_slot = t + 1;
            }
        }

        seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(best_slot), v);
        for (std::size_t r = best_slot; r < seq.size(); ++r) pos[seq[r]] = r;
        for (Vertex w : g.neighbors(v)) ++placed_nbrs[w];
    }
    return VertexOrder::from_sequence(std::move(seq));
}

std::string_view to_string(OrderHeuristic h) {
    switch (h) {
        case OrderHeuristic::random: return "random";
        case OrderHeuristic::rbfs: return "rbfs";
        case OrderHeuristic::avsdf: return "avsdf";
        case OrderHeuristic::con_greedy: return "congreedy";
    }
    return "?";
}

std::optional<OrderHeuristic> parse_order_heuristic(std::string_view name) {
    for (OrderHeuristic h : {OrderHeuristic::random, OrderHeuristic::rbfs, OrderHeuristic::avsdf,
                             OrderHeuristic::con_greedy}) {
        if (to_string(h) == name) return h;
    }
    return std::nullopt;
}

VertexOrder compute_order(OrderHeuristic h, const Graph& g, Seed seed) {
    switch (h) {
        case OrderHeuristic::random: return random_order(g, seed);
        case OrderHeuristic::rbfs: return rbfs(g, seed);
        case OrderHeuristic::avsdf: return avsdf(g, seed);
        case OrderHeuristic::con_greedy: return con_greedy(g, seed);
    }
    throw std::invalid_argument("unknown order heuristic");
}

OrderHeuristic best_order_for(GraphClass c) {
    switch (c) {
        case GraphClass::gnm3:
        case GraphClass::gnm6:
        case GraphClass::tree3: return OrderHeuristic::con_greedy;
        case GraphClass::delaunay: return OrderHeuristic::rbfs;
        case GraphClass::bipartite:
        case GraphClass::tree2: return OrderHeuristic::avsdf;
        case GraphClass::complete: return OrderHeuristic::random;  // every order of K_n is equivalent
    }
    return OrderHeuristic::random;
}

}  // namespace linlay
