// Independent reference implementations used only by the tests. Nothing
// here calls the library's conflict predicates or validators.
#ifndef LINLAY_TESTS_ORACLES_HPP
#define LINLAY_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <queue>

#include "linlay/core.hpp"
#include "linlay/gen.hpp"

namespace oracle {

using linlay::Edge;
using linlay::Graph;
using linlay::MixedLayout;
using linlay::Vertex;

enum class Pattern { disjoint_or_shared, crossing, nesting, separate };

// Sorts the four endpoint ranks and reads off which edge owns each slot:
// ABAB is a crossing, ABBA a nesting, AABB two separate intervals.
inline Pattern pattern(std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return Pattern::disjoint_or_shared;
    std::array<std::pair<std::size_t, char>, 4> slots{{{a1, 'A'}, {a2, 'A'}, {b1, 'B'}, {b2, 'B'}}};
    std::sort(slots.begin(), slots.end());
    std::array<char, 4> w{};
    for (int i = 0; i < 4; ++i) w[i] = slots[i].second;
    if (w[0] == w[2]) return Pattern::crossing;  // ABAB or BABA
    if (w[0] == w[3]) return Pattern::nesting;   // ABBA or BAAB
    return Pattern::separate;
}

inline std::vector<std::size_t> ranks_of(const std::vector<Vertex>& sequence) {
    std::vector<std::size_t> rank(sequence.size());
    for (std::size_t i = 0; i < sequence.size(); ++i) rank[sequence[i]] = i;
    return rank;
}

inline Pattern pattern(const Edge& a, const Edge& b, const std::vector<std::size_t>& rank) {
    return pattern(rank[a.u], rank[a.v], rank[b.u], rank[b.v]);
}

inline std::uint64_t crossings(const std::vector<Edge>& edges, const std::vector<std::size_t>& rank) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) c += pattern(edges[i], edges[j], rank) == Pattern::crossing;
    return c;
}

inline std::uint64_t nestings(const std::vector<Edge>& edges, const std::vector<std::size_t>& rank) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) c += pattern(edges[i], edges[j], rank) == Pattern::nesting;
    return c;
}

// Conflicts of a full layout: crossings on stacks plus nestings on queues.
inline std::uint64_t conflicts(const Graph& g, const MixedLayout& layout) {
    const auto rank = ranks_of(layout.order.sequence());
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < g.m(); ++i) {
        for (std::size_t j = i + 1; j < g.m(); ++j) {
            if (layout.page_of[i] != layout.page_of[j]) continue;
            const Pattern p = pattern(g.edge(i), g.edge(j), rank);
            total += layout.spec.is_stack(layout.page_of[i]) ? p == Pattern::crossing : p == Pattern::nesting;
        }
    }
    return total;
}

// Every conflict-free stack or queue page on n >= 2 vertices holds at most
// 2n - 3 edges. Returns false if some page of a valid layout breaks that.
inline bool page_sizes_plausible(const Graph& g, const MixedLayout& layout) {
    if (g.n() < 2) return true;
    std::vector<std::size_t> size(static_cast<std::size_t>(layout.spec.pages()), 0);
    for (auto p : layout.page_of) ++size[static_cast<std::size_t>(p)];
    for (std::size_t s : size) {
        if (s > 2 * g.n() - 3) return false;
    }
    return true;
}

// Naive existence test: every order times every page assignment.
inline bool layout_exists(const Graph& g, linlay::PageSpec spec) {
    const std::size_t n = g.n(), m = g.m();
    const auto k = static_cast<std::size_t>(spec.pages());
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    std::size_t combos = 1;
    for (std::size_t i = 0; i < m; ++i) combos *= k;
    std::vector<linlay::PageId> page(m);
    do {
        const auto rank = ranks_of(seq);
        for (std::size_t code = 0; code < combos; ++code) {
            std::size_t c = code;
            for (std::size_t e = 0; e < m; ++e, c /= k) page[e] = static_cast<linlay::PageId>(c % k);
            bool ok = true;
            for (std::size_t i = 0; ok && i < m; ++i) {
                for (std::size_t j = i + 1; ok && j < m; ++j) {
                    if (page[i] != page[j]) continue;
                    const Pattern p = pattern(g.edge(i), g.edge(j), rank);
                    ok = spec.is_stack(page[i]) ? p != Pattern::crossing : p != Pattern::nesting;
                }
            }
            if (ok) return true;
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    return m == 0;
}

// Naive assignment test for a fixed order.
inline bool assignment_exists(const Graph& g, const std::vector<Vertex>& sequence, linlay::PageSpec spec) {
    const auto rank = ranks_of(sequence);
    const std::size_t m = g.m();
    const auto k = static_cast<std::size_t>(spec.pages());
    std::size_t combos = 1;
    for (std::size_t i = 0; i < m; ++i) combos *= k;
    for (std::size_t code = 0; code < combos; ++code) {
        std::vector<linlay::PageId> page(m);
        std::size_t c = code;
        for (std::size_t e = 0; e < m; ++e, c /= k) page[e] = static_cast<linlay::PageId>(c % k);
        bool ok = true;
        for (std::size_t i = 0; ok && i < m; ++i) {
            for (std::size_t j = i + 1; ok && j < m; ++j) {
                if (page[i] != page[j]) continue;
                const Pattern p = pattern(g.edge(i), g.edge(j), rank);
                ok = spec.is_stack(page[i]) ? p != Pattern::crossing : p != Pattern::nesting;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Connected graphs on n vertices, one per isomorphism class.
inline std::vector<Graph> connected_graphs_up_to_iso(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) slots.push_back({a, b});
    std::vector<std::vector<Vertex>> perms;
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    auto index_of = [&](Vertex a, Vertex b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::size_t>(std::find(slots.begin(), slots.end(), std::pair{a, b}) - slots.begin());
    };
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::uint64_t canon = UINT64_MAX;
        for (const auto& perm : perms) {
            std::uint64_t image = 0;
            for (std::size_t i = 0; i < slots.size(); ++i) {
                if (mask >> i & 1) image |= std::uint64_t{1} << index_of(perm[slots[i].first], perm[slots[i].second]);
            }
            canon = std::min(canon, image);
        }
        if (!seen.insert(canon).second) continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask >> i & 1) edges.push_back({slots[i].first, slots[i].second});
        }
        Graph g(n, edges);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

inline bool two_colourable(const Graph& g) {
    std::vector<int> colour(g.n(), -1);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    q.push(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Exact incircle determinant, written out independently of the library.
inline __int128 incircle_det(const linlay::GridPoint& a, const linlay::GridPoint& b, const linlay::GridPoint& c, const linlay::GridPoint& d) {
    const __int128 adx = a.x - d.x, ady = a.y - d.y;
    const __int128 bdx = b.x - d.x, bdy = b.y - d.y;
    const __int128 cdx = c.x - d.x, cdy = c.y - d.y;
    const __int128 ad = adx * adx + ady * ady;
    const __int128 bd = bdx * bdx + bdy * bdy;
    const __int128 cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
}

inline __int128 orient_det(const linlay::GridPoint& a, const linlay::GridPoint& b, const linlay::GridPoint& c) {
    return static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

inline std::size_t hull_size(const std::vector<linlay::GridPoint>& pts) {
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
    });
    std::vector<std::size_t> hull;
    for (int pass = 0; pass < 2; ++pass) {
        const std::size_t base = hull.size();
        for (std::size_t i : idx) {
            while (hull.size() >= base + 2 && orient_det(pts[hull[hull.size() - 2]], pts[hull.back()], pts[i]) <= 0)
                hull.pop_back();
            hull.push_back(i);
        }
        hull.pop_back();
        std::reverse(idx.begin(), idx.end());
    }
    return hull.size();
}

// Replays the attachments of a 3-tree as face subdivisions of K4. Success
// proves the graph is a stacked triangulation, hence planar.
inline bool stacked_triangulation(const linlay::KTreeInstance& t) {
    const std::size_t n = t.graph.n();
    std::set<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    std::size_t edges = 6;
    for (const linlay::Attachment& a : t.attachments) {
        if (a.clique.size() != 3) return false;
        std::array<Vertex, 3> f{a.clique[0], a.clique[1], a.clique[2]};
        std::sort(f.begin(), f.end());
        if (faces.erase(f) != 1) return false;
        for (int skip = 0; skip < 3; ++skip) {
            std::array<Vertex, 3> g{a.vertex, f[(skip + 1) % 3], f[(skip + 2) % 3]};
            std::sort(g.begin(), g.end());
            faces.insert(g);
            if (!t.graph.has_edge(a.vertex, f[skip])) return false;
        }
        edges += 3;
    }
    return faces.size() == 2 * n - 4 && edges == t.graph.m();
}

/**
 * Stack-queue assignment for (1, 1) restated globally: edges are handled
 * by right rank, innermost first. c(e) and n(e) are the assigned stack
 * (queue) edges crossing (nesting) e; s_e counts edges that start inside
 * e and end after it, q_e edges that start before e and end after it.
 */
inline std::vector<linlay::PageId> stack_queue_1_1(const Graph& g, const std::vector<Vertex>& sequence) {
    const auto rank = ranks_of(sequence);
    const std::size_t m = g.m();
    std::vector<std::pair<std::size_t, std::size_t>> iv(m);
    for (std::size_t e = 0; e < m; ++e) iv[e] = std::minmax(rank[g.edge(e).u], rank[g.edge(e).v]);
    std::vector<std::size_t> by_close(m);
    std::iota(by_close.begin(), by_close.end(), std::size_t{0});
    std::sort(by_close.begin(), by_close.end(), [&](std::size_t a, std::size_t b) {
        if (iv[a].second != iv[b].second) return iv[a].second < iv[b].second;
        return iv[a].first > iv[b].first;
    });
    std::vector<linlay::PageId> page(m, linlay::kUnassigned);
    for (std::size_t e : by_close) {
        const auto [l, r] = iv[e];
        std::uint64_t c = 0, nn = 0, s = 0, q = 0;
        for (std::size_t f = 0; f < m; ++f) {
            if (f == e) continue;
            const auto [fl, fr] = iv[f];
            if (page[f] == 0 && pattern(l, r, fl, fr) == Pattern::crossing) ++c;
            if (page[f] == 1 && pattern(l, r, fl, fr) == Pattern::nesting) ++nn;
            if (l < fl && fl < r && fr > r) ++s;
            if (fl < l && fr > r) ++q;
        }
        page[e] = 2 * c + s <= 2 * nn + q ? 0 : 1;
    }
    return page;
}

}  // namespace oracle

#endif  // LINLAY_TESTS_ORACLES_HPP
