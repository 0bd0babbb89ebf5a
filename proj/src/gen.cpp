#include "linlay/gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "linlay/rng.hpp"

namespace linlay {

Graph complete(std::size_t n) {
    if (n == 0) throw GenerationError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
}

namespace {

constexpr int kMaxConnectivityAttempts = 10000;

// Index k of the lexicographic enumeration of pairs u < v on n vertices.
Edge pair_at(std::uint64_t k, const std::vector<std::uint64_t>& row_start) {
    const auto it = std::upper_bound(row_start.begin(), row_start.end(), k);
    const auto u = static_cast<Vertex>(it - row_start.begin() - 1);
    const auto v = static_cast<Vertex>(u + 1 + (k - row_start[u]));
    return {u, v};
}

}  // namespace

Graph random_gnm_connected(std::size_t n, std::size_t m, Seed seed) {
    if (n == 0) throw GenerationError("random graph needs n >= 1");
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m + 1 < n || m > pairs) {
        throw GenerationError("random connected graph infeasible: n = " + std::to_string(n) +
                              ", m = " + std::to_string(m));
    }
    std::vector<std::uint64_t> row_start(n);
    for (std::size_t u = 1; u < n; ++u) row_start[u] = row_start[u - 1] + (n - u);

    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxConnectivityAttempts; ++attempt) {
        // Floyd's sampling of an m-subset of the pair indices.
        std::unordered_set<std::uint64_t> chosen;
        chosen.reserve(m * 2);
        for (std::uint64_t j = pairs - m; j < pairs; ++j) {
            const std::uint64_t t = rng.below(j + 1);
            if (!chosen.insert(t).second) chosen.insert(j);
        }
        std::vector<std::uint64_t> picked(chosen.begin(), chosen.end());
        std::sort(picked.begin(), picked.end());
        std::vector<Edge> edges;
        edges.reserve(m);
        for (std::uint64_t k : picked) edges.push_back(pair_at(k, row_start));
        Graph g(n, std::move(edges));
        if (g.is_connected()) return g;
    }
    throw GenerationError("no connected graph with n = " + std::to_string(n) + ", m = " + std::to_string(m) +
                          " after " + std::to_string(kMaxConnectivityAttempts) + " draws");
}

int orient(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
    const __int128 det = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                         static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    return (det > 0) - (det < 0);
}

int in_circle(const GridPoint& a, const GridPoint& b, const GridPoint& c, const GridPoint& d) {
    const __int128 adx = a.x - d.x, ady = a.y - d.y;
    const __int128 bdx = b.x - d.x, bdy = b.y - d.y;
    const __int128 cdx = c.x - d.x, cdy = c.y - d.y;
    const __int128 alift = adx * adx + ady * ady;
    const __int128 blift = bdx * bdx + bdy * bdy;
    const __int128 clift = cdx * cdx + cdy * cdy;
    const __int128 det = adx * (bdy * clift - cdy * blift) - ady * (bdx * clift - cdx * blift) +
                         alift * (bdx * cdy - cdx * bdy);
    return (det > 0) - (det < 0);
}

namespace {

using Tri = std::array<Vertex, 3>;
using EdgeKey = std::pair<Vertex, Vertex>;

EdgeKey key_of(Vertex a, Vertex b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

class FlipMesh {
public:
    explicit FlipMesh(const std::vector<GridPoint>& pts) : pts_(pts) {}

    void add(Tri t) {
        const int id = static_cast<int>(tris_.size());
        tris_.push_back(t);
        for (int i = 0; i < 3; ++i) link(t[i], t[(i + 1) % 3], id);
    }

    void legalize() {
        std::vector<EdgeKey> work;
        for (const auto& [k, owners] : owners_) {
            if (owners[1] >= 0) work.push_back(k);
        }
        while (!work.empty()) {
            const EdgeKey k = work.back();
            work.pop_back();
            const auto it = owners_.find(k);
            if (it == owners_.end() || it->second[1] < 0) continue;
            int t1 = it->second[0];
            int t2 = it->second[1];
            // Orient so that t1 holds the directed edge a->b.
            const Vertex a = k.first, b = k.second;
            if (!has_directed(tris_[t1], a, b)) std::swap(t1, t2);
            const Vertex c = third(tris_[t1], a, b);
            const Vertex d = third(tris_[t2], a, b);
            if (in_circle(pts_[a], pts_[b], pts_[c], pts_[d]) <= 0) continue;

            for (int id : {t1, t2}) {
                for (int i = 0; i < 3; ++i) unlink(tris_[id][i], tris_[id][(i + 1) % 3], id);
            }
            // Quad a, d, b, c is counter-clockwise.
            tris_[t1] = {a, d, c};
            tris_[t2] = {d, b, c};
            for (int id : {t1, t2}) {
                for (int i = 0; i < 3; ++i) link(tris_[id][i], tris_[id][(i + 1) % 3], id);
            }
            for (EdgeKey e : {key_of(a, d), key_of(d, b), key_of(b, c), key_of(c, a)}) work.push_back(e);
        }
    }

    const std::vector<Tri>& triangles() const { return tris_; }

private:
    static bool has_directed(const Tri& t, Vertex a, Vertex b) {
        for (int i = 0; i < 3; ++i) {
            if (t[i] == a && t[(i + 1) % 3] == b) return true;
        }
        return false;
    }
    static Vertex third(const Tri& t, Vertex a, Vertex b) {
        for (Vertex v : t) {
            if (v != a && v != b) return v;
        }
        return t[0];
    }

    void link(Vertex a, Vertex b, int id) {
        auto [it, fresh] = owners_.try_emplace(key_of(a, b), std::array<int, 2>{-1, -1});
        (it->second[0] < 0 ? it->second[0] : it->second[1]) = id;
    }
    void unlink(Vertex a, Vertex b, int id) {
        const auto it = owners_.find(key_of(a, b));
        auto& own = it->second;
        if (own[0] == id) {
            own[0] = own[1];
        }
        own[1] = -1;
        if (own[0] < 0) owners_.erase(it);
    }

    const std::vector<GridPoint>& pts_;
    std::vector<Tri> tris_;
    std::map<EdgeKey, std::array<int, 2>> owners_;
};

std::vector<GridPoint> draw_points(std::size_t n, Rng& rng) {
    std::vector<GridPoint> pts;
    pts.reserve(n);
    std::unordered_set<std::uint64_t> seen;
    while (pts.size() < n) {
        const auto x = static_cast<std::int64_t>(rng.below(kDelaunayGrid));
        const auto y = static_cast<std::int64_t>(rng.below(kDelaunayGrid));
        if (seen.insert(static_cast<std::uint64_t>(x) << 32 | static_cast<std::uint64_t>(y)).second) {
            pts.push_back({x, y});
        }
    }
    return pts;
}

}  // namespace

Triangulation delaunay_triangulation(std::size_t n, Seed seed) {
    if (n < 3) throw GenerationError("Delaunay triangulation needs n >= 3");
    Rng rng(seed);
    std::vector<GridPoint> pts;
    std::vector<Vertex> sorted(n);
    for (;;) {
        pts = draw_points(n, rng);
        std::iota(sorted.begin(), sorted.end(), Vertex{0});
        std::sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) {
            return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
        });
        if (orient(pts[sorted[0]], pts[sorted[1]], pts[sorted[2]]) != 0) break;
    }

    FlipMesh mesh(pts);
    // Hull as a counter-clockwise cycle.
    std::vector<Vertex> hull{sorted[0], sorted[1], sorted[2]};
    if (orient(pts[hull[0]], pts[hull[1]], pts[hull[2]]) < 0) std::swap(hull[1], hull[2]);
    mesh.add({hull[0], hull[1], hull[2]});

    for (std::size_t i = 3; i < n; ++i) {
        const Vertex p = sorted[i];
        const std::size_t h = hull.size();
        std::vector<char> visible(h);
        for (std::size_t j = 0; j < h; ++j) {
            visible[j] = orient(pts[hull[j]], pts[hull[(j + 1) % h]], pts[p]) < 0;
        }
        // The visible edges form one circular run; find where it starts.
        std::size_t start = 0;
        while (!(visible[start] && !visible[(start + h - 1) % h])) ++start;
        std::size_t count = 0;
        while (visible[(start + count) % h]) {
            const Vertex a = hull[(start + count) % h];
            const Vertex b = hull[(start + count + 1) % h];
            mesh.add({b, a, p});
            ++count;
        }
        // Vertices strictly inside the visible run leave the hull; p enters.
        std::vector<Vertex> next;
        next.reserve(h + 1);
        for (std::size_t off = 0; off < h; ++off) {
            const Vertex v = hull[(start + off) % h];
            if (off == 0) {
                next.push_back(v);
                next.push_back(p);
            } else if (off >= count) {
                next.push_back(v);
            }
        }
        hull = std::move(next);
    }
    mesh.legalize();

    Triangulation out;
    std::vector<Edge> edges;
    for (const Tri& t : mesh.triangles()) {
        for (int i = 0; i < 3; ++i) edges.push_back(make_edge(t[i], t[(i + 1) % 3]));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.graph = Graph(n, std::move(edges));
    out.points = std::move(pts);
    out.triangles = mesh.triangles();
    return out;
}

Graph delaunay(std::size_t n, Seed seed) { return delaunay_triangulation(n, seed).graph; }

BipartiteInstance max_planar_bipartite(std::size_t n, Seed seed) {
    if (n < 4 || n % 2 != 0) throw GenerationError("max planar bipartite needs even n >= 4");
    Rng rng(seed);
    const std::size_t target = 2 * n - 4;
    const std::size_t fallback_after = 50 * n;
    const std::size_t half = n / 2;

    for (;;) {
        std::vector<Vertex> seq(n);
        std::iota(seq.begin(), seq.end(), Vertex{0});
        rng.shuffle(std::span(seq));

        // Ranks are the working coordinates; even ranks form one colour class.
        std::vector<char> present(n * n, 0);
        std::vector<std::vector<char>> blocked(2, std::vector<char>(n * n, 0));
        std::vector<std::pair<Interval, PageId>> placed;

        auto fits = [&](std::size_t l, std::size_t r, int p) { return !blocked[p][l * n + r]; };
        auto add = [&](std::size_t l, std::size_t r, int p) {
            present[l * n + r] = 1;
            placed.push_back({Interval{l, r}, p});
            auto& blk = blocked[p];
            // Every chord with exactly one endpoint strictly inside (l, r).
            for (std::size_t a = l + 1; a < r; ++a) {
                for (std::size_t b = 0; b < l; ++b) blk[b * n + a] = 1;
                for (std::size_t b = r + 1; b < n; ++b) blk[a * n + b] = 1;
            }
        };
        auto try_add = [&](std::size_t l, std::size_t r) {
            if (present[l * n + r]) return false;
            for (int p = 0; p < 2; ++p) {
                if (fits(l, r, p)) {
                    add(l, r, p);
                    return true;
                }
            }
            return false;
        };

        for (std::size_t i = 0; i + 1 < n; ++i) add(i, i + 1, 0);

        std::size_t rejected = 0;
        bool stuck = false;
        while (placed.size() < target) {
            const std::size_t a = 2 * rng.below(half);
            const std::size_t b = 2 * rng.below(half) + 1;
            if (try_add(std::min(a, b), std::max(a, b))) {
                rejected = 0;
                continue;
            }
            if (++rejected < fallback_after) continue;
            std::vector<Interval> feasible;
            for (std::size_t l = 0; l < n; ++l) {
                for (std::size_t r = l + 1; r < n; r += 2) {
                    if (!present[l * n + r] && (fits(l, r, 0) || fits(l, r, 1))) feasible.push_back({l, r});
                }
            }
            if (feasible.empty()) {
                stuck = true;
                break;
            }
            const Interval pick = feasible[rng.below(feasible.size())];
            try_add(pick.left, pick.right);
            rejected = 0;
        }
        if (stuck) continue;

        std::vector<Edge> edges;
        edges.reserve(target);
        for (const auto& [iv, p] : placed) edges.push_back(make_edge(seq[iv.left], seq[iv.right]));
        Graph g(n, std::move(edges));
        MixedLayout witness{VertexOrder::from_sequence(seq), PageSpec{2, 0}, std::vector<PageId>(g.m())};
        for (const auto& [iv, p] : placed) {
            witness.page_of[*g.edge_index(seq[iv.left], seq[iv.right])] = p;
        }
        return {std::move(g), std::move(witness)};
    }
}

KTreeInstance k_tree(std::size_t n, int k, Seed seed) {
    if (k != 2 && k != 3) throw GenerationError("k-tree generator supports k = 2 or 3");
    const auto base = static_cast<std::size_t>(k) + 1;
    if (n < base) throw GenerationError("k-tree needs n >= k + 1");
    Rng rng(seed);

    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> pool;
    for (Vertex u = 0; u < base; ++u) {
        for (Vertex v = u + 1; v < base; ++v) edges.push_back({u, v});
    }
    if (k == 2) {
        for (const Edge& e : edges) pool.push_back({e.u, e.v});
    } else {
        pool = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    }

    KTreeInstance out;
    for (auto v = static_cast<Vertex>(base); v < n; ++v) {
        const std::size_t pick = rng.below(pool.size());
        const std::vector<Vertex> clique = pool[pick];
        for (Vertex c : clique) edges.push_back(make_edge(c, v));
        if (k == 2) {
            pool.push_back({clique[0], v});
            pool.push_back({clique[1], v});
        } else {
            // The face is split into three; the chosen face stops being a face.
            pool[pick] = {clique[0], clique[1], v};
            pool.push_back({clique[0], clique[2], v});
            pool.push_back({clique[1], clique[2], v});
        }
        out.attachments.push_back({v, clique});
    }
    out.graph = Graph(n, std::move(edges));
    return out;
}

std::string_view to_string(GraphClass c) {
    switch (c) {
        case GraphClass::complete: return "complete";
        case GraphClass::gnm3: return "gnm3";
        case GraphClass::gnm6: return "gnm6";
        case GraphClass::delaunay: return "delaunay";
        case GraphClass::bipartite: return "bipartite";
        case GraphClass::tree2: return "tree2";
        case GraphClass::tree3: return "tree3";
    }
    return "?";
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
    for (GraphClass c : {GraphClass::complete, GraphClass::gnm3, GraphClass::gnm6, GraphClass::delaunay,
                         GraphClass::bipartite, GraphClass::tree2, GraphClass::tree3}) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

Graph generate(GraphClass c, std::size_t n, Seed seed) {
    switch (c) {
        case GraphClass::complete: return complete(n);
        case GraphClass::gnm3: return random_gnm_connected(n, 3 * n, seed);
        case GraphClass::gnm6: return random_gnm_connected(n, 6 * n, seed);
        case GraphClass::delaunay: return delaunay(n, seed);
        case GraphClass::bipartite: return max_planar_bipartite(n, seed).graph;
        case GraphClass::tree2: return k_tree(n, 2, seed).graph;
        case GraphClass::tree3: return k_tree(n, 3, seed).graph;
    }
    throw GenerationError("unknown graph class");
}

}  // namespace linlay
