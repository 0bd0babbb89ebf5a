#ifndef LINLAY_GEN_HPP
#define LINLAY_GEN_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linlay/core.hpp"

namespace linlay {

using Seed = std::uint64_t;

class GenerationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// K_n.
Graph complete(std::size_t n);

/// Connected graph with exactly m edges, drawn uniformly; the whole edge set
/// is redrawn until it is connected. Needs n-1 <= m <= n(n-1)/2. Very
/// sparse requests (m close to n-1 on many vertices) are almost never
/// connected and fail with GenerationError after 10000 draws.
Graph random_gnm_connected(std::size_t n, std::size_t m, Seed seed);

/// Integer point; coordinates lie in [0, kDelaunayGrid) and stand for
/// x / kDelaunayGrid in the unit square.
struct GridPoint {
    std::int64_t x;
    std::int64_t y;
};
inline constexpr std::int64_t kDelaunayGrid = std::int64_t{1} << 28;

struct Triangulation {
    Graph graph;
    std::vector<GridPoint> points;               // indexed by vertex
    std::vector<std::array<Vertex, 3>> triangles;  // counter-clockwise
};

/// Delaunay triangulation of n random points in the unit square.
///
/// Points are snapped to a 2^28 grid so both predicates are evaluated
/// exactly in integer arithmetic. Construction is a left-to-right hull
/// sweep followed by Lawson edge flips until every edge is locally
/// Delaunay. Cocircular quadruples are never flipped (an edge is flipped
/// only when the opposite point is strictly inside), so ties resolve to
/// whichever diagonal the sweep produced. Duplicate points are redrawn;
/// if the three leftmost points are collinear the point set is redrawn.
Triangulation delaunay_triangulation(std::size_t n, Seed seed);
Graph delaunay(std::size_t n, Seed seed);

/// Sign of the orientation of (a, b, c): > 0 counter-clockwise.
int orient(const GridPoint& a, const GridPoint& b, const GridPoint& c);
/// > 0 iff d lies strictly inside the circumcircle of counter-clockwise abc.
int in_circle(const GridPoint& a, const GridPoint& b, const GridPoint& c, const GridPoint& d);

struct BipartiteInstance {
    Graph graph;
    /// Generation order (colour classes alternate along it) with a
    /// conflict-free (2, 0) page assignment.
    MixedLayout witness;
};

/// Maximal planar bipartite graph with 2n-4 edges (n even, n >= 4).
BipartiteInstance max_planar_bipartite(std::size_t n, Seed seed);

struct Attachment {
    Vertex vertex;
    std::vector<Vertex> clique;
};

struct KTreeInstance {
    Graph graph;
    /// Vertices k+1.. in creation order, each with the clique it was attached to.
    std::vector<Attachment> attachments;
};

/// Random 2-tree (k = 2) or planar 3-tree (k = 3) on n >= k+1 vertices.
KTreeInstance k_tree(std::size_t n, int k, Seed seed);

enum class GraphClass { complete, gnm3, gnm6, delaunay, bipartite, tree2, tree3 };

std::string_view to_string(GraphClass c);
std::optional<GraphClass> parse_graph_class(std::string_view name);

/// One benchmark instance of the class on n vertices.
Graph generate(GraphClass c, std::size_t n, Seed seed);

}  // namespace linlay

#endif  // LINLAY_GEN_HPP
