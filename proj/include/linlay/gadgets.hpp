#ifndef LINLAY_GADGETS_HPP
#define LINLAY_GADGETS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "linlay/core.hpp"

namespace linlay {

struct Connectors {
    Vertex x1, x2, y1, y2, w1, w2;
};

struct GadgetLabels {
    std::pair<Vertex, Vertex> shared{};  ///< (u, v) of the (first) double-K8
    std::pair<Vertex, Vertex> outer{};   ///< (w, z) of the (first) double-K8
    std::optional<Vertex> anchor;        ///< vertex u of the positioning gadget
    std::optional<Connectors> connectors;
    /// Vertex sets of the K8 copies, each listed in its canonical rank order.
    std::vector<std::vector<Vertex>> cliques;
};

struct Gadget {
    Graph graph;
    GadgetLabels labels;
};

/**
 * Two K8s glued on the shared vertices u, v plus the edge wz between the
 * outer vertices. Vertex ids follow the canonical order
 * w, a1..a5, u, v, b1..b5, z (w = 0, u = 6, v = 7, z = 13), so inside the
 * first K8 the ids 0..7 are its v1..v8 and inside the second K8 the
 * sequence 6..13 is.
 */
Gadget double_k8();

/// A conflict-free (2, 1) layout of double_k8() on the canonical order,
/// every length-1 edge on stack 0.
MixedLayout double_k8_witness();

/**
 * Two double-K8s D1 (ids 0..13) and D2 (ids 14..27) plus the anchor u = 28
 * with edges x1y1, x2y2, w1u, w2u. w1 = 13 and w2 = 14 are outer vertices;
 * x1 = 11, x2 = 12 are the non-shared vertices next to w1 in its K8 and
 * y1 = 15, y2 = 16 the ones next to w2.
 */
Gadget positioning_gadget();

/// (2, 1) layout of positioning_gadget(): D1, u, D2 in canonical order,
/// x1y1 and x2y2 on the queue, w1u and w2u on stack 0.
MixedLayout positioning_witness();

/// positioning_gadget() with the anchor identified with vertex 0 of g; the
/// other vertices of g become 29, 30, ... in id order. Has a (2, 1) layout
/// iff g has a 2-stack layout.
Gadget reduce_subhamiltonian(const Graph& g);

/// Turns a 2-stack layout of g into a (2, 1) layout of
/// reduce_subhamiltonian(g): g is rotated to start at vertex 0 and placed
/// between the two double-K8s.
MixedLayout reduction_witness(const Graph& g, const MixedLayout& two_stack);

struct Augmented {
    Graph graph;          ///< original vertices keep their ids 0..n-1
    VertexOrder order;    ///< extends the input order
    std::optional<Vertex> star_center;
};

/// Adds s+1 pairwise crossing edges that nest all of g. The result has an
/// (s, q+1) layout on the extended order iff g has an (s, q) layout on `order`.
Augmented augment_queue_page(const Graph& g, const VertexOrder& order, PageSpec spec);

/**
 * Adds a star Z (center left of g, one leaf between consecutive vertices
 * of g), q nested matchings M_1..M_q of s+2 pairwise crossing edges
 * between the center and g, and a matching M of s pairwise crossing edges
 * around the center. The result has an (s+1, q) layout on the extended
 * order iff g has an (s, q) layout on `order`. Needs n(g) >= 1.
 */
Augmented augment_stack_page(const Graph& g, const VertexOrder& order, PageSpec spec);

}  // namespace linlay

#endif  // LINLAY_GADGETS_HPP
