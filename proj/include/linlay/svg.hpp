#ifndef LINLAY_SVG_HPP
#define LINLAY_SVG_HPP

#include <string>

#include "linlay/core.hpp"

namespace linlay {

struct SvgOptions {
    double spacing = 40;  ///< distance between consecutive vertices
    double margin = 20;
    bool highlight_conflicts = false;
    bool vertex_labels = true;
};

/**
 * Arc diagram of a layout. Vertices sit equally spaced on a horizontal
 * line in layout order; stack-page edges are semicircles above it,
 * queue-page edges below. Each page has its own stroke colour. Arcs carry
 * the classes "arc stack|queue page-<p>", plus "conflict" when
 * highlighting is on and the edge conflicts with another on its page.
 * The output depends only on the inputs.
 */
std::string render_arc_svg(const Graph& g, const MixedLayout& layout, const SvgOptions& options = {});

}  // namespace linlay

#endif  // LINLAY_SVG_HPP
