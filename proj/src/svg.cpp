#include "linlay/svg.hpp"

#include <array>
#include <charconv>

namespace linlay {

namespace {

constexpr std::array<std::string_view, 10> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                       "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

// Fixed-point with up to two decimals, independent of the locale.
std::string num(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 2);
    std::string s(buf, res.ptr);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

}  // namespace

std::string render_arc_svg(const Graph& g, const MixedLayout& layout, const SvgOptions& options) {
    check_layout_shape(g, layout);
    const std::size_t n = g.n();
    const double span = n > 1 ? options.spacing * static_cast<double>(n - 1) : 0;
    const double width = span + 2 * options.margin;
    const double half = span / 2 + options.margin;
    const double axis = half;
    const double height = 2 * half;

    std::vector<char> conflicted(g.m(), 0);
    if (options.highlight_conflicts) {
        for (std::size_t e = 0; e < g.m(); ++e) {
            for (std::size_t f = e + 1; f < g.m(); ++f) {
                if (layout.page_of[e] != layout.page_of[f]) continue;
                const bool hit = layout.spec.is_stack(layout.page_of[e])
                                     ? crosses(g.edge(e), g.edge(f), layout.order)
                                     : nests(g.edge(e), g.edge(f), layout.order);
                if (hit) conflicted[e] = conflicted[f] = 1;
            }
        }
    }

    auto x_of = [&](std::size_t rank) { return options.margin + options.spacing * static_cast<double>(rank); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    out += "<line class=\"spine\" x1=\"" + num(options.margin) + "\" y1=\"" + num(axis) + "\" x2=\"" +
           num(options.margin + span) + "\" y2=\"" + num(axis) + "\" stroke=\"#000\" stroke-width=\"1\"/>\n";

    for (std::size_t e = 0; e < g.m(); ++e) {
        const Interval iv = interval_of(g.edge(e), layout.order);
        const PageId p = layout.page_of[e];
        const bool stack = layout.spec.is_stack(p);
        const double x1 = x_of(iv.left);
        const double x2 = x_of(iv.right);
        const double r = (x2 - x1) / 2;
        // Sweep flag 1 draws the upper half going right, 0 the lower half.
        out += "<path class=\"arc ";
        out += stack ? "stack" : "queue";
        out += " page-" + std::to_string(p);
        if (conflicted[e]) out += " conflict";
        out += "\" d=\"M " + num(x1) + " " + num(axis) + " A " + num(r) + " " + num(r) + " 0 0 " +
               (stack ? "1 " : "0 ") + num(x2) + " " + num(axis) + "\" fill=\"none\" stroke=\"" +
               std::string(conflicted[e] ? "#000" : kPalette[static_cast<std::size_t>(p) % kPalette.size()]) +
               "\" stroke-width=\"" + (conflicted[e] ? "2.5" : "1.5") + "\"/>\n";
    }

    for (std::size_t rank = 0; rank < n; ++rank) {
        const Vertex v = layout.order.at(rank);
        out += "<circle class=\"vertex\" cx=\"" + num(x_of(rank)) + "\" cy=\"" + num(axis) +
               "\" r=\"4\" fill=\"#fff\" stroke=\"#000\"/>\n";
        if (options.vertex_labels) {
            out += "<text x=\"" + num(x_of(rank)) + "\" y=\"" + num(axis + 16) +
                   "\" font-size=\"10\" text-anchor=\"middle\">" + std::to_string(v) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace linlay
