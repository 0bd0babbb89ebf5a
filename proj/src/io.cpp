#include "linlay/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace linlay {

namespace {

// Pulls whitespace separated unsigned integers, skipping '#' comment lines.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    std::uint64_t next(const char* what) {
        while (pos_ >= line_.size() || !skip_space()) {
            if (!std::getline(in_, line_)) throw ParseError(std::string("unexpected end of input reading ") + what);
            ++line_no_;
            pos_ = 0;
            const auto first = line_.find_first_not_of(" \t\r");
            if (first != std::string::npos && line_[first] == '#') line_.clear();
        }
        std::uint64_t value = 0;
        const char* begin = line_.data() + pos_;
        const char* end = line_.data() + line_.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || (ptr != end && !is_space(*ptr))) {
            throw ParseError("line " + std::to_string(line_no_) + ": expected unsigned integer for " + what);
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    /// Rest of the current line must be blank; the next token starts a new line.
    void end_line(const char* what) {
        if (skip_space()) {
            throw ParseError("line " + std::to_string(line_no_) + ": trailing data after " + what);
        }
        pos_ = line_.size();
    }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

    // Advances past blanks; false if the line is exhausted.
    bool skip_space() {
        while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
        return pos_ < line_.size();
    }

    std::istream& in_;
    std::string line_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

Vertex vertex_in_range(std::uint64_t v, std::size_t n) {
    if (v >= n) throw ParseError("vertex id " + std::to_string(v) + " out of range for n = " + std::to_string(n));
    return static_cast<Vertex>(v);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    TokenReader tokens(in);
    const std::size_t n = tokens.next("vertex count");
    const std::size_t m = tokens.next("edge count");
    tokens.end_line("header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Vertex a = vertex_in_range(tokens.next("edge endpoint"), n);
        const Vertex b = vertex_in_range(tokens.next("edge endpoint"), n);
        tokens.end_line("edge");
        edges.push_back(make_edge(a, b));
    }
    return Graph(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

VertexOrder read_order(std::istream& in, std::size_t n) {
    TokenReader tokens(in);
    std::vector<Vertex> seq;
    seq.reserve(n);
    for (std::size_t i = 0; i < n; ++i) seq.push_back(vertex_in_range(tokens.next("order entry"), n));
    return VertexOrder::from_sequence(std::move(seq));
}

void write_order(std::ostream& out, const VertexOrder& order) {
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r) out << ' ';
        out << order.at(r);
    }
    out << '\n';
}

MixedLayout read_layout(std::istream& in, const Graph& g) {
    TokenReader tokens(in);
    MixedLayout layout;
    layout.spec.stacks = static_cast<int>(tokens.next("stack count"));
    layout.spec.queues = static_cast<int>(tokens.next("queue count"));
    tokens.end_line("page spec");
    layout.spec.validate();

    std::vector<Vertex> seq;
    seq.reserve(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) seq.push_back(vertex_in_range(tokens.next("order entry"), g.n()));
    if (g.n() > 0) tokens.end_line("vertex order");
    layout.order = VertexOrder::from_sequence(std::move(seq));

    layout.page_of.assign(g.m(), kUnassigned);
    for (std::size_t i = 0; i < g.m(); ++i) {
        const Vertex a = vertex_in_range(tokens.next("edge endpoint"), g.n());
        const Vertex b = vertex_in_range(tokens.next("edge endpoint"), g.n());
        const std::uint64_t p = tokens.next("page id");
        tokens.end_line("edge");
        const auto idx = g.edge_index(a, b);
        if (!idx) throw ParseError("layout edge (" + std::to_string(a) + ", " + std::to_string(b) + ") not in graph");
        if (layout.page_of[*idx] != kUnassigned) {
            throw ParseError("layout edge (" + std::to_string(a) + ", " + std::to_string(b) + ") listed twice");
        }
        if (p >= static_cast<std::uint64_t>(layout.spec.pages())) {
            throw ParseError("page id " + std::to_string(p) + " out of range");
        }
        layout.page_of[*idx] = static_cast<PageId>(p);
    }
    return layout;
}

void write_layout(std::ostream& out, const Graph& g, const MixedLayout& layout) {
    check_layout_shape(g, layout);
    out << layout.spec.stacks << ' ' << layout.spec.queues << '\n';
    write_order(out, layout.order);
    for (std::size_t i = 0; i < g.m(); ++i) {
        out << g.edge(i).u << ' ' << g.edge(i).v << ' ' << layout.page_of[i] << '\n';
    }
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(out, g);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace linlay
