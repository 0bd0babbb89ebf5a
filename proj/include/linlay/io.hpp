#ifndef LINLAY_IO_HPP
#define LINLAY_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "linlay/core.hpp"

namespace linlay {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge list: "n m", then m lines "u v" (0-based). Lines starting with '#'
// are comments and are skipped on input.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Layout: "s q", the order as n vertex ids, then m lines "u v p".
// Edge lines may come in any order on input but must cover g exactly.
MixedLayout read_layout(std::istream& in, const Graph& g);
void write_layout(std::ostream& out, const Graph& g, const MixedLayout& layout);

// A single line of n space-separated vertex ids.
VertexOrder read_order(std::istream& in, std::size_t n);
void write_order(std::ostream& out, const VertexOrder& order);

Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

}  // namespace linlay

#endif  // LINLAY_IO_HPP
