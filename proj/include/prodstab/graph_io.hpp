#ifndef PRODSTAB_GRAPH_IO_HPP
#define PRODSTAB_GRAPH_IO_HPP

#include <string>

#include "prodstab/graph.hpp"

namespace prodstab {

// Edge-list format: first line "n m", then m lines "u v" with
// 0 <= u,v < n; "u u" is a loop. Whitespace separated, trailing newline
// optional.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// graph6, loopless simple graphs only, orders up to 62 (single-byte size).
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);  // GraphFormatError when loops present

// Accepts either format: a leading line of two integers selects the edge
// list, anything else is treated as graph6 (an optional ">>graph6<<" header
// is stripped).
Graph parse_graph(const std::string& text);

}  // namespace prodstab

#endif
