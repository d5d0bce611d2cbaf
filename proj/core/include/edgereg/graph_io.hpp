#pragma once

#include <string>
#include <string_view>

#include "edgereg/graph.hpp"

namespace edgereg {

// standard graph6 encoding, no optional ">>graph6<<" header in output.
// parse accepts the header, tolerates one trailing \r or \n, and is otherwise strict:
// bytes outside 63..126, wrong length, or nonzero padding are parse errors (message carries the byte offset).
graph parse_graph6(std::string_view text);
std::string emit_graph6(const graph& g);

// UTF-8 lines "u v" (0-based), '#' starts a comment, optional first line "n <count>";
// duplicate edges are idempotent, loops are parse errors (message carries the line number)
graph parse_edge_list(std::string_view text);

} // namespace edgereg
