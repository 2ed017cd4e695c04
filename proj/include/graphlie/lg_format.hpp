#pragma once

#include <string>
#include <string_view>

#include "graphlie/graph.hpp"

namespace graphlie {

// The .lg text format, one statement per line, '#' starts a comment:
//
//   vertices: a b c        (may repeat; names accumulate)
//   labels: u v            (optional; fixes label order, every label must be used)
//   edge a -> b : u
//
// Without a labels line, labels are ordered by first use. serialize() writes a
// labels line only when the graph's label order differs from first-use order.

/// Throws ParseError carrying the 1-based line number.
LabeledDigraph parse_lg(std::string_view text);

std::string serialize_lg(const LabeledDigraph& g);

/// Reads and parses a file. The error message is prefixed with the path.
LabeledDigraph read_lg_file(const std::string& path);

}  // namespace graphlie
