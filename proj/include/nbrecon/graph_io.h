#pragma once

#include <string>
#include <string_view>

#include "nbrecon/graph.h"

namespace nbrecon {

// Standard graph6: N(n) followed by the upper triangle x(0,1), x(0,2),
// x(1,2), x(0,3), ... packed six bits per printable byte.
std::string encode_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header and trailing whitespace. Throws
// ParseError with the offending byte offset.
Graph decode_graph6(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

// JSON adjacency lists. Two shapes are accepted:
//   {"labels": ["a","b","c"], "adjacency": {"a": ["b"], "b": ["a","c"]}}
//   {"n": 3, "adjacency": [[1], [0, 2], [1]]}
// Labelled graphs serialize to the first shape, unlabeled ones to the second.
Graph parse_graph_json(std::string_view text);
std::string graph_to_json(const Graph& g);

// JSON when the first non-space byte is '{', graph6 otherwise.
Graph read_graph(std::string_view text);

}  // namespace nbrecon
