#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "idcycle/graph.hpp"

namespace idcycle {

enum class GraphFormat { Graph6, EdgeList };

// Reads an entire stream in the named format. graph6 input must hold exactly
// one graph (a leading ">>graph6<<" header is accepted).
Graph load_graph(std::istream& in, GraphFormat format);
Graph load_graph_file(const std::string& path, GraphFormat format);

// ".g6" / ".graph6" select graph6; everything else is an edge list.
GraphFormat format_from_path(std::string_view path);

Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// "u v" per line, '#' comments and blank lines ignored. The optional comment
// "# n=<count>" fixes the vertex count so trailing isolated vertices survive;
// otherwise n is the largest id plus one.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// One graph6 record per non-empty line. Throws ParseError naming the line.
std::vector<Graph> read_graph6_catalog(std::istream& in);

}  // namespace idcycle
