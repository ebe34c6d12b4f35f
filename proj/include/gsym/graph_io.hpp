#ifndef GSYM_GRAPH_IO_HPP
#define GSYM_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gsym/graph.hpp"

namespace gsym {

struct ParsedGraph {
    ColoredGraph graph;
    std::vector<std::string> labels;      // dense index -> original token
    std::vector<std::string> color_names; // color id -> original token
};

// Edge-list format: first line "n m", then m lines "u v" with arbitrary
// tokens mapped to indices in first-appearance order, optional lines
// "c <label> <color>", comments starting with '#'.
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_file(const std::string& path);

std::string write_graph(const ParsedGraph& g);

} // namespace gsym

#endif
