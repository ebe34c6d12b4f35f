#ifndef GSYM_SEPARATORS_HPP
#define GSYM_SEPARATORS_HPP

#include <optional>
#include <vector>

#include "gsym/graph.hpp"

namespace gsym {

struct PathSystem {
    std::vector<std::vector<int>> paths;
    int count() const { return static_cast<int>(paths.size()); }
};

struct SeparatorResult {
    std::vector<int> separator;
    std::vector<int> left_side;  // vertices of components of G-S meeting A
    std::vector<int> right_side; // vertices of components of G-S meeting B
};

// Maximum system of fully vertex-disjoint A-B paths (disjoint including
// endpoints), by unit-vertex-capacity flow.
PathSystem max_disjoint_paths(const Graph& g, const std::vector<int>& A, const std::vector<int>& B);

// Minimum vertex separator; may contain terminal vertices. |separator| equals
// the maximum number of disjoint paths (Menger).
SeparatorResult min_separator(const Graph& g, const std::vector<int>& A, const std::vector<int>& B);

// The unique minimum A-B separator through v whose A-side is
// inclusion-minimal. Throws NotOnMinSeparator when v lies on no minimum
// separator.
SeparatorResult leftmost_min_separator(const Graph& g, const std::vector<int>& A,
                                       const std::vector<int>& B, int v);

// Exactly |A| disjoint A-C paths through B, provided G[A,B] and G[B,C] are
// biregular and not edgeless with |A| = |C| <= |B|.
PathSystem double_matching_paths(const Graph& g, const std::vector<int>& A,
                                 const std::vector<int>& B, const std::vector<int>& C);

// Graph on path indices: i ~ j iff some connecting path exists whose vertices
// all lie in S and whose internal vertices avoid every given path.
Graph auxiliary_path_graph(const Graph& g, const PathSystem& paths,
                           const std::optional<std::vector<int>>& S = std::nullopt);

// Minimum over nonadjacent pairs of the local vertex connectivity; complete
// graphs return n-1 by convention.
int vertex_connectivity(const Graph& g);

} // namespace gsym

#endif
