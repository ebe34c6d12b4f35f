#ifndef GSYM_AUTOMORPHISM_HPP
#define GSYM_AUTOMORPHISM_HPP

#include <string>
#include <vector>

#include "gsym/graph.hpp"
#include "gsym/perm_group.hpp"

namespace gsym {

struct AutResult {
    PermGroup group;
    Partition vertex_orbits;
    std::vector<std::vector<int>> edge_orbits; // indices into graph.edges()
};

// Color- and adjacency-preserving automorphism group via color refinement
// with individualization backtracking.
AutResult automorphisms(const ColoredGraph& g);
AutResult automorphisms(const Graph& g);

// Exhaustive oracle, n <= 9.
PermGroup brute_force_aut(const ColoredGraph& g);

bool is_vertex_transitive(const Graph& g);
bool is_edge_transitive(const Graph& g);

// Edge-transitive connected graphs have connectivity >= minimum degree;
// returns the measured comparison.
bool check_mader(const Graph& g);

// Complete invariant for colored graphs (equal strings iff isomorphic with
// identical color ids). Intended for small graphs.
std::string canonical_form(const ColoredGraph& g);
std::string canonical_form(const Graph& g);

} // namespace gsym

#endif
