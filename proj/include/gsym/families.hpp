#ifndef GSYM_FAMILIES_HPP
#define GSYM_FAMILIES_HPP

#include <functional>
#include <string>
#include <vector>

#include "gsym/graph.hpp"

namespace gsym {

// Finite circular twisted cylindrical grid: t layers of k vertices, straight
// and diagonally shifted edges between consecutive layers, layer index mod t.
Graph twisted_grid(int t, int k);

// Bipartite family on Z_t x [h] against Z_t x C([h],r)^2 with the two-slot
// subset adjacency rule; (2r, 2*C(h-1,r-1)*C(h,r))-biregular.
Graph biregular_family(int t, int h, int r);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen();

struct CorpusFilter {
    bool biconnected = false;
    bool edge_transitive = false;
    bool non_cycle = false;
    int minor_free_h = 0; // keep only graphs with no K_{h+1} minor, when > 0
};

// Every connected graph up to max_n vertices, exactly once per isomorphism
// class; generation by vertex augmentation with canonical-form dedup.
void small_corpus_stream(int max_n, const CorpusFilter& filter,
                         const std::function<void(const Graph&)>& sink);
std::vector<Graph> small_corpus(int max_n, const CorpusFilter& filter = {});

long long binomial(int n, int k);

} // namespace gsym

#endif
