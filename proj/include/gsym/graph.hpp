#ifndef GSYM_GRAPH_HPP
#define GSYM_GRAPH_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "gsym/error.hpp"

namespace gsym {

using Edge = std::pair<int, int>; // normalized u < v

// Exact rational, used where float rounding is unacceptable (average degree
// against the Kostochka bound).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<=(long long k) const { return num <= k * den; }
    bool operator<(long long k) const { return num < k * den; }
};

// Finite simple undirected graph on vertices 0..n-1. Edges are kept both as a
// sorted pair list and as adjacency lists; both are immutable after
// construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct ColoredGraph {
    Graph graph;
    std::vector<int> color; // one color id per vertex

    ColoredGraph() = default;
    explicit ColoredGraph(Graph g)
        : graph(std::move(g)), color(graph.n(), 0) {}
    ColoredGraph(Graph g, std::vector<int> c);
};

// Disjoint nonempty vertex sets covering 0..n-1. Blocks and their members are
// kept sorted.
struct Partition {
    std::vector<std::vector<int>> blocks;

    Partition() = default;
    Partition(int n, std::vector<std::vector<int>> blocks_);

    static Partition singletons(int n);
    int block_of(int v) const; // linear scan helper for small use sites
};

struct ContractionResult {
    Graph graph;
    std::vector<int> block_map; // original vertex -> block index
};

ContractionResult contract_partition(const Graph& g, const Partition& p);
Graph cartesian_product(const Graph& g, const Graph& h);
Partition twin_classes(const Graph& g);

struct TwinReduction {
    ColoredGraph reduced;
    std::vector<int> class_sizes; // per kept representative, in output order
};
TwinReduction reduce_twins(const ColoredGraph& g);

std::optional<std::pair<int, int>> is_biregular(const Graph& g,
                                                const std::vector<int>& side1,
                                                const std::vector<int>& side2);

Rational average_degree(const Graph& g);

std::vector<int> ball(const Graph& g, int v, int t);

// BFS distances from v; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int v);
bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);
ColoredGraph induced_subgraph(const ColoredGraph& g, const std::vector<int>& verts);

} // namespace gsym

#endif
