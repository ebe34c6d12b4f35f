#include "gsym/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace gsym {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw Error("ZeroDenominator", "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw Error("BadVertexCount", "negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw Error("SelfLoop", "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw Error("VertexOutOfRange", "edge endpoint outside 0.." + std::to_string(n - 1));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error("DuplicateEdge", "duplicate edge in edge list");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = a == adj_[u] ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

ColoredGraph::ColoredGraph(Graph g, std::vector<int> c)
    : graph(std::move(g)), color(std::move(c)) {
    if (static_cast<int>(color.size()) != graph.n())
        throw Error("ColorCountMismatch", "one color per vertex required");
}

Partition::Partition(int n, std::vector<std::vector<int>> blocks_) : blocks(std::move(blocks_)) {
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw Error("EmptyBlock", "partition block is empty");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v < 0 || v >= n) throw Error("VertexOutOfRange", "block member out of range");
            if (seen[v]) throw Error("OverlappingBlocks", "vertex in two blocks");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n) throw Error("NotCovering", "partition does not cover all vertices");
}

Partition Partition::singletons(int n) {
    Partition p;
    p.blocks.reserve(n);
    for (int v = 0; v < n; ++v) p.blocks.push_back({v});
    return p;
}

int Partition::block_of(int v) const {
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        for (int u : blocks[i])
            if (u == v) return i;
    return -1;
}

namespace {

bool subset_connected(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) return false;
    std::vector<char> in(g.n(), 0), vis(g.n(), 0);
    for (int v : verts) in[v] = 1;
    std::queue<int> q;
    q.push(verts[0]);
    vis[verts[0]] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (in[w] && !vis[w]) {
                vis[w] = 1;
                ++cnt;
                q.push(w);
            }
    }
    return cnt == static_cast<int>(verts.size());
}

} // namespace

ContractionResult contract_partition(const Graph& g, const Partition& p) {
    for (int i = 0; i < static_cast<int>(p.blocks.size()); ++i)
        if (!subset_connected(g, p.blocks[i]))
            throw Error("DisconnectedBlock", "block " + std::to_string(i) + " is not connected");

    std::vector<int> block_map(g.n(), -1);
    for (int i = 0; i < static_cast<int>(p.blocks.size()); ++i)
        for (int v : p.blocks[i]) block_map[v] = i;

    std::set<Edge> qedges;
    for (auto [u, v] : g.edges()) {
        int bu = block_map[u], bv = block_map[v];
        if (bu != bv) qedges.insert({std::min(bu, bv), std::max(bu, bv)});
    }
    Graph q(static_cast<int>(p.blocks.size()), {qedges.begin(), qedges.end()});
    return {std::move(q), std::move(block_map)};
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int nh = h.n();
    auto idx = [nh](int a, int b) { return a * nh + b; };
    std::vector<Edge> edges;
    for (int a = 0; a < g.n(); ++a)
        for (auto [b1, b2] : h.edges())
            edges.push_back({idx(a, b1), idx(a, b2)});
    for (int b = 0; b < nh; ++b)
        for (auto [a1, a2] : g.edges())
            edges.push_back({idx(a1, b), idx(a2, b)});
    return Graph(g.n() * nh, std::move(edges));
}

Partition twin_classes(const Graph& g) {
    int n = g.n();
    std::map<std::vector<int>, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[g.neighbors(v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(classes.size());
    for (auto& [nbrs, members] : classes) blocks.push_back(members);
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return Partition(n, std::move(blocks));
}

TwinReduction reduce_twins(const ColoredGraph& g) {
    int n = g.graph.n();
    // twins must agree on color as well, otherwise no automorphism swaps them
    std::map<std::pair<std::vector<int>, int>, std::vector<int>> classes;
    for (int v = 0; v < n; ++v)
        classes[{g.graph.neighbors(v), g.color[v]}].push_back(v);

    std::vector<std::vector<int>> blocks;
    for (auto& [key, members] : classes) blocks.push_back(members);
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });

    std::vector<int> keep, sizes;
    for (auto& b : blocks) {
        keep.push_back(b[0]);
        sizes.push_back(static_cast<int>(b.size()));
    }
    std::set<Edge> edges;
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.graph.has_edge(keep[i], keep[j]))
                edges.insert({static_cast<int>(i), static_cast<int>(j)});
    std::vector<int> colors;
    colors.reserve(keep.size());
    for (int v : keep) colors.push_back(g.color[v]);
    ColoredGraph reduced(Graph(static_cast<int>(keep.size()), {edges.begin(), edges.end()}),
                         std::move(colors));
    return {std::move(reduced), std::move(sizes)};
}

std::optional<std::pair<int, int>> is_biregular(const Graph& g,
                                                const std::vector<int>& side1,
                                                const std::vector<int>& side2) {
    std::vector<char> in1(g.n(), 0), in2(g.n(), 0);
    for (int v : side1) in1[v] = 1;
    for (int v : side2) {
        if (in1[v]) throw Error("OverlappingSides", "sides are not disjoint");
        in2[v] = 1;
    }
    auto cross_degree = [&](int v, const std::vector<char>& other) {
        int d = 0;
        for (int w : g.neighbors(v)) d += other[w];
        return d;
    };
    int d1 = 0, d2 = 0;
    for (size_t i = 0; i < side1.size(); ++i) {
        int d = cross_degree(side1[i], in2);
        if (i == 0) d1 = d;
        else if (d != d1) return std::nullopt;
    }
    for (size_t i = 0; i < side2.size(); ++i) {
        int d = cross_degree(side2[i], in1);
        if (i == 0) d2 = d;
        else if (d != d2) return std::nullopt;
    }
    return std::make_pair(d1, d2);
}

Rational average_degree(const Graph& g) {
    if (g.n() == 0) throw Error("EmptyGraph", "average degree of empty graph");
    return Rational(2LL * g.m(), g.n());
}

std::vector<int> bfs_distances(const Graph& g, int v) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<int> ball(const Graph& g, int v, int t) {
    if (v < 0 || v >= g.n()) throw Error("VertexOutOfRange", "ball center out of range");
    auto dist = bfs_distances(g, v);
    std::vector<int> out;
    for (int u = 0; u < g.n(); ++u)
        if (dist[u] >= 0 && dist[u] <= t) out.push_back(u);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> vis(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (vis[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        vis[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!vis[w]) {
                    vis[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> idx(g.n(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) idx[verts[i]] = i;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (idx[u] >= 0 && idx[v] >= 0)
            edges.push_back({idx[u], idx[v]});
    return Graph(static_cast<int>(verts.size()), std::move(edges));
}

ColoredGraph induced_subgraph(const ColoredGraph& g, const std::vector<int>& verts) {
    std::vector<int> colors;
    colors.reserve(verts.size());
    for (int v : verts) colors.push_back(g.color[v]);
    return ColoredGraph(induced_subgraph(g.graph, verts), std::move(colors));
}

} // namespace gsym
