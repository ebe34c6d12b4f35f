#include "gsym/separators.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace gsym {

namespace {

// Unit-capacity max flow on the vertex-split network. Node ids: in(v) = 2v,
// out(v) = 2v+1, source = 2n, sink = 2n+1. Uncapacitated vertices (flow
// endpoints for internally-disjoint path queries) get an INF in->out arc.
struct FlowNetwork {
    struct Arc {
        int to, cap, orig;
        size_t rev;
    };

    explicit FlowNetwork(int node_count) : adj(node_count) {}

    void add_arc(int from, int to, int cap) {
        adj[from].push_back({to, cap, cap, adj[to].size()});
        adj[to].push_back({from, 0, 0, adj[from].size() - 1});
    }

    int augment_all() {
        int total = 0;
        while (augment_one()) ++total;
        return total;
    }

    bool augment_one() {
        int n = static_cast<int>(adj.size());
        std::vector<std::pair<int, int>> pred(n, {-1, -1}); // (node, arc index)
        std::vector<char> vis(n, 0);
        std::queue<int> q;
        q.push(source);
        vis[source] = 1;
        while (!q.empty() && !vis[sink]) {
            int v = q.front();
            q.pop();
            for (size_t i = 0; i < adj[v].size(); ++i) {
                const Arc& a = adj[v][i];
                if (a.cap > 0 && !vis[a.to]) {
                    vis[a.to] = 1;
                    pred[a.to] = {v, static_cast<int>(i)};
                    q.push(a.to);
                }
            }
        }
        if (!vis[sink]) return false;
        int v = sink;
        while (v != source) {
            auto [u, ai] = pred[v];
            Arc& a = adj[u][ai];
            a.cap -= 1;
            adj[a.to][a.rev].cap += 1;
            v = u;
        }
        return true;
    }

    std::vector<char> residual_reachable() const {
        std::vector<char> vis(adj.size(), 0);
        std::queue<int> q;
        q.push(source);
        vis[source] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : adj[v])
                if (a.cap > 0 && !vis[a.to]) {
                    vis[a.to] = 1;
                    q.push(a.to);
                }
        }
        return vis;
    }

    std::vector<std::vector<Arc>> adj;
    int source = 0, sink = 0;
};

constexpr int INF = 1 << 28;

FlowNetwork build_network(const Graph& g, const std::vector<int>& A, const std::vector<int>& B,
                          const std::vector<char>& removed, const std::vector<char>& uncapped) {
    int n = g.n();
    FlowNetwork net(2 * n + 2);
    net.source = 2 * n;
    net.sink = 2 * n + 1;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) net.add_arc(2 * v, 2 * v + 1, uncapped[v] ? INF : 1);
    for (auto [u, v] : g.edges()) {
        if (removed[u] || removed[v]) continue;
        net.add_arc(2 * u + 1, 2 * v, INF);
        net.add_arc(2 * v + 1, 2 * u, INF);
    }
    for (int a : A)
        if (!removed[a]) net.add_arc(net.source, 2 * a, INF);
    for (int b : B)
        if (!removed[b]) net.add_arc(2 * b + 1, net.sink, INF);
    return net;
}

void check_terminals(const Graph& g, const std::vector<int>& A, const std::vector<int>& B) {
    if (A.empty() || B.empty()) throw Error("EmptyTerminalSet", "terminal set is empty");
    std::vector<char> inA(g.n(), 0);
    for (int a : A) {
        if (a < 0 || a >= g.n()) throw Error("VertexOutOfRange", "terminal out of range");
        inA[a] = 1;
    }
    for (int b : B) {
        if (b < 0 || b >= g.n()) throw Error("VertexOutOfRange", "terminal out of range");
        if (inA[b]) throw Error("OverlappingSides", "terminal sets intersect");
    }
}

std::vector<std::vector<int>> extract_paths(const Graph& g, FlowNetwork& net) {
    // consume unit flows from the source; cycles of flow, if any, are vertex
    // disjoint from source-sink paths and never entered
    int n = g.n();
    std::vector<std::vector<int>> paths;
    // flow on a forward arc = residual capacity of its reverse arc
    auto flow_of = [&](int from, size_t ai) {
        const FlowNetwork::Arc& a = net.adj[from][ai];
        if (a.orig == 0) return 0; // never walk reverse arcs
        return net.adj[a.to][a.rev].cap;
    };
    for (size_t si = 0; si < net.adj[net.source].size(); ++si) {
        while (flow_of(net.source, si) > 0) {
            // consume one unit
            net.adj[net.source][si].cap += 1;
            net.adj[net.adj[net.source][si].to][net.adj[net.source][si].rev].cap -= 1;
            std::vector<int> path;
            int node = net.adj[net.source][si].to;
            while (node != net.sink) {
                if (node < 2 * n && node % 2 == 0) path.push_back(node / 2);
                bool advanced = false;
                for (size_t ai = 0; ai < net.adj[node].size(); ++ai) {
                    if (flow_of(node, ai) > 0) {
                        net.adj[node][ai].cap += 1;
                        net.adj[net.adj[node][ai].to][net.adj[node][ai].rev].cap -= 1;
                        node = net.adj[node][ai].to;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) throw Error("InternalError", "flow decomposition got stuck");
            }
            paths.push_back(std::move(path));
        }
    }
    return paths;
}

std::vector<int> sides_of(const Graph& g, const std::vector<int>& separator,
                          const std::vector<int>& T) {
    std::vector<char> blocked(g.n(), 0), vis(g.n(), 0);
    for (int s : separator) blocked[s] = 1;
    std::queue<int> q;
    for (int t : T)
        if (!blocked[t] && !vis[t]) {
            vis[t] = 1;
            q.push(t);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (!blocked[w] && !vis[w]) {
                vis[w] = 1;
                q.push(w);
            }
    }
    std::vector<int> side;
    for (int v = 0; v < g.n(); ++v)
        if (vis[v]) side.push_back(v);
    return side;
}

SeparatorResult min_separator_with_removed(const Graph& g, const std::vector<int>& A,
                                           const std::vector<int>& B,
                                           const std::vector<char>& removed) {
    std::vector<char> uncapped(g.n(), 0);
    FlowNetwork net = build_network(g, A, B, removed, uncapped);
    net.augment_all();
    auto vis = net.residual_reachable();
    SeparatorResult r;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v] && vis[2 * v] && !vis[2 * v + 1]) r.separator.push_back(v);
    return r;
}

} // namespace

PathSystem max_disjoint_paths(const Graph& g, const std::vector<int>& A,
                              const std::vector<int>& B) {
    check_terminals(g, A, B);
    std::vector<char> removed(g.n(), 0), uncapped(g.n(), 0);
    FlowNetwork net = build_network(g, A, B, removed, uncapped);
    net.augment_all();
    PathSystem ps;
    ps.paths = extract_paths(g, net);
    return ps;
}

SeparatorResult min_separator(const Graph& g, const std::vector<int>& A,
                              const std::vector<int>& B) {
    check_terminals(g, A, B);
    std::vector<char> removed(g.n(), 0);
    SeparatorResult r = min_separator_with_removed(g, A, B, removed);
    r.left_side = sides_of(g, r.separator, A);
    r.right_side = sides_of(g, r.separator, B);
    return r;
}

SeparatorResult leftmost_min_separator(const Graph& g, const std::vector<int>& A,
                                       const std::vector<int>& B, int v) {
    check_terminals(g, A, B);
    if (v < 0 || v >= g.n()) throw Error("VertexOutOfRange", "vertex out of range");

    std::vector<char> removed(g.n(), 0), uncapped(g.n(), 0);
    FlowNetwork full = build_network(g, A, B, removed, uncapped);
    int k = full.augment_all();

    removed[v] = 1;
    std::vector<int> A2, B2;
    for (int a : A)
        if (a != v) A2.push_back(a);
    for (int b : B)
        if (b != v) B2.push_back(b);
    int k2 = 0;
    SeparatorResult sub;
    if (A2.empty() || B2.empty()) {
        // v was the sole terminal on one side; it lies on every separator and
        // the rest of the separator is empty only if k == 1
        k2 = 0;
    } else {
        FlowNetwork net = build_network(g, A2, B2, removed, uncapped);
        k2 = net.augment_all();
        auto vis = net.residual_reachable();
        for (int u = 0; u < g.n(); ++u)
            if (!removed[u] && vis[2 * u] && !vis[2 * u + 1]) sub.separator.push_back(u);
    }
    if (k2 != k - 1)
        throw Error("NotOnMinSeparator",
                    "vertex " + std::to_string(v) + " lies on no minimum separator");

    SeparatorResult r;
    r.separator = sub.separator;
    r.separator.push_back(v);
    std::sort(r.separator.begin(), r.separator.end());
    r.left_side = sides_of(g, r.separator, A);
    r.right_side = sides_of(g, r.separator, B);
    return r;
}

PathSystem double_matching_paths(const Graph& g, const std::vector<int>& A,
                                 const std::vector<int>& B, const std::vector<int>& C) {
    std::vector<char> seen(g.n(), 0);
    for (const auto* side : {&A, &B, &C})
        for (int v : *side) {
            if (v < 0 || v >= g.n()) throw Error("VertexOutOfRange", "side member out of range");
            if (seen[v]) throw Error("HypothesisViolated", "sides are not disjoint");
            seen[v] = 1;
        }
    if (A.size() != C.size() || A.size() > B.size())
        throw Error("HypothesisViolated", "need |A| = |C| <= |B|");
    if (A.empty()) throw Error("HypothesisViolated", "empty sides");
    auto ab = is_biregular(g, A, B);
    if (!ab || ab->first == 0) throw Error("HypothesisViolated", "G[A,B] not biregular non-edgeless");
    auto bc = is_biregular(g, B, C);
    if (!bc || bc->second == 0) throw Error("HypothesisViolated", "G[B,C] not biregular non-edgeless");

    PathSystem ps = max_disjoint_paths(g, A, C);
    if (ps.count() != static_cast<int>(A.size()))
        throw Error("InternalError", "double matching produced " + std::to_string(ps.count()) +
                                         " paths, expected " + std::to_string(A.size()));
    return ps;
}

Graph auxiliary_path_graph(const Graph& g, const PathSystem& paths,
                           const std::optional<std::vector<int>>& S) {
    int m = paths.count();
    std::vector<int> on_path(g.n(), -1);
    for (int i = 0; i < m; ++i) {
        const auto& p = paths.paths[i];
        for (size_t j = 0; j < p.size(); ++j) {
            int v = p[j];
            if (v < 0 || v >= g.n()) throw Error("VertexOutOfRange", "path vertex out of range");
            if (on_path[v] >= 0) throw Error("PathsNotDisjoint", "paths share a vertex");
            on_path[v] = i;
            if (j > 0 && !g.has_edge(p[j - 1], v))
                throw Error("NotAPath", "consecutive path vertices not adjacent");
        }
    }
    std::vector<char> inS(g.n(), S ? 0 : 1);
    if (S)
        for (int v : *S) inS[v] = 1;

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        // BFS from P_i through allowed internal vertices to any other path
        std::vector<char> vis(g.n(), 0);
        std::queue<int> q;
        std::set<int> reached;
        for (int v : paths.paths[i])
            if (inS[v]) {
                vis[v] = 1;
                q.push(v);
            }
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (!inS[w] || vis[w]) continue;
                if (on_path[w] >= 0) {
                    if (on_path[w] != i) reached.insert(on_path[w]);
                    continue; // endpoint on another path; do not pass through
                }
                vis[w] = 1;
                q.push(w);
            }
        }
        for (int j : reached)
            if (j > i) edges.push_back({i, j});
    }
    return Graph(m, std::move(edges));
}

int vertex_connectivity(const Graph& g) {
    int n = g.n();
    if (!is_connected(g)) throw Error("Disconnected", "connectivity of a disconnected graph");
    if (static_cast<long long>(g.m()) * 2 == static_cast<long long>(n) * (n - 1))
        return n - 1; // complete by convention

    auto local = [&](int s, int t) {
        std::vector<char> removed(n, 0), uncapped(n, 0);
        uncapped[s] = uncapped[t] = 1;
        FlowNetwork net = build_network(g, {s}, {t}, removed, uncapped);
        return net.augment_all();
    };

    int v0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(v0)) v0 = v;

    int best = n - 1;
    for (int u = 0; u < n; ++u)
        if (u != v0 && !g.has_edge(v0, u)) best = std::min(best, local(v0, u));
    const auto& nbrs = g.neighbors(v0);
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.has_edge(nbrs[i], nbrs[j])) best = std::min(best, local(nbrs[i], nbrs[j]));
    return best;
}

} // namespace gsym
