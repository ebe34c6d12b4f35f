#include "gsym/minors.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>

namespace gsym {

const char* defect_name(ModelDefect d) {
    switch (d) {
        case ModelDefect::None: return "None";
        case ModelDefect::BranchCount: return "BranchCount";
        case ModelDefect::EmptyBranch: return "EmptyBranch";
        case ModelDefect::Disjointness: return "Disjointness";
        case ModelDefect::Connectivity: return "Connectivity";
        case ModelDefect::EdgeCover: return "EdgeCover";
    }
    return "?";
}

bool validate_model(const MinorModel& m, ModelDefect* reason) {
    ModelDefect local = ModelDefect::None;
    auto fail = [&](ModelDefect d) {
        if (reason) *reason = d;
        return false;
    };
    (void)local;
    if (static_cast<int>(m.branch.size()) != m.pattern.n()) return fail(ModelDefect::BranchCount);
    std::vector<int> owner(m.host.n(), -1);
    for (int i = 0; i < m.pattern.n(); ++i) {
        if (m.branch[i].empty()) return fail(ModelDefect::EmptyBranch);
        for (int v : m.branch[i]) {
            if (v < 0 || v >= m.host.n() || owner[v] >= 0) return fail(ModelDefect::Disjointness);
            owner[v] = i;
        }
    }
    for (int i = 0; i < m.pattern.n(); ++i) {
        // BFS inside the branch set
        std::vector<char> vis(m.host.n(), 0);
        std::queue<int> q;
        q.push(m.branch[i][0]);
        vis[m.branch[i][0]] = 1;
        size_t cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : m.host.neighbors(v))
                if (owner[w] == i && !vis[w]) {
                    vis[w] = 1;
                    ++cnt;
                    q.push(w);
                }
        }
        if (cnt != m.branch[i].size()) return fail(ModelDefect::Connectivity);
    }
    for (auto [a, b] : m.pattern.edges()) {
        bool covered = false;
        for (int v : m.branch[a]) {
            for (int w : m.host.neighbors(v))
                if (owner[w] == b) {
                    covered = true;
                    break;
                }
            if (covered) break;
        }
        if (!covered) return fail(ModelDefect::EdgeCover);
    }
    if (reason) *reason = ModelDefect::None;
    return true;
}

namespace {

// Branch-and-bound search assigning host vertices to pattern branch sets.
// Pattern vertices are processed by descending degree; candidate branch sets
// are connected host subsets enumerated seed-first (each set once, via the
// usual extension/forbidden scheme), smallest first.
class MinorSearch {
public:
    MinorSearch(const Graph& pattern, const Graph& host, std::uint64_t budget)
        : pat_(pattern), host_(host), budget_(budget) {
        order_.resize(pat_.n());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return pat_.degree(a) > pat_.degree(b); });
        host_rank_.resize(host_.n());
        std::iota(host_rank_.begin(), host_rank_.end(), 0);
        std::stable_sort(host_rank_.begin(), host_rank_.end(),
                         [&](int a, int b) { return host_.degree(a) > host_.degree(b); });
        rank_of_.resize(host_.n());
        for (int i = 0; i < host_.n(); ++i) rank_of_[host_rank_[i]] = i;
        owner_.assign(host_.n(), -1);
        banned_.assign(host_.n(), 0);
        sets_.resize(pat_.n());
        seed_rank_.assign(pat_.n(), -1);

        // slots whose pattern vertices are swapped by a pattern automorphism
        // can be forced into ascending seed order
        interchangeable_.assign(pat_.n(), std::vector<char>(pat_.n(), 0));
        for (int i = 0; i < pat_.n(); ++i)
            for (int j = 0; j < pat_.n(); ++j) {
                if (i == j) continue;
                int u = order_[i], v = order_[j];
                std::vector<char> nu(pat_.n(), 0), nv(pat_.n(), 0);
                for (int w : pat_.neighbors(u))
                    if (w != v) nu[w] = 1;
                for (int w : pat_.neighbors(v))
                    if (w != u) nv[w] = 1;
                if (nu == nv) interchangeable_[i][j] = 1;
            }
    }

    std::optional<MinorModel> run() {
        if (pat_.n() > host_.n()) return std::nullopt;
        if (place(0)) {
            MinorModel m{host_, pat_, {}};
            m.branch.resize(pat_.n());
            for (int i = 0; i < pat_.n(); ++i) {
                m.branch[order_[i]] = sets_[i];
                std::sort(m.branch[order_[i]].begin(), m.branch[order_[i]].end());
            }
            return m;
        }
        if (aborted_)
            throw Error("BudgetExceeded", "minor search budget of " + std::to_string(budget_) +
                                              " nodes exhausted");
        return std::nullopt;
    }

private:
    bool tick() {
        if (++nodes_ > budget_) {
            aborted_ = true;
            return false;
        }
        return true;
    }

    // every placed slot must keep enough available boundary for its not yet
    // placed pattern neighbors (future branch sets are disjoint, so each needs
    // its own boundary vertex)
    bool boundary_feasible(int k) {
        for (int j = 0; j < k; ++j) {
            int need = 0;
            for (int i = k; i < pat_.n(); ++i)
                if (pat_.has_edge(order_[j], order_[i])) ++need;
            if (need == 0) continue;
            int have = 0;
            std::vector<char> counted(host_.n(), 0);
            for (int v : sets_[j]) {
                for (int w : host_.neighbors(v))
                    if (owner_[w] < 0 && !counted[w]) {
                        counted[w] = 1;
                        if (++have >= need) break;
                    }
                if (have >= need) break;
            }
            if (have < need) return false;
        }
        return true;
    }

    // true when branch set `set` for slot k touches every earlier neighbor slot
    bool adjacency_ok(int k) {
        int u = order_[k];
        for (int j = 0; j < k; ++j) {
            if (!pat_.has_edge(u, order_[j])) continue;
            bool touched = false;
            for (int v : sets_[k]) {
                for (int w : host_.neighbors(v))
                    if (owner_[w] == j) {
                        touched = true;
                        break;
                    }
                if (touched) break;
            }
            if (!touched) return false;
        }
        return true;
    }

    bool place(int k) {
        if (aborted_) return false;
        if (k == pat_.n()) return true;
        int avail = 0;
        for (int v = 0; v < host_.n(); ++v)
            if (owner_[v] < 0) ++avail;
        int remaining = pat_.n() - k;
        if (avail < remaining) return false;
        int max_size = avail - (remaining - 1);

        if (!boundary_feasible(k)) return false;

        // symmetry breaking: interchangeable earlier slots force a minimum
        // seed rank here
        int min_rank = 0;
        for (int j = 0; j < k; ++j)
            if (interchangeable_[j][k]) min_rank = std::max(min_rank, seed_rank_[j] + 1);

        // the ban list scopes to one slot's enumeration; vertices banned while
        // growing an earlier slot stay available here
        std::vector<char> saved_bans = banned_;
        std::fill(banned_.begin(), banned_.end(), 0);
        bool found = false;

        // seeds in descending host degree order
        for (int si = min_rank; si < host_.n() && !found; ++si) {
            int s = host_rank_[si];
            if (owner_[s] >= 0) continue;
            if (!tick()) break;
            sets_[k] = {s};
            owner_[s] = k;
            seed_rank_[k] = si;
            std::vector<int> ext;
            for (int w : host_.neighbors(s))
                if (owner_[w] < 0 && rank_of_[w] > si) ext.push_back(w);
            if (grow(k, ext, max_size, si)) {
                found = true;
                break;
            }
            owner_[s] = -1;
            if (aborted_) break;
        }
        banned_ = std::move(saved_bans);
        return found;
    }

    // Enumerate connected supersets of sets_[k] exactly once each, smallest
    // first. `ext` is the extension frontier; banned_ persists exclusions into
    // subtrees so no set is reached twice.
    bool grow(int k, const std::vector<int>& ext, int max_size, int seed_rank) {
        if (aborted_) return false;
        if (!tick()) return false;
        if (adjacency_ok(k)) {
            if (place(k + 1)) return true;
            if (aborted_) return false;
        }
        if (static_cast<int>(sets_[k].size()) >= max_size) return false;
        std::vector<int> banned_here;
        bool found = false;
        for (size_t i = 0; i < ext.size() && !found; ++i) {
            int w = ext[i];
            if (owner_[w] >= 0 || banned_[w]) continue;
            sets_[k].push_back(w);
            owner_[w] = k;
            std::vector<int> next_ext;
            for (size_t j = i + 1; j < ext.size(); ++j)
                if (!banned_[ext[j]]) next_ext.push_back(ext[j]);
            for (int x : host_.neighbors(w))
                if (owner_[x] < 0 && !banned_[x] && rank_of_[x] > seed_rank &&
                    std::find(next_ext.begin(), next_ext.end(), x) == next_ext.end())
                    next_ext.push_back(x);
            if (grow(k, next_ext, max_size, seed_rank)) {
                found = true;
                break;
            }
            owner_[w] = -1;
            sets_[k].pop_back();
            if (aborted_) break;
            banned_[w] = 1;
            banned_here.push_back(w);
        }
        for (int w : banned_here) banned_[w] = 0;
        return found;
    }

    const Graph& pat_;
    const Graph& host_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<int> order_, host_rank_, rank_of_, owner_, seed_rank_;
    std::vector<char> banned_;
    std::vector<std::vector<char>> interchangeable_;
    std::vector<std::vector<int>> sets_;
};

} // namespace

namespace {

// Witness pass for large hosts: contract low-common-neighborhood edges until
// the host is small enough for the exhaustive search, then pull the model
// back through the contraction. Produces only validated positives; misses
// fall through to the exhaustive search. The tie-shuffling seed is a fixed
// constant so results never depend on user input.
std::optional<MinorModel> contraction_witness(const Graph& pattern, const Graph& host,
                                              int attempt) {
    std::mt19937 rng(0x5eed0 + attempt);
    int n = host.n();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::set<Edge> edges(host.edges().begin(), host.edges().end());
    int current = n;
    int target = std::max(pattern.n(), 12);
    while (current > target) {
        // adjacency over classes
        std::map<int, std::set<int>> adj;
        for (auto [u, v] : edges) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        int best = INT_MAX;
        std::vector<Edge> ties;
        for (auto [u, v] : edges) {
            int common = 0;
            for (int w : adj[u]) common += adj[v].count(w);
            if (common < best) {
                best = common;
                ties.clear();
            }
            if (common == best) ties.push_back({u, v});
        }
        if (ties.empty()) break; // disconnected remainder; give up shrinking
        Edge pick = attempt == 0
                        ? ties.front()
                        : ties[std::uniform_int_distribution<size_t>(0, ties.size() - 1)(rng)];
        // merge pick.second into pick.first
        parent[find(pick.second)] = find(pick.first);
        std::set<Edge> merged;
        for (auto [u, v] : edges) {
            int a = u == pick.second ? pick.first : u;
            int b = v == pick.second ? pick.first : v;
            if (a != b) merged.insert({std::min(a, b), std::max(a, b)});
        }
        edges = std::move(merged);
        --current;
    }

    // materialize the contracted host
    std::map<int, int> class_index;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (!class_index.count(r)) class_index[r] = static_cast<int>(class_index.size());
    }
    std::set<Edge> qedges;
    for (auto [u, v] : edges) {
        int a = class_index[find(u)], b = class_index[find(v)];
        if (a != b) qedges.insert({std::min(a, b), std::max(a, b)});
    }
    Graph small(static_cast<int>(class_index.size()), {qedges.begin(), qedges.end()});
    MinorSearch inner(pattern, small, UINT64_MAX);
    auto found = inner.run();
    if (!found) return std::nullopt;

    MinorModel pulled{host, pattern, {}};
    pulled.branch.resize(pattern.n());
    for (int i = 0; i < pattern.n(); ++i) {
        std::set<int> wanted;
        for (int b : found->branch[i]) wanted.insert(b);
        for (int v = 0; v < n; ++v)
            if (wanted.count(class_index[find(v)])) pulled.branch[i].push_back(v);
    }
    if (!validate_model(pulled)) return std::nullopt;
    return pulled;
}

} // namespace

std::optional<MinorModel> find_minor(const Graph& pattern, const Graph& host,
                                     std::uint64_t budget) {
    if (pattern.n() > host.n()) return std::nullopt;
    if (host.n() <= 12) {
        // exhaustive regime: a decision procedure
        MinorSearch search(pattern, host, UINT64_MAX);
        return search.run();
    }
    for (int attempt = 0; attempt < 24; ++attempt) {
        auto witness = contraction_witness(pattern, host, attempt);
        if (witness) return witness;
    }
    MinorSearch search(pattern, host, budget);
    return search.run();
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph(a + b, std::move(edges));
}

HadwigerResult hadwiger_number(const Graph& g, std::uint64_t budget) {
    HadwigerResult r{0, true};
    for (int h = 1; h <= g.n(); ++h) {
        try {
            if (!find_minor(complete_graph(h), g, budget)) return r;
        } catch (const Error& e) {
            if (e.kind() == "BudgetExceeded") {
                r.exact = false;
                return r;
            }
            throw;
        }
        r.value = h;
    }
    return r;
}

std::optional<MinorModel> find_kcc_minor(const Graph& g, int c, std::uint64_t budget) {
    return find_minor(complete_bipartite(c, c), g, budget);
}

InvariantContraction invariant_contraction(const ColoredGraph& g, const AutResult& aut,
                                           int edge_orbit_index) {
    if (edge_orbit_index < 0 || edge_orbit_index >= static_cast<int>(aut.edge_orbits.size()))
        throw Error("NoSuchEdgeOrbit", "edge orbit index out of range");
    int n = g.graph.n();

    // union-find over the chosen orbit's edges
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int ei : aut.edge_orbits[edge_orbit_index]) {
        auto [u, v] = g.graph.edges()[ei];
        int a = find(u), b = find(v);
        if (a != b) parent[a] = b;
    }
    std::map<int, std::vector<int>> comps;
    for (int v = 0; v < n; ++v) comps[find(v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : comps) blocks.push_back(members);
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    Partition part(n, blocks);

    auto contraction = contract_partition(g.graph, part);

    // fresh colors per isomorphism type of contracted component
    int max_color = 0;
    for (int c : g.color) max_color = std::max(max_color, c);
    std::map<std::string, std::vector<int>> types; // canonical form -> block indices
    std::vector<int> qcolors(part.blocks.size(), -1);
    for (int b = 0; b < static_cast<int>(part.blocks.size()); ++b) {
        if (part.blocks[b].size() == 1) {
            qcolors[b] = g.color[part.blocks[b][0]];
        } else {
            types[canonical_form(induced_subgraph(g, part.blocks[b]))].push_back(b);
        }
    }
    int next_color = max_color + 1;
    for (auto& [cert, members] : types) {
        for (int b : members) qcolors[b] = next_color;
        ++next_color;
    }

    InvariantContraction out;
    out.quotient = ColoredGraph(std::move(contraction.graph), std::move(qcolors));
    out.blocks = std::move(part);
    out.block_map = std::move(contraction.block_map);
    return out;
}

MinorAction action_on_minor(const ColoredGraph& g, const AutResult& aut, const Partition& blocks) {
    InducedAction act = induced_action(aut.group, blocks.blocks);
    // each kernel generator must restrict to an automorphism of every branch
    // set's colored induced subgraph
    for (const auto& kgen : act.kernel.generators())
        for (const auto& block : blocks.blocks) {
            for (int v : block) {
                int w = kgen[v];
                if (std::find(block.begin(), block.end(), w) == block.end())
                    throw Error("InternalError", "kernel generator leaves a branch set");
                if (g.color[v] != g.color[w])
                    throw Error("InternalError", "kernel generator breaks colors in a branch set");
            }
            for (size_t i = 0; i < block.size(); ++i)
                for (size_t j = i + 1; j < block.size(); ++j)
                    if (g.graph.has_edge(block[i], block[j]) !=
                        g.graph.has_edge(kgen[block[i]], kgen[block[j]]))
                        throw Error("InternalError",
                                    "kernel generator is not an automorphism of a branch set");
        }
    return {std::move(act.image), std::move(act.kernel)};
}

} // namespace gsym
