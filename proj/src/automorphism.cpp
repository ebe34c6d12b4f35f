#include "gsym/automorphism.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>

#include "gsym/separators.hpp"

namespace gsym {

namespace {

uint64_t hash_combine(uint64_t h, uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

// Stable 1-WL refinement. Color ids are renumbered canonically each round
// (sorted by signature), so refinement commutes with relabeling.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors, uint64_t* trace) {
    int n = g.n();
    uint64_t tr = trace ? *trace : 0;
    while (true) {
        int old_count = 1 + (n ? *std::max_element(colors.begin(), colors.end()) : -1);
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> key;
            key.reserve(1 + g.degree(v));
            key.push_back(colors[v]);
            for (int w : g.neighbors(v)) key.push_back(colors[w]);
            std::sort(key.begin() + 1, key.end());
            sigs[v] = {std::move(key), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted(sigs);
        std::sort(sorted.begin(), sorted.end());
        int next = -1;
        std::vector<int> fresh(n);
        const std::vector<int>* prev = nullptr;
        for (auto& [key, v] : sorted) {
            if (!prev || *prev != key) {
                ++next;
                prev = &key;
                tr = hash_combine(tr, 0xabcdef12345ull);
                for (int x : key) tr = hash_combine(tr, static_cast<uint64_t>(x) + 1);
            }
            tr = hash_combine(tr, 0x5bd1e995);
            fresh[v] = next;
        }
        int new_count = next + 1;
        colors = std::move(fresh);
        if (new_count == old_count) break;
    }
    if (trace) *trace = tr;
    return colors;
}

bool is_discrete(const std::vector<int>& colors) {
    int n = static_cast<int>(colors.size());
    if (n == 0) return true;
    return *std::max_element(colors.begin(), colors.end()) == n - 1;
}

// First smallest non-singleton cell, by color id; returns its members sorted
// by vertex index, or empty when the coloring is discrete.
std::vector<int> target_cell(const std::vector<int>& colors) {
    int n = static_cast<int>(colors.size());
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[colors[v]].push_back(v);
    int best_color = -1;
    size_t best_size = SIZE_MAX;
    for (auto& [c, members] : cells)
        if (members.size() >= 2 && members.size() < best_size) {
            best_size = members.size();
            best_color = c;
        }
    if (best_color < 0) return {};
    return cells[best_color];
}

std::vector<int> individualize(const std::vector<int>& colors, int v) {
    std::vector<int> out(colors.size());
    for (size_t i = 0; i < colors.size(); ++i) out[i] = colors[i] * 2;
    out[v] += 1;
    return out;
}

// Leaf certificate: original colors and adjacency bits in labeling order.
std::string leaf_certificate(const ColoredGraph& g, const std::vector<int>& colors) {
    int n = g.graph.n();
    std::vector<int> vertex_at(n); // position -> vertex
    for (int v = 0; v < n; ++v) vertex_at[colors[v]] = v;
    std::string cert;
    cert.reserve(n * 4 + n * n / 8 + 8);
    for (int i = 0; i < n; ++i) {
        int c = g.color[vertex_at[i]];
        for (int b = 0; b < 4; ++b) cert.push_back(static_cast<char>((c >> (8 * b)) & 0xff));
    }
    char acc = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = static_cast<char>((acc << 1) | (g.graph.has_edge(vertex_at[i], vertex_at[j]) ? 1 : 0));
            if (++bits == 8) {
                cert.push_back(acc);
                acc = 0;
                bits = 0;
            }
        }
    if (bits) cert.push_back(static_cast<char>(acc << (8 - bits)));
    return cert;
}

bool is_colored_automorphism(const ColoredGraph& g, const Perm& p) {
    int n = g.graph.n();
    for (int v = 0; v < n; ++v)
        if (g.color[v] != g.color[p[v]]) return false;
    for (auto [u, v] : g.graph.edges())
        if (!g.graph.has_edge(p[u], p[v])) return false;
    return true;
}

// Individualization-refinement search for automorphism generators, with
// leftmost-path orbit pruning and unwind-on-automorphism.
class AutSearch {
public:
    explicit AutSearch(const ColoredGraph& g) : g_(g), n_(g.graph.n()) {}

    std::vector<Perm> run() {
        uint64_t trace = 0;
        std::vector<int> colors = refine_colors(g_.graph, g_.color, &trace);
        first_traces_.push_back(trace);
        descend(colors, 0, true, 0);
        return gens_;
    }

private:
    // union-find over the generators found so far that fix the first-path
    // prefix above `depth` pointwise
    std::vector<int> prefix_orbit_reps(int depth, const std::vector<int>& cell) {
        std::vector<int> parent(n_);
        for (int i = 0; i < n_; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& p : gens_) {
            bool fixes = true;
            for (int i = 0; i < depth; ++i)
                if (p[first_branch_[i]] != first_branch_[i]) { fixes = false; break; }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(p[v]);
                if (a != b) parent[a] = b;
            }
        }
        std::vector<int> reps;
        std::vector<char> seen(n_, 0);
        for (int v : cell) {
            int r = find(v);
            if (!seen[r]) {
                seen[r] = 1;
                reps.push_back(v);
            }
        }
        return reps;
    }

    // returns the depth to unwind to (INT_MAX = keep going)
    int descend(const std::vector<int>& colors, int depth, bool on_first, int div_depth) {
        std::vector<int> cell = target_cell(colors);
        if (cell.empty()) {
            // leaf
            std::string cert = leaf_certificate(g_, colors);
            if (first_leaf_colors_.empty()) {
                first_leaf_colors_ = colors;
                first_cert_ = std::move(cert);
                return INT_MAX;
            }
            if (cert == first_cert_) {
                // gamma maps the first leaf labeling onto this one
                std::vector<int> pos_to_vertex(n_);
                for (int v = 0; v < n_; ++v) pos_to_vertex[first_leaf_colors_[v]] = v;
                std::vector<int> img(n_);
                for (int v = 0; v < n_; ++v) img[v] = pos_to_vertex[colors[v]];
                Perm gamma(std::move(img));
                if (!gamma.is_identity() && is_colored_automorphism(g_, gamma)) {
                    gens_.push_back(gamma);
                    return div_depth;
                }
            }
            return INT_MAX;
        }

        if (on_first) {
            first_branch_.push_back(cell[0]);
            {
                uint64_t trace = first_traces_[depth];
                std::vector<int> child = refine_colors(g_.graph, individualize(colors, cell[0]), &trace);
                first_traces_.push_back(trace);
                descend(child, depth + 1, true, div_depth);
            }
            // siblings, with orbit pruning against generators fixing the prefix
            std::vector<char> done(n_, 0);
            done[cell[0]] = 1;
            size_t reps_at = SIZE_MAX;
            std::vector<int> reps;
            while (true) {
                if (gens_.size() != reps_at) {
                    reps = prefix_orbit_reps(depth, cell);
                    reps_at = gens_.size();
                }
                int next = -1;
                for (int v : reps)
                    if (!done[v]) { next = v; break; }
                if (next < 0) break;
                done[next] = 1;
                uint64_t trace = first_traces_[depth];
                std::vector<int> child = refine_colors(g_.graph, individualize(colors, next), &trace);
                if (trace != first_traces_[depth + 1]) continue;
                int unwind = descend(child, depth + 1, false, depth);
                if (unwind < depth) return unwind;
            }
            return INT_MAX;
        }

        for (int v : cell) {
            uint64_t trace = first_traces_[depth];
            std::vector<int> child = refine_colors(g_.graph, individualize(colors, v), &trace);
            if (depth + 1 >= static_cast<int>(first_traces_.size()) ||
                trace != first_traces_[depth + 1])
                continue;
            int unwind = descend(child, depth + 1, false, div_depth);
            if (unwind <= depth) return unwind;
        }
        return INT_MAX;
    }

    const ColoredGraph& g_;
    int n_;
    std::vector<Perm> gens_;
    std::vector<int> first_branch_;       // individualized vertex per first-path depth
    std::vector<uint64_t> first_traces_;  // refinement trace per depth
    std::vector<int> first_leaf_colors_;
    std::string first_cert_;
};

std::vector<std::vector<int>> compute_edge_orbits(const Graph& g, const std::vector<Perm>& gens) {
    int m = g.m();
    std::map<Edge, int> edge_index;
    for (int i = 0; i < m; ++i) edge_index[g.edges()[i]] = i;
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : gens)
        for (int i = 0; i < m; ++i) {
            auto [u, v] = g.edges()[i];
            int iu = p[u], iv = p[v];
            if (iu > iv) std::swap(iu, iv);
            int j = edge_index.at({iu, iv});
            int a = find(i), b = find(j);
            if (a != b) parent[a] = b;
        }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < m; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> orbits;
    for (auto& [root, members] : groups) orbits.push_back(members);
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

} // namespace

AutResult automorphisms(const ColoredGraph& g) {
    AutSearch search(g);
    std::vector<Perm> gens = search.run();
    AutResult result;
    result.group = PermGroup::build(g.graph.n(), gens);
    result.vertex_orbits = result.group.orbits();
    result.edge_orbits = compute_edge_orbits(g.graph, result.group.generators());
    return result;
}

AutResult automorphisms(const Graph& g) { return automorphisms(ColoredGraph(g)); }

PermGroup brute_force_aut(const ColoredGraph& g) {
    int n = g.graph.n();
    if (n > 9) throw Error("TooLarge", "brute force capped at 9 vertices");
    std::vector<Perm> found;
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            found.push_back(Perm(img));
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.color[v] != g.color[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.graph.has_edge(v, u) != g.graph.has_edge(w, img[u])) ok = false;
            if (!ok) continue;
            img[v] = w;
            used[w] = 1;
            rec(v + 1);
            used[w] = 0;
        }
        img[v] = -1;
    };
    rec(0);
    return PermGroup::build(n, found);
}

bool is_vertex_transitive(const Graph& g) {
    if (g.n() == 0) return true;
    return automorphisms(g).vertex_orbits.blocks.size() == 1;
}

bool is_edge_transitive(const Graph& g) {
    return automorphisms(g).edge_orbits.size() <= 1;
}

bool check_mader(const Graph& g) {
    if (!is_connected(g)) throw Error("Disconnected", "Mader check needs a connected graph");
    if (!is_edge_transitive(g)) throw Error("NotEdgeTransitive", "Mader check needs edge-transitivity");
    if (g.n() == 1) return true;
    int min_deg = g.degree(0);
    for (int v = 1; v < g.n(); ++v) min_deg = std::min(min_deg, g.degree(v));
    return vertex_connectivity(g) >= min_deg;
}

namespace {

// Minimum leaf certificate over the refinement tree, pruning branch vertices
// to orbit representatives of the stabilizer of the individualized prefix.
std::string canonical_search(const ColoredGraph& g, const std::vector<int>& colors,
                             const PermGroup& prefix_stab) {
    std::vector<int> cell = target_cell(colors);
    if (cell.empty()) return leaf_certificate(g, colors);
    std::vector<char> seen(g.graph.n(), 0);
    std::string best;
    for (int v : cell) {
        std::vector<int> orbit = prefix_stab.orbit_of(v);
        int rep = *std::min_element(orbit.begin(), orbit.end());
        if (seen[rep]) continue;
        seen[rep] = 1;
        std::vector<int> child = refine_colors(g.graph, individualize(colors, v), nullptr);
        std::string cert = canonical_search(g, child, prefix_stab.point_stabilizer(v));
        if (best.empty() || cert < best) best = cert;
    }
    return best;
}

} // namespace

std::string canonical_form(const ColoredGraph& g) {
    AutResult aut = automorphisms(g);
    std::vector<int> colors = refine_colors(g.graph, g.color, nullptr);
    return canonical_search(g, colors, aut.group);
}

std::string canonical_form(const Graph& g) { return canonical_form(ColoredGraph(g)); }

} // namespace gsym
