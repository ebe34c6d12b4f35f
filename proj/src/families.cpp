#include "gsym/families.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "gsym/automorphism.hpp"
#include "gsym/minors.hpp"
#include "gsym/separators.hpp"

namespace gsym {

Graph twisted_grid(int t, int k) {
    if (t < 3 || k < 3) throw Error("ParamOutOfRange", "twisted grid needs t >= 3 and k >= 3");
    auto idx = [k](int i, int j) { return i * k + j; };
    std::set<Edge> edges;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < k; ++j) {
            int ii = (i + 1) % t;
            for (int jj : {j, (j + 1) % k}) {
                int a = idx(i, j), b = idx(ii, jj);
                edges.insert({std::min(a, b), std::max(a, b)});
            }
        }
    return Graph(t * k, {edges.begin(), edges.end()});
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Graph biregular_family(int t, int h, int r) {
    if (r < 1 || r > h || t < 2) throw Error("ParamOutOfRange", "need 1 <= r <= h and t >= 2");

    // r-subsets of {0..h-1} in lexicographic order
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int start) {
        if (static_cast<int>(cur.size()) == r) {
            subsets.push_back(cur);
            return;
        }
        for (int x = start; x < h; ++x) {
            cur.push_back(x);
            gen(x + 1);
            cur.pop_back();
        }
    };
    gen(0);
    long long c = static_cast<long long>(subsets.size()); // C(h,r)

    // V side first: (i,j) -> i*h + j; U side: offset + ((i*c + a1)*c + a2)
    long long v_count = static_cast<long long>(t) * h;
    long long u_count = static_cast<long long>(t) * c * c;
    auto vidx = [h](int i, int j) { return i * h + j; };
    auto uidx = [&](long long i, long long a1, long long a2) {
        return static_cast<int>(v_count + (i * c + a1) * c + a2);
    };

    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i)
        for (long long a1 = 0; a1 < c; ++a1)
            for (long long a2 = 0; a2 < c; ++a2) {
                int u = uidx(i, a1, a2);
                for (int j : subsets[a1]) edges.push_back({vidx(i, j), u});
                for (int j : subsets[a2]) edges.push_back({vidx((i + 1) % t, j), u});
            }
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    return Graph(static_cast<int>(v_count + u_count), std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error("ParamOutOfRange", "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
    std::sort(edges.begin(), edges.end());
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 1) throw Error("ParamOutOfRange", "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)}); // outer C_5
        int a = 5 + i, b = 5 + (i + 2) % 5;
        edges.push_back({std::min(a, b), std::max(a, b)}); // inner pentagram
        edges.push_back({i, 5 + i});                       // spokes
    }
    std::sort(edges.begin(), edges.end());
    return Graph(10, std::move(edges));
}

namespace {

bool passes(const Graph& g, const CorpusFilter& f) {
    if (f.biconnected && (g.n() < 3 || vertex_connectivity(g) < 2)) return false;
    if (f.non_cycle) {
        bool cycle = g.n() >= 3;
        for (int v = 0; v < g.n() && cycle; ++v)
            if (g.degree(v) != 2) cycle = false;
        if (cycle) return false;
    }
    if (f.edge_transitive && !is_edge_transitive(g)) return false;
    if (f.minor_free_h > 0 &&
        find_minor(complete_graph(f.minor_free_h + 1), g).has_value())
        return false;
    return true;
}

} // namespace

void small_corpus_stream(int max_n, const CorpusFilter& filter,
                         const std::function<void(const Graph&)>& sink) {
    if (max_n < 1 || max_n > 9) throw Error("TooLarge", "corpus generation capped at 9 vertices");
    std::vector<Graph> level{Graph(1, {})};
    if (passes(level[0], filter)) sink(level[0]);
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& parent : level) {
            int subsets = 1 << (n - 1);
            for (int mask = 1; mask < subsets; ++mask) {
                std::vector<Edge> edges = parent.edges();
                for (int b = 0; b < n - 1; ++b)
                    if (mask & (1 << b)) edges.push_back({b, n - 1});
                Graph g(n, std::move(edges));
                if (seen.insert(canonical_form(g)).second) {
                    if (passes(g, filter)) sink(g);
                    next.push_back(std::move(g));
                }
            }
        }
        level = std::move(next);
    }
}

std::vector<Graph> small_corpus(int max_n, const CorpusFilter& filter) {
    std::vector<Graph> out;
    small_corpus_stream(max_n, filter, [&](const Graph& g) { out.push_back(g); });
    return out;
}

} // namespace gsym
