#include "gsym/accept.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <random>
#include <set>

#include "gsym/automorphism.hpp"
#include "gsym/comp_factors.hpp"
#include "gsym/families.hpp"
#include "gsym/minors.hpp"
#include "gsym/pebble.hpp"
#include "gsym/separators.hpp"
#include "gsym/structure.hpp"

namespace gsym {

namespace {

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::ostream&)> run;
};

// ---------------------------------------------------------------------------
// shared corpus

const std::vector<Graph>& corpus8() {
    static std::vector<Graph> c = small_corpus(8);
    return c;
}

// ---------------------------------------------------------------------------
// 1. search-based automorphism group equals the brute-force oracle

bool criterion_automorphisms(std::ostream& out) {
    int failures = 0;
    for (const Graph& g : corpus8()) {
        ColoredGraph cg(g);
        AutResult fast = automorphisms(cg);
        PermGroup slow = brute_force_aut(cg);
        bool ok = fast.group.order() == slow.order();
        if (ok)
            for (const auto& gen : fast.group.generators())
                if (!slow.contains(gen)) ok = false;
        if (ok)
            for (const auto& gen : slow.generators())
                if (!fast.group.contains(gen)) ok = false;
        if (!ok) ++failures;
    }
    out << corpus8().size() << " graphs, " << failures << " disagreements";
    return failures == 0;
}

// ---------------------------------------------------------------------------
// 2. minor search vs partition-enumeration oracle + spot values

// Oracle: partitions of host subsets into exactly p connected blocks, pattern
// tested as a subgraph of the contraction by brute-force injection.
bool oracle_has_minor(const Graph& pattern, const Graph& host) {
    int p = pattern.n();
    int n = host.n();
    if (p > n) return false;
    std::vector<int> assign(n, -1);
    bool found = false;

    auto blocks_connected = [&]() {
        for (int b = 0; b < p; ++b) {
            int start = -1, size = 0;
            for (int v = 0; v < n; ++v)
                if (assign[v] == b) {
                    if (start < 0) start = v;
                    ++size;
                }
            if (size == 0) return false;
            std::vector<int> stack{start};
            std::set<int> vis{start};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : host.neighbors(v))
                    if (assign[w] == b && !vis.count(w)) {
                        vis.insert(w);
                        stack.push_back(w);
                    }
            }
            if (static_cast<int>(vis.size()) != size) return false;
        }
        return true;
    };

    auto pattern_in_contraction = [&]() {
        std::vector<std::vector<char>> adj(p, std::vector<char>(p, 0));
        for (auto [u, v] : host.edges())
            if (assign[u] >= 0 && assign[v] >= 0 && assign[u] != assign[v])
                adj[assign[u]][assign[v]] = adj[assign[v]][assign[u]] = 1;
        std::vector<int> map(p, -1);
        std::vector<char> used(p, 0);
        std::function<bool(int)> rec = [&](int v) {
            if (v == p) return true;
            for (int b = 0; b < p; ++b) {
                if (used[b]) continue;
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    if (pattern.has_edge(u, v) && !adj[map[u]][b]) ok = false;
                if (!ok) continue;
                map[v] = b;
                used[b] = 1;
                if (rec(v + 1)) return true;
                used[b] = 0;
            }
            return false;
        };
        return rec(0);
    };

    std::function<void(int, int)> rec = [&](int v, int used) {
        if (found) return;
        if (n - v < p - used) return;
        if (v == n) {
            if (used == p && blocks_connected() && pattern_in_contraction()) found = true;
            return;
        }
        assign[v] = -1;
        rec(v + 1, used);
        if (found) return;
        for (int b = 0; b < std::min(used + 1, p); ++b) {
            assign[v] = b;
            rec(v + 1, std::max(used, b + 1));
            if (found) return;
        }
        assign[v] = -1;
    };
    rec(0, 0);
    return found;
}

bool criterion_minor_oracle(std::ostream& out) {
    std::vector<Graph> patterns{complete_graph(3),        complete_graph(4),
                                complete_graph(5),        complete_graph(6),
                                complete_bipartite(2, 2), complete_bipartite(3, 3)};
    long long checked = 0, disagreements = 0;
    for (const Graph& host : corpus8())
        for (const Graph& pat : patterns) {
            bool fast = find_minor(pat, host).has_value();
            bool slow = oracle_has_minor(pat, host);
            ++checked;
            if (fast != slow) ++disagreements;
        }

    bool spots = hadwiger_number(complete_graph(5)).value == 5 &&
                 hadwiger_number(cycle_graph(9)).value == 3 &&
                 hadwiger_number(cycle_graph(4)).value == 3;
    // the spec text says 6 here, but the exhaustive derivation gives 5: a K_6
    // model needs 15 cross edges plus internal edges while the triangle-free
    // Petersen graph has 15 edges in total (see the decisions ledger)
    HadwigerResult pet = hadwiger_number(petersen());
    bool petersen_ok = pet.value == 5 && pet.exact && oracle_has_minor(complete_graph(5), petersen()) &&
                       !oracle_has_minor(complete_graph(6), petersen());

    out << checked << " pattern/host pairs, " << disagreements
        << " disagreements; spot values " << (spots && petersen_ok ? "ok" : "WRONG")
        << " (Petersen Hadwiger = " << pet.value << ", derived)";
    return disagreements == 0 && spots && petersen_ok;
}

// ---------------------------------------------------------------------------
// 3. Menger duality + leftmost uncrossing on random graphs

Graph random_connected(std::mt19937& rng, int n) {
    std::set<Edge> have;
    for (int v = 1; v < n; ++v) {
        int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        have.insert({u, v});
    }
    int extra = std::uniform_int_distribution<int>(0, 2 * n)(rng);
    for (int i = 0; i < extra; ++i) {
        int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (u != v) have.insert({std::min(u, v), std::max(u, v)});
    }
    return Graph(n, {have.begin(), have.end()});
}

bool separates(const Graph& g, const std::vector<int>& S, const std::vector<int>& A,
               const std::vector<int>& B) {
    std::vector<char> blocked(g.n(), 0), vis(g.n(), 0);
    for (int v : S) blocked[v] = 1;
    std::vector<int> stack;
    for (int a : A)
        if (!blocked[a] && !vis[a]) {
            stack.push_back(a);
            vis[a] = 1;
        }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!blocked[w] && !vis[w]) {
                vis[w] = 1;
                stack.push_back(w);
            }
    }
    for (int b : B)
        if (!blocked[b] && vis[b]) return false;
    return true;
}

std::vector<int> side_of(const Graph& g, const std::vector<int>& S, const std::vector<int>& T) {
    std::vector<char> blocked(g.n(), 0), vis(g.n(), 0);
    for (int v : S) blocked[v] = 1;
    std::vector<int> stack, side;
    for (int t : T)
        if (!blocked[t] && !vis[t]) {
            stack.push_back(t);
            vis[t] = 1;
        }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!blocked[w] && !vis[w]) {
                vis[w] = 1;
                stack.push_back(w);
            }
    }
    for (int v = 0; v < g.n(); ++v)
        if (vis[v]) side.push_back(v);
    return side;
}

bool criterion_menger(unsigned seed, std::ostream& out) {
    std::mt19937 rng(seed == 0 ? 0xC0FFEE : seed);
    int graphs_done = 0, leftmost_checked = 0, uncrossings = 0, failures = 0;
    while (graphs_done < 500) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        Graph g = random_connected(rng, n);
        std::vector<int> verts(n);
        for (int i = 0; i < n; ++i) verts[i] = i;
        std::shuffle(verts.begin(), verts.end(), rng);
        int asz = std::uniform_int_distribution<int>(1, 3)(rng);
        int bsz = std::uniform_int_distribution<int>(1, 3)(rng);
        if (asz + bsz > n) continue;
        std::vector<int> A(verts.begin(), verts.begin() + asz);
        std::vector<int> B(verts.begin() + asz, verts.begin() + asz + bsz);
        ++graphs_done;

        PathSystem ps = max_disjoint_paths(g, A, B);
        SeparatorResult sep = min_separator(g, A, B);
        int k = ps.count();
        if (k != static_cast<int>(sep.separator.size()) || !separates(g, sep.separator, A, B)) {
            ++failures;
            continue;
        }
        if (k == 0) continue;

        // all minimum separators by enumeration
        std::vector<std::vector<int>> all;
        std::vector<int> comb;
        std::function<void(int)> enumerate = [&](int start) {
            if (static_cast<int>(comb.size()) == k) {
                if (separates(g, comb, A, B)) all.push_back(comb);
                return;
            }
            for (int v = start; v < n; ++v) {
                comb.push_back(v);
                enumerate(v + 1);
                comb.pop_back();
            }
        };
        enumerate(0);

        std::set<int> on_min;
        for (const auto& S : all)
            for (int v : S) on_min.insert(v);
        for (int v : on_min) {
            SeparatorResult lm = leftmost_min_separator(g, A, B, v);
            auto lm_side = side_of(g, lm.separator, A);
            std::vector<std::vector<int>> through;
            for (const auto& S : all)
                if (std::find(S.begin(), S.end(), v) != S.end()) through.push_back(S);
            if (std::find(through.begin(), through.end(), lm.separator) == through.end())
                ++failures;
            int minimal = 0;
            for (const auto& S : through) {
                auto sl = side_of(g, S, A);
                if (!std::includes(sl.begin(), sl.end(), lm_side.begin(), lm_side.end()))
                    ++failures;
                if (sl == lm_side) ++minimal;
            }
            if (minimal != 1) ++failures; // leftmost exists and is unique
            ++leftmost_checked;

            // uncrossing S-cap for every pair through v
            for (const auto& S : through)
                for (const auto& T : through) {
                    auto sl = side_of(g, S, A);
                    auto tl = side_of(g, T, A);
                    std::set<int> cap;
                    for (int x : S) {
                        if (std::find(T.begin(), T.end(), x) != T.end()) cap.insert(x);
                        if (std::binary_search(tl.begin(), tl.end(), x)) cap.insert(x);
                    }
                    for (int x : T)
                        if (std::binary_search(sl.begin(), sl.end(), x)) cap.insert(x);
                    std::vector<int> capv(cap.begin(), cap.end());
                    auto cap_side = side_of(g, capv, A);
                    bool ok = separates(g, capv, A, B) && static_cast<int>(capv.size()) == k &&
                              cap.count(v) == 1 &&
                              std::includes(sl.begin(), sl.end(), cap_side.begin(), cap_side.end()) &&
                              std::includes(tl.begin(), tl.end(), cap_side.begin(), cap_side.end());
                    if (!ok) ++failures;
                    ++uncrossings;
                }
        }
    }
    out << graphs_done << " graphs, " << leftmost_checked << " leftmost checks, " << uncrossings
        << " uncrossings, " << failures << " failures";
    return failures == 0;
}

// ---------------------------------------------------------------------------
// 4. double matching lemma as an executable theorem

Graph canonical_biregular_coupling(int m, int b, int da, int offset_a, int offset_b,
                                   std::mt19937& rng, std::vector<Edge>& edges) {
    // exact (da, da*m/b)-biregular bipartite graph: i ~ (i*da + j) mod b,
    // randomized by relabeling both sides
    std::vector<int> pa(m), pb(b);
    for (int i = 0; i < m; ++i) pa[i] = i;
    for (int i = 0; i < b; ++i) pb[i] = i;
    std::shuffle(pa.begin(), pa.end(), rng);
    std::shuffle(pb.begin(), pb.end(), rng);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < da; ++j) {
            int y = (i * da + j) % b;
            edges.push_back({offset_a + pa[i], offset_b + pb[y]});
        }
    return Graph(0, {});
}

bool criterion_double_matching(unsigned seed, std::ostream& out) {
    std::mt19937 rng(seed == 0 ? 0xBEEF : seed);
    int instances = 0, failures = 0;
    for (int m = 1; m <= 8; ++m)
        for (int b = m; b <= 8; ++b)
            for (int da1 = 1; da1 <= b; ++da1) {
                if ((da1 * m) % b != 0) continue; // A-B coupling degree pairs
                for (int dc = 1; dc <= b; ++dc) {
                    if ((dc * m) % b != 0) continue; // C-B coupling
                    for (int rep = 0; rep < 2; ++rep) {
                        // vertices: A = 0..m-1, B = m..m+b-1, C = m+b..m+b+m-1
                        std::vector<Edge> edges;
                        canonical_biregular_coupling(m, b, da1, 0, m, rng, edges);
                        canonical_biregular_coupling(m, b, dc, m + b, m, rng, edges);
                        for (auto& [u, v] : edges)
                            if (u > v) std::swap(u, v);
                        std::sort(edges.begin(), edges.end());
                        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
                        Graph g(2 * m + b, edges);
                        std::vector<int> A, B, C;
                        for (int i = 0; i < m; ++i) A.push_back(i);
                        for (int i = 0; i < b; ++i) B.push_back(m + i);
                        for (int i = 0; i < m; ++i) C.push_back(m + b + i);
                        if (!is_biregular(g, A, B) || !is_biregular(g, B, C))
                            continue; // relabeling collisions cannot happen, but stay safe
                        ++instances;
                        try {
                            PathSystem ps = double_matching_paths(g, A, B, C);
                            if (ps.count() != m) ++failures;
                        } catch (const Error&) {
                            ++failures;
                        }
                    }
                }
            }
    out << instances << " biregular triples, " << failures << " failures";
    return instances > 200 && failures == 0;
}

// ---------------------------------------------------------------------------
// 5. pebble lemma, exhaustive 4 <= n <= 7

bool criterion_pebble(std::ostream& out) {
    CorpusFilter f;
    f.biconnected = true;
    f.non_cycle = true;
    int solved = 0, failures = 0;
    for (const Graph& h : small_corpus(7, f)) {
        if (h.n() < 4) continue;
        try {
            PebblePlan plan = solve_pebble(h);
            ReplayResult r = replay_and_validate(plan);
            MinorModel m = plan_to_minor_model(plan);
            bool ok = r.legal && r.all_met && m.pattern == complete_graph(h.n() - 1) &&
                      validate_model(m);
            if (!ok) ++failures;
        } catch (const Error&) {
            ++failures;
        }
        ++solved;
    }
    out << solved << " two-connected non-cycles, " << failures << " failures";
    return solved == 2 + 9 + 55 + 467 && failures == 0;
}

// ---------------------------------------------------------------------------
// 6. family fidelity

bool criterion_families(std::ostream& out) {
    int failures = 0, graphs = 0;
    for (int h = 1; h <= 5; ++h)
        for (int r = 1; r <= h; ++r)
            for (int t = 2; t <= 4; ++t) {
                Graph g = biregular_family(t, h, r);
                ++graphs;
                long long c = binomial(h, r);
                bool ok = g.n() == t * c * c + t * h;
                std::vector<int> vside, uside;
                for (int v = 0; v < t * h; ++v) vside.push_back(v);
                for (int u = t * h; u < g.n(); ++u) uside.push_back(u);
                auto d = is_biregular(g, uside, vside);
                ok = ok && d && d->first == 2 * r &&
                     d->second == 2 * binomial(h - 1, r - 1) * binomial(h, r);
                ok = ok && is_connected(g) && is_edge_transitive(g);
                // twin-freeness degenerates exactly at t = 2 and r = h > 1
                // (see the decisions ledger)
                bool twin_free = twin_classes(g).blocks.size() == static_cast<size_t>(g.n());
                ok = ok && twin_free == (t >= 3 && (r < h || h == 1));
                if (!ok) ++failures;
            }
    for (int t = 3; t <= 8; ++t)
        for (int k = 3; k <= 8; ++k) {
            Graph g = twisted_grid(t, k);
            ++graphs;
            bool ok = g.n() == t * k && is_connected(g);
            for (int v = 0; v < g.n(); ++v)
                if (g.degree(v) != 4) ok = false;
            ok = ok && is_vertex_transitive(g);
            // edge-transitive exactly when the diagonal twist wraps up
            // (see the decisions ledger)
            ok = ok && is_edge_transitive(g) == (t % k == 0);
            if (!ok) ++failures;
        }
    out << graphs << " family members, " << failures << " failures";
    return failures == 0;
}

// ---------------------------------------------------------------------------
// 7. theta decomposition certification + composition factor distribution

bool criterion_theta(std::ostream& out) {
    int failures = 0;
    int k5_free = 0;
    int max_d_needed = 0;
    std::map<std::string, int> factor_distribution;
    BigInt max_other_order = 0;
    for (const Graph& g : corpus8()) {
        ColoredGraph cg(g);
        StructureTree tree = decompose(cg);
        AutResult aut = automorphisms(cg);
        if (tree_order(tree) != aut.group.order()) {
            ++failures;
            continue;
        }
        for (const auto& f : composition_factors(aut.group)) {
            factor_distribution[f.label()] += 1;
            if (f.kind == FactorKind::Other) max_other_order = std::max(max_other_order, f.order);
        }
        if (!find_minor(complete_graph(5), g).has_value()) {
            ++k5_free;
            int d = 0;
            for (int cand = 1; cand <= 8; ++cand)
                if (certify_theta(tree, cand)) {
                    d = cand;
                    break;
                }
            if (d == 0) ++failures;
            max_d_needed = std::max(max_d_needed, d);
        }
    }
    out << corpus8().size() << " graphs (" << k5_free << " K_5-minor-free, max certified d = "
        << max_d_needed << "), factors:";
    for (const auto& [label, count] : factor_distribution) out << " " << label << "x" << count;
    if (max_other_order > 0) out << ", max other order " << max_other_order.str();
    out << ", " << failures << " failures";
    return failures == 0;
}

// ---------------------------------------------------------------------------
// 8. Mader check on every connected edge-transitive graph

bool criterion_mader(std::ostream& out) {
    int checked = 0, failures = 0;
    for (const Graph& g : corpus8()) {
        if (!is_edge_transitive(g)) continue;
        ++checked;
        try {
            if (!check_mader(g)) ++failures;
        } catch (const Error&) {
            ++failures;
        }
    }
    for (int t = 3; t <= 8; ++t)
        for (int k = 3; k <= 8; ++k) {
            if (t % k != 0) continue; // edge-transitive grids only
            ++checked;
            try {
                if (!check_mader(twisted_grid(t, k))) ++failures;
            } catch (const Error&) {
                ++failures;
            }
        }
    for (int h = 1; h <= 4; ++h)
        for (int r = 1; r <= h; ++r)
            for (int t = 2; t <= 3; ++t) {
                ++checked;
                try {
                    if (!check_mader(biregular_family(t, h, r))) ++failures;
                } catch (const Error&) {
                    ++failures;
                }
            }
    out << checked << " edge-transitive graphs, " << failures << " failures";
    return failures == 0;
}

// ---------------------------------------------------------------------------
// 9. invariant-minor homomorphism bookkeeping

bool criterion_invariant_minor(std::ostream& out) {
    int checked = 0, failures = 0;
    for (const Graph& g : corpus8()) {
        if (g.m() == 0) continue;
        ColoredGraph cg(g);
        AutResult aut = automorphisms(cg);
        try {
            InvariantContraction ic = invariant_contraction(cg, aut, 0);
            MinorAction act = action_on_minor(cg, aut, ic.blocks);
            if (act.image.order() * act.kernel.order() != aut.group.order()) ++failures;
        } catch (const Error&) {
            ++failures;
        }
        ++checked;
    }
    out << checked << " graphs with a chosen edge orbit, " << failures << " failures";
    return checked > 0 && failures == 0;
}

// ---------------------------------------------------------------------------
// 10. large-prime lemma checker

bool criterion_large_prime(std::ostream& out) {
    int failures = 0;

    auto rotation = [](int n) {
        std::vector<int> cyc(n);
        for (int i = 0; i < n; ++i) cyc[i] = i;
        return PermGroup::build(n, {Perm::from_cycles(n, {cyc})});
    };

    // odd-prime rotation subgroups of cycles
    for (int p : {5, 7, 11, 13}) {
        try {
            RegularAbelianReport r = regular_abelian_orbit_check(cycle_graph(p), rotation(p), p - 2);
            if (!(r.regular && r.abelian && r.subgroup_fixed_point_free &&
                  r.fixed_point_free_element.has_value()))
                ++failures;
        } catch (const Error&) {
            ++failures;
        }
    }
    // composite rotation order with large prime factors
    try {
        RegularAbelianReport r = regular_abelian_orbit_check(cycle_graph(15), rotation(15), 2);
        if (!(r.regular && r.abelian)) ++failures;
    } catch (const Error&) {
        ++failures;
    }
    // product of cycles with the product rotation subgroup
    try {
        Graph host = cartesian_product(cycle_graph(3), cycle_graph(5));
        std::vector<int> ra(15), rb(15);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 5; ++b) {
                ra[a * 5 + b] = ((a + 1) % 3) * 5 + b;
                rb[a * 5 + b] = a * 5 + (b + 1) % 5;
            }
        PermGroup rots = PermGroup::build(15, {Perm(ra), Perm(rb)});
        RegularAbelianReport r = regular_abelian_orbit_check(host, rots, 2);
        if (!(r.regular && r.abelian && r.fixed_point_free_element.has_value())) ++failures;
    } catch (const Error&) {
        ++failures;
    }

    // hypothesis rejections
    try {
        (void)regular_abelian_orbit_check(complete_graph(4), automorphisms(complete_graph(4)).group, 2);
        ++failures; // prime 2 divides 24: must throw
    } catch (const Error& e) {
        if (e.kind() != "HypothesisViolated") ++failures;
    }
    try {
        (void)regular_abelian_orbit_check(cycle_graph(5),
                                          PermGroup::build(5, {cycle_perm(5, {0, 1})}), 2);
        ++failures; // transposition is no automorphism of C_5: must throw
    } catch (const Error& e) {
        if (e.kind() != "NotASubgroup") ++failures;
    }

    out << "constructed instances and rejections, " << failures << " failures";
    return failures == 0;
}

} // namespace

int run_acceptance(unsigned seed, std::ostream& out, int only) {
    std::vector<Criterion> criteria{
        {1, "automorphism search vs brute force (n <= 8)",
         [](std::ostream& o) { return criterion_automorphisms(o); }},
        {2, "minor search vs partition oracle + Hadwiger spot values",
         [](std::ostream& o) { return criterion_minor_oracle(o); }},
        {3, "Menger duality, leftmost uniqueness, uncrossing",
         [seed](std::ostream& o) { return criterion_menger(seed, o); }},
        {4, "double matching lemma on biregular triples",
         [seed](std::ostream& o) { return criterion_double_matching(seed, o); }},
        {5, "pebble lemma and K_{n-1} models (exhaustive n <= 7)",
         [](std::ostream& o) { return criterion_pebble(o); }},
        {6, "family fidelity (biregular sweep, twisted grids)",
         [](std::ostream& o) { return criterion_families(o); }},
        {7, "theta decomposition certification + factor distribution",
         [](std::ostream& o) { return criterion_theta(o); }},
        {8, "Mader connectivity on edge-transitive graphs",
         [](std::ostream& o) { return criterion_mader(o); }},
        {9, "invariant-minor homomorphism bookkeeping",
         [](std::ostream& o) { return criterion_invariant_minor(o); }},
        {10, "large-prime regular abelian orbit checker",
         [](std::ostream& o) { return criterion_large_prime(o); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        std::ostringstream detail;
        bool ok;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail << "exception: " << e.what();
        }
        auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count() /
                    1000.0;
        out << (ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << " [" << detail.str()
            << "] (" << secs << "s)\n";
        if (!ok) ++failures;
    }
    return failures;
}

} // namespace gsym
