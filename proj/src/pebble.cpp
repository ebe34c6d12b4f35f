#include "gsym/pebble.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "gsym/separators.hpp"

namespace gsym {

namespace {

struct Config {
    std::vector<int> pos; // pebble -> vertex
    int gap;

    bool operator<(const Config& o) const {
        if (gap != o.gap) return gap < o.gap;
        return pos < o.pos;
    }
};

bool pair_adjacent(const Graph& h, const Config& c, int p, int q) {
    return h.has_edge(c.pos[p], c.pos[q]);
}

} // namespace

ReplayResult replay_and_validate(const PebblePlan& plan) {
    const Graph& h = plan.host;
    int n = h.n();
    int k = n - 1; // pebbles
    ReplayResult r;
    r.met.assign(k, std::vector<char>(k, 0));
    if (static_cast<int>(plan.initial.size()) != k) return r;

    std::vector<int> at(n, -1); // vertex -> pebble
    for (int p = 0; p < k; ++p) {
        int v = plan.initial[p];
        if (v < 0 || v >= n || at[v] >= 0) return r;
        at[v] = p;
    }
    int gap = plan.initial_gap;
    if (gap < 0 || gap >= n || at[gap] >= 0) return r;

    std::vector<int> pos = plan.initial;
    auto mark = [&]() {
        for (int p = 0; p < k; ++p)
            for (int q = p + 1; q < k; ++q)
                if (h.has_edge(pos[p], pos[q])) r.met[p][q] = r.met[q][p] = 1;
    };
    mark();
    for (const auto& mv : plan.moves) {
        if (mv.pebble < 0 || mv.pebble >= k) return r;
        if (pos[mv.pebble] != mv.from) return r;
        if (mv.to != gap) return r;
        if (!h.has_edge(mv.from, mv.to)) return r;
        pos[mv.pebble] = mv.to;
        gap = mv.from;
        mark();
    }
    r.legal = true;
    r.all_met = true;
    for (int p = 0; p < k && r.all_met; ++p)
        for (int q = p + 1; q < k; ++q)
            if (!r.met[p][q]) {
                r.all_met = false;
                break;
            }
    return r;
}

PebblePlan solve_pebble(const Graph& h) {
    int n = h.n();
    if (n < 4) throw Error("NotApplicable", "need at least 4 vertices");
    if (!is_connected(h)) throw Error("NotApplicable", "not 2-connected");
    bool cycle = true;
    for (int v = 0; v < n && cycle; ++v)
        if (h.degree(v) != 2) cycle = false;
    if (cycle) throw Error("NotApplicable", "cycle");
    if (vertex_connectivity(h) < 2) throw Error("NotApplicable", "not 2-connected");

    int k = n - 1;
    PebblePlan plan;
    plan.host = h;
    plan.initial.resize(k);
    for (int p = 0; p < k; ++p) plan.initial[p] = p;
    plan.initial_gap = n - 1;

    Config cur{plan.initial, plan.initial_gap};
    std::vector<std::vector<char>> met(k, std::vector<char>(k, 0));
    auto mark = [&](const Config& c) {
        for (int p = 0; p < k; ++p)
            for (int q = p + 1; q < k; ++q)
                if (pair_adjacent(h, c, p, q)) met[p][q] = met[q][p] = 1;
    };
    mark(cur);

    auto next_unmet = [&]() -> std::pair<int, int> {
        for (int p = 0; p < k; ++p)
            for (int q = p + 1; q < k; ++q)
                if (!met[p][q]) return {p, q};
        return {-1, -1};
    };

    while (true) {
        auto [p, q] = next_unmet();
        if (p < 0) break;
        // breadth-first search in configuration space to the nearest
        // configuration where p and q sit on adjacent vertices
        std::map<Config, std::pair<Config, PebbleMove>> parent;
        std::queue<Config> frontier;
        frontier.push(cur);
        parent[cur] = {cur, {-1, -1, -1}};
        bool found = false;
        Config goal;
        while (!frontier.empty() && !found) {
            Config c = frontier.front();
            frontier.pop();
            if (pair_adjacent(h, c, p, q)) {
                goal = c;
                found = true;
                break;
            }
            std::vector<int> at(n, -1);
            for (int i = 0; i < k; ++i) at[c.pos[i]] = i;
            for (int w : h.neighbors(c.gap)) {
                int moving = at[w];
                Config nc = c;
                nc.pos[moving] = c.gap;
                nc.gap = w;
                if (parent.emplace(nc, std::make_pair(c, PebbleMove{moving, w, c.gap})).second)
                    frontier.push(nc);
            }
        }
        if (!found)
            throw Error("InternalError", "pebble pair unreachable; lemma hypothesis violated?");
        // reconstruct and append the move sequence, marking pairs along the way
        std::vector<PebbleMove> seq;
        Config c = goal;
        while (!(c.pos == cur.pos && c.gap == cur.gap)) {
            auto& [prev, mv] = parent.at(c);
            seq.push_back(mv);
            c = prev;
        }
        std::reverse(seq.begin(), seq.end());
        for (const auto& mv : seq) {
            plan.moves.push_back(mv);
            cur.pos[mv.pebble] = mv.to;
            cur.gap = mv.from;
            mark(cur);
        }
    }
    return plan;
}

MinorModel plan_to_minor_model(const PebblePlan& plan) {
    ReplayResult replay = replay_and_validate(plan);
    if (!replay.legal || !replay.all_met)
        throw Error("InvalidPlan", "plan does not replay legally with all pairs met");

    const Graph& h = plan.host;
    int n = h.n();
    int k = n - 1;
    int slices = static_cast<int>(plan.moves.size()) + 1;

    // path on `slices` vertices
    std::vector<Edge> pedges;
    for (int i = 0; i + 1 < slices; ++i) pedges.push_back({i, i + 1});
    Graph path(slices, std::move(pedges));
    Graph product = cartesian_product(h, path);
    auto idx = [slices](int v, int t) { return v * slices + t; };

    std::vector<std::vector<int>> branch(k);
    std::vector<int> pos = plan.initial;
    for (int p = 0; p < k; ++p) branch[p].push_back(idx(pos[p], 0));
    for (int t = 1; t <= static_cast<int>(plan.moves.size()); ++t) {
        const auto& mv = plan.moves[t - 1];
        // the moving pebble also owns the gap vertex in the previous slice,
        // doubling the slid edge there
        branch[mv.pebble].push_back(idx(mv.to, t - 1));
        pos[mv.pebble] = mv.to;
        for (int p = 0; p < k; ++p) branch[p].push_back(idx(pos[p], t));
    }
    for (auto& b : branch) std::sort(b.begin(), b.end());

    return MinorModel{std::move(product), complete_graph(k), std::move(branch)};
}

} // namespace gsym
