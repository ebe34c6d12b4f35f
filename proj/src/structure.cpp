#include "gsym/structure.hpp"

#include <algorithm>
#include <map>

namespace gsym {

namespace {

// Renumber arbitrary color keys to dense ids, deterministically by sorted key.
ColoredGraph normalize_colors(const Graph& g, const std::vector<std::pair<int, int>>& keys) {
    std::vector<std::pair<int, int>> sorted(keys);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<std::pair<int, int>, int> id;
    for (const auto& k : sorted) id.emplace(k, static_cast<int>(id.size()));
    std::vector<int> colors;
    colors.reserve(keys.size());
    for (const auto& k : keys) colors.push_back(id.at(k));
    return ColoredGraph(g, std::move(colors));
}

Graph delete_vertex(const Graph& g, int v, std::vector<int>* old_of_new) {
    std::vector<int> keep;
    for (int u = 0; u < g.n(); ++u)
        if (u != v) keep.push_back(u);
    if (old_of_new) *old_of_new = keep;
    return induced_subgraph(g, keep);
}

} // namespace

StructureTree decompose(const ColoredGraph& g) {
    int n = g.graph.n();
    if (n == 0) return StructureTree::trivial();

    auto comps = connected_components(g.graph);
    if (comps.size() > 1) {
        // group components by colored isomorphism type
        std::map<std::string, std::pair<ColoredGraph, int>> types;
        for (const auto& comp : comps) {
            ColoredGraph sub = induced_subgraph(g, comp);
            std::string cert = canonical_form(sub);
            auto it = types.find(cert);
            if (it == types.end())
                types.emplace(cert, std::make_pair(std::move(sub), 1));
            else
                it->second.second += 1;
        }
        std::vector<StructureTree> children;
        for (auto& [cert, rep_count] : types) {
            StructureTree child = decompose(rep_count.first);
            children.push_back(rep_count.second == 1
                                   ? std::move(child)
                                   : StructureTree::wreath_sym(std::move(child), rep_count.second));
        }
        if (children.size() == 1) return std::move(children[0]);
        return StructureTree::direct(std::move(children));
    }

    AutResult aut = automorphisms(g);

    // singleton orbits disappear into the coloring, one at a time
    int singleton = -1;
    for (const auto& orbit : aut.vertex_orbits.blocks)
        if (orbit.size() == 1 && (singleton < 0 || orbit[0] < singleton)) singleton = orbit[0];
    if (singleton >= 0) {
        if (n == 1) return StructureTree::trivial();
        std::vector<int> keep;
        Graph reduced = delete_vertex(g.graph, singleton, &keep);
        std::vector<std::pair<int, int>> keys;
        keys.reserve(keep.size());
        for (int u : keep)
            keys.push_back({g.color[u], g.graph.has_edge(u, singleton) ? 1 : 0});
        return decompose(normalize_colors(reduced, keys));
    }

    // minimum orbit, ties by smallest contained vertex (blocks are sorted)
    const std::vector<int>* min_orbit = nullptr;
    for (const auto& orbit : aut.vertex_orbits.blocks)
        if (!min_orbit || orbit.size() < min_orbit->size() ||
            (orbit.size() == min_orbit->size() && orbit[0] < (*min_orbit)[0]))
            min_orbit = &orbit;

    std::vector<std::vector<int>> singleton_blocks;
    for (int v : *min_orbit) singleton_blocks.push_back({v});
    InducedAction act = induced_action(aut.group, singleton_blocks);

    // kernel: individualize the orbit
    std::vector<char> in_orbit(n, 0);
    for (int v : *min_orbit) in_orbit[v] = 1;
    std::vector<std::pair<int, int>> keys;
    keys.reserve(n);
    for (int u = 0; u < n; ++u)
        keys.push_back(in_orbit[u] ? std::make_pair(-1 - u, 1) : std::make_pair(g.color[u], 0));
    ColoredGraph individualized = normalize_colors(g.graph, keys);
    StructureTree kernel_tree = decompose(individualized);

    if (kernel_tree.order != act.kernel.order())
        throw Error("InconsistentTree", "kernel recursion order " + kernel_tree.order.str() +
                                            " != kernel order " + act.kernel.order().str());

    StructureTree node = StructureTree::extension_by(std::move(kernel_tree), std::move(act.image));
    if (node.order != aut.group.order())
        throw Error("InconsistentTree", "extension order mismatch");
    return node;
}

VerifyTreeResult verify_tree(const StructureTree& tree, const ColoredGraph& g, int max_d) {
    VerifyTreeResult r;
    r.aut_order = automorphisms(g).group.order();
    r.tree_ord = tree_order(tree);
    r.order_matches = (r.aut_order == r.tree_ord) && (tree.order == r.tree_ord);
    for (int d = 1; d <= max_d; ++d)
        if (certify_theta(tree, d)) {
            r.min_theta_d = d;
            break;
        }
    return r;
}

bool min_orbit_gamma_check(const ColoredGraph& g, int d) {
    if (!is_connected(g.graph)) throw Error("Disconnected", "check needs a connected graph");
    if (g.graph.n() == 0) return true;
    AutResult aut = automorphisms(g);
    const std::vector<int>* min_orbit = nullptr;
    for (const auto& orbit : aut.vertex_orbits.blocks)
        if (!min_orbit || orbit.size() < min_orbit->size() ||
            (orbit.size() == min_orbit->size() && orbit[0] < (*min_orbit)[0]))
            min_orbit = &orbit;
    PermGroup induced = restriction(aut.group, *min_orbit);
    return is_gamma_d(induced, d);
}

RegularAbelianReport regular_abelian_orbit_check(const Graph& g, const PermGroup& subgroup,
                                                 long long alpha) {
    if (!is_connected(g)) throw Error("Disconnected", "check needs a connected graph");
    if (subgroup.degree() != g.n())
        throw Error("NotASubgroup", "subgroup degree does not match the graph");
    for (const auto& p : subgroup.generators()) {
        for (auto [u, v] : g.edges())
            if (!g.has_edge(p[u], p[v]))
                throw Error("NotASubgroup", "generator is not a graph automorphism");
    }
    if (!prime_factors_exceed(subgroup, std::max(alpha, 2LL)))
        throw Error("HypothesisViolated",
                    "|subgroup| has a prime factor <= " + std::to_string(std::max(alpha, 2LL)));

    RegularAbelianReport report;
    Partition orbits = subgroup.orbits();
    const std::vector<int>* min_orbit = nullptr;
    for (const auto& orbit : orbits.blocks)
        if (!min_orbit || orbit.size() < min_orbit->size() ||
            (orbit.size() == min_orbit->size() && orbit[0] < (*min_orbit)[0]))
            min_orbit = &orbit;
    report.orbit = *min_orbit;
    PermGroup induced = restriction(subgroup, report.orbit);
    report.induced_order = induced.order();
    report.regular = is_regular_on(subgroup, report.orbit);
    report.abelian = induced.is_abelian();

    report.subgroup_fixed_point_free = true;
    for (const auto& orbit : orbits.blocks)
        if (orbit.size() == 1) report.subgroup_fixed_point_free = false;
    if (report.subgroup_fixed_point_free && subgroup.order() > 1) {
        for (const auto& e : subgroup.elements(1'000'000)) {
            if (e.is_identity()) continue;
            bool fpf = true;
            for (int v = 0; v < g.n() && fpf; ++v)
                if (e[v] == v) fpf = false;
            if (fpf) {
                report.fixed_point_free_element = e;
                break;
            }
        }
    }
    return report;
}

} // namespace gsym
