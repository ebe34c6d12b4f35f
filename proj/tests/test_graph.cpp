#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "gsym/automorphism.hpp"
#include "gsym/families.hpp"
#include "gsym/graph.hpp"
#include "gsym/minors.hpp"

using namespace gsym;

namespace {

Graph random_connected(std::mt19937& rng, int n) {
    std::set<Edge> have;
    for (int v = 1; v < n; ++v) {
        int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        have.insert({u, v});
    }
    int extra = std::uniform_int_distribution<int>(0, n)(rng);
    for (int i = 0; i < extra; ++i) {
        int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (u != v) have.insert({std::min(u, v), std::max(u, v)});
    }
    return Graph(n, {have.begin(), have.end()});
}

// random partition into connected blocks: merge across random edges
Partition random_connected_partition(std::mt19937& rng, const Graph& g) {
    std::vector<int> block(g.n());
    for (int v = 0; v < g.n(); ++v) block[v] = v;
    std::function<int(int)> find = [&](int x) {
        while (block[x] != x) x = block[x] = block[block[x]];
        return x;
    };
    int merges = std::uniform_int_distribution<int>(0, g.n() - 1)(rng);
    std::vector<Edge> edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (int i = 0; i < merges && i < static_cast<int>(edges.size()); ++i) {
        int a = find(edges[i].first), b = find(edges[i].second);
        if (a != b) block[a] = b;
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < g.n(); ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& [r, members] : groups) blocks.push_back(members);
    return Partition(g.n(), blocks);
}

} // namespace

TEST_CASE("graph construction validates") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
    Graph g(3, {{1, 0}, {1, 2}});
    CHECK(g.m() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("contract C_6 consecutive pairs gives C_3") {
    Graph c6 = cycle_graph(6);
    auto [q, map] = contract_partition(c6, Partition(6, {{0, 1}, {2, 3}, {4, 5}}));
    CHECK(q.n() == 3);
    CHECK(q.m() == 3);
    CHECK(map[0] == map[1]);
}

TEST_CASE("contracting singletons is the identity") {
    Graph p = petersen();
    auto [q, map] = contract_partition(p, Partition::singletons(10));
    CHECK(q == p);
}

TEST_CASE("contracting Petersen spokes gives K_5") {
    Graph p = petersen();
    std::vector<std::vector<int>> spokes;
    for (int i = 0; i < 5; ++i) spokes.push_back({i, i + 5});
    auto [q, map] = contract_partition(p, Partition(10, spokes));
    CHECK(q == complete_graph(5));
}

TEST_CASE("contraction rejects disconnected blocks") {
    Graph p4 = path_graph(4);
    CHECK_THROWS_WITH_AS((void)contract_partition(p4, Partition(4, {{0, 2}, {1}, {3}})),
                         doctest::Contains("DisconnectedBlock"), Error);
}

TEST_CASE("contraction composes with the join partition") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 10)(rng);
        Graph g = random_connected(rng, n);
        Partition p1 = random_connected_partition(rng, g);
        auto first = contract_partition(g, p1);
        Partition p2 = random_connected_partition(rng, first.graph);
        auto second = contract_partition(first.graph, p2);

        std::map<int, std::vector<int>> joined;
        for (int v = 0; v < n; ++v) joined[p2.block_of(first.block_map[v])].push_back(v);
        std::vector<std::vector<int>> blocks;
        for (auto& [b, members] : joined) blocks.push_back(members);
        auto direct = contract_partition(g, Partition(n, blocks));

        CHECK(direct.graph.n() == second.graph.n());
        std::set<Edge> got(second.graph.edges().begin(), second.graph.edges().end());
        std::map<int, int> rename; // direct block -> second block
        for (int v = 0; v < n; ++v) rename[direct.block_map[v]] = p2.block_of(first.block_map[v]);
        std::set<Edge> expect;
        for (auto [a, b] : direct.graph.edges()) {
            int x = rename[a], y = rename[b];
            expect.insert({std::min(x, y), std::max(x, y)});
        }
        CHECK(got == expect);
    }
}

TEST_CASE("cartesian product basics") {
    Graph k2 = complete_graph(2);
    Graph c4 = cartesian_product(k2, k2);
    CHECK(c4.n() == 4);
    CHECK(c4.m() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    Graph h = petersen();
    CHECK(cartesian_product(complete_graph(1), h) == h);

    Graph prism = cartesian_product(cycle_graph(3), path_graph(2));
    CHECK(prism.n() == 6);
    CHECK(prism.m() == 9);
}

TEST_CASE("twin classes") {
    Partition t = twin_classes(complete_bipartite(2, 3));
    REQUIRE(t.blocks.size() == 2);
    CHECK(t.blocks[0] == std::vector<int>{0, 1});
    CHECK(t.blocks[1] == std::vector<int>{2, 3, 4});

    CHECK(twin_classes(cycle_graph(5)).blocks.size() == 5);

    // K_4 minus an edge: with open neighborhoods only the nonadjacent pair
    // are twins
    Graph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Partition d = twin_classes(diamond);
    std::set<std::vector<int>> blocks(d.blocks.begin(), d.blocks.end());
    CHECK(blocks.count({2, 3}) == 1);
    CHECK(blocks.count({0}) == 1);
    CHECK(blocks.count({1}) == 1);
}

TEST_CASE("reduce twins") {
    auto [reduced, sizes] = reduce_twins(ColoredGraph(complete_bipartite(2, 3)));
    CHECK(reduced.graph == complete_graph(2));
    CHECK(sizes == std::vector<int>{2, 3});

    auto [same, ones] = reduce_twins(ColoredGraph(cycle_graph(5)));
    CHECK(same.graph == cycle_graph(5));
    CHECK(ones == std::vector<int>(5, 1));

    auto [kcc, cc] = reduce_twins(ColoredGraph(complete_bipartite(4, 4)));
    CHECK(kcc.graph == complete_graph(2));
    CHECK(cc == std::vector<int>{4, 4});
}

TEST_CASE("biregular detection") {
    auto d = is_biregular(complete_bipartite(2, 3), {0, 1}, {2, 3, 4});
    REQUIRE(d.has_value());
    CHECK(*d == std::pair<int, int>{3, 2});

    Graph p4 = path_graph(4);
    CHECK(!is_biregular(p4, {0, 2}, {1, 3}).has_value());
    CHECK(is_biregular(p4, {}, {}) == std::pair<int, int>{0, 0});
    CHECK_THROWS_WITH_AS((void)is_biregular(p4, {0, 1}, {1, 2}),
                         doctest::Contains("OverlappingSides"), Error);
}

TEST_CASE("average degree is exact") {
    CHECK(average_degree(complete_graph(4)) == Rational(3, 1));
    CHECK(average_degree(cycle_graph(17)) == Rational(2, 1));
    CHECK(average_degree(petersen()) == Rational(3, 1));
    CHECK(average_degree(path_graph(2)) == Rational(1, 1));
    CHECK_THROWS_WITH_AS((void)average_degree(Graph(0, {})), doctest::Contains("EmptyGraph"),
                         Error);
}

TEST_CASE("balls") {
    Graph p5 = path_graph(5);
    CHECK(ball(p5, 2, 1) == std::vector<int>{1, 2, 3});
    CHECK(ball(p5, 2, 0) == std::vector<int>{2});
    CHECK(ball(petersen(), 3, 2).size() == 10);
    CHECK_THROWS_AS((void)ball(p5, 9, 1), Error);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected(rng, 8);
        for (int t = 0; t + 1 < 8; ++t) {
            auto small = ball(g, 0, t);
            auto big = ball(g, 0, t + 1);
            CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
        }
        CHECK(ball(g, 0, 7).size() == 8);
    }
}

TEST_CASE("cartesian product is commutative and associative up to isomorphism") {
    // canonical-form comparison, factors up to 6 vertices
    Graph a = cycle_graph(3);
    Graph b = path_graph(2);
    Graph c = complete_graph(2);
    CHECK(canonical_form(cartesian_product(a, b)) == canonical_form(cartesian_product(b, a)));
    CHECK(canonical_form(cartesian_product(cartesian_product(a, b), c)) ==
          canonical_form(cartesian_product(a, cartesian_product(b, c))));

    std::mt19937 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        Graph x = random_connected(rng, std::uniform_int_distribution<int>(2, 5)(rng));
        Graph y = random_connected(rng, std::uniform_int_distribution<int>(2, 5)(rng));
        CHECK(canonical_form(cartesian_product(x, y)) == canonical_form(cartesian_product(y, x)));
    }
}

TEST_CASE("twin classes are equivalence classes of equal neighborhoods") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected(rng, 8);
        Partition t = twin_classes(g);
        // pairwise neighborhood comparison oracle
        for (const auto& block : t.blocks)
            for (size_t i = 0; i < block.size(); ++i)
                for (size_t j = i + 1; j < block.size(); ++j)
                    CHECK(g.neighbors(block[i]) == g.neighbors(block[j]));
        for (size_t bi = 0; bi < t.blocks.size(); ++bi)
            for (size_t bj = bi + 1; bj < t.blocks.size(); ++bj)
                CHECK(g.neighbors(t.blocks[bi][0]) != g.neighbors(t.blocks[bj][0]));
    }
}
