#include <doctest.h>

#include <set>

#include "gsym/automorphism.hpp"
#include "gsym/families.hpp"
#include "gsym/minors.hpp"
#include "gsym/separators.hpp"

using namespace gsym;

TEST_CASE("twisted grid shape") {
    Graph g55 = twisted_grid(5, 5);
    CHECK(g55.n() == 25);
    for (int v = 0; v < 25; ++v) CHECK(g55.degree(v) == 4);
    CHECK(is_connected(g55));

    Graph g33 = twisted_grid(3, 3);
    CHECK(g33.n() == 9);
    for (int v = 0; v < 9; ++v) CHECK(g33.degree(v) == 4);
    CHECK(is_vertex_transitive(g33));

    CHECK(twisted_grid(8, 3).m() == 48); // 4-regular handshake

    CHECK_THROWS_WITH_AS((void)twisted_grid(2, 5), doctest::Contains("ParamOutOfRange"), Error);
    CHECK_THROWS_WITH_AS((void)twisted_grid(5, 2), doctest::Contains("ParamOutOfRange"), Error);
}

TEST_CASE("twisted grid transitivity dichotomy") {
    // vertex-transitive always; edge-transitive exactly when the diagonal
    // twist wraps up, i.e. k | t
    for (int t = 3; t <= 6; ++t)
        for (int k = 3; k <= 6; ++k) {
            Graph g = twisted_grid(t, k);
            CHECK(is_vertex_transitive(g));
            CHECK(is_edge_transitive(g) == (t % k == 0));
        }
}

TEST_CASE("biregular family matches the closed forms") {
    Graph g = biregular_family(3, 4, 2);
    CHECK(g.n() == 3 * 36 + 12); // t*C(h,r)^2 + t*h
    std::vector<int> vside, uside;
    for (int v = 0; v < 12; ++v) vside.push_back(v);
    for (int u = 12; u < g.n(); ++u) uside.push_back(u);
    auto d = is_biregular(g, uside, vside);
    REQUIRE(d.has_value());
    CHECK(d->first == 4);   // 2r
    CHECK(d->second == 36); // 2*C(3,1)*C(4,2)

    CHECK_THROWS_WITH_AS((void)biregular_family(1, 4, 2), doctest::Contains("ParamOutOfRange"),
                         Error);
    CHECK_THROWS_WITH_AS((void)biregular_family(3, 2, 3), doctest::Contains("ParamOutOfRange"),
                         Error);
}

TEST_CASE("smallest biregular family members") {
    // t = 2 wraps the two slot subsets onto each other: (0,A1,A2) and
    // (1,A2,A1) become twins, so twin-freeness needs t >= 3
    Graph g = biregular_family(2, 2, 1);
    CHECK(g.n() == 2 * 4 + 4);
    CHECK(is_connected(g));
    CHECK(is_edge_transitive(g));
    CHECK(twin_classes(g).blocks.size() == static_cast<size_t>(g.n() - 4));

    Graph g3 = biregular_family(3, 2, 1);
    CHECK(is_connected(g3));
    CHECK(is_edge_transitive(g3));
    CHECK(twin_classes(g3).blocks.size() == static_cast<size_t>(g3.n()));
}

TEST_CASE("biregular family sweep: degrees, connectivity, twins, edge-transitivity") {
    for (int h = 1; h <= 4; ++h)
        for (int r = 1; r <= h; ++r)
            for (int t = 2; t <= 3; ++t) {
                Graph g = biregular_family(t, h, r);
                long long c = binomial(h, r);
                REQUIRE(g.n() == t * c * c + t * h);
                std::vector<int> vside, uside;
                for (int v = 0; v < t * h; ++v) vside.push_back(v);
                for (int u = t * h; u < g.n(); ++u) uside.push_back(u);
                auto d = is_biregular(g, uside, vside);
                REQUIRE(d.has_value());
                CHECK(d->first == 2 * r);
                CHECK(d->second == 2 * binomial(h - 1, r - 1) * binomial(h, r));
                CHECK(is_connected(g));
                CHECK(is_edge_transitive(g));
                // twin-free exactly away from the degenerate wrap (t = 2) and
                // the full-subset slots (r = h, vacuous when h = 1)
                bool twin_free = twin_classes(g).blocks.size() == static_cast<size_t>(g.n());
                CHECK(twin_free == (t >= 3 && (r < h || h == 1)));
            }
}

TEST_CASE("standard constructions") {
    CHECK(cycle_graph(3) == complete_graph(3));
    Graph star = complete_bipartite(1, 3);
    CHECK(star.m() == 3);
    CHECK(star.degree(0) == 3);
    Graph cube_like = cartesian_product(cycle_graph(4), path_graph(2));
    CHECK(cube_like.n() == 8);
    CHECK(cube_like.m() == 12);
}

TEST_CASE("small corpus counts match the literature") {
    CHECK(small_corpus(1).size() == 1);
    CHECK(small_corpus(2).size() == 2);
    CHECK(small_corpus(3).size() == 4);
    CHECK(small_corpus(4).size() == 10);   // 1+1+2+6
    CHECK(small_corpus(5).size() == 31);   // +21
    CHECK(small_corpus(6).size() == 143);  // +112
    CHECK(small_corpus(7).size() == 996);  // +853
}

TEST_CASE("small corpus emits pairwise non-isomorphic graphs") {
    auto corpus = small_corpus(6);
    std::set<std::string> forms;
    for (const Graph& g : corpus) {
        CHECK(is_connected(g));
        forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == corpus.size());
}

TEST_CASE("corpus filters") {
    CorpusFilter f;
    f.biconnected = true;
    f.non_cycle = true;
    auto bc = small_corpus(4, f);
    // K_4 and the diamond
    CHECK(bc.size() == 2);
    for (const Graph& g : bc) CHECK(vertex_connectivity(g) >= 2);

    CorpusFilter mf;
    mf.minor_free_h = 4; // exclude K_5 minors
    auto free4 = small_corpus(5, mf);
    for (const Graph& g : free4) CHECK(!find_minor(complete_graph(5), g).has_value());
    CHECK(small_corpus(5).size() - free4.size() == 1); // exactly K_5 excluded

    CorpusFilter et;
    et.edge_transitive = true;
    for (const Graph& g : small_corpus(5, et)) CHECK(is_edge_transitive(g));

    CHECK_THROWS_WITH_AS((void)small_corpus(10), doctest::Contains("TooLarge"), Error);
}
