#include <doctest.h>

#include "gsym/families.hpp"
#include "gsym/pebble.hpp"

using namespace gsym;

namespace {

Graph wheel(int rim) {
    std::vector<Edge> edges;
    for (int i = 0; i < rim; ++i) {
        edges.push_back({std::min(i, (i + 1) % rim), std::max(i, (i + 1) % rim)});
        edges.push_back({i, rim});
    }
    std::sort(edges.begin(), edges.end());
    return Graph(rim + 1, edges);
}

} // namespace

TEST_CASE("solver preconditions") {
    CHECK_THROWS_WITH_AS((void)solve_pebble(cycle_graph(5)), doctest::Contains("NotApplicable"),
                         Error);
    CHECK_THROWS_WITH_AS((void)solve_pebble(complete_graph(3)), doctest::Contains("NotApplicable"),
                         Error);
    CHECK_THROWS_WITH_AS((void)solve_pebble(path_graph(5)), doctest::Contains("NotApplicable"),
                         Error);
}

TEST_CASE("K_4 solves with no moves") {
    PebblePlan plan = solve_pebble(complete_graph(4));
    CHECK(plan.moves.empty());
    ReplayResult r = replay_and_validate(plan);
    CHECK(r.legal);
    CHECK(r.all_met);
}

TEST_CASE("K_23 plan replays and meets all pairs") {
    PebblePlan plan = solve_pebble(complete_bipartite(2, 3));
    ReplayResult r = replay_and_validate(plan);
    CHECK(r.legal);
    CHECK(r.all_met);
    CHECK(!plan.moves.empty()); // same-side pairs are never adjacent initially
}

TEST_CASE("illegal plans are rejected") {
    PebblePlan plan = solve_pebble(complete_bipartite(2, 3));
    PebblePlan broken = plan;
    broken.moves.push_back({0, 0, 0}); // not a slide onto the gap
    CHECK(!replay_and_validate(broken).legal);

    PebblePlan nonedge = plan;
    nonedge.moves.clear();
    // pebble 0 sits on vertex 0 (side A); vertex 1 is the other A vertex,
    // not adjacent, and also not the gap
    nonedge.moves.push_back({0, 0, 1});
    CHECK(!replay_and_validate(nonedge).legal);
}

TEST_CASE("plan compiles to a K_{n-1} model in host x path") {
    for (const Graph& h : {complete_graph(4), complete_bipartite(2, 3), wheel(4)}) {
        PebblePlan plan = solve_pebble(h);
        MinorModel m = plan_to_minor_model(plan);
        CHECK(m.pattern == complete_graph(h.n() - 1));
        CHECK(m.host.n() == h.n() * (static_cast<int>(plan.moves.size()) + 1));
        ModelDefect why;
        bool ok = validate_model(m, &why);
        INFO("defect: ", defect_name(why));
        CHECK(ok);
    }
}

TEST_CASE("empty plan gives singleton slices") {
    PebblePlan plan = solve_pebble(complete_graph(4));
    MinorModel m = plan_to_minor_model(plan);
    CHECK(m.host.n() == 4); // one slice
    for (const auto& b : m.branch) CHECK(b.size() == 1);
}

TEST_CASE("exhaustive sweep over 2-connected non-cycles up to 6 vertices") {
    CorpusFilter f;
    f.biconnected = true;
    f.non_cycle = true;
    int solved = 0;
    for (const Graph& h : small_corpus(6, f)) {
        if (h.n() < 4) continue;
        PebblePlan plan = solve_pebble(h);
        ReplayResult r = replay_and_validate(plan);
        REQUIRE(r.legal);
        REQUIRE(r.all_met);
        MinorModel m = plan_to_minor_model(plan);
        REQUIRE(validate_model(m));
        ++solved;
    }
    // 2-connected non-cycle counts: n=4: 2, n=5: 9, n=6: 55
    CHECK(solved == 2 + 9 + 55);
}

TEST_CASE("cross-check with the minor search on the product, n <= 6") {
    CorpusFilter f;
    f.biconnected = true;
    f.non_cycle = true;
    for (const Graph& h : small_corpus(6, f)) {
        if (h.n() < 4) continue;
        PebblePlan plan = solve_pebble(h);
        MinorModel m = plan_to_minor_model(plan);
        auto independent = find_minor(m.pattern, m.host);
        REQUIRE(independent.has_value());
        CHECK(validate_model(*independent));
    }
}
