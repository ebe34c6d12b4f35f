#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "gsym/families.hpp"
#include "gsym/graph_io.hpp"
#include "gsym/minors.hpp"
#include "gsym/report.hpp"

using namespace gsym;

TEST_CASE("parse the edge list format") {
    std::istringstream in("3 2\n0 1\n1 2\n");
    ParsedGraph pg = parse_graph(in);
    CHECK(pg.graph.graph.n() == 3);
    CHECK(pg.graph.graph.m() == 2);
    CHECK(pg.graph.graph.has_edge(0, 1));

    std::istringstream colored("2 1\na b\nc a red\n");
    ParsedGraph pc = parse_graph(colored);
    CHECK(pc.graph.color[0] == 1);
    CHECK(pc.graph.color[1] == 0);
    CHECK(pc.color_names == std::vector<std::string>{"red"});

    std::istringstream k1("1 0\n");
    CHECK(parse_graph(k1).graph.graph.n() == 1);

    std::istringstream comments("# leading comment\n2 1\nx y # trailing\n");
    CHECK(parse_graph(comments).graph.graph.m() == 1);
}

TEST_CASE("parse errors carry line and kind") {
    std::istringstream selfloop("2 1\na a\n");
    CHECK_THROWS_WITH_AS((void)parse_graph(selfloop), doctest::Contains("SelfLoop"), Error);

    std::istringstream dup("2 2\na b\nb a\n");
    CHECK_THROWS_WITH_AS((void)parse_graph(dup), doctest::Contains("DuplicateEdge"), Error);

    std::istringstream bad("not a header\n");
    CHECK_THROWS_WITH_AS((void)parse_graph(bad), doctest::Contains("ParseError"), Error);

    std::istringstream toofew("3 5\n0 1\n");
    CHECK_THROWS_WITH_AS((void)parse_graph(toofew), doctest::Contains("ParseError"), Error);
}

TEST_CASE("labels map in first-appearance order") {
    std::istringstream in("4 3\nnorth south\nsouth east\neast north\n");
    ParsedGraph pg = parse_graph(in);
    CHECK(pg.labels[0] == "north");
    CHECK(pg.labels[1] == "south");
    CHECK(pg.labels[2] == "east");
    CHECK(pg.labels[3] == "v3"); // declared but never named

    // round trip through the writer
    std::istringstream again(write_graph(pg));
    ParsedGraph pg2 = parse_graph(again);
    CHECK(pg2.graph.graph == pg.graph.graph);
    CHECK(pg2.graph.color == pg.graph.color);
}

TEST_CASE("analyze produces a consistent report") {
    std::istringstream in("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    ParsedGraph pg = parse_graph(in);
    AnalyzeOptions opt;
    Report r = analyze(pg.graph, "c5", opt);
    CHECK(r.n == 5);
    CHECK(r.m == 5);
    CHECK(r.connectivity == 2);
    CHECK(r.aut_order == "10");
    CHECK(r.vertex_orbit_count == 1);
    CHECK(r.edge_orbit_count == 1);
    CHECK(r.hadwiger == 3);
    CHECK(r.hadwiger_exact);
    CHECK(r.min_theta_d == 1);
    CHECK(r.composition_factors == std::vector<std::string>{"C2", "C5"});
}

TEST_CASE("reports round-trip through JSON") {
    AnalyzeOptions opt;
    Report r = analyze(ColoredGraph(cycle_graph(6)), "c6", opt);
    Report back = Report::from_json(r.to_json());
    CHECK(back == r);
}

TEST_CASE("report bytes are deterministic modulo timing") {
    AnalyzeOptions opt;
    Report a = analyze(ColoredGraph(complete_bipartite(2, 3)), "k23", opt);
    Report b = analyze(ColoredGraph(complete_bipartite(2, 3)), "k23", opt);
    CHECK(a.to_json(false) == b.to_json(false));
}

TEST_CASE("family spec expansion") {
    auto one = expand_family_spec("twisted_grid(3,3)");
    REQUIRE(one.size() == 1);
    CHECK(one[0].second.graph.n() == 9);

    auto colon = expand_family_spec("family:cycle:7");
    REQUIRE(colon.size() == 1);
    CHECK(colon[0].second.graph.n() == 7);

    auto cart = expand_family_spec("cartesian(cycle(4),path(2))");
    REQUIRE(cart.size() == 1);
    CHECK(cart[0].second.graph.n() == 8);

    auto corpus = expand_family_spec("small_corpus(4)");
    CHECK(corpus.size() == 10);

    auto filtered = expand_family_spec("small_corpus(4,biconnected,noncycle)");
    CHECK(filtered.size() == 2);

    CHECK_THROWS_WITH_AS((void)expand_family_spec("dodecahedron(1)"),
                         doctest::Contains("ParseError"), Error);
}

TEST_CASE("structure tree serializes with decimal string orders") {
    AnalyzeOptions opt;
    Report r = analyze(ColoredGraph(complete_graph(8)), "k8", opt);
    CHECK(r.aut_order == "40320");
    CHECK(r.structure_tree_json.find("\"40320\"") != std::string::npos);
}

#ifdef GRAPHSYM_BIN
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace {

int run_cli(const std::string& args, const std::string& out_path) {
    std::string cmd = std::string(GRAPHSYM_BIN) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("end to end: analyze a file") {
    std::string dir = "/tmp/gsym_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    {
        std::ofstream f(dir + "/p3.graph");
        f << "# a path on three vertices\n3 2\na b\nb c\n";
    }
    CHECK(run_cli("analyze " + dir + "/p3.graph", dir + "/out1.json") == 0);
    Report r = Report::from_json(slurp(dir + "/out1.json"));
    CHECK(r.n == 3);
    CHECK(r.aut_order == "2");

    // identical bytes modulo the timing object
    CHECK(run_cli("analyze " + dir + "/p3.graph", dir + "/out2.json") == 0);
    Report r2 = Report::from_json(slurp(dir + "/out2.json"));
    CHECK(r.to_json(false) == r2.to_json(false));

    // text format
    CHECK(run_cli("--format text analyze " + dir + "/p3.graph", dir + "/out.txt") == 0);
    CHECK(slurp(dir + "/out.txt").find("|Aut|:") != std::string::npos);
}

TEST_CASE("end to end: exit codes") {
    std::string dir = "/tmp/gsym_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    {
        std::ofstream f(dir + "/bad.graph");
        f << "2 1\na a\n";
    }
    CHECK(run_cli("analyze " + dir + "/bad.graph", dir + "/err.txt") == 2);
    CHECK(run_cli("analyze " + dir + "/missing.graph", dir + "/err2.txt") == 2);
    CHECK(run_cli("analyze", dir + "/err3.txt") != 0); // usage error from the parser
}

TEST_CASE("end to end: family subcommand") {
    std::string dir = "/tmp/gsym_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    CHECK(run_cli("family 'small_corpus(4)'", dir + "/fam.out") == 0);
    std::string text = slurp(dir + "/fam.out");
    CHECK(std::count(text.begin(), text.end(), '{') >= 10); // one JSON object per graph

    // the 25-vertex host cannot finish the hadwiger search exhaustively, so
    // the report carries a lower bound and the exit code flags the budget
    CHECK(run_cli("family 'twisted_grid(5,5)'", dir + "/tg.out") == 3);
    Report tg = Report::from_json(slurp(dir + "/tg.out"));
    CHECK(tg.n == 25);
    CHECK(tg.vertex_orbit_count == 1);
    CHECK(tg.edge_orbit_count == 1);
    CHECK(!tg.hadwiger_exact);
    CHECK(tg.hadwiger >= 4);
}
#endif
