#include "gsym/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace gsym {

namespace {

[[noreturn]] void parse_error(int line, const std::string& reason) {
    throw Error("ParseError", "line " + std::to_string(line) + ": " + reason);
}

} // namespace

ParsedGraph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    std::map<std::string, int> label_ids;
    std::vector<std::string> labels;
    std::map<std::string, int> color_ids;
    std::vector<std::string> color_names;
    std::vector<std::pair<int, int>> color_assignments; // vertex, color id

    auto vertex_id = [&](const std::string& tok) {
        auto it = label_ids.find(tok);
        if (it != label_ids.end()) return it->second;
        if (static_cast<long long>(labels.size()) >= n)
            parse_error(lineno, "more vertex labels than declared count");
        int id = static_cast<int>(labels.size());
        label_ids.emplace(tok, id);
        labels.push_back(tok);
        return id;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, c;
        if (!(ls >> a)) continue; // blank
        if (n < 0) {
            if (!(std::istringstream(a) >> n) || !(ls >> m) || n < 0 || m < 0)
                parse_error(lineno, "expected header 'n m'");
            if (ls >> c) parse_error(lineno, "trailing tokens after header");
            continue;
        }
        if (a == "c") {
            if (!(ls >> b >> c)) parse_error(lineno, "expected 'c <label> <color>'");
            int v = vertex_id(b);
            auto it = color_ids.find(c);
            int cid;
            if (it == color_ids.end()) {
                cid = static_cast<int>(color_names.size()) + 1; // 0 is the default color
                color_ids.emplace(c, cid);
                color_names.push_back(c);
            } else {
                cid = it->second;
            }
            color_assignments.push_back({v, cid});
            continue;
        }
        if (!(ls >> b)) parse_error(lineno, "expected 'u v'");
        if (ls >> c) parse_error(lineno, "trailing tokens after edge");
        int u = vertex_id(a), v = vertex_id(b);
        if (u == v) throw Error("SelfLoop", "line " + std::to_string(lineno) + ": edge " + a + " " + b);
        Edge e{std::min(u, v), std::max(u, v)};
        for (const auto& prev : edges)
            if (prev == e)
                throw Error("DuplicateEdge",
                            "line " + std::to_string(lineno) + ": edge " + a + " " + b);
        edges.push_back(e);
    }
    if (n < 0) parse_error(lineno, "missing header");
    if (static_cast<long long>(edges.size()) != m)
        parse_error(lineno, "declared " + std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));

    while (static_cast<long long>(labels.size()) < n)
        labels.push_back("v" + std::to_string(labels.size()));

    std::vector<int> colors(n, 0);
    for (auto [v, cid] : color_assignments) colors[v] = cid;

    ParsedGraph pg;
    pg.graph = ColoredGraph(Graph(static_cast<int>(n), std::move(edges)), std::move(colors));
    pg.labels = std::move(labels);
    pg.color_names = std::move(color_names);
    return pg;
}

ParsedGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ParseError", "cannot open " + path);
    return parse_graph(in);
}

std::string write_graph(const ParsedGraph& g) {
    std::ostringstream out;
    out << g.graph.graph.n() << ' ' << g.graph.graph.m() << '\n';
    for (auto [u, v] : g.graph.graph.edges()) out << g.labels[u] << ' ' << g.labels[v] << '\n';
    for (int v = 0; v < g.graph.graph.n(); ++v)
        if (g.graph.color[v] != 0)
            out << "c " << g.labels[v] << ' ' << g.color_names[g.graph.color[v] - 1] << '\n';
    return out.str();
}

} // namespace gsym
