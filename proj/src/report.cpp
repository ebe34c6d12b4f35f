#include "gsym/report.hpp"

#include <chrono>
#include <json.hpp>

#include "gsym/automorphism.hpp"
#include "gsym/comp_factors.hpp"
#include "gsym/families.hpp"
#include "gsym/minors.hpp"
#include "gsym/separators.hpp"
#include "gsym/structure.hpp"

namespace gsym {

using json = nlohmann::ordered_json;

namespace {

json tree_json(const StructureTree& t) {
    json j;
    switch (t.kind) {
        case StructureTree::Kind::Trivial:
            j["kind"] = "trivial";
            break;
        case StructureTree::Kind::Leaf:
            j["kind"] = "leaf";
            j["tag"] = t.leaf_tag == StructureTree::LeafTag::Abelian ? "abelian" : "gamma-part";
            j["degree"] = t.leaf_group->degree();
            break;
        case StructureTree::Kind::Direct: {
            j["kind"] = "direct";
            json kids = json::array();
            for (const auto& c : t.children) kids.push_back(tree_json(c));
            j["children"] = std::move(kids);
            break;
        }
        case StructureTree::Kind::WreathSym:
            j["kind"] = "wreath-sym";
            j["t"] = t.wreath_t;
            j["child"] = tree_json(t.children[0]);
            break;
        case StructureTree::Kind::ExtensionBy: {
            j["kind"] = "extension-by";
            j["kernel"] = tree_json(t.children[0]);
            j["quotient_degree"] = t.quotient->degree();
            j["quotient_order"] = t.quotient->order().str();
            json facs = json::array();
            for (const auto& f : t.quotient_factors) facs.push_back(f.label());
            j["quotient_factors"] = std::move(facs);
            break;
        }
    }
    j["order"] = t.order.str();
    return j;
}

} // namespace

std::string structure_tree_to_json(const StructureTree& t) { return tree_json(t).dump(); }

Report analyze(const ColoredGraph& g, const std::string& descriptor, const AnalyzeOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.input = descriptor;
    r.n = g.graph.n();
    r.m = g.graph.m();
    r.connectivity = is_connected(g.graph) && r.n > 0 ? vertex_connectivity(g.graph) : 0;

    AutResult aut = automorphisms(g);
    r.vertex_orbit_count = static_cast<int>(aut.vertex_orbits.blocks.size());
    r.edge_orbit_count = static_cast<int>(aut.edge_orbits.size());
    r.aut_order = aut.group.order().str();

    try {
        for (const auto& f : composition_factors(aut.group, opt.group_order_cap))
            r.composition_factors.push_back(f.label());
    } catch (const Error& e) {
        if (e.kind() != "GroupTooLarge") throw;
        r.factors_capped = true;
    }

    StructureTree tree = decompose(g);
    r.structure_tree_json = structure_tree_to_json(tree);
    VerifyTreeResult vt = verify_tree(tree, g);
    if (!vt.order_matches)
        throw Error("InternalError", "structure tree order does not match |Aut|");
    r.min_theta_d = vt.min_theta_d;

    HadwigerResult had = hadwiger_number(g.graph, opt.hadwiger_budget);
    r.hadwiger = had.value;
    r.hadwiger_exact = had.exact;

    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
}

std::string Report::to_json(bool with_timing) const {
    json j;
    j["input"] = input;
    j["n"] = n;
    j["m"] = m;
    j["connectivity"] = connectivity;
    j["vertex_orbits"] = vertex_orbit_count;
    j["edge_orbits"] = edge_orbit_count;
    j["aut_order"] = aut_order;
    j["factors_capped"] = factors_capped;
    j["composition_factors"] = composition_factors;
    j["structure_tree"] = json::parse(structure_tree_json);
    j["min_theta_d"] = min_theta_d;
    j["hadwiger"] = {{"value", hadwiger}, {"exact", hadwiger_exact}};
    if (with_timing) j["timing"] = {{"elapsed_ms", elapsed_ms}};
    return j.dump(2);
}

Report Report::from_json(const std::string& text) {
    json j = json::parse(text);
    Report r;
    r.input = j.at("input").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.connectivity = j.at("connectivity").get<int>();
    r.vertex_orbit_count = j.at("vertex_orbits").get<int>();
    r.edge_orbit_count = j.at("edge_orbits").get<int>();
    r.aut_order = j.at("aut_order").get<std::string>();
    r.factors_capped = j.at("factors_capped").get<bool>();
    r.composition_factors = j.at("composition_factors").get<std::vector<std::string>>();
    r.structure_tree_json = j.at("structure_tree").dump();
    r.min_theta_d = j.at("min_theta_d").get<int>();
    r.hadwiger = j.at("hadwiger").at("value").get<int>();
    r.hadwiger_exact = j.at("hadwiger").at("exact").get<bool>();
    if (j.contains("timing")) r.elapsed_ms = j.at("timing").at("elapsed_ms").get<long long>();
    return r;
}

std::string Report::to_text() const {
    std::string s;
    s += "input:             " + input + "\n";
    s += "n, m:              " + std::to_string(n) + ", " + std::to_string(m) + "\n";
    s += "connectivity:      " + std::to_string(connectivity) + "\n";
    s += "vertex orbits:     " + std::to_string(vertex_orbit_count) + "\n";
    s += "edge orbits:       " + std::to_string(edge_orbit_count) + "\n";
    s += "|Aut|:             " + aut_order + "\n";
    s += "factors:           ";
    if (factors_capped) {
        s += "(order above cap)";
    } else {
        for (size_t i = 0; i < composition_factors.size(); ++i)
            s += (i ? " " : "") + composition_factors[i];
        if (composition_factors.empty()) s += "(trivial)";
    }
    s += "\n";
    s += "min theta d:       " + std::to_string(min_theta_d) + "\n";
    s += "hadwiger:          " + std::to_string(hadwiger) + (hadwiger_exact ? "" : " (lower bound, budget)") + "\n";
    return s;
}

namespace {

struct SpecParser {
    std::string s;
    size_t pos = 0;

    char peek() { return pos < s.size() ? s[pos] : '\0'; }
    void expect(char c) {
        if (peek() != c) throw Error("ParseError", "family spec: expected '" + std::string(1, c) + "'");
        ++pos;
    }
    std::string ident() {
        size_t start = pos;
        while (pos < s.size() && (isalnum(s[pos]) || s[pos] == '_' || s[pos] == '-')) ++pos;
        if (start == pos) throw Error("ParseError", "family spec: expected name");
        return s.substr(start, pos - start);
    }
    long long number() {
        size_t start = pos;
        while (pos < s.size() && isdigit(s[pos])) ++pos;
        if (start == pos) throw Error("ParseError", "family spec: expected number");
        return std::stoll(s.substr(start, pos - start));
    }

    Graph parse_spec() {
        std::string kind = ident();
        if (kind == "cycle") return cycle_graph(arg1());
        if (kind == "path") return path_graph(arg1());
        if (kind == "complete") return complete_graph(arg1());
        if (kind == "complete_bipartite") {
            expect('(');
            int a = static_cast<int>(number());
            expect(',');
            int b = static_cast<int>(number());
            expect(')');
            return complete_bipartite(a, b);
        }
        if (kind == "twisted_grid") {
            expect('(');
            int t = static_cast<int>(number());
            expect(',');
            int k = static_cast<int>(number());
            expect(')');
            return twisted_grid(t, k);
        }
        if (kind == "biregular") {
            expect('(');
            int t = static_cast<int>(number());
            expect(',');
            int h = static_cast<int>(number());
            expect(',');
            int r = static_cast<int>(number());
            expect(')');
            return biregular_family(t, h, r);
        }
        if (kind == "cartesian") {
            expect('(');
            Graph acc = parse_spec();
            while (peek() == ',') {
                ++pos;
                acc = cartesian_product(acc, parse_spec());
            }
            expect(')');
            return acc;
        }
        throw Error("ParseError", "unknown family kind: " + kind);
    }

    int arg1() {
        expect('(');
        int v = static_cast<int>(number());
        expect(')');
        return v;
    }
};

} // namespace

std::vector<std::pair<std::string, ColoredGraph>> expand_family_spec(const std::string& spec) {
    // accept both "family:kind:a,b" and "kind(a,b)"
    std::string functional = spec;
    if (spec.rfind("family:", 0) == 0) {
        std::string rest = spec.substr(7);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            functional = rest + "()";
        else
            functional = rest.substr(0, colon) + "(" + rest.substr(colon + 1) + ")";
    }

    std::vector<std::pair<std::string, ColoredGraph>> out;
    if (functional.rfind("small_corpus", 0) == 0) {
        SpecParser p{functional};
        p.ident();
        p.expect('(');
        int max_n = static_cast<int>(p.number());
        CorpusFilter filter;
        while (p.peek() == ',') {
            ++p.pos;
            std::string f = p.ident();
            if (f == "biconnected")
                filter.biconnected = true;
            else if (f == "non-cycle" || f == "noncycle")
                filter.non_cycle = true;
            else if (f == "edge-transitive")
                filter.edge_transitive = true;
            else if (f == "minor-free") {
                p.expect('=');
                filter.minor_free_h = static_cast<int>(p.number());
            } else
                throw Error("ParseError", "unknown corpus filter: " + f);
        }
        p.expect(')');
        int i = 0;
        small_corpus_stream(max_n, filter, [&](const Graph& g) {
            out.push_back({functional + "[" + std::to_string(i++) + "]", ColoredGraph(g)});
        });
        return out;
    }
    SpecParser p{functional};
    Graph g = p.parse_spec();
    out.push_back({functional, ColoredGraph(std::move(g))});
    return out;
}

} // namespace gsym
