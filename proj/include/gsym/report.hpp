#ifndef GSYM_REPORT_HPP
#define GSYM_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gsym/graph.hpp"
#include "gsym/structure_tree.hpp"

namespace gsym {

struct AnalyzeOptions {
    std::uint64_t hadwiger_budget = 50'000'000;
    BigInt group_order_cap = BigInt(10'000'000);
    unsigned seed = 0; // corpus sampling only, never algorithm results
    std::string format = "json";
};

struct Report {
    std::string input;
    int n = 0;
    int m = 0;
    int connectivity = 0; // 0 for disconnected graphs
    int vertex_orbit_count = 0;
    int edge_orbit_count = 0;
    std::string aut_order; // decimal string
    bool factors_capped = false;
    std::vector<std::string> composition_factors;
    std::string structure_tree_json;
    int min_theta_d = -1;
    int hadwiger = 0;
    bool hadwiger_exact = true;
    long long elapsed_ms = 0; // excluded from the determinism contract

    std::string to_json(bool with_timing = true) const;
    static Report from_json(const std::string& text);
    std::string to_text() const;
    bool operator==(const Report& o) const = default;
};

Report analyze(const ColoredGraph& g, const std::string& descriptor, const AnalyzeOptions& opt);

// "family:<kind>:<params>" or functional form "kind(params)"; small_corpus
// expands to one graph per isomorphism class.
std::vector<std::pair<std::string, ColoredGraph>> expand_family_spec(const std::string& spec);

std::string structure_tree_to_json(const StructureTree& t);

} // namespace gsym

#endif
