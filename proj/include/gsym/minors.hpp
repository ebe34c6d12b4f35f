#ifndef GSYM_MINORS_HPP
#define GSYM_MINORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsym/automorphism.hpp"
#include "gsym/graph.hpp"

namespace gsym {

// Witness object for minor claims: disjoint connected branch sets, one per
// pattern vertex, with every pattern edge realized by a host edge.
struct MinorModel {
    Graph host;
    Graph pattern;
    std::vector<std::vector<int>> branch; // pattern vertex -> host vertex set
};

enum class ModelDefect { None, BranchCount, EmptyBranch, Disjointness, Connectivity, EdgeCover };
const char* defect_name(ModelDefect d);

bool validate_model(const MinorModel& m, ModelDefect* reason = nullptr);

inline constexpr std::uint64_t kDefaultMinorBudget = 50'000'000;

// Branch-and-bound minor-model search. Exhaustive (a decision procedure) for
// hosts with at most 12 vertices; beyond that the node budget applies and
// running out raises BudgetExceeded, never "no minor".
std::optional<MinorModel> find_minor(const Graph& pattern, const Graph& host,
                                     std::uint64_t budget = kDefaultMinorBudget);

struct HadwigerResult {
    int value = 0;
    bool exact = true;
};
HadwigerResult hadwiger_number(const Graph& g, std::uint64_t budget = kDefaultMinorBudget);

std::optional<MinorModel> find_kcc_minor(const Graph& g, int c,
                                         std::uint64_t budget = kDefaultMinorBudget);

struct InvariantContraction {
    ColoredGraph quotient;
    Partition blocks;
    std::vector<int> block_map;
};

// Contracts the connected components spanned by one edge orbit; contracted
// components get a fresh color per colored-isomorphism type, untouched
// vertices keep theirs. The block partition is Aut-invariant by construction.
InvariantContraction invariant_contraction(const ColoredGraph& g, const AutResult& aut,
                                           int edge_orbit_index);

struct MinorAction {
    PermGroup image;
    PermGroup kernel;
};

// Induced action on an invariant partition, with the kernel-restriction
// consistency check (each kernel generator restricts to an automorphism of
// every branch set).
MinorAction action_on_minor(const ColoredGraph& g, const AutResult& aut, const Partition& blocks);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

} // namespace gsym

#endif
