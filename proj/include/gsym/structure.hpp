#ifndef GSYM_STRUCTURE_HPP
#define GSYM_STRUCTURE_HPP

#include <optional>

#include "gsym/automorphism.hpp"
#include "gsym/structure_tree.hpp"

namespace gsym {

// Recursive decomposition of Aut(g) into a StructureTree: disconnected graphs
// become direct products of wreath products over component isomorphism types,
// singleton orbits are deleted into colors, and otherwise a minimum orbit is
// split off as an extension (kernel individualizes the orbit, quotient is the
// induced action on it).
StructureTree decompose(const ColoredGraph& g);

struct VerifyTreeResult {
    bool order_matches = false;
    BigInt aut_order = 0;
    BigInt tree_ord = 0;
    int min_theta_d = -1; // smallest d with certify_theta, -1 if none <= max_d
};
VerifyTreeResult verify_tree(const StructureTree& tree, const ColoredGraph& g, int max_d = 12);

// Induced action of Aut(g) on a minimum-cardinality vertex orbit, tested for
// Gamma_d membership.
bool min_orbit_gamma_check(const ColoredGraph& g, int d);

struct RegularAbelianReport {
    std::vector<int> orbit;
    BigInt induced_order = 0;
    bool regular = false;
    bool abelian = false;
    bool subgroup_fixed_point_free = false;
    std::optional<Perm> fixed_point_free_element;
};

// Under the large-prime-factor hypothesis, the induced group on a minimum
// subgroup-orbit must be regular and abelian; the report carries witnesses.
RegularAbelianReport regular_abelian_orbit_check(const Graph& g, const PermGroup& subgroup,
                                                 long long alpha);

} // namespace gsym

#endif
