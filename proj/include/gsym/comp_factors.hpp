#ifndef GSYM_COMP_FACTORS_HPP
#define GSYM_COMP_FACTORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gsym/perm_group.hpp"

namespace gsym {

enum class FactorKind { Cyclic, Alternating, Other };

struct CompositionFactor {
    FactorKind kind = FactorKind::Cyclic;
    long long param = 0; // prime p for Cyclic, m for Alternating
    BigInt order = 1;
    std::optional<PermGroup> witness; // permutation representation for Other

    std::string label() const;
    bool operator<(const CompositionFactor& o) const;
    bool operator==(const CompositionFactor& o) const;
};

// Composition factor multiset of a finite permutation group (Jordan-Hoelder).
// Abelian layers are read off the derived series; nonsolvable residue is split
// by normal-subgroup search over conjugacy class representatives.
std::vector<CompositionFactor> composition_factors(const PermGroup& g,
                                                   const BigInt& cap = BigInt(10'000'000));

// Normal closure of the given elements in g.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds);
PermGroup derived_subgroup(const PermGroup& g);

// g/n as a permutation group acting on the right cosets of n.
PermGroup quotient_group(const PermGroup& g, const PermGroup& n);

// True iff every non-abelian composition factor has a faithful permutation
// representation on at most d points.
bool is_gamma_d(const PermGroup& g, int d, const BigInt& cap = BigInt(10'000'000));

// Smallest number of points a group provably acts on faithfully, searched
// within desk-scale caps; used for FactorKind::Other only.
bool factor_embeds_in_sym(const CompositionFactor& f, int d);

} // namespace gsym

#endif
