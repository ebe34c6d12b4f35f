#ifndef GSYM_STRUCTURE_TREE_HPP
#define GSYM_STRUCTURE_TREE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "gsym/comp_factors.hpp"
#include "gsym/perm_group.hpp"

namespace gsym {

// Expression tree over {trivial, leaf group, direct product, wreath by a
// symmetric top group, extension by a quotient} whose order bookkeeping
// certifies how Aut(G) is assembled.
struct StructureTree {
    enum class Kind { Trivial, Leaf, Direct, WreathSym, ExtensionBy };
    enum class LeafTag { Abelian, GammaPart };

    Kind kind = Kind::Trivial;
    BigInt order = 1;

    std::optional<PermGroup> leaf_group; // Leaf
    LeafTag leaf_tag = LeafTag::Abelian;

    std::vector<StructureTree> children; // Direct: all; WreathSym/ExtensionBy: children[0]
    int wreath_t = 0;                    // WreathSym

    std::optional<PermGroup> quotient;                  // ExtensionBy
    std::vector<CompositionFactor> quotient_factors;    // cached at construction

    static StructureTree trivial();
    static StructureTree leaf(PermGroup g, LeafTag tag);
    static StructureTree direct(std::vector<StructureTree> children);
    static StructureTree wreath_sym(StructureTree child, int t);
    static StructureTree extension_by(StructureTree kernel, PermGroup quotient,
                                      const BigInt& factor_cap = BigInt(10'000'000));
};

// Order computed bottom-up from the node formulas.
BigInt tree_order(const StructureTree& t);

// Throws InconsistentTree when a stored order disagrees with its children.
void check_tree_consistent(const StructureTree& t);

// Theta_d legality: leaves and extension quotients must be Gamma_d; direct
// products and wreath-by-symmetric are unrestricted.
bool certify_theta(const StructureTree& t, int d, const BigInt& cap = BigInt(10'000'000));

} // namespace gsym

#endif
