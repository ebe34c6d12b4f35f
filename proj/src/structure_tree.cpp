#include "gsym/structure_tree.hpp"

namespace gsym {

StructureTree StructureTree::trivial() {
    StructureTree t;
    t.kind = Kind::Trivial;
    t.order = 1;
    return t;
}

StructureTree StructureTree::leaf(PermGroup g, LeafTag tag) {
    StructureTree t;
    t.kind = Kind::Leaf;
    t.order = g.order();
    t.leaf_group = std::move(g);
    t.leaf_tag = tag;
    return t;
}

StructureTree StructureTree::direct(std::vector<StructureTree> children) {
    StructureTree t;
    t.kind = Kind::Direct;
    t.order = 1;
    for (const auto& c : children) t.order *= c.order;
    t.children = std::move(children);
    return t;
}

StructureTree StructureTree::wreath_sym(StructureTree child, int w) {
    if (w < 1) throw Error("BadParameter", "wreath multiplicity must be >= 1");
    StructureTree t;
    t.kind = Kind::WreathSym;
    t.wreath_t = w;
    t.order = 1;
    for (int i = 0; i < w; ++i) t.order *= child.order;
    for (int i = 2; i <= w; ++i) t.order *= i;
    t.children.push_back(std::move(child));
    return t;
}

StructureTree StructureTree::extension_by(StructureTree kernel, PermGroup q, const BigInt& cap) {
    StructureTree t;
    t.kind = Kind::ExtensionBy;
    t.order = kernel.order * q.order();
    t.children.push_back(std::move(kernel));
    t.quotient_factors = composition_factors(q, cap);
    t.quotient = std::move(q);
    return t;
}

BigInt tree_order(const StructureTree& t) {
    switch (t.kind) {
        case StructureTree::Kind::Trivial: return 1;
        case StructureTree::Kind::Leaf: return t.leaf_group->order();
        case StructureTree::Kind::Direct: {
            BigInt o = 1;
            for (const auto& c : t.children) o *= tree_order(c);
            return o;
        }
        case StructureTree::Kind::WreathSym: {
            BigInt o = 1;
            BigInt co = tree_order(t.children[0]);
            for (int i = 0; i < t.wreath_t; ++i) o *= co;
            for (int i = 2; i <= t.wreath_t; ++i) o *= i;
            return o;
        }
        case StructureTree::Kind::ExtensionBy:
            return tree_order(t.children[0]) * t.quotient->order();
    }
    return 1;
}

void check_tree_consistent(const StructureTree& t) {
    if (tree_order(t) != t.order)
        throw Error("InconsistentTree", "declared order " + t.order.str() +
                                            " != computed " + tree_order(t).str());
    if (t.kind == StructureTree::Kind::Leaf && t.leaf_tag == StructureTree::LeafTag::Abelian &&
        !t.leaf_group->is_abelian())
        throw Error("InconsistentTree", "leaf tagged abelian is not abelian");
    for (const auto& c : t.children) check_tree_consistent(c);
}

namespace {

bool theta_legal(const StructureTree& t, int d, const BigInt& cap) {
    switch (t.kind) {
        case StructureTree::Kind::Trivial: return true;
        case StructureTree::Kind::Leaf:
            // any Gamma_d group is Theta_d via an extension of the trivial
            // group; abelian leaves satisfy this for every d
            return is_gamma_d(*t.leaf_group, d, cap);
        case StructureTree::Kind::Direct:
        case StructureTree::Kind::WreathSym: {
            for (const auto& c : t.children)
                if (!theta_legal(c, d, cap)) return false;
            return true;
        }
        case StructureTree::Kind::ExtensionBy:
            return theta_legal(t.children[0], d, cap) && is_gamma_d(*t.quotient, d, cap);
    }
    return false;
}

} // namespace

bool certify_theta(const StructureTree& t, int d, const BigInt& cap) {
    check_tree_consistent(t);
    return theta_legal(t, d, cap);
}

} // namespace gsym
