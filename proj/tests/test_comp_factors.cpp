#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gsym/comp_factors.hpp"
#include "gsym/structure_tree.hpp"

using namespace gsym;

namespace {

std::vector<std::string> labels(const std::vector<CompositionFactor>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(f.label());
    std::sort(out.begin(), out.end());
    return out;
}

PermGroup sym(int n) {
    std::vector<Perm> gens{cycle_perm(n, {0, 1})};
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = i;
    gens.push_back(Perm::from_cycles(n, {cyc}));
    return PermGroup::build(n, gens);
}

PermGroup alt(int n) {
    std::vector<Perm> gens{cycle_perm(n, {0, 1, 2})};
    std::vector<int> cyc;
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) cyc.push_back(i);
    } else {
        for (int i = 1; i < n; ++i) cyc.push_back(i);
    }
    gens.push_back(Perm::from_cycles(n, {cyc}));
    return PermGroup::build(n, gens);
}

// test-side simplicity oracle: the normal closure of every nontrivial element
// must be the whole group
bool simple_by_enumeration(const PermGroup& g) {
    for (const auto& e : g.elements(100'000)) {
        if (e.is_identity()) continue;
        if (normal_closure(g, {e}).order() != g.order()) return false;
    }
    return g.order() > 1;
}

} // namespace

TEST_CASE("composition factors of S_4") {
    auto fs = composition_factors(sym(4));
    CHECK(labels(fs) == std::vector<std::string>{"C2", "C2", "C2", "C3"});
}

TEST_CASE("composition factors of C_12") {
    PermGroup c12 = PermGroup::build(12, {cycle_perm(12, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})});
    auto fs = composition_factors(c12);
    CHECK(labels(fs) == std::vector<std::string>{"C2", "C2", "C3"});
}

TEST_CASE("A_5 is a single alternating factor") {
    PermGroup a5 = alt(5);
    REQUIRE(a5.order() == 60);
    CHECK(simple_by_enumeration(a5));
    auto fs = composition_factors(a5);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].kind == FactorKind::Alternating);
    CHECK(fs[0].param == 5);
    CHECK(fs[0].order == 60);
}

TEST_CASE("factors of larger groups") {
    auto s8 = composition_factors(sym(8));
    CHECK(labels(s8) == std::vector<std::string>{"A8", "C2"});

    auto a4xs3 = composition_factors(direct_product(alt(4), sym(3)));
    CHECK(labels(a4xs3) == std::vector<std::string>{"C2", "C2", "C2", "C3", "C3"});

    auto w = composition_factors(wreath_with_sym(PermGroup::build(2, {cycle_perm(2, {0, 1})}), 3));
    CHECK(labels(w) == std::vector<std::string>{"C2", "C2", "C2", "C2", "C3"});
}

TEST_CASE("Jordan-Hoelder invariance under generator shuffling") {
    std::mt19937 rng(17);
    std::vector<PermGroup> groups{sym(4), sym(5), alt(4),
                                  wreath_with_sym(sym(3), 2),
                                  direct_product(sym(3), sym(4))};
    for (const auto& g : groups) {
        auto reference = labels(composition_factors(g));
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Perm> gens = g.generators();
            std::shuffle(gens.begin(), gens.end(), rng);
            // also conjugate by a random element to vary the chain
            auto elems = g.elements(10'000);
            const Perm& c = elems[std::uniform_int_distribution<size_t>(0, elems.size() - 1)(rng)];
            for (auto& p : gens) p = c.inverse() * p * c;
            PermGroup h = PermGroup::build(g.degree(), gens);
            REQUIRE(h.order() == g.order());
            CHECK(labels(composition_factors(h)) == reference);
        }
    }
}

TEST_CASE("quotient group materializes on cosets") {
    PermGroup s4 = sym(4);
    // V4 is normal in S4
    PermGroup v4 = PermGroup::build(
        4, {Perm(std::vector<int>{1, 0, 3, 2}), Perm(std::vector<int>{2, 3, 0, 1})});
    PermGroup q = quotient_group(s4, v4);
    CHECK(q.order() == 6);
    CHECK(q.degree() == 6);
    CHECK(labels(composition_factors(q)) == std::vector<std::string>{"C2", "C3"});
}

TEST_CASE("derived subgroup") {
    CHECK(derived_subgroup(sym(4)).order() == 12);
    CHECK(derived_subgroup(alt(4)).order() == 4);
    PermGroup c6 = PermGroup::build(6, {cycle_perm(6, {0, 1, 2, 3, 4, 5})});
    CHECK(derived_subgroup(c6).order() == 1);
}

TEST_CASE("is_gamma_d on the spec examples") {
    CHECK(is_gamma_d(sym(4), 1)); // solvable
    PermGroup with_a5 = direct_product(alt(5), sym(3));
    CHECK(!is_gamma_d(with_a5, 4)); // A_5 does not embed in S_4
    CHECK(is_gamma_d(with_a5, 5));
    // monotone in d
    for (int d = 5; d <= 8; ++d) CHECK(is_gamma_d(with_a5, d));
    CHECK(!is_gamma_d(alt(6), 5));
    CHECK(is_gamma_d(alt(6), 6));
}

TEST_CASE("gamma_d closure under iterated cyclic extensions") {
    // built explicitly: subgroups of S_3 extended by cyclics, then wreathed
    PermGroup s3 = sym(3);
    PermGroup g = direct_product(s3, PermGroup::build(4, {cycle_perm(4, {0, 1, 2, 3})}));
    g = direct_product(g, s3);
    CHECK(is_gamma_d(g, 3));
    CHECK(is_gamma_d(g, 1)); // solvable throughout
    CHECK(is_gamma_d(wreath_with_sym(sym(3), 2), 3));
}

TEST_CASE("group order cap raises") {
    CHECK_THROWS_WITH_AS((void)composition_factors(sym(8), BigInt(100)),
                         doctest::Contains("GroupTooLarge"), Error);
}

TEST_CASE("theta certification on hand-built trees") {
    PermGroup c5 = PermGroup::build(5, {cycle_perm(5, {0, 1, 2, 3, 4})});
    StructureTree direct = StructureTree::direct(
        {StructureTree::leaf(c5, StructureTree::LeafTag::Abelian),
         StructureTree::leaf(c5, StructureTree::LeafTag::Abelian)});
    CHECK(tree_order(direct) == 25);
    for (int d = 1; d <= 4; ++d) CHECK(certify_theta(direct, d));

    PermGroup c2 = PermGroup::build(2, {cycle_perm(2, {0, 1})});
    StructureTree w = StructureTree::wreath_sym(
        StructureTree::leaf(c2, StructureTree::LeafTag::Abelian), 3);
    CHECK(tree_order(w) == 48);
    CHECK(certify_theta(w, 1));

    StructureTree a6 = StructureTree::leaf(alt(6), StructureTree::LeafTag::GammaPart);
    CHECK(!certify_theta(a6, 5));
    CHECK(certify_theta(a6, 6));

    StructureTree bad = StructureTree::wreath_sym(
        StructureTree::leaf(c2, StructureTree::LeafTag::Abelian), 3);
    bad.order = 47;
    CHECK_THROWS_WITH_AS((void)certify_theta(bad, 3), doctest::Contains("InconsistentTree"),
                         Error);
}

TEST_CASE("extension nodes cache quotient factors") {
    StructureTree ext = StructureTree::extension_by(StructureTree::trivial(), sym(4));
    CHECK(ext.order == 24);
    CHECK(ext.quotient_factors.size() == 4);
    CHECK(certify_theta(ext, 1));
    StructureTree ext5 = StructureTree::extension_by(StructureTree::trivial(), alt(5));
    CHECK(!certify_theta(ext5, 4));
    CHECK(certify_theta(ext5, 5));
}
