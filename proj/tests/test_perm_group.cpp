#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gsym/perm_group.hpp"

using namespace gsym;

namespace {

// independent order oracle: closure by multiplication
std::set<Perm> closure(int degree, const std::vector<Perm>& gens) {
    std::set<Perm> elems{Perm(degree)};
    std::vector<Perm> frontier{Perm(degree)};
    while (!frontier.empty()) {
        Perm p = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            Perm q = p * g;
            if (elems.insert(q).second) frontier.push_back(q);
        }
    }
    return elems;
}

Perm random_perm(std::mt19937& rng, int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(img);
}

} // namespace

TEST_CASE("perm composition is left to right") {
    Perm a = Perm::from_cycles(3, {{0, 1}});
    Perm b = Perm::from_cycles(3, {{1, 2}});
    Perm ab = a * b;
    CHECK(ab[0] == 2); // 0 ->a 1 ->b 2
    CHECK((a * a.inverse()).is_identity());
}

TEST_CASE("build_group small examples") {
    PermGroup c4 = PermGroup::build(4, {cycle_perm(4, {0, 1, 2, 3})});
    CHECK(c4.order() == 4);

    PermGroup none = PermGroup::build(5, {});
    CHECK(none.order() == 1);
    CHECK(none.is_trivial());

    CHECK_THROWS_WITH_AS(PermGroup::build(4, {Perm(3)}), doctest::Contains("DegreeMismatch"),
                         Error);
}

TEST_CASE("chain order equals brute-force closure on random groups") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 7)(rng);
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Perm> gens;
        for (int i = 0; i < k; ++i) gens.push_back(random_perm(rng, n));
        PermGroup g = PermGroup::build(n, gens);
        auto elems = closure(n, gens);
        CHECK(g.order() == BigInt(static_cast<long long>(elems.size())));
        for (const auto& e : elems) CHECK(g.contains(e));
        // membership is exact, not just order bookkeeping
        CHECK(g.elements(20'000).size() == elems.size());
    }
}

TEST_CASE("orbits and stabilizers") {
    PermGroup rot5 = PermGroup::build(5, {cycle_perm(5, {0, 1, 2, 3, 4})});
    Partition orbs = rot5.orbits();
    REQUIRE(orbs.blocks.size() == 1);
    CHECK(orbs.blocks[0].size() == 5);

    PermGroup triv = PermGroup::trivial(4);
    CHECK(triv.orbits().blocks.size() == 4);

    // Aut(P_4) = {id, reversal}: stabilizer of an end vertex is trivial
    PermGroup aut_p4 = PermGroup::build(4, {Perm(std::vector<int>{3, 2, 1, 0})});
    CHECK(aut_p4.order() == 2);
    CHECK(aut_p4.point_stabilizer(0).order() == 1);

    PermGroup s4 = PermGroup::build(4, {cycle_perm(4, {0, 1}), cycle_perm(4, {0, 1, 2, 3})});
    CHECK(s4.order() == 24);
    CHECK(s4.point_stabilizer(2).order() == 6);
}

TEST_CASE("setwise image test") {
    PermGroup rot6 = PermGroup::build(6, {cycle_perm(6, {0, 1, 2, 3, 4, 5})});
    CHECK(rot6.setwise_image_test({0, 1}, {3, 4}));
    CHECK(!rot6.setwise_image_test({0, 1}, {0, 2}));
    CHECK(rot6.setwise_image_test({0, 2, 4}, {1, 3, 5}));
    CHECK(!rot6.setwise_image_test({0, 1}, {0, 1, 2}));
}

TEST_CASE("induced action on blocks: C2 wr S3") {
    PermGroup w = wreath_with_sym(PermGroup::build(2, {cycle_perm(2, {0, 1})}), 3);
    CHECK(w.order() == 48);
    CHECK(w.degree() == 6);
    InducedAction act = induced_action(w, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(act.image.order() == 6);
    CHECK(act.kernel.order() == 8);
    CHECK(act.image.order() * act.kernel.order() == w.order());
}

TEST_CASE("induced action, singleton and trivial cases") {
    PermGroup s4 = PermGroup::build(4, {cycle_perm(4, {0, 1}), cycle_perm(4, {0, 1, 2, 3})});
    InducedAction act = induced_action(s4, {{0}, {1}, {2}, {3}});
    CHECK(act.image.order() == 24);
    CHECK(act.kernel.order() == 1);

    PermGroup triv = PermGroup::trivial(4);
    InducedAction tact = induced_action(triv, {{0, 1}, {2, 3}});
    CHECK(tact.image.order() == 1);
    CHECK(tact.kernel.order() == 1);

    CHECK_THROWS_WITH_AS((void)induced_action(s4, {{0, 1}, {2}}),
                         doctest::Contains("BlocksNotInvariant"), Error);
}

TEST_CASE("induced action order product holds on random block systems") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        int b = std::uniform_int_distribution<int>(2, 4)(rng);
        int s = std::uniform_int_distribution<int>(1, 3)(rng);
        PermGroup base = PermGroup::build(s, s >= 2 ? std::vector<Perm>{random_perm(rng, s)}
                                                    : std::vector<Perm>{});
        PermGroup w = wreath_with_sym(base, b);
        std::vector<std::vector<int>> blocks;
        for (int i = 0; i < b; ++i) {
            std::vector<int> blk;
            for (int j = 0; j < s; ++j) blk.push_back(i * s + j);
            blocks.push_back(blk);
        }
        InducedAction act = induced_action(w, blocks);
        CHECK(act.image.order() * act.kernel.order() == w.order());
    }
}

TEST_CASE("products and wreath orders") {
    PermGroup c2 = PermGroup::build(2, {cycle_perm(2, {0, 1})});
    PermGroup c3 = PermGroup::build(3, {cycle_perm(3, {0, 1, 2})});
    CHECK(direct_product(c2, c3).order() == 6);
    CHECK(wreath_with_sym(c2, 3).order() == 48);
    CHECK(wreath_with_sym(c2, 1).order() == c2.order());

    // exact big-integer arithmetic: (C_2 wr S_5) wr S_4 has order (2^5*120)^4 * 24
    PermGroup big = wreath_with_sym(wreath_with_sym(c2, 5), 4);
    BigInt expect = 1;
    BigInt inner = 3840;
    for (int i = 0; i < 4; ++i) expect *= inner;
    expect *= 24;
    CHECK(big.order() == expect);
}

TEST_CASE("predicates") {
    PermGroup rot7 = PermGroup::build(7, {cycle_perm(7, {0, 1, 2, 3, 4, 5, 6})});
    std::vector<int> all7{0, 1, 2, 3, 4, 5, 6};
    CHECK(rot7.is_abelian());
    CHECK(is_regular_on(rot7, all7));
    CHECK(rot7.is_semiregular());
    CHECK(prime_factors_exceed(rot7, 6));
    CHECK(!prime_factors_exceed(rot7, 7));

    // dihedral of order 8 on 4 points: not regular
    PermGroup d4 = PermGroup::build(
        4, {cycle_perm(4, {0, 1, 2, 3}), Perm(std::vector<int>{0, 3, 2, 1})});
    CHECK(d4.order() == 8);
    CHECK(!is_regular_on(d4, {0, 1, 2, 3}));
    CHECK(!d4.is_semiregular());

    CHECK(PermGroup::trivial(5).is_semiregular());
    CHECK_THROWS_WITH_AS((void)is_regular_on(d4, {0, 1}), doctest::Contains("NotAnOrbit"), Error);
}

TEST_CASE("min coset representative canonicalizes cosets") {
    // chain with natural base order
    std::vector<int> natural{0, 1, 2, 3};
    PermGroup v4 = PermGroup::build(
        4, {Perm(std::vector<int>{1, 0, 3, 2}), Perm(std::vector<int>{2, 3, 0, 1})}, natural);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Perm p = random_perm(rng, 4);
        Perm canon = v4.min_coset_representative(p);
        // canonical representative is in the same right coset
        CHECK(v4.contains(canon * p.inverse()));
        // and is minimal among all coset members
        for (const auto& nu : v4.elements()) CHECK(!(  (nu * p).images() < canon.images()));
        // and is constant across the coset
        for (const auto& nu : v4.elements())
            CHECK(v4.min_coset_representative(nu * p) == canon);
    }
}
