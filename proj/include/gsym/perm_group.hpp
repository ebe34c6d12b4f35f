#ifndef GSYM_PERM_GROUP_HPP
#define GSYM_PERM_GROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "gsym/graph.hpp"
#include "gsym/perm.hpp"

namespace gsym {

using BigInt = boost::multiprecision::cpp_int;

// Permutation group with a stabilizer chain (Schreier-Sims). Immutable after
// construction; the exact order is the product of the transversal sizes.
class PermGroup {
public:
    PermGroup() = default; // trivial group of degree 0

    // Trivial group of the given degree.
    static PermGroup trivial(int degree);

    // Build from generators. All generators must share the same degree.
    // base_hint, when given, seeds the base point order (used for point
    // stabilizers and canonical coset representatives).
    static PermGroup build(int degree, const std::vector<Perm>& generators,
                           const std::vector<int>& base_hint = {});

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return generators_; }
    const BigInt& order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    bool contains(const Perm& p) const;

    // Orbit of a single point under the group.
    std::vector<int> orbit_of(int v) const;
    // Orbit partition of the full domain 0..degree-1.
    Partition orbits() const;

    PermGroup point_stabilizer(int v) const;

    // Decides whether some group element maps set S onto set T.
    bool setwise_image_test(const std::vector<int>& S, const std::vector<int>& T) const;

    bool is_abelian() const;
    bool is_transitive_on(const std::vector<int>& orbit) const;
    bool is_semiregular() const;

    // Enumerates all elements; throws GroupTooLarge beyond the cap.
    std::vector<Perm> elements(std::uint64_t cap = 2'000'000) const;

    // Sifts p through the chain; returns the residue and the level reached.
    std::pair<Perm, int> sift(const Perm& p) const;

    const std::vector<int>& base() const { return base_; }

    // Canonical representative of the right coset (this)*p: the element of the
    // coset whose image tuple on 0,1,2,... is lexicographically minimal.
    // Requires a chain built with base_hint 0..n-1 (see build()).
    Perm min_coset_representative(const Perm& p) const;

private:
    struct Level {
        int base_point = -1;
        std::vector<Perm> gens;          // generators of this level's stabilizer subgroup
        std::vector<int> orbit;          // orbit of base_point under gens
        std::vector<int> where;          // point -> index into orbit, or -1
        std::vector<int> parent;         // Schreier vector: previous point
        std::vector<int> parent_gen;     // Schreier vector: generator index used
        Perm transversal(int point) const; // element mapping base_point -> point
    };

    void extend_chain(const std::vector<int>& base_hint);
    void recompute_order();

    int degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Level> levels_;
    std::vector<int> base_;
    BigInt order_ = 1;
};

struct InducedAction {
    PermGroup image;  // action on block indices
    PermGroup kernel; // elements fixing every block setwise
    std::vector<Perm> image_of_generators; // per original generator
};

// Action of g on a g-invariant block list; throws BlocksNotInvariant.
InducedAction induced_action(const PermGroup& g, const std::vector<std::vector<int>>& blocks);

PermGroup direct_product(const PermGroup& a, const PermGroup& b);
PermGroup wreath_with_sym(const PermGroup& a, int t);

// Induced permutation group on an invariant point set (restriction).
PermGroup restriction(const PermGroup& g, const std::vector<int>& points);

bool is_regular_on(const PermGroup& g, const std::vector<int>& orbit);
bool prime_factors_exceed(const PermGroup& g, long long bound);

// Group generated by cycles convenience (tests and families).
Perm cycle_perm(int degree, const std::vector<int>& cycle);

} // namespace gsym

#endif
