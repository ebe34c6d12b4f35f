#include "gsym/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace gsym {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || x >= degree() || seen[x])
            throw Error("NotABijection", "permutation images are not a bijection");
        seen[x] = 1;
    }
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i)
            img[c[i]] = c[(i + 1) % c.size()];
    return Perm(std::move(img));
}

std::string Perm::cycle_string() const {
    std::string s;
    std::vector<char> seen(degree(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        s += '(';
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            s += std::to_string(j);
            j = images_[j];
            if (j != i) s += ' ';
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

Perm cycle_perm(int degree, const std::vector<int>& cycle) {
    return Perm::from_cycles(degree, {cycle});
}

// ---------------------------------------------------------------------------
// Stabilizer chain

Perm PermGroup::Level::transversal(int point) const {
    // walk the Schreier vector up to the base point, then compose downwards
    std::vector<int> gen_path;
    int q = point;
    while (q != base_point) {
        gen_path.push_back(parent_gen[q]);
        q = parent[q];
    }
    Perm t(static_cast<int>(where.size()));
    for (auto it = gen_path.rbegin(); it != gen_path.rend(); ++it) t = t * gens[*it];
    return t;
}

PermGroup PermGroup::trivial(int degree) {
    PermGroup g;
    g.degree_ = degree;
    g.order_ = 1;
    return g;
}

std::pair<Perm, int> PermGroup::sift(const Perm& p) const {
    Perm r = p;
    int i = 0;
    for (; i < static_cast<int>(levels_.size()); ++i) {
        const Level& L = levels_[i];
        int x = r[L.base_point];
        if (x == L.base_point) continue;
        if (L.where[x] < 0) return {r, i};
        r = r * L.transversal(x).inverse();
    }
    return {r, i};
}

bool PermGroup::contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    auto [r, lev] = sift(p);
    return lev == static_cast<int>(levels_.size()) && r.is_identity();
}

PermGroup PermGroup::build(int degree, const std::vector<Perm>& generators,
                           const std::vector<int>& base_hint) {
    PermGroup g;
    g.degree_ = degree;
    for (const auto& p : generators) {
        if (p.degree() != degree) throw Error("DegreeMismatch", "generator degree mismatch");
        if (!p.is_identity()) g.generators_.push_back(p);
    }

    // Pre-seed one level per hinted base point so that the base sequence is
    // guaranteed to start with the hint. Levels whose point is never moved
    // stay trivial and are harmless.
    auto new_level = [&](int b) {
        Level L;
        L.base_point = b;
        L.orbit = {b};
        L.where.assign(degree, -1);
        L.where[b] = 0;
        L.parent.assign(degree, -1);
        L.parent_gen.assign(degree, -1);
        g.levels_.push_back(std::move(L));
        g.base_.push_back(b);
    };
    for (int b : base_hint) new_level(b);

    // Extends the orbit of level i after gens changed; returns the list of
    // (orbit point, gen index) pairs whose Schreier generators still need
    // processing.
    auto extend_orbit = [&](int i, int new_gen_index) {
        Level& L = g.levels_[i];
        std::vector<std::pair<int, int>> pending;
        size_t old_size = L.orbit.size();
        if (new_gen_index >= 0)
            for (size_t qi = 0; qi < old_size; ++qi) pending.push_back({L.orbit[qi], new_gen_index});
        std::deque<int> frontier;
        // new generator may reach new points from any old point
        for (size_t qi = 0; qi < old_size; ++qi) frontier.push_back(L.orbit[qi]);
        while (!frontier.empty()) {
            int q = frontier.front();
            frontier.pop_front();
            for (int gi = 0; gi < static_cast<int>(L.gens.size()); ++gi) {
                int nq = L.gens[gi][q];
                if (L.where[nq] < 0) {
                    L.where[nq] = static_cast<int>(L.orbit.size());
                    L.orbit.push_back(nq);
                    L.parent[nq] = q;
                    L.parent_gen[nq] = gi;
                    frontier.push_back(nq);
                    for (int gj = 0; gj < static_cast<int>(L.gens.size()); ++gj)
                        pending.push_back({nq, gj});
                }
            }
        }
        return pending;
    };

    std::deque<std::pair<int, Perm>> queue; // (level to sift from, element)
    for (const auto& p : g.generators_) queue.push_back({0, p});

    while (!queue.empty()) {
        auto [lv, p] = queue.front();
        queue.pop_front();

        Perm r = p;
        int i = lv;
        bool placed = false;
        for (; i < static_cast<int>(g.levels_.size()); ++i) {
            Level& L = g.levels_[i];
            int x = r[L.base_point];
            if (x == L.base_point) continue;
            if (L.where[x] < 0) { placed = true; break; }
            r = r * L.transversal(x).inverse();
        }
        if (r.is_identity()) continue;
        if (!placed && i == static_cast<int>(g.levels_.size())) {
            // r fixes every existing base point; open a new level on the first
            // point it moves (all hinted points are already seeded as levels)
            int b = -1;
            for (int cand = 0; cand < degree; ++cand)
                if (r[cand] != cand) { b = cand; break; }
            new_level(b);
        }
        // r fixes the base points of levels lv..i-1 and so belongs to the
        // stabilizer subgroup of every level from lv to i; it can extend any
        // of those orbits through non-base points
        for (int k = lv; k <= i && k < static_cast<int>(g.levels_.size()); ++k) {
            Level& L = g.levels_[k];
            L.gens.push_back(r);
            auto pending = extend_orbit(k, static_cast<int>(L.gens.size()) - 1);
            for (auto [q, gi] : pending) {
                Perm tq = L.transversal(q);
                const Perm& h = L.gens[gi];
                Perm s = tq * h * L.transversal(h[q]).inverse();
                if (!s.is_identity()) queue.push_back({k + 1, s});
            }
        }
    }

    g.recompute_order();
    return g;
}

void PermGroup::recompute_order() {
    order_ = 1;
    for (const auto& L : levels_) order_ *= static_cast<long long>(L.orbit.size());
}

std::vector<int> PermGroup::orbit_of(int v) const {
    std::vector<int> orbit{v};
    std::vector<char> seen(degree_, 0);
    seen[v] = 1;
    for (size_t i = 0; i < orbit.size(); ++i)
        for (const auto& gen : generators_) {
            int w = gen[orbit[i]];
            if (!seen[w]) {
                seen[w] = 1;
                orbit.push_back(w);
            }
        }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

Partition PermGroup::orbits() const {
    std::vector<char> seen(degree_, 0);
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < degree_; ++v) {
        if (seen[v]) continue;
        auto orb = orbit_of(v);
        for (int w : orb) seen[w] = 1;
        blocks.push_back(std::move(orb));
    }
    return Partition(degree_, std::move(blocks));
}

PermGroup PermGroup::point_stabilizer(int v) const {
    if (v < 0 || v >= degree_) throw Error("PointOutOfRange", "stabilizer point out of range");
    PermGroup rebased = build(degree_, generators_, {v});
    std::vector<Perm> stab_gens;
    for (size_t i = 0; i < rebased.levels_.size(); ++i) {
        if (rebased.levels_[i].base_point == v) continue;
        for (const auto& p : rebased.levels_[i].gens)
            if (p[v] == v) stab_gens.push_back(p);
    }
    return build(degree_, stab_gens);
}

bool PermGroup::setwise_image_test(const std::vector<int>& S, const std::vector<int>& T) const {
    if (S.size() != T.size()) return false;
    std::vector<int> s(S), t(T);
    std::sort(s.begin(), s.end());
    std::sort(t.begin(), t.end());
    for (int x : s)
        if (x < 0 || x >= degree_) throw Error("PointOutOfRange", "set member out of range");
    for (int x : t)
        if (x < 0 || x >= degree_) throw Error("PointOutOfRange", "set member out of range");

    std::set<std::vector<int>> seen{s};
    std::deque<std::vector<int>> queue{s};
    const size_t cap = 2'000'000;
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        if (cur == t) return true;
        for (const auto& gen : generators_) {
            std::vector<int> img;
            img.reserve(cur.size());
            for (int x : cur) img.push_back(gen[x]);
            std::sort(img.begin(), img.end());
            if (seen.insert(img).second) {
                if (seen.size() > cap)
                    throw Error("GroupTooLarge", "set orbit exceeds enumeration cap");
                queue.push_back(std::move(img));
            }
        }
    }
    return false;
}

bool PermGroup::is_abelian() const {
    for (size_t i = 0; i < generators_.size(); ++i)
        for (size_t j = i + 1; j < generators_.size(); ++j)
            if (!(generators_[i] * generators_[j] == generators_[j] * generators_[i]))
                return false;
    return true;
}

bool PermGroup::is_transitive_on(const std::vector<int>& orbit) const {
    if (orbit.empty()) return true;
    auto orb = orbit_of(orbit[0]);
    std::vector<int> sorted(orbit);
    std::sort(sorted.begin(), sorted.end());
    return orb == sorted;
}

bool PermGroup::is_semiregular() const {
    for (const auto& block : orbits().blocks)
        if (BigInt(static_cast<long long>(block.size())) != order_) return false;
    return true;
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
    if (order_ > cap) throw Error("GroupTooLarge", "element enumeration above cap");
    std::vector<Perm> out{Perm(degree_)};
    // multiply transversals from the deepest level outwards; the factorization
    // g = u_deep * ... * u_0 visits every element exactly once
    for (int i = static_cast<int>(levels_.size()) - 1; i >= 0; --i) {
        const Level& L = levels_[i];
        std::vector<Perm> next;
        next.reserve(out.size() * L.orbit.size());
        for (int q : L.orbit) {
            Perm t = L.transversal(q);
            for (const auto& e : out) next.push_back(e * t);
        }
        out = std::move(next);
    }
    return out;
}

Perm PermGroup::min_coset_representative(const Perm& p) const {
    Perm cur = p;
    for (const auto& L : levels_) {
        int best_q = -1, best_img = degree_;
        for (int q : L.orbit)
            if (cur[q] < best_img) {
                best_img = cur[q];
                best_q = q;
            }
        if (best_q != L.base_point) cur = L.transversal(best_q) * cur;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Derived group constructions

InducedAction induced_action(const PermGroup& g, const std::vector<std::vector<int>>& blocks) {
    int n = g.degree();
    int m = static_cast<int>(blocks.size());
    std::vector<int> block_of(n, -1);
    for (int i = 0; i < m; ++i)
        for (int v : blocks[i]) {
            if (v < 0 || v >= n) throw Error("PointOutOfRange", "block member out of range");
            if (block_of[v] >= 0) throw Error("OverlappingBlocks", "blocks are not disjoint");
            block_of[v] = i;
        }

    std::vector<Perm> image_gens;
    std::vector<Perm> combined_gens;
    for (const auto& gen : g.generators()) {
        std::vector<int> bimg(m, -1);
        for (int i = 0; i < m; ++i) {
            int target = block_of[gen[blocks[i][0]]];
            if (target < 0) throw Error("BlocksNotInvariant", "block image is not a block");
            for (int v : blocks[i])
                if (block_of[gen[v]] != target)
                    throw Error("BlocksNotInvariant", "block image is not a block");
            bimg[i] = target;
        }
        image_gens.push_back(Perm(bimg));
        std::vector<int> comb(n + m);
        for (int v = 0; v < n; ++v) comb[v] = gen[v];
        for (int i = 0; i < m; ++i) comb[n + i] = n + bimg[i];
        combined_gens.push_back(Perm(std::move(comb)));
    }

    InducedAction result;
    result.image = PermGroup::build(m, image_gens);
    result.image_of_generators = std::move(image_gens);

    // kernel = pointwise stabilizer of the block coordinates in the combined
    // action, restricted back to the original domain
    PermGroup stab = PermGroup::build(n + m, combined_gens);
    for (int i = 0; i < m; ++i) stab = stab.point_stabilizer(n + i);
    std::vector<Perm> kernel_gens;
    for (const auto& p : stab.generators()) {
        std::vector<int> img(p.images().begin(), p.images().begin() + n);
        kernel_gens.push_back(Perm(std::move(img)));
    }
    result.kernel = PermGroup::build(n, kernel_gens);

    if (result.image.order() * result.kernel.order() != g.order())
        throw Error("InternalError", "induced action order bookkeeping failed");
    return result;
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    int n = a.degree(), m = b.degree();
    std::vector<Perm> gens;
    for (const auto& p : a.generators()) {
        std::vector<int> img(n + m);
        for (int i = 0; i < n; ++i) img[i] = p[i];
        for (int i = 0; i < m; ++i) img[n + i] = n + i;
        gens.push_back(Perm(std::move(img)));
    }
    for (const auto& p : b.generators()) {
        std::vector<int> img(n + m);
        for (int i = 0; i < n; ++i) img[i] = i;
        for (int i = 0; i < m; ++i) img[n + i] = n + p[i];
        gens.push_back(Perm(std::move(img)));
    }
    return PermGroup::build(n + m, gens);
}

PermGroup wreath_with_sym(const PermGroup& a, int t) {
    if (t < 1) throw Error("BadParameter", "wreath top degree must be >= 1");
    int d = a.degree();
    int n = d * t;
    std::vector<Perm> gens;
    for (const auto& p : a.generators()) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i;
        for (int i = 0; i < d; ++i) img[i] = p[i];
        gens.push_back(Perm(std::move(img)));
    }
    if (t >= 2) {
        std::vector<int> swap01(n), cyc(n);
        for (int c = 0; c < t; ++c)
            for (int i = 0; i < d; ++i) {
                int from = c * d + i;
                int sw = c == 0 ? 1 : (c == 1 ? 0 : c);
                swap01[from] = sw * d + i;
                cyc[from] = ((c + 1) % t) * d + i;
            }
        gens.push_back(Perm(std::move(swap01)));
        if (t >= 3) gens.push_back(Perm(std::move(cyc)));
    }
    return PermGroup::build(n, gens);
}

PermGroup restriction(const PermGroup& g, const std::vector<int>& points) {
    std::vector<int> idx(g.degree(), -1);
    for (int i = 0; i < static_cast<int>(points.size()); ++i) idx[points[i]] = i;
    std::vector<Perm> gens;
    for (const auto& p : g.generators()) {
        std::vector<int> img(points.size());
        for (int i = 0; i < static_cast<int>(points.size()); ++i) {
            int t = p[points[i]];
            if (idx[t] < 0) throw Error("NotInvariant", "point set not invariant under group");
            img[i] = idx[t];
        }
        gens.push_back(Perm(std::move(img)));
    }
    return PermGroup::build(static_cast<int>(points.size()), gens);
}

bool is_regular_on(const PermGroup& g, const std::vector<int>& orbit) {
    if (orbit.empty()) throw Error("NotAnOrbit", "empty orbit");
    auto orb = g.orbit_of(orbit[0]);
    std::vector<int> sorted(orbit);
    std::sort(sorted.begin(), sorted.end());
    if (orb != sorted) throw Error("NotAnOrbit", "given set is not a group orbit");
    PermGroup induced = restriction(g, sorted);
    return induced.order() == BigInt(static_cast<long long>(sorted.size()));
}

bool prime_factors_exceed(const PermGroup& g, long long bound) {
    BigInt n = g.order();
    for (long long p = 2; p <= bound; ++p) {
        bool prime = true;
        for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0) { prime = false; break; }
        if (!prime) continue;
        if (n % p == 0) return false;
    }
    return true;
}

} // namespace gsym
