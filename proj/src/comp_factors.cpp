#include "gsym/comp_factors.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <numeric>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace gsym {

std::string CompositionFactor::label() const {
    switch (kind) {
        case FactorKind::Cyclic: return "C" + std::to_string(param);
        case FactorKind::Alternating: return "A" + std::to_string(param);
        default: return "other(" + order.str() + ")";
    }
}

bool CompositionFactor::operator<(const CompositionFactor& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    if (param != o.param) return param < o.param;
    return order < o.order;
}

bool CompositionFactor::operator==(const CompositionFactor& o) const {
    return kind == o.kind && param == o.param && order == o.order;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
    // keep the generating set irredundant: only candidates that enlarge the
    // subgroup are added, so the list stays logarithmic in the group order
    std::vector<Perm> gens;
    PermGroup h = PermGroup::trivial(g.degree());
    std::deque<Perm> queue;
    auto absorb = [&](const Perm& p) {
        if (p.is_identity() || h.contains(p)) return;
        gens.push_back(p);
        h = PermGroup::build(g.degree(), gens);
        queue.push_back(p);
    };
    for (const auto& s : seeds) absorb(s);
    while (!queue.empty()) {
        Perm x = queue.front();
        queue.pop_front();
        for (const auto& c : g.generators()) {
            absorb(c.inverse() * x * c);
            absorb(c * x * c.inverse());
        }
    }
    return h;
}

PermGroup derived_subgroup(const PermGroup& g) {
    std::vector<Perm> comms;
    const auto& gens = g.generators();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
            if (!c.is_identity()) comms.push_back(c);
        }
    return normal_closure(g, comms);
}

PermGroup quotient_group(const PermGroup& g, const PermGroup& n) {
    if (g.order() % n.order() != 0)
        throw Error("NotASubgroup", "subgroup order does not divide group order");
    BigInt index = g.order() / n.order();
    if (index > 200'000)
        throw Error("GroupTooLarge", "coset action degree above cap: " + index.str());

    // rebuild n with the natural base order so coset representatives can be
    // canonicalized greedily
    std::vector<int> natural(g.degree());
    for (int i = 0; i < g.degree(); ++i) natural[i] = i;
    PermGroup nn = PermGroup::build(n.degree(), n.generators(), natural);

    std::map<std::vector<int>, int> coset_index;
    std::vector<Perm> reps;
    Perm id(g.degree());
    Perm rep0 = nn.min_coset_representative(id);
    coset_index[rep0.images()] = 0;
    reps.push_back(rep0);

    std::vector<std::vector<int>> gen_maps(g.generators().size());
    for (size_t qi = 0; qi < reps.size(); ++qi) {
        for (size_t gi = 0; gi < g.generators().size(); ++gi) {
            Perm t = nn.min_coset_representative(reps[qi] * g.generators()[gi]);
            auto it = coset_index.find(t.images());
            int target;
            if (it == coset_index.end()) {
                target = static_cast<int>(reps.size());
                coset_index[t.images()] = target;
                reps.push_back(t);
            } else {
                target = it->second;
            }
            gen_maps[gi].push_back(target);
        }
    }
    int deg = static_cast<int>(reps.size());
    if (BigInt(deg) != index)
        throw Error("InternalError", "coset enumeration found " + std::to_string(deg) +
                                         " cosets, expected " + index.str());
    std::vector<Perm> qgens;
    for (auto& m : gen_maps) {
        m.resize(deg);
        qgens.push_back(Perm(m));
    }
    return PermGroup::build(deg, qgens);
}

namespace {

std::vector<long long> prime_factorization(long long n) {
    std::vector<long long> out;
    for (long long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

// Conjugacy class representatives via full element enumeration.
std::vector<Perm> class_representatives(const PermGroup& g, std::uint64_t cap) {
    auto elems = g.elements(cap);
    std::sort(elems.begin(), elems.end());
    std::unordered_set<Perm, PermHash> unvisited(elems.begin(), elems.end());
    std::vector<std::pair<size_t, Perm>> classes; // (class size, representative)
    while (!unvisited.empty()) {
        Perm rep = *std::min_element(unvisited.begin(), unvisited.end());
        std::deque<Perm> queue{rep};
        std::vector<Perm> cls{rep};
        unvisited.erase(rep);
        while (!queue.empty()) {
            Perm x = queue.front();
            queue.pop_front();
            for (const auto& c : g.generators()) {
                Perm y = c.inverse() * x * c;
                auto it = unvisited.find(y);
                if (it != unvisited.end()) {
                    unvisited.erase(it);
                    cls.push_back(y);
                    queue.push_back(y);
                }
            }
        }
        classes.push_back({cls.size(), rep});
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second < b.second;
              });
    std::vector<Perm> reps;
    for (auto& [sz, rep] : classes) reps.push_back(rep);
    return reps;
}

long long element_order(const Perm& p) {
    long long ord = 1;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        long long len = 0;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            ++len;
            j = p[j];
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

// Some proper nontrivial normal subgroup, or nullopt when g is simple.
// Complete: every normal subgroup contains the closure of one of its
// nontrivial elements, and closures are constant on conjugacy classes.
std::optional<PermGroup> find_proper_normal(const PermGroup& g) {
    const std::uint64_t enum_cap = 1'000'000;
    if (g.order() > enum_cap)
        throw Error("GroupTooLarge",
                    "normal subgroup search needs element enumeration; order " + g.order().str());
    for (const auto& rep : class_representatives(g, enum_cap)) {
        if (rep.is_identity()) continue;
        PermGroup m = normal_closure(g, {rep});
        if (m.order() < g.order()) return m;
    }
    return std::nullopt;
}

bool has_element_of_order(const PermGroup& g, long long k, std::uint64_t cap) {
    for (const auto& e : g.elements(cap))
        if (element_order(e) == k) return true;
    return false;
}

CompositionFactor classify_simple(const PermGroup& t) {
    CompositionFactor f;
    f.order = t.order();
    if (f.order <= LLONG_MAX) {
        long long ord = f.order.convert_to<long long>();
        auto primes = prime_factorization(ord);
        if (primes.size() == 1) {
            f.kind = FactorKind::Cyclic;
            f.param = primes[0];
            return f;
        }
        // alternating orders m!/2 within the size cap
        long long half_fact = 3; // 3!/2
        for (long long m = 3; half_fact <= ord; half_fact *= ++m) {
            if (half_fact == ord && m >= 5) {
                // |A_8| = |PSL(3,4)| = 20160; A_8 has elements of order 15,
                // PSL(3,4) does not
                if (ord != 20160 || has_element_of_order(t, 15, 1'000'000)) {
                    f.kind = FactorKind::Alternating;
                    f.param = m;
                    return f;
                }
                break;
            }
        }
    }
    f.kind = FactorKind::Other;
    f.witness = t;
    return f;
}

} // namespace

std::vector<CompositionFactor> composition_factors(const PermGroup& g, const BigInt& cap) {
    if (g.order() > cap)
        throw Error("GroupTooLarge", "group order " + g.order().str() + " above cap " + cap.str());
    std::vector<CompositionFactor> out;
    if (g.order() == 1) return out;

    PermGroup d = derived_subgroup(g);
    if (d.order() < g.order()) {
        BigInt layer = g.order() / d.order();
        for (long long p : prime_factorization(layer.convert_to<long long>())) {
            CompositionFactor f;
            f.kind = FactorKind::Cyclic;
            f.param = p;
            f.order = p;
            out.push_back(f);
        }
        auto rest = composition_factors(d, cap);
        out.insert(out.end(), rest.begin(), rest.end());
    } else {
        // perfect group
        auto m = find_proper_normal(g);
        if (!m) {
            out.push_back(classify_simple(g));
        } else {
            auto a = composition_factors(*m, cap);
            auto b = composition_factors(quotient_group(g, *m), cap);
            out.insert(out.end(), a.begin(), a.end());
            out.insert(out.end(), b.begin(), b.end());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Exhaustive homomorphism search: does the 2-generated simple group t embed in
// S_d? Only reached for FactorKind::Other, which desk-scale corpora never
// produce; caps keep it finite.
bool embeds_by_hom_search(const PermGroup& t, int d) {
    if (d > 8) throw Error("GroupTooLarge", "embedding search capped at S_8");
    const std::uint64_t cap = 10'000;
    if (t.order() > cap) throw Error("GroupTooLarge", "embedding search needs small factor");

    // find two generators (finite simple groups are 2-generated)
    auto elems = t.elements(cap);
    Perm x(t.degree()), y(t.degree());
    bool found = false;
    for (size_t i = 0; i < elems.size() && !found; ++i) {
        if (elems[i].is_identity()) continue;
        for (size_t j = i + 1; j < elems.size() && !found; ++j) {
            if (PermGroup::build(t.degree(), {elems[i], elems[j]}).order() == t.order()) {
                x = elems[i];
                y = elems[j];
                found = true;
            }
        }
    }
    if (!found) return false; // not 2-generated, cannot be simple anyway

    long long ox = element_order(x), oy = element_order(y);
    PermGroup sd = wreath_with_sym(PermGroup::trivial(1), d); // S_d on d points
    auto sd_elems = sd.elements(50'000);

    // images of x up to conjugacy in S_d
    std::vector<Perm> ximgs;
    {
        std::unordered_set<Perm, PermHash> seen;
        for (const auto& e : sd_elems) {
            if (element_order(e) != ox || seen.count(e)) continue;
            // mark whole class
            std::deque<Perm> queue{e};
            seen.insert(e);
            while (!queue.empty()) {
                Perm c = queue.front();
                queue.pop_front();
                for (const auto& s : sd.generators()) {
                    Perm cc = s.inverse() * c * s;
                    if (seen.insert(cc).second) queue.push_back(cc);
                }
            }
            ximgs.push_back(e);
        }
    }

    int nt = t.degree();
    for (const auto& xi : ximgs) {
        for (const auto& yi : sd_elems) {
            if (element_order(yi) != oy) continue;
            // graph-of-map trick: the pair map extends to an embedding iff the
            // combined group on nt + d points has order exactly |t|
            std::vector<int> cx(nt + d), cy(nt + d);
            for (int i = 0; i < nt; ++i) { cx[i] = x[i]; cy[i] = y[i]; }
            for (int i = 0; i < d; ++i) { cx[nt + i] = nt + xi[i]; cy[nt + i] = nt + yi[i]; }
            PermGroup comb = PermGroup::build(nt + d, {Perm(cx), Perm(cy)});
            if (comb.order() == t.order()) {
                // faithful iff the projection to the d points has full order
                std::vector<int> pts(d);
                for (int i = 0; i < d; ++i) pts[i] = nt + i;
                if (restriction(comb, pts).order() == t.order()) return true;
            }
        }
    }
    return false;
}

} // namespace

bool factor_embeds_in_sym(const CompositionFactor& f, int d) {
    if (f.kind == FactorKind::Cyclic) return true; // abelian, unconstrained
    if (f.kind == FactorKind::Alternating) return f.param <= d;
    const PermGroup& t = *f.witness;
    // quick route: a faithful orbit of size <= d
    for (const auto& orbit : t.orbits().blocks) {
        if (static_cast<int>(orbit.size()) > d || orbit.size() < 2) continue;
        if (restriction(t, orbit).order() == t.order()) return true;
    }
    // necessary condition
    BigInt dfact = 1;
    for (int i = 2; i <= d; ++i) dfact *= i;
    if (t.order() > dfact || dfact % t.order() != 0) return false;
    return embeds_by_hom_search(t, d);
}

bool is_gamma_d(const PermGroup& g, int d, const BigInt& cap) {
    for (const auto& f : composition_factors(g, cap))
        if (!factor_embeds_in_sym(f, d)) return false;
    return true;
}

} // namespace gsym
