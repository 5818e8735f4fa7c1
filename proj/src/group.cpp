#include "permlab/group.hpp"

#include <algorithm>
#include <utility>

#include "internal.hpp"
#include "permlab/errors.hpp"

namespace permlab {

// ---------------------------------------------------------------------------
// Stabilizer chain
// ---------------------------------------------------------------------------

namespace {

// Orbit of level i's base under all generators attached at levels >= i,
// with a breadth-first transversal.  Deterministic: points are discovered
// in scan order over (orbit position, level, generator).
void recompute_orbit(StabChain& c, std::size_t i) {
    ChainLevel& L = c.levels[i];
    L.orbit.clear();
    L.transversal.clear();
    L.pos.assign(static_cast<std::size_t>(c.degree), -1);
    L.orbit.push_back(L.base);
    L.pos[L.base] = 0;
    L.transversal.push_back(Perm::identity(c.degree));
    for (std::size_t head = 0; head < L.orbit.size(); ++head) {
        const std::uint16_t pt = L.orbit[head];
        for (std::size_t lev = i; lev < c.levels.size(); ++lev) {
            for (const Perm& g : c.levels[lev].gens) {
                const std::uint16_t img = g[pt];
                if (L.pos[img] < 0) {
                    L.pos[img] = static_cast<std::int32_t>(L.orbit.size());
                    L.orbit.push_back(img);
                    L.transversal.push_back(compose(L.transversal[head], g));
                }
            }
        }
    }
}

// Establishes the strong-generation property at level i, assuming every
// deeper level already has it.  Scans the Schreier generators of level i;
// any residual that fails to sift through the deeper levels is attached at
// its drop-out level and the levels between are re-verified before the scan
// resumes.  The generator/orbit snapshot taken at entry stays valid: later
// attachments lie in the level's group, so they change neither the group nor
// its base orbit, and Schreier's lemma only needs some generating set of the
// group together with some transversal.
void complete_level(StabChain& c, std::size_t i) {
    recompute_orbit(c, i);

    std::vector<Perm> gens;
    for (std::size_t lev = i; lev < c.levels.size(); ++lev)
        gens.insert(gens.end(), c.levels[lev].gens.begin(), c.levels[lev].gens.end());

    // c.levels may grow (and reallocate) while the scan runs, so index it
    // fresh instead of holding references across attachments.
    const std::size_t orbit_size = c.levels[i].orbit.size();
    for (std::size_t head = 0; head < orbit_size; ++head) {
        for (const Perm& g : gens) {
            Perm t = compose(c.levels[i].transversal[head], g);
            const std::uint16_t moved = t[c.levels[i].base];
            const auto at = static_cast<std::size_t>(c.levels[i].pos[moved]);
            Perm s = compose(t, inverse(c.levels[i].transversal[at]));
            if (s.is_identity()) continue;

            // Sift the Schreier generator through the deeper levels.
            std::size_t drop = c.levels.size();
            for (std::size_t l = i + 1; l < c.levels.size() && !s.is_identity(); ++l) {
                const ChainLevel& D = c.levels[l];
                const std::int32_t p = D.pos[s[D.base]];
                if (p < 0) {
                    drop = l;
                    break;
                }
                s = compose(s, inverse(D.transversal[static_cast<std::size_t>(p)]));
            }
            if (s.is_identity()) continue;

            if (drop == c.levels.size()) {
                ChainLevel fresh;
                fresh.base = static_cast<std::uint16_t>(s.smallest_moved_point());
                c.levels.push_back(std::move(fresh));
            }
            c.levels[drop].gens.push_back(std::move(s));
            for (std::size_t l = drop; l > i; --l) complete_level(c, l);
        }
    }
}

}  // namespace

StabChain build_chain(int degree, const std::vector<Perm>& gens) {
    StabChain c;
    c.degree = degree;

    std::vector<Perm> seed;
    for (const Perm& g : gens) {
        if (g.degree() != degree)
            throw InvalidArgument("generator degree mismatch in stabilizer chain");
        if (g.is_identity()) continue;
        if (std::find(seed.begin(), seed.end(), g) == seed.end()) seed.push_back(g);
    }
    if (seed.empty()) {
        c.order = 1;
        return c;
    }

    int base = degree;
    for (const Perm& g : seed) base = std::min(base, g.smallest_moved_point());
    ChainLevel first;
    first.base = static_cast<std::uint16_t>(base);
    first.gens = std::move(seed);
    c.levels.push_back(std::move(first));
    complete_level(c, 0);

    unsigned __int128 order = 1;
    for (const ChainLevel& L : c.levels) order *= L.orbit.size();
    if (order > static_cast<unsigned __int128>(UINT64_MAX))
        throw CutoffExceeded("group order does not fit in 64 bits");
    c.order = static_cast<std::uint64_t>(order);
    return c;
}

Perm StabChain::sift(Perm p, std::size_t from) const {
    for (std::size_t l = from; l < levels.size() && !p.is_identity(); ++l) {
        const ChainLevel& L = levels[l];
        const std::int32_t at = L.pos[p[L.base]];
        if (at < 0) return p;
        p = compose(p, inverse(L.transversal[static_cast<std::size_t>(at)]));
    }
    return p;
}

bool StabChain::contains(const Perm& p) const {
    if (p.degree() != degree) return false;
    return sift(p).is_identity();
}

// ---------------------------------------------------------------------------
// PermGroup
// ---------------------------------------------------------------------------

PermGroup::PermGroup(int degree) : PermGroup(degree, {}) {}

PermGroup::PermGroup(int degree, std::vector<Perm> gens)
    : degree_(degree), cache_(std::make_shared<detail::GroupCache>()) {
    if (degree < 0 || static_cast<std::uint64_t>(degree) > limits().degree)
        throw CutoffExceeded("permutation degree " + std::to_string(degree) +
                             " exceeds the degree cutoff");
    for (Perm& g : gens) {
        if (g.degree() != degree)
            throw InvalidArgument("generator degree does not match group degree");
        if (g.is_identity()) continue;
        if (std::find(gens_.begin(), gens_.end(), g) == gens_.end())
            gens_.push_back(std::move(g));
    }
}

const StabChain& PermGroup::chain() const {
    detail::GroupCache& slots = *cache_;
    std::call_once(slots.chain_once, [&] { slots.chain = build_chain(degree_, gens_); });
    return *slots.chain;
}

bool PermGroup::contains(const Perm& p) const {
    if (p.degree() != degree_)
        throw InvalidArgument("membership test across different degrees");
    return chain().contains(p);
}

const std::vector<Perm>& PermGroup::elements() const {
    detail::GroupCache& slots = *cache_;
    std::call_once(slots.elements_once, [&] {
        const std::uint64_t n = order();
        if (n > limits().enumeration)
            throw CutoffExceeded("group of order " + std::to_string(n) +
                                 " exceeds the enumeration cutoff of " +
                                 std::to_string(limits().enumeration));
        const StabChain& c = chain();
        std::vector<Perm> all{identity()};
        for (std::size_t l = c.levels.size(); l-- > 0;) {
            const std::vector<Perm>& tr = c.levels[l].transversal;
            std::vector<Perm> next;
            next.reserve(all.size() * tr.size());
            for (const Perm& t : tr)
                for (const Perm& h : all) next.push_back(compose(h, t));
            all = std::move(next);
        }
        std::sort(all.begin(), all.end());
        detail::check(all.size() == n, "element enumeration count matches group order");
        slots.element_pos.reserve(all.size() * 2);
        for (std::uint32_t i = 0; i < all.size(); ++i) slots.element_pos.emplace(all[i], i);
        detail::check(slots.element_pos.size() == n, "enumerated elements are distinct");
        slots.elements = std::move(all);
    });
    return slots.elements;
}

std::int64_t PermGroup::element_position(const Perm& p) const {
    elements();
    const auto& map = cache_->element_pos;
    auto it = map.find(p);
    return it == map.end() ? -1 : static_cast<std::int64_t>(it->second);
}

bool PermGroup::same_group_as(const PermGroup& other) const {
    if (degree_ != other.degree_ || order() != other.order()) return false;
    for (const Perm& g : gens_)
        if (!other.contains(g)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Conjugacy classes
// ---------------------------------------------------------------------------

const std::vector<ConjugacyClass>& conjugacy_classes(const PermGroup& G) {
    detail::GroupCache& slots = G.cache_slots();
    std::call_once(slots.classes_once, [&] {
        const std::vector<Perm>& elems = G.elements();
        const auto& pos = slots.element_pos;
        std::vector<char> seen(elems.size(), 0);
        std::vector<ConjugacyClass> classes;
        for (std::uint32_t i = 0; i < elems.size(); ++i) {
            if (seen[i]) continue;
            ConjugacyClass cls;
            cls.representative = elems[i];
            std::vector<std::uint32_t> queue{i};
            seen[i] = 1;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const Perm& x = elems[queue[head]];
                for (const Perm& g : G.generators()) {
                    const std::uint32_t j = pos.at(conjugated(x, g));
                    if (!seen[j]) {
                        seen[j] = 1;
                        queue.push_back(j);
                    }
                }
            }
            std::sort(queue.begin(), queue.end());
            cls.members = std::move(queue);
            classes.push_back(std::move(cls));
        }
        slots.classes = std::move(classes);
    });
    return slots.classes;
}

// ---------------------------------------------------------------------------
// Derived subgroups
// ---------------------------------------------------------------------------

PermGroup generated_subgroup(const PermGroup& parent, std::vector<Perm> gens) {
    for (const Perm& g : gens)
        if (!parent.contains(g))
            throw InvalidArgument("subgroup generator lies outside the parent group");
    PermGroup H(parent.degree(), std::move(gens));
    detail::check(parent.order() % H.order() == 0, "subgroup order divides group order");
    return H;
}

PermGroup group_from_elements(int degree, const std::vector<Perm>& elems) {
    std::vector<Perm> gens;
    StabChain c = build_chain(degree, {});
    for (const Perm& e : elems) {
        if (!c.contains(e)) {
            gens.push_back(e);
            c = build_chain(degree, gens);
        }
    }
    detail::check(c.order == elems.size(), "element set is closed under the group operations");
    return PermGroup(degree, std::move(gens));
}

bool is_subgroup_of(const PermGroup& H, const PermGroup& G) {
    if (H.degree() != G.degree()) return false;
    for (const Perm& h : H.generators())
        if (!G.contains(h)) return false;
    return true;
}

bool is_normal_in(const PermGroup& H, const PermGroup& G) {
    if (!is_subgroup_of(H, G)) return false;
    for (const Perm& h : H.generators())
        for (const Perm& g : G.generators())
            if (!H.contains(conjugated(h, g))) return false;
    return true;
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H) {
    if (H.degree() != G.degree())
        throw InvalidArgument("normalizer across different degrees");
    std::vector<Perm> members;
    for (const Perm& x : G.elements()) {
        bool ok = true;
        for (const Perm& h : H.generators()) {
            if (!H.contains(conjugated(h, x))) {
                ok = false;
                break;
            }
        }
        if (ok) members.push_back(x);
    }
    return group_from_elements(G.degree(), members);
}

PermGroup centralizer(const PermGroup& G, const PermGroup& H) {
    if (H.degree() != G.degree())
        throw InvalidArgument("centralizer across different degrees");
    std::vector<Perm> members;
    for (const Perm& x : G.elements()) {
        bool ok = true;
        for (const Perm& h : H.generators()) {
            if (compose(x, h) != compose(h, x)) {
                ok = false;
                break;
            }
        }
        if (ok) members.push_back(x);
    }
    return group_from_elements(G.degree(), members);
}

PermGroup center(const PermGroup& G) { return centralizer(G, G); }

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed) {
    std::vector<Perm> gens;
    for (const Perm& s : seed) {
        if (!G.contains(s))
            throw InvalidArgument("normal closure seed lies outside the group");
        if (!s.is_identity()) gens.push_back(s);
    }
    StabChain c = build_chain(G.degree(), gens);
    for (std::size_t head = 0; head < gens.size(); ++head) {
        for (const Perm& g : G.generators()) {
            Perm conj = conjugated(gens[head], g);
            if (!c.contains(conj)) {
                gens.push_back(std::move(conj));
                c = build_chain(G.degree(), gens);
            }
        }
    }
    return PermGroup(G.degree(), std::move(gens));
}

PermGroup commutator_subgroup(const PermGroup& ambient, const PermGroup& A, const PermGroup& B) {
    if (!is_subgroup_of(A, ambient) || !is_subgroup_of(B, ambient))
        throw InvalidArgument("commutator factors must lie in the ambient group");
    std::vector<Perm> join = A.generators();
    join.insert(join.end(), B.generators().begin(), B.generators().end());
    PermGroup J(ambient.degree(), std::move(join));
    std::vector<Perm> comms;
    for (const Perm& a : A.generators())
        for (const Perm& b : B.generators())
            comms.push_back(compose(inverse(a), inverse(b), compose(a, b)));
    return normal_closure(J, comms);
}

}  // namespace permlab
