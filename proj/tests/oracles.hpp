#pragma once

// Deliberately naive reference implementations used to cross-check the
// library.  Everything here works on explicit element sets and avoids
// stabilizer chains, orbit machinery, and the library's lattice algorithm
// entirely, so agreement is meaningful.  Costs are quadratic-ish; callers
// keep inputs small.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>
#include <vector>

#include "permlab/perm.hpp"

namespace oracle {

using permlab::Perm;
using permlab::PermHash;

// Subgroup generated by a seed set: right-multiplication closure from the
// identity.
inline std::vector<Perm> closure(int degree, const std::vector<Perm>& seed) {
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> out{Perm::identity(degree)};
    seen.insert(out.front());
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const Perm& g : seed) {
            Perm prod = permlab::compose(out[head], g);
            if (seen.insert(prod).second) out.push_back(std::move(prod));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::uint64_t order_of(int degree, const std::vector<Perm>& seed) {
    return closure(degree, seed).size();
}

// Conjugacy classes by conjugating each element with every group element.
// Returned as sorted element lists, ordered by their least member.
inline std::vector<std::vector<Perm>> conjugacy_classes(const std::vector<Perm>& all) {
    std::set<Perm> left(all.begin(), all.end());
    std::vector<std::vector<Perm>> classes;
    while (!left.empty()) {
        Perm x = *left.begin();
        std::set<Perm> cls;
        for (const Perm& g : all) cls.insert(permlab::conjugated(x, g));
        classes.emplace_back(cls.begin(), cls.end());
        for (const Perm& m : classes.back()) left.erase(m);
    }
    return classes;
}

inline bool contains_all(const std::set<Perm>& big, const std::vector<Perm>& small) {
    for (const Perm& s : small)
        if (!big.count(s)) return false;
    return true;
}

// N_G(H) by definition: x such that x^-1 H x = H as a set.
inline std::vector<Perm> normalizer(const std::vector<Perm>& g_elems,
                                    const std::vector<Perm>& h_elems) {
    std::set<Perm> h_set(h_elems.begin(), h_elems.end());
    std::vector<Perm> out;
    for (const Perm& x : g_elems) {
        bool ok = true;
        for (const Perm& h : h_elems) {
            if (!h_set.count(permlab::conjugated(h, x))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

inline std::vector<Perm> centralizer(const std::vector<Perm>& g_elems,
                                     const std::vector<Perm>& h_elems) {
    std::vector<Perm> out;
    for (const Perm& x : g_elems) {
        bool ok = true;
        for (const Perm& h : h_elems) {
            if (permlab::compose(x, h) != permlab::compose(h, x)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

// Derived subgroup as the closure of all pairwise commutators.
inline std::vector<Perm> derived_subgroup(int degree, const std::vector<Perm>& all) {
    std::vector<Perm> comms;
    for (const Perm& a : all)
        for (const Perm& b : all)
            comms.push_back(permlab::compose(permlab::inverse(permlab::compose(b, a)),
                                             permlab::compose(a, b)));
    return closure(degree, comms);
}

// Every subgroup, as sorted element lists: seed with all subgroups generated
// by at most two elements, then close under pairwise join until fixpoint.
// Each subgroup carries the witness elements it was generated from, so a join
// can be closed from a handful of generators instead of two full element
// lists; the subgroup reached is the same either way.
inline std::set<std::vector<Perm>> all_subgroups(int degree, const std::vector<Perm>& all) {
    std::set<std::vector<Perm>> subs;
    std::vector<std::vector<Perm>> list;      // discovery order
    std::vector<std::vector<Perm>> witness;   // generating elements per entry
    auto add = [&](std::vector<Perm> sub, std::vector<Perm> gens) {
        if (!subs.insert(sub).second) return;
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        list.push_back(std::move(sub));
        witness.push_back(std::move(gens));
    };

    add(closure(degree, {}), {});
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j)
            add(closure(degree, {all[i], all[j]}), {all[i], all[j]});

    // Pairwise joins, worklist style: every new subgroup is joined against
    // everything already found, which reaches the same fixpoint as repeated
    // full passes.
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            // a nested pair needs no join: the result is the larger one
            if (std::includes(list[i].begin(), list[i].end(), list[j].begin(),
                              list[j].end()) ||
                std::includes(list[j].begin(), list[j].end(), list[i].begin(),
                              list[i].end()))
                continue;
            std::vector<Perm> seed = witness[i];
            seed.insert(seed.end(), witness[j].begin(), witness[j].end());
            add(closure(degree, seed), seed);
        }
    }
    return subs;
}

// Normal subgroups: filter all_subgroups by invariance under every element.
inline std::set<std::vector<Perm>> normal_subgroups(int degree, const std::vector<Perm>& all) {
    std::set<std::vector<Perm>> out;
    for (const std::vector<Perm>& sub : all_subgroups(degree, all)) {
        std::set<Perm> sub_set(sub.begin(), sub.end());
        bool normal = true;
        for (const Perm& g : all) {
            for (const Perm& h : sub) {
                if (!sub_set.count(permlab::conjugated(h, g))) {
                    normal = false;
                    break;
                }
            }
            if (!normal) break;
        }
        if (normal) out.insert(sub);
    }
    return out;
}

// Greatest-common-divisor style order helpers kept here so the oracle side
// never touches the library's arithmetic module.
inline std::uint64_t oracle_gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// p'-part of n: divide out every factor of p.
inline std::uint64_t p_prime_part(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n;
}

// p-nilpotency by the normal-Hall-complement definition: some normal
// subgroup has order exactly the p'-part of |G|.
inline bool is_p_nilpotent(int degree, const std::vector<Perm>& all, std::uint64_t p) {
    const std::uint64_t target = p_prime_part(all.size(), p);
    for (const std::vector<Perm>& n : normal_subgroups(degree, all))
        if (n.size() == target) return true;
    return false;
}

}  // namespace oracle
