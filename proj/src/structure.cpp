#include "permlab/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "permlab/config.hpp"
#include "permlab/constructions.hpp"
#include "permlab/errors.hpp"
#include "permlab/lattice.hpp"
#include "permlab/numbers.hpp"
#include "internal.hpp"

namespace permlab {

namespace {

void require_prime(std::uint64_t p, const char* who) {
    if (!is_prime(p)) throw InvalidArgument(std::string(who) + ": p must be prime");
}

}  // namespace

// --- coset actions and quotients -----------------------------------------

Perm Homomorphism::apply(const Perm& x) const {
    const auto& elems = domain.elements();
    std::vector<std::uint16_t> images(coset_rep_pos.size());
    for (std::size_t i = 0; i < coset_rep_pos.size(); ++i) {
        const Perm moved = compose(elems[coset_rep_pos[i]], x);
        const std::int64_t pos = domain.element_position(moved);
        if (pos < 0) throw InvalidArgument("Homomorphism::apply: element is not in the domain");
        images[i] = static_cast<std::uint16_t>(element_coset[static_cast<std::size_t>(pos)]);
    }
    return Perm::from_images(std::move(images));
}

Homomorphism coset_action(const PermGroup& g, const PermGroup& h) {
    if (!is_subgroup_of(h, g))
        throw InvalidArgument("coset_action: not a subgroup of the acting group");
    const std::uint64_t index = g.order() / h.order();
    if (index > limits().degree)
        throw CutoffExceeded("coset_action: subgroup index exceeds the degree cutoff");

    const auto& elems = g.elements();
    const auto& sub_elems = h.elements();

    Homomorphism hom;
    hom.domain = g;
    hom.element_coset.assign(elems.size(), 0);
    std::vector<char> labeled(elems.size(), 0);
    hom.coset_rep_pos.reserve(index);
    // Sweeping positions in ascending element order makes the first
    // unlabeled member of each coset its least member.
    for (std::size_t pos = 0; pos < elems.size(); ++pos) {
        if (labeled[pos]) continue;
        const std::uint32_t label = static_cast<std::uint32_t>(hom.coset_rep_pos.size());
        hom.coset_rep_pos.push_back(static_cast<std::uint32_t>(pos));
        for (const Perm& s : sub_elems) {
            const std::int64_t member = g.element_position(compose(s, elems[pos]));
            detail::check(member >= 0, "coset sweep left the group");
            hom.element_coset[static_cast<std::size_t>(member)] = label;
            labeled[static_cast<std::size_t>(member)] = 1;
        }
    }
    detail::check(hom.coset_rep_pos.size() == index, "coset count != subgroup index");

    hom.generator_images.reserve(g.generators().size());
    for (const Perm& gen : g.generators()) hom.generator_images.push_back(hom.apply(gen));
    hom.image = PermGroup(static_cast<int>(index), hom.generator_images);
    hom.kernel_is_subgroup = is_normal_in(h, g);
    return hom;
}

PermGroup kernel(const Homomorphism& h) {
    const auto& elems = h.domain.elements();
    std::vector<Perm> members;
    for (std::size_t pos = 0; pos < elems.size(); ++pos) {
        if (h.element_coset[pos] != 0) continue;  // must fix coset 0
        if (h.apply(elems[pos]).is_identity()) members.push_back(elems[pos]);
    }
    PermGroup k = group_from_elements(h.domain.degree(), members);
    detail::check(k.order() * h.image.order() == h.domain.order(),
                  "kernel size does not complement the image");
    return k;
}

Homomorphism quotient(const PermGroup& g, const PermGroup& n) {
    if (!is_subgroup_of(n, g) || !is_normal_in(n, g))
        throw InvalidArgument("quotient: subgroup is not normal");
    Homomorphism h = coset_action(g, n);
    detail::check(h.kernel_is_subgroup, "quotient map lost normality");
    detail::check(n.order() * h.image.order() == g.order(), "quotient order mismatch");
    detail::check(kernel(h).same_group_as(n), "quotient kernel differs from the given subgroup");
    return h;
}

PermGroup preimage(const Homomorphism& h, const PermGroup& s) {
    if (!is_subgroup_of(s, h.image))
        throw InvalidArgument("preimage: not a subgroup of the image");
    if (s.order() == h.image.order()) return h.domain;

    const auto& elems = h.domain.elements();
    std::vector<Perm> members;
    if (h.kernel_is_subgroup) {
        // The image of an element depends only on its coset, so test one
        // representative per coset and collect whole cosets.
        std::vector<char> accepted(h.coset_rep_pos.size(), 0);
        for (std::size_t i = 0; i < h.coset_rep_pos.size(); ++i)
            accepted[i] = s.contains(h.apply(elems[h.coset_rep_pos[i]]));
        for (std::size_t pos = 0; pos < elems.size(); ++pos)
            if (accepted[h.element_coset[pos]]) members.push_back(elems[pos]);
    } else {
        for (const Perm& x : elems)
            if (s.contains(h.apply(x))) members.push_back(x);
    }
    PermGroup pre = group_from_elements(h.domain.degree(), members);
    detail::check(pre.order() * h.image.order() == h.domain.order() * s.order(),
                  "preimage order mismatch");
    return pre;
}

// --- p-nilpotency ---------------------------------------------------------

PermGroup p_residual(const PermGroup& g, std::uint64_t p) {
    require_prime(p, "p_residual");
    // Normal closure of the p'-order conjugacy class representatives; each
    // class of p'-elements is covered by the closure of its representative.
    std::vector<Perm> seeds;
    for (const ConjugacyClass& c : conjugacy_classes(g))
        if (c.representative.order() % p != 0) seeds.push_back(c.representative);
    return normal_closure(g, seeds);
}

bool is_p_nilpotent(const PermGroup& g, std::uint64_t p) {
    require_prime(p, "is_p_nilpotent");
    return p_residual(g, p).order() == p_prime_part(g.order(), p);
}

std::optional<PermGroup> normal_p_complement(const PermGroup& g, std::uint64_t p) {
    require_prime(p, "normal_p_complement");
    PermGroup h = p_residual(g, p);
    if (h.order() != p_prime_part(g.order(), p)) return std::nullopt;
    detail::check(is_normal_in(h, g), "p-complement is not normal");
    return h;
}

// --- cores, series, radicals ----------------------------------------------

namespace {

/// Largest normal subgroup satisfying `keep`; every qualifying subgroup must
/// be contained in it (uniqueness of the maximum is asserted, not assumed).
template <class Pred>
PermGroup largest_normal(const PermGroup& g, Pred keep, const char* what) {
    std::vector<PermGroup> candidates;
    for (const PermGroup& n : normal_subgroups(g))
        if (keep(n)) candidates.push_back(n);
    detail::check(!candidates.empty(), std::string(what) + ": no qualifying normal subgroup");
    PermGroup best = candidates.front();
    for (const PermGroup& n : candidates)
        if (n.order() > best.order()) best = n;
    for (const PermGroup& n : candidates)
        detail::check(is_subgroup_of(n, best),
                      std::string(what) + ": qualifying subgroups are not all below the maximum");
    return best;
}

}  // namespace

PermGroup p_core(const PermGroup& g, std::uint64_t p) {
    require_prime(p, "p_core");
    return largest_normal(
        g, [p](const PermGroup& n) { return p_part(n.order(), p) == n.order(); }, "p_core");
}

PermGroup p_prime_core(const PermGroup& g, std::uint64_t p) {
    require_prime(p, "p_prime_core");
    return largest_normal(
        g, [p](const PermGroup& n) { return n.order() % p != 0; }, "p_prime_core");
}

PSeries upper_p_series(const PermGroup& g, std::uint64_t p) {
    require_prime(p, "upper_p_series");
    PSeries series;
    series.p = p;
    PermGroup cur(g.degree());
    series.terms.push_back(cur);

    int stale = 0;
    for (int step = 1; cur.order() != g.order() && stale < 2; ++step) {
        const bool p_step = (step % 2 == 0);
        PermGroup next;
        if (cur.is_trivial()) {
            next = p_step ? p_core(g, p) : p_prime_core(g, p);
        } else {
            const Homomorphism to_quotient = quotient(g, cur);
            const PermGroup core_above = p_step ? p_core(to_quotient.image, p)
                                                : p_prime_core(to_quotient.image, p);
            next = preimage(to_quotient, core_above);
        }
        const bool grew = next.order() > cur.order();
        stale = grew ? 0 : stale + 1;
        if (p_step && grew) ++series.p_length;
        series.terms.push_back(next);
        cur = next;
    }
    while (series.terms.size() >= 2 &&
           series.terms.back().order() == series.terms[series.terms.size() - 2].order())
        series.terms.pop_back();
    series.reaches_group = series.terms.back().order() == g.order();
    return series;
}

bool is_p_solvable(const PermGroup& g, std::uint64_t p) {
    return upper_p_series(g, p).reaches_group;
}

PermGroup solvable_radical(const PermGroup& g) {
    return largest_normal(
        g, [](const PermGroup& n) { return is_solvable(n); }, "solvable_radical");
}

PermGroup p_solvable_radical(const PermGroup& g, std::uint64_t p) {
    require_prime(p, "p_solvable_radical");
    return largest_normal(
        g, [p](const PermGroup& n) { return is_p_solvable(n, p); }, "p_solvable_radical");
}

// --- commutator series ----------------------------------------------------

std::vector<PermGroup> derived_series(const PermGroup& g) {
    std::vector<PermGroup> series{g};
    while (true) {
        const PermGroup& cur = series.back();
        PermGroup next = commutator_subgroup(g, cur, cur);
        if (next.order() == cur.order()) break;
        series.push_back(std::move(next));
    }
    return series;
}

std::vector<PermGroup> lower_central_series(const PermGroup& g) {
    std::vector<PermGroup> series{g};
    while (true) {
        const PermGroup& cur = series.back();
        PermGroup next = commutator_subgroup(g, cur, g);
        if (next.order() == cur.order()) break;
        series.push_back(std::move(next));
    }
    return series;
}

bool is_abelian(const PermGroup& g) {
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
    return true;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

bool is_nilpotent(const PermGroup& g) { return lower_central_series(g).back().is_trivial(); }

int nilpotency_class(const PermGroup& g) {
    const auto series = lower_central_series(g);
    if (!series.back().is_trivial())
        throw InvalidArgument("nilpotency_class: group is not nilpotent");
    return static_cast<int>(series.size()) - 1;
}

bool is_supersolvable(const PermGroup& g) {
    const std::vector<PermGroup> normals = normal_subgroups(g);
    const std::size_t n = normals.size();
    std::vector<char> reaches_top(n, 0);
    std::size_t trivial_at = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (normals[i].order() == g.order()) reaches_top[i] = 1;
        if (normals[i].order() == 1) trivial_at = i;
    }
    // A normal subgroup reaches the top iff some normal overgroup of prime
    // index over it does; iterate to the fixpoint.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (reaches_top[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!reaches_top[j] || normals[j].order() % normals[i].order() != 0) continue;
                if (!is_prime(normals[j].order() / normals[i].order())) continue;
                if (!is_subgroup_of(normals[i], normals[j])) continue;
                reaches_top[i] = 1;
                changed = true;
                break;
            }
        }
    }
    return reaches_top[trivial_at] != 0;
}

bool is_simple(const PermGroup& g) { return normal_subgroups(g).size() == 2; }

// --- fingerprints and the catalog ------------------------------------------

namespace {

Fingerprint compute_fingerprint(const PermGroup& g) {
    Fingerprint fp;
    fp.order = g.order();
    fp.abelian = is_abelian(g);
    fp.simple = is_simple(g);

    std::map<std::uint64_t, std::uint64_t> orders;
    for (const Perm& x : g.elements()) ++orders[x.order()];
    fp.element_orders.assign(orders.begin(), orders.end());

    std::map<std::uint64_t, std::uint64_t> sizes;
    for (const ConjugacyClass& c : conjugacy_classes(g)) ++sizes[c.members.size()];
    fp.class_sizes.assign(sizes.begin(), sizes.end());

    const auto derived = derived_series(g);
    if (derived.back().is_trivial())
        fp.derived_length = static_cast<int>(derived.size()) - 1;
    fp.center_order = center(g).order();
    return fp;
}

}  // namespace

std::string Fingerprint::text() const {
    std::ostringstream out;
    out << "order=" << order << ";abelian=" << (abelian ? 1 : 0)
        << ";simple=" << (simple ? 1 : 0) << ";derived=";
    if (derived_length)
        out << *derived_length;
    else
        out << "inf";
    out << ";center=" << center_order << ";orders=";
    for (std::size_t i = 0; i < element_orders.size(); ++i) {
        if (i) out << ",";
        out << element_orders[i].first << "x" << element_orders[i].second;
    }
    out << ";classes=";
    for (std::size_t i = 0; i < class_sizes.size(); ++i) {
        if (i) out << ",";
        out << class_sizes[i].first << "x" << class_sizes[i].second;
    }
    return out.str();
}

const Fingerprint& fingerprint(const PermGroup& g) {
    return detail::opaque_get<Fingerprint>(g.cache_slots().fingerprint,
                                           [&] { return compute_fingerprint(g); });
}

namespace {

struct CatalogEntry {
    std::string name;
    Fingerprint fp;
};

/// The order-18 semidirect product of C3 with Sym(3) in which the odd
/// permutations invert the C3 factor.
PermGroup c3_semi_sym3() {
    PermGroup g(6, {Perm::from_cycles(6, "(1,2,3)"), Perm::from_cycles(6, "(4,5,6)"),
                    Perm::from_cycles(6, "(2,3)(4,5)")});
    detail::check(g.order() == 18, "C3:Sym(3) construction order");
    return g;
}

/// The order-24 subgroup of the order-72 example generated by a Sylow
/// 2-subgroup together with the normal C3: the maximal type with a normal
/// C3 under a dihedral order-8 action.
PermGroup c3_semi_d8() {
    const PermGroup host = example_group_72_43();
    const PermGroup odd_core = p_prime_core(host, 2);
    std::vector<Perm> gens = sylow(host, 2).subgroup.generators();
    for (const Perm& x : odd_core.generators()) gens.push_back(x);
    PermGroup g = generated_subgroup(host, std::move(gens));
    detail::check(g.order() == 24, "C3:D8 construction order");
    return g;
}

/// C3^2 acted on by C4, the square inverting both coordinates: the
/// point-stabilizer type inside PSL(2,9).
PermGroup c3sq_semi_c4() {
    PermGroup g(6, {Perm::from_cycles(6, "(1,2,3)"), Perm::from_cycles(6, "(1,4)(2,5,3,6)")});
    detail::check(g.order() == 36, "C3^2:C4 construction order");
    return g;
}

/// C3 wreath C3: the base group of three C3 blocks extended by the block
/// rotation; a Sylow 3-subgroup of the order-324 example.
PermGroup c3_wr_c3() {
    PermGroup g(9, {Perm::from_cycles(9, "(1,2,3)"), Perm::from_cycles(9, "(1,4,7)(2,5,8)(3,6,9)")});
    detail::check(g.order() == 81, "C3wrC3 construction order");
    return g;
}

/// The normal maximal subgroup of order 108 inside the order-324 example.
PermGroup c3sq_semi_d12() {
    for (const PermGroup& n : normal_subgroups(example_group_324_160()))
        if (n.order() == 108) return n;
    throw InternalCheck("order-108 normal subgroup not found in the order-324 example");
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    auto add = [&entries](std::string name, const PermGroup& g) {
        entries.push_back({std::move(name), fingerprint(g)});
    };
    auto alias = [&entries](const std::string& name, const PermGroup& g) {
        const Fingerprint fp = fingerprint(g);
        for (const CatalogEntry& e : entries)
            if (e.name == name) {
                detail::check(e.fp == fp, "catalog alias fingerprint mismatch for " + name);
                return;
            }
        throw InternalCheck("catalog alias target missing: " + name);
    };

    add("Alt(4)", alternating_group(4));
    add("Alt(5)", alternating_group(5));
    add("Sym(3)", symmetric_group(3));
    add("Sym(4)", symmetric_group(4));
    add("Sym(5)", symmetric_group(5));
    add("Sym(6)", symmetric_group(6));
    add("PSL(2,7)", psl2(7));
    add("PSL(2,8)", psl2(8));
    add("PSL(2,9)", psl2(9));
    add("PSL(2,11)", psl2(11));
    add("PSL(2,13)", psl2(13));
    add("PGL(2,7)", pgl2(7));
    add("PGL(2,11)", pgl2(11));

    for (int n = 1; n <= 60; ++n) add("C" + std::to_string(n), cyclic_group(n));
    for (int order = 8; order <= 40; order += 2)
        add("D" + std::to_string(order), dihedral_group(order));

    add("C5:C4", modular_affine_group(5, 2));
    add("C7:C3", modular_affine_group(7, 2));
    add("C7:C6", modular_affine_group(7, 3));
    add("C11:C5", modular_affine_group(11, 3));
    add("C11:C10", modular_affine_group(11, 2));
    add("C13:C3", modular_affine_group(13, 3));
    add("C13:C6", modular_affine_group(13, 4));
    add("C31:C5", modular_affine_group(31, 2));

    add("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)));
    add("C2xC6", direct_product(cyclic_group(2), cyclic_group(6)));
    add("C3^3", direct_product(direct_product(cyclic_group(3), cyclic_group(3)), cyclic_group(3)));
    add("C3xAlt(4)", direct_product(cyclic_group(3), alternating_group(4)));
    add("C3:Sym(3)", c3_semi_sym3());
    add("C3:D8", c3_semi_d8());
    add("C3^2:C4", c3sq_semi_c4());
    add("C3wrC3", c3_wr_c3());
    add("C3^2:D12", c3sq_semi_d12());
    add("Ex72_43", example_group_72_43());
    add("Ex324_160", example_group_324_160());

    alias("Alt(5)", psl2(4));
    alias("Alt(5)", psl2(5));
    alias("PSL(2,9)", alternating_group(6));
    alias("PSL(2,7)", psl(3, 2));
    alias("Sym(3)", dihedral_group(6));

    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            detail::check(!(entries[i].fp == entries[j].fp),
                          "catalog fingerprints collide: " + entries[i].name + " vs " +
                              entries[j].name);
    return entries;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

}  // namespace

std::optional<std::string> identify(const PermGroup& g) {
    const Fingerprint& fp = fingerprint(g);
    for (const CatalogEntry& e : catalog())
        if (e.fp == fp) return e.name;
    return std::nullopt;
}

}  // namespace permlab
