#include "permlab/lattice.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "internal.hpp"
#include "permlab/config.hpp"
#include "permlab/errors.hpp"
#include "permlab/numbers.hpp"

namespace permlab {

namespace {

// ---------------------------------------------------------------------------
// Subgroups as bitsets over the parent group's element enumeration
// ---------------------------------------------------------------------------

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }

void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= 1ull << (i & 63); }

std::uint64_t popcount(const Bits& b) {
    std::uint64_t n = 0;
    for (std::uint64_t w : b) n += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return n;
}

bool subset_of(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

// a precedes b when the first element-position where they differ lies in a
bool lex_less(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        const std::uint64_t diff = a[i] ^ b[i];
        return (a[i] >> __builtin_ctzll(diff)) & 1;
    }
    return false;
}

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : b) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

template <class F>
void for_each_bit(const Bits& b, F&& f) {
    for (std::size_t w = 0; w < b.size(); ++w) {
        std::uint64_t word = b[w];
        while (word) {
            const int bit = __builtin_ctzll(word);
            f(w * 64 + static_cast<std::size_t>(bit));
            word &= word - 1;
        }
    }
}

// position maps i -> position of elements[i]^g, one per generator of G
std::vector<std::vector<std::uint32_t>> conjugation_maps(const PermGroup& g) {
    const auto& elems = g.elements();
    std::vector<std::vector<std::uint32_t>> maps;
    for (const Perm& gen : g.generators()) {
        std::vector<std::uint32_t> map(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const std::int64_t j = g.element_position(conjugated(elems[i], gen));
            detail::check(j >= 0, "conjugation stays inside the group");
            map[i] = static_cast<std::uint32_t>(j);
        }
        maps.push_back(std::move(map));
    }
    return maps;
}

Bits apply_map(const Bits& b, const std::vector<std::uint32_t>& map) {
    Bits out = make_bits(map.size());
    for_each_bit(b, [&](std::size_t i) { set_bit(out, map[i]); });
    return out;
}

Bits bits_of_subgroup(const PermGroup& g, const PermGroup& h) {
    Bits out = make_bits(g.elements().size());
    for (const Perm& e : h.elements()) {
        const std::int64_t i = g.element_position(e);
        detail::check(i >= 0, "subgroup elements lie in the parent");
        set_bit(out, static_cast<std::size_t>(i));
    }
    return out;
}

std::vector<Perm> elements_of_bits(const PermGroup& g, const Bits& b) {
    std::vector<Perm> out;
    out.reserve(popcount(b));
    for_each_bit(b, [&](std::size_t i) { out.push_back(g.elements()[i]); });
    return out;
}

// ---------------------------------------------------------------------------
// The lattice: conjugacy classes of subgroups via zuppo joins
// ---------------------------------------------------------------------------

struct ClassRecord {
    Bits rep_bits;              // lexicographically least member
    std::vector<Bits> members;  // full conjugacy class, sorted
    PermGroup rep_group;
    std::uint64_t order = 0;
    bool is_maximal = false;
};

struct LatticeData {
    std::vector<ClassRecord> classes;  // sorted by (order, rep_bits)
    std::uint64_t total = 0;           // number of subgroups
};

struct Zuppo {
    Perm generator;
    Bits bits;
};

// cyclic subgroups of prime-power order, deduplicated, in enumeration order
std::vector<Zuppo> zuppos_of(const PermGroup& g) {
    const auto& elems = g.elements();
    std::vector<Zuppo> out;
    std::unordered_map<Bits, bool, BitsHash> seen;
    for (const Perm& x : elems) {
        const std::uint64_t o = x.order();
        if (o < 2 || !prime_power(o)) continue;
        Bits b = make_bits(elems.size());
        set_bit(b, 0);  // the identity is always element 0
        Perm p = x;
        while (!p.is_identity()) {
            set_bit(b, static_cast<std::size_t>(g.element_position(p)));
            p = compose(p, x);
        }
        if (seen.emplace(b, true).second) out.push_back(Zuppo{x, std::move(b)});
    }
    return out;
}

LatticeData build_lattice(const PermGroup& g) {
    if (g.order() > limits().lattice)
        throw CutoffExceeded("group order " + std::to_string(g.order()) +
                             " exceeds the subgroup-lattice cutoff " +
                             std::to_string(limits().lattice));
    const auto& elems = g.elements();
    const auto conj = conjugation_maps(g);
    const std::vector<Zuppo> zuppos = zuppos_of(g);

    std::vector<ClassRecord> classes;
    std::unordered_map<Bits, std::size_t, BitsHash> member_to_class;
    std::deque<std::size_t> worklist;

    // expands the conjugacy class of `bits`, registers it, queues it for joins
    auto register_class = [&](Bits bits, bool queue) {
        const std::size_t id = classes.size();
        ClassRecord rec;
        rec.order = popcount(bits);
        std::deque<Bits> frontier{bits};
        member_to_class.emplace(bits, id);
        rec.members.push_back(bits);
        while (!frontier.empty()) {
            Bits cur = std::move(frontier.front());
            frontier.pop_front();
            for (const auto& map : conj) {
                Bits img = apply_map(cur, map);
                if (member_to_class.emplace(img, id).second) {
                    rec.members.push_back(img);
                    frontier.push_back(img);
                }
            }
        }
        std::sort(rec.members.begin(), rec.members.end(),
                  [](const Bits& a, const Bits& b) { return lex_less(a, b); });
        rec.rep_bits = rec.members.front();
        rec.rep_group = group_from_elements(g.degree(), elements_of_bits(g, rec.rep_bits));
        classes.push_back(std::move(rec));
        if (queue) worklist.push_back(id);
        return id;
    };

    // the full group is registered up front so join results can be discarded
    // the moment their chain reports order |G|
    {
        Bits full = make_bits(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) set_bit(full, i);
        ClassRecord rec;
        rec.order = g.order();
        rec.rep_bits = full;
        rec.members.push_back(full);
        rec.rep_group = g;
        rec.is_maximal = false;
        member_to_class.emplace(std::move(full), 0);
        classes.push_back(std::move(rec));
    }

    if (g.order() > 1) {
        Bits trivial = make_bits(elems.size());
        set_bit(trivial, 0);
        register_class(std::move(trivial), true);
    }
    for (const Zuppo& z : zuppos)
        if (!member_to_class.count(z.bits)) register_class(z.bits, true);

    while (!worklist.empty()) {
        const std::size_t id = worklist.front();
        worklist.pop_front();
        // joins may reallocate `classes`; take what we need up front
        const Bits rep_bits = classes[id].rep_bits;
        const PermGroup rep = classes[id].rep_group;
        bool every_join_is_full = true;
        for (const Zuppo& z : zuppos) {
            if (subset_of(z.bits, rep_bits)) continue;
            std::vector<Perm> gens = rep.generators();
            gens.push_back(z.generator);
            PermGroup join = generated_subgroup(g, gens);
            if (join.order() == g.order()) continue;
            every_join_is_full = false;
            Bits jb = bits_of_subgroup(g, join);
            if (!member_to_class.count(jb)) register_class(std::move(jb), true);
        }
        classes[id].is_maximal = every_join_is_full && classes[id].order < g.order();
    }

    std::sort(classes.begin(), classes.end(), [](const ClassRecord& a, const ClassRecord& b) {
        if (a.order != b.order) return a.order < b.order;
        return lex_less(a.rep_bits, b.rep_bits);
    });
    LatticeData data;
    data.total = 0;
    for (const ClassRecord& c : classes) data.total += c.members.size();
    data.classes = std::move(classes);
    return data;
}

const LatticeData& lattice_of(const PermGroup& g) {
    return detail::opaque_get<LatticeData>(g.cache_slots().lattice,
                                           [&] { return build_lattice(g); });
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
    const LatticeData& data = lattice_of(g);
    std::vector<std::pair<std::uint64_t, const Bits*>> order_and_bits;
    order_and_bits.reserve(data.total);
    for (const ClassRecord& c : data.classes)
        for (const Bits& b : c.members) order_and_bits.emplace_back(c.order, &b);
    std::sort(order_and_bits.begin(), order_and_bits.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return lex_less(*a.second, *b.second);
              });
    std::vector<PermGroup> out;
    out.reserve(order_and_bits.size());
    for (const auto& [order, bits] : order_and_bits)
        out.push_back(group_from_elements(g.degree(), elements_of_bits(g, *bits)));
    return out;
}

std::vector<SubgroupClass> subgroup_classes(const PermGroup& g) {
    const LatticeData& data = lattice_of(g);
    std::vector<SubgroupClass> out;
    out.reserve(data.classes.size());
    for (const ClassRecord& c : data.classes) {
        SubgroupClass sc{c.rep_group, c.order, g.order() / c.order,
                         static_cast<std::uint64_t>(c.members.size()), c.is_maximal};
        out.push_back(std::move(sc));
    }
    return out;
}

std::vector<SubgroupClass> maximal_classes(const PermGroup& g) {
    std::vector<SubgroupClass> out;
    for (SubgroupClass& c : subgroup_classes(g))
        if (c.is_maximal) out.push_back(std::move(c));
    return out;
}

std::uint64_t subgroup_count(const PermGroup& g) { return lattice_of(g).total; }

// ---------------------------------------------------------------------------
// Normal subgroups, independently of the full lattice
// ---------------------------------------------------------------------------

std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
    return detail::opaque_get<std::vector<PermGroup>>(g.cache_slots().normals, [&] {
        struct Entry {
            Bits bits;
            PermGroup group;
        };
        std::vector<Entry> found;
        std::unordered_map<Bits, bool, BitsHash> seen;
        auto add = [&](PermGroup n) {
            Bits b = bits_of_subgroup(g, n);
            if (!seen.emplace(b, true).second) return false;
            found.push_back(Entry{std::move(b), std::move(n)});
            return true;
        };

        // seed: normal closures of single conjugacy-class representatives
        // (every normal subgroup is the join of the closures of the classes
        // it contains)
        for (const ConjugacyClass& c : conjugacy_classes(g))
            add(normal_closure(g, {c.representative}));

        // close under pairwise joins
        for (std::size_t i = 0; i < found.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                if (subset_of(found[j].bits, found[i].bits) ||
                    subset_of(found[i].bits, found[j].bits))
                    continue;
                std::vector<Perm> gens = found[i].group.generators();
                const auto& more = found[j].group.generators();
                gens.insert(gens.end(), more.begin(), more.end());
                add(generated_subgroup(g, gens));  // extends `found`, loop re-visits
            }

        std::sort(found.begin(), found.end(), [](const Entry& a, const Entry& b) {
            if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
            return lex_less(a.bits, b.bits);
        });
        std::vector<PermGroup> out;
        out.reserve(found.size());
        for (Entry& e : found) out.push_back(std::move(e.group));
        return out;
    });
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g) {
    const std::vector<PermGroup>& normals = normal_subgroups(g);
    std::vector<Bits> bits;
    bits.reserve(normals.size());
    for (const PermGroup& n : normals) bits.push_back(bits_of_subgroup(g, n));
    std::vector<PermGroup> out;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (normals[i].order() == 1) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < normals.size(); ++j) {
            if (j == i || normals[j].order() == 1) continue;
            if (normals[j].order() < normals[i].order() && subset_of(bits[j], bits[i])) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(normals[i]);
    }
    return out;
}

PermGroup core(const PermGroup& g, const PermGroup& h) {
    if (g.degree() != h.degree()) throw InvalidArgument("core requires matching degrees");
    Bits cur = bits_of_subgroup(g, h);
    const auto conj = conjugation_maps(g);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& map : conj) {
            const Bits img = apply_map(cur, map);
            for (std::size_t w = 0; w < cur.size(); ++w) {
                const std::uint64_t next = cur[w] & img[w];
                if (next != cur[w]) {
                    cur[w] = next;
                    changed = true;
                }
            }
        }
    }
    return group_from_elements(g.degree(), elements_of_bits(g, cur));
}

// ---------------------------------------------------------------------------
// Sylow subgroups
// ---------------------------------------------------------------------------

SylowSubgroup sylow(const PermGroup& g, std::uint64_t p) {
    if (!is_prime(p)) throw InvalidArgument("sylow requires a prime p");
    SylowSubgroup out;
    out.p = p;
    if (g.order() % p != 0) {
        out.subgroup = PermGroup(g.degree());
        out.p_divides_order = false;
        return out;
    }
    out.p_divides_order = true;
    const std::uint64_t target = p_part(g.order(), p);

    auto p_element_order = [&](const Perm& x) -> std::uint64_t {
        const std::uint64_t o = x.order();
        return o == p_part(o, p) ? o : 0;  // 0 when x is not a p-element
    };

    // seed: the first p-element of maximal order
    std::uint64_t best = 1;
    for (const Perm& x : g.elements()) best = std::max(best, p_element_order(x));
    PermGroup current(g.degree());
    for (const Perm& x : g.elements())
        if (p_element_order(x) == best) {
            current = generated_subgroup(g, {x});
            break;
        }

    // ascend by index p inside the normalizer
    while (current.order() < target) {
        PermGroup n = normalizer(g, current);
        bool extended = false;
        for (const Perm& y : n.elements()) {
            if (p_element_order(y) == 0 || y.is_identity() || current.contains(y)) continue;
            Perm yp = y;
            for (std::uint64_t i = 1; i < p; ++i) yp = compose(yp, y);
            if (!current.contains(yp)) continue;
            std::vector<Perm> gens = current.generators();
            gens.push_back(y);
            PermGroup next = generated_subgroup(g, gens);
            detail::check(next.order() == current.order() * p,
                          "sylow ascent extends by index p");
            current = std::move(next);
            extended = true;
            break;
        }
        detail::check(extended, "sylow ascent finds an extending element");
    }
    out.subgroup = std::move(current);
    return out;
}

}  // namespace permlab
