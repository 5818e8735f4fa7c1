#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permlab/group.hpp"

namespace permlab {

/// A homomorphism from an enumerable group onto the permutation action on
/// the right cosets of a subgroup.  The image acts on {0 .. index-1}, where
/// coset 0 is the subgroup itself and cosets are numbered by their least
/// element in the domain's canonical element order.
struct Homomorphism {
    PermGroup domain;
    PermGroup image;                     ///< acts on the coset indices
    std::vector<Perm> generator_images;  ///< aligned with domain.generators()

    /// Image permutation of an arbitrary domain element.
    Perm apply(const Perm& x) const;

    /// Right-coset label of each domain element, aligned with
    /// domain.elements().
    std::vector<std::uint32_t> element_coset;
    /// Position (into domain.elements()) of each coset's least member.
    std::vector<std::uint32_t> coset_rep_pos;
    /// True when the acted-on subgroup is normal, i.e. the map is a
    /// quotient map and element_coset is constant on kernel cosets.
    bool kernel_is_subgroup = false;
};

/// Action of g on the right cosets of h (h must be a subgroup of g; the
/// index must stay within the degree cutoff and g must be enumerable).
Homomorphism coset_action(const PermGroup& g, const PermGroup& h);

/// The quotient map g -> g/n.  Checks that n is normal in g and that the
/// kernel of the coset action is exactly n; |g| = |n| * |image| is asserted.
Homomorphism quotient(const PermGroup& g, const PermGroup& n);

/// Elements mapping to the identity, as a subgroup of the domain.
PermGroup kernel(const Homomorphism& h);

/// { x in domain : h.apply(x) in s }, for s a subgroup of h.image.
PermGroup preimage(const Homomorphism& h, const PermGroup& s);

/// Smallest normal subgroup with p-group quotient: the normal closure of all
/// elements of order coprime to p.  Requires p prime and g enumerable.
PermGroup p_residual(const PermGroup& g, std::uint64_t p);

/// True iff the elements of order coprime to p form a subgroup -
/// equivalently, iff the subgroup they generate has order equal to the
/// p-prime part of |g|.  Requires p prime and g enumerable.
bool is_p_nilpotent(const PermGroup& g, std::uint64_t p);

/// The normal Hall p'-subgroup when g is p-nilpotent, nullopt otherwise.
std::optional<PermGroup> normal_p_complement(const PermGroup& g, std::uint64_t p);

/// Largest normal p-subgroup (resp. p'-subgroup).  Computed from the normal
/// subgroup list; uniqueness is asserted by checking every qualifying normal
/// subgroup is contained in the maximum.  Requires p prime.
PermGroup p_core(const PermGroup& g, std::uint64_t p);
PermGroup p_prime_core(const PermGroup& g, std::uint64_t p);

/// The ascending series 1 <= K1 <= K2 <= ... where K1 is the p'-core, K2
/// the preimage of the p-core of g/K1, K3 the preimage of the p'-core of
/// g/K2, and so on, alternating p'-steps and p-steps until the series
/// reaches g or stops growing.
struct PSeries {
    std::uint64_t p = 0;
    /// terms[0] is trivial; terms[i] for odd i follows a p'-step, for even
    /// i a p-step.  Trailing terms that repeat the stable limit are
    /// trimmed, so the last term is the limit (or g itself).
    std::vector<PermGroup> terms;
    /// Number of p-steps that strictly grew.
    int p_length = 0;
    /// True iff the last term is all of g.
    bool reaches_group = false;
};

PSeries upper_p_series(const PermGroup& g, std::uint64_t p);

/// True iff upper_p_series(g, p) reaches g.
bool is_p_solvable(const PermGroup& g, std::uint64_t p);

/// Largest normal (p-)solvable subgroup, from the normal subgroup list;
/// uniqueness asserted by containment of every other qualifying subgroup.
PermGroup solvable_radical(const PermGroup& g);
PermGroup p_solvable_radical(const PermGroup& g, std::uint64_t p);

/// g >= [g,g] >= [[g,g],[g,g]] >= ... until stable.
std::vector<PermGroup> derived_series(const PermGroup& g);
/// g >= [g,g] >= [[g,g],g] >= ... until stable.
std::vector<PermGroup> lower_central_series(const PermGroup& g);

bool is_abelian(const PermGroup& g);
bool is_solvable(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);
/// Steps of the lower central series before it hits the trivial group
/// (0 for the trivial group).  Throws InvalidArgument on non-nilpotent input.
int nilpotency_class(const PermGroup& g);

/// True iff the normal-subgroup lattice contains a chain from the trivial
/// group to g whose consecutive indexes are all prime.  Independent of any
/// maximal-subgroup criterion, so the equivalence "all maximal subgroups
/// have prime index" can be tested rather than assumed.
bool is_supersolvable(const PermGroup& g);

/// Exactly two normal subgroups.  True for prime-order groups; the abelian
/// flag of the fingerprint separates nonabelian simplicity.
bool is_simple(const PermGroup& g);

/// Relabeling-invariant profile of a group, used as an isomorphism proxy
/// against the built-in catalog.  Two isomorphic groups always have equal
/// fingerprints; the catalog verifies its entries are pairwise distinct, so
/// within the catalog the proxy is exact.
struct Fingerprint {
    std::uint64_t order = 0;
    bool abelian = false;
    bool simple = false;
    /// (element order, count) pairs, ascending by order.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> element_orders;
    /// (class size, multiplicity) pairs, ascending by size.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> class_sizes;
    /// Length of the derived series to the trivial group; nullopt when the
    /// series stabilizes above it (non-solvable groups).
    std::optional<int> derived_length;
    std::uint64_t center_order = 0;

    bool operator==(const Fingerprint&) const = default;

    /// Canonical one-line text form (sorted fields, stable across runs).
    std::string text() const;
};

/// Cached per group; safe for concurrent first access.
const Fingerprint& fingerprint(const PermGroup& g);

/// Name of the catalog group with the same fingerprint, if any.  The
/// catalog covers the cyclic groups up to C60, dihedral groups up to order
/// 40, Alt(4..5), Sym(3..6), PSL(2,q) for q <= 13, PGL(2,7), PGL(2,11),
/// the Frobenius groups appearing as witnesses (C5:C4, C7:C3, C11:C5,
/// C13:C3, C13:C6, C31:C5), small direct products and semidirect products
/// appearing as maximal types, and the two named example groups.
std::optional<std::string> identify(const PermGroup& g);

}  // namespace permlab
