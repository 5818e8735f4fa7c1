#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "permlab/config.hpp"
#include "permlab/perm.hpp"

namespace permlab {

namespace detail {
struct GroupCache;
}

/// One level of a stabilizer chain: the subgroup fixing the base points of
/// all earlier levels, acting on the orbit of this level's base point.
struct ChainLevel {
    std::uint16_t base = 0;
    /// Strong generators first attached at this level.  The full generating
    /// set of the level's group is the concatenation of `gens` over this and
    /// all deeper levels.
    std::vector<Perm> gens;
    std::vector<std::uint16_t> orbit;   ///< discovery order; orbit[0] == base
    std::vector<std::int32_t> pos;      ///< point -> orbit position, or -1
    std::vector<Perm> transversal;      ///< transversal[i] maps base to orbit[i]
};

/// Deterministic stabilizer chain: every base point is the smallest point
/// moved by the residual generators, orbits are explored breadth-first in
/// generator order.  The same generator list always yields the same chain.
struct StabChain {
    int degree = 0;
    std::vector<ChainLevel> levels;
    std::uint64_t order = 1;

    bool contains(const Perm& p) const;
    /// Residual after sifting through levels [from, end).  Identity iff the
    /// permutation lies in the group (for from == 0).
    Perm sift(Perm p, std::size_t from = 0) const;
};

StabChain build_chain(int degree, const std::vector<Perm>& gens);

/// A permutation group on {1..degree}, defined by generators.  Groups are
/// immutable; derived data (stabilizer chain, sorted element list, conjugacy
/// classes, lattices) is computed lazily, cached, and shared across copies.
/// All lazy caches are safe for concurrent first access.
class PermGroup {
public:
    /// Trivial group on one point, so containers of groups stay regular.
    PermGroup() : PermGroup(1) {}
    /// Trivial group of the given degree.
    explicit PermGroup(int degree);
    PermGroup(int degree, std::vector<Perm> gens);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    Perm identity() const { return Perm::identity(degree_); }

    const StabChain& chain() const;
    std::uint64_t order() const { return chain().order; }
    bool is_trivial() const { return order() == 1; }
    bool contains(const Perm& p) const;

    /// All elements, sorted lexicographically by image array.
    /// Throws CutoffExceeded if order() exceeds the enumeration cutoff.
    const std::vector<Perm>& elements() const;
    /// Position of p in elements(), or -1 if p is not a member.
    std::int64_t element_position(const Perm& p) const;

    bool same_group_as(const PermGroup& other) const;

    detail::GroupCache& cache_slots() const { return *cache_; }

private:
    int degree_ = 0;
    std::vector<Perm> gens_;
    std::shared_ptr<detail::GroupCache> cache_;
};

/// A conjugacy class of elements, identified by positions in elements().
struct ConjugacyClass {
    Perm representative;                  ///< the class member least in element order
    std::vector<std::uint32_t> members;   ///< ascending positions into elements()
};

/// Conjugacy classes in deterministic order: by their smallest member.
const std::vector<ConjugacyClass>& conjugacy_classes(const PermGroup& G);

/// Subgroup generated by `gens` inside `parent`; checks membership of the
/// generators and Lagrange divisibility of the result.
PermGroup generated_subgroup(const PermGroup& parent, std::vector<Perm> gens);

/// The subgroup whose element set is exactly `elems` (which must be closed);
/// picks a small generating set greedily.  `elems` need not be sorted.
PermGroup group_from_elements(int degree, const std::vector<Perm>& elems);

bool is_subgroup_of(const PermGroup& H, const PermGroup& G);
/// True iff H is normal in G (H must be a subgroup of G).
bool is_normal_in(const PermGroup& H, const PermGroup& G);

/// N_G(H) = { x in G : H^x = H }.  Scans the elements of G.
PermGroup normalizer(const PermGroup& G, const PermGroup& H);
/// C_G(H) = { x in G : xh = hx for all h in H }.  Scans the elements of G.
PermGroup centralizer(const PermGroup& G, const PermGroup& H);
PermGroup center(const PermGroup& G);

/// Smallest normal subgroup of G containing `seed`.  Chain-based: works for
/// groups too large to enumerate.
PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed);

/// [A, B] as the normal closure, inside <A union B>, of the generator
/// commutators.  `ambient` supplies the degree context and sanity checks.
PermGroup commutator_subgroup(const PermGroup& ambient, const PermGroup& A, const PermGroup& B);

}  // namespace permlab
