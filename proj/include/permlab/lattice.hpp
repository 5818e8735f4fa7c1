#pragma once

#include <cstdint>
#include <vector>

#include "permlab/group.hpp"

namespace permlab {

/// One conjugacy class of subgroups.  The representative is the member whose
/// sorted element-position set is lexicographically least.
struct SubgroupClass {
    PermGroup representative;
    std::uint64_t order = 0;         ///< |representative|
    std::uint64_t index = 0;         ///< |G| / order
    std::uint64_t class_length = 0;  ///< number of conjugates
    bool is_maximal = false;
};

/// A Sylow p-subgroup.  When p does not divide |G| the subgroup is trivial
/// and p_divides_order is false.
struct SylowSubgroup {
    std::uint64_t p = 0;
    PermGroup subgroup;
    bool p_divides_order = false;
};

/// Every subgroup of G exactly once, sorted by (order, element set).
/// Computed as the join-closure of the cyclic subgroups of prime-power
/// order; requires |G| <= the lattice cutoff.
std::vector<PermGroup> all_subgroups(const PermGroup& g);

/// The conjugacy classes of subgroups, sorted by (order, representative
/// element set).  Same precondition as all_subgroups.
std::vector<SubgroupClass> subgroup_classes(const PermGroup& g);

/// Only the classes whose members are maximal subgroups.
std::vector<SubgroupClass> maximal_classes(const PermGroup& g);

/// Total number of subgroups (sum of class lengths) without materializing
/// each subgroup.
std::uint64_t subgroup_count(const PermGroup& g);

/// All normal subgroups, computed independently of the full lattice as the
/// join-closure of the normal closures of conjugacy-class representatives.
/// Valid whenever G is enumerable, even above the lattice cutoff.
std::vector<PermGroup> normal_subgroups(const PermGroup& g);

/// Minimal elements of the nontrivial normal subgroups under inclusion.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g);

/// The largest normal subgroup of G contained in H (the intersection of the
/// conjugates of H).
PermGroup core(const PermGroup& g, const PermGroup& h);

/// Deterministic ascending Sylow construction: start from a cyclic subgroup
/// generated by a p-element of maximal order and repeatedly extend by index
/// p inside the normalizer until the full p-part of |G| is reached.
SylowSubgroup sylow(const PermGroup& g, std::uint64_t p);

}  // namespace permlab
