#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "permlab/group.hpp"

namespace permlab::detail {

/// Lazily-initialized slot for module-owned derived data.  The stored value
/// is type-erased so that core headers need not know about higher modules.
/// std::call_once re-runs the builder after an exception, so a failed attempt
/// (e.g. CutoffExceeded) does not poison the slot.
struct OpaqueSlot {
    std::once_flag once;
    std::shared_ptr<const void> value;
};

template <class T, class F>
const T& opaque_get(OpaqueSlot& slot, F&& build) {
    std::call_once(slot.once, [&] { slot.value = std::make_shared<const T>(build()); });
    return *static_cast<const T*>(slot.value.get());
}

struct GroupCache {
    std::once_flag chain_once;
    std::optional<StabChain> chain;

    std::once_flag elements_once;
    std::vector<Perm> elements;
    std::unordered_map<Perm, std::uint32_t, PermHash> element_pos;

    std::once_flag classes_once;
    std::vector<ConjugacyClass> classes;

    OpaqueSlot normals;      ///< std::vector<PermGroup>
    OpaqueSlot lattice;      ///< detail::LatticeData (lattice.cpp)
    OpaqueSlot fingerprint;  ///< Fingerprint (structure.cpp)
};

}  // namespace permlab::detail
