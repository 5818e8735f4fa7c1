#pragma once

#include <cstdint>

namespace permlab {

/// Global size limits.  Operations that would enumerate more elements,
/// more lattice nodes, or more points than these allow throw CutoffExceeded
/// instead of silently grinding.
///
/// Defaults can be overridden through the environment:
///   PERMLAB_ENUM_CUTOFF     maximum group order for element enumeration
///   PERMLAB_LATTICE_CUTOFF  maximum group order for subgroup-lattice work
///   PERMLAB_DEGREE_CUTOFF   maximum permutation degree (points)
struct Limits {
    std::uint64_t enumeration = 20000;
    std::uint64_t lattice = 20000;
    std::uint32_t degree = 20000;
};

/// The process-wide limits, resolved from the environment exactly once.
const Limits& limits();

}  // namespace permlab
