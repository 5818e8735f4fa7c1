#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/errors.hpp"

namespace permlab {

/// A permutation of the points {1..n}, stored 0-based internally as an image
/// array.  Composition convention, fixed for the whole library:
///
///     compose(g, h) applies g first, then h:  x^(g*h) = (x^g)^h.
///
/// Points are 1-based in all textual I/O and 0-based in the API.
class Perm {
public:
    Perm() = default;  ///< degree-0 permutation (identity on nothing)

    /// Identity permutation of the given degree.
    static Perm identity(int degree);

    /// Build from an explicit 0-based image array.
    static Perm from_images(std::vector<std::uint16_t> images);

    /// Parse disjoint-cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
    /// Whitespace is ignored; points inside a cycle may be separated by
    /// commas or whitespace; "()" is the identity.  Throws ParseError on
    /// malformed input (unbalanced parentheses, repeated or out-of-range
    /// points, empty input).
    static Perm from_cycles(int degree, std::string_view text);

    int degree() const { return static_cast<int>(img_.size()); }
    bool is_identity() const;

    /// Image of a 0-based point.
    std::uint16_t operator[](std::uint16_t x) const { return img_[x]; }
    const std::vector<std::uint16_t>& images() const { return img_; }

    /// Smallest 0-based point moved by this permutation, or -1 for identity.
    int smallest_moved_point() const;

    /// Order of the permutation (lcm of cycle lengths).
    std::uint64_t order() const;

    /// Canonical disjoint-cycle string, 1-based, fixed points omitted,
    /// each cycle starting at its smallest point, cycles sorted by smallest
    /// point.  Identity prints as "()".
    std::string to_cycles() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
    /// Lexicographic order on image arrays; the library's canonical element order.
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    std::size_t hash() const;

private:
    friend Perm compose(const Perm&, const Perm&);
    friend Perm inverse(const Perm&);
    // Trusted fast path for internally-computed image arrays.
    static Perm unchecked(std::vector<std::uint16_t> images);

    std::vector<std::uint16_t> img_;
};

/// Apply g first, then h.
Perm compose(const Perm& g, const Perm& h);
/// Apply a, then b, then c.
Perm compose(const Perm& a, const Perm& b, const Perm& c);
Perm inverse(const Perm& g);
/// Conjugate g by x: apply x^-1, then g, then x.
Perm conjugated(const Perm& g, const Perm& x);

struct PermHash {
    std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace permlab
