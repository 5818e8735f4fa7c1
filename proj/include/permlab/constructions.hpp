#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/group.hpp"

namespace permlab {

/// Standard families.  Every constructor asserts the expected group order
/// against its stabilizer chain before returning.
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);
/// Dihedral group of the given (even) order, acting on order/2 polygon
/// vertices for order >= 6; the degenerate orders 2 and 4 are realized as
/// C2 and C2 x C2.
PermGroup dihedral_group(int order);

/// PSL2(q) and PGL2(q) acting on the projective line: points 0..q-1 are the
/// field elements in their integer encoding, point q is the infinite point.
/// Generated by z -> z+1, z -> m*z (m a generator of the squares for PSL2,
/// of the full multiplicative group for PGL2), and z -> -1/z.
PermGroup psl2(std::uint32_t q);
PermGroup pgl2(std::uint32_t q);

/// SL2(q) acting on the q^2-1 nonzero row vectors.
PermGroup sl2_on_vectors(std::uint32_t q);

/// PSL_n(q) acting on the (q^n-1)/(q-1) projective points (normalized row
/// vectors, first nonzero coordinate 1), generated by a transvection and a
/// cyclic-shift-with-sign matrix.
PermGroup psl(int n, std::uint32_t q);

/// A x B acting on the disjoint union of their point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// The affine group <x -> x+1, x -> m*x> on Z_n; order n * ord_n(m).
/// Requires gcd(m, n) = 1.
PermGroup modular_affine_group(std::uint32_t n, std::uint32_t m);

/// A solvable group of order 72 whose maximal subgroups realize the sharp
/// boundary case of the two-step series bound: exactly one conjugacy class
/// of maximal subgroups is 2-nilpotent of composite index, all others have
/// prime index.
PermGroup example_group_72_43();

/// A solvable group of order 324 = 3^3 * 12 with 3-length exactly 2 whose
/// maximal subgroups are all 3-nilpotent or of prime index.
PermGroup example_group_324_160();

/// Parsed form of the line-oriented group description format:
///   # comment lines and blank lines are ignored
///   name <string>          (optional)
///   degree <N>             (required, first)
///   gen <cycles>           (one per generator)
///   expect-order <N>       (optional; build_group verifies it)
struct GroupSpecFile {
    std::string name;
    int degree = 0;
    std::vector<Perm> generators;
    std::optional<std::uint64_t> expect_order;
};

GroupSpecFile parse_group_spec(std::string_view text);
PermGroup build_group(const GroupSpecFile& spec);

/// Build a group from a grammar token: Alt(n), Sym(n), C(n), D(2n),
/// PSL(n,q), PGL(2,q), SL(2,q), Ex72_43, Ex324_160.
/// Throws ParseError for unknown tokens.
PermGroup named_group(const std::string& token);
/// One-line description of the accepted tokens, for error messages.
std::string named_group_grammar();

}  // namespace permlab
