#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permlab {

/// Deterministic primality for the full 64-bit range (fixed witness set).
bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// ascending prime order.  Intended for the small numbers that appear as
/// group orders and indexes, not for cryptographic-size inputs.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Render a factorization like "2^3*3*13"; "1" for n = 1.
std::string factorization_text(std::uint64_t n);

/// n = r^k with r prime, k >= 1?  Requires n >= 2.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n);

/// Largest power of p dividing n, and its cofactor.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
std::uint64_t p_prime_part(std::uint64_t n, std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1, m >= 2.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// True iff p divides a^n - 1 but no a^i - 1 for 1 <= i < n; equivalently
/// the multiplicative order of a mod p is exactly n.
bool is_primitive_prime_divisor(std::uint64_t a, std::uint64_t n, std::uint64_t p);

std::string u128_to_string(unsigned __int128 v);

/// One hit of the arithmetic sieve: a pair (n, d) whose quotient
/// (2^{dn} - 1)/(2^d - 1) -- the point count of an n-dimensional projective
/// space over a field of size 2^d -- passes every side condition for the
/// given odd prime p.
struct RepunitCandidate {
    std::uint64_t n = 0;  ///< prime, >= 3
    std::uint64_t d = 0;  ///< odd, >= 1, with gcd(n, 2^d - 1) = 1
    std::uint64_t p = 0;  ///< the sieved prime; ord_p(2) = d(n-1)
    unsigned __int128 repunit = 0;
    /// True when the repunit fits 64 bits and was proven prime; false means
    /// the value is too large for the exact test and is reported unverified.
    bool verified = true;
};

/// All candidate pairs with n <= n_max, d <= d_max for an odd prime p:
/// n prime >= 3, d odd, gcd(n, 2^d - 1) = 1, p a primitive prime divisor of
/// 2^{d(n-1)} - 1, and the repunit prime (or unverifiable and flagged).
/// Throws InvalidArgument for non-prime or even p, CutoffExceeded if a
/// repunit in range would overflow 128 bits.
std::vector<RepunitCandidate> repunit_candidates(std::uint64_t p, std::uint64_t n_max,
                                                 std::uint64_t d_max);

/// Arithmetic classification of a prime power q = r^m used to recognize the
/// projective-line family PSL2(q) that can appear as a direct-power section:
/// member iff r is odd and either m = 2^a with a >= 1, or m = 1 and
/// r = +-1 mod 8.
struct Psl2FamilyTag {
    std::uint64_t q = 0;
    std::uint64_t radix = 0;  ///< r
    int exponent = 0;         ///< m
    bool member = false;
    bool mersenne = false;  ///< q prime with q + 1 a power of two
    std::optional<std::pair<std::uint64_t, int>> q_plus_one_prime_power;
    int q_mod_8 = 0;
};

/// Throws InvalidArgument if q is not a prime power.
Psl2FamilyTag psl2_family(std::uint64_t q);

}  // namespace permlab
