#pragma once

#include <cstdint>
#include <vector>

namespace permlab {

/// Arithmetic in the finite field of q = r^k elements (q <= 4096).
///
/// Elements are the integers 0..q-1; the integer m encodes the polynomial
/// sum_i c_i x^i where c_i is the i-th base-r digit of m.  In particular
/// 0 and 1 are the additive and multiplicative identities and the elements
/// 0..r-1 form the prime field.  For k > 1 the modulus is the first monic
/// irreducible polynomial of degree k in this integer encoding, so the
/// construction is canonical: the same q always yields the same tables.
class Fq {
public:
    explicit Fq(std::uint32_t q);

    std::uint32_t size() const { return q_; }
    std::uint32_t characteristic() const { return r_; }
    int degree() const { return k_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t inv(std::uint32_t a) const;  ///< throws on a = 0
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// A certified generator of the multiplicative group: the least element
    /// g with g^((q-1)/s) != 1 for every prime s dividing q - 1.
    std::uint32_t generator() const { return generator_; }

    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(std::uint32_t a) const;

    /// Modulus coefficients c_0..c_k (monic, c_k = 1); for k = 1 this is
    /// (0, 1), i.e. the polynomial x.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

private:
    std::uint32_t q_ = 0, r_ = 0;
    int k_ = 0;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> mul_;
    std::vector<std::uint32_t> inv_;
    std::vector<std::uint32_t> modulus_;
};

}  // namespace permlab
