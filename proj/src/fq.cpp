#include "permlab/fq.hpp"

#include "permlab/errors.hpp"
#include "permlab/numbers.hpp"

namespace permlab {

namespace {

// Digits of m in base r, least significant first, padded to width.
std::vector<std::uint32_t> digits(std::uint32_t m, std::uint32_t r, int width) {
    std::vector<std::uint32_t> d(static_cast<std::size_t>(width), 0);
    for (int i = 0; i < width && m > 0; ++i) {
        d[static_cast<std::size_t>(i)] = m % r;
        m /= r;
    }
    return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t r) {
    std::uint32_t m = 0;
    for (std::size_t i = d.size(); i-- > 0;) m = m * r + d[i];
    return m;
}

// Polynomial product of a and b reduced modulo the monic modulus, all over
// the prime field of size r.  Coefficient vectors are little-endian.
std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b,
                                        const std::vector<std::uint32_t>& modulus,
                                        std::uint32_t r) {
    const std::size_t k = modulus.size() - 1;
    std::vector<std::uint32_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % r;
    for (std::size_t top = prod.size(); top-- > k;) {
        const std::uint32_t c = prod[top];
        if (c == 0) continue;
        prod[top] = 0;
        // x^top = x^(top-k) * (x^k), and x^k = -lower(modulus).
        for (std::size_t i = 0; i < k; ++i) {
            const std::uint32_t sub = (c * modulus[i]) % r;
            prod[top - k + i] = (prod[top - k + i] + r - sub) % r;
        }
    }
    prod.resize(k == 0 ? 1 : k);
    return prod;
}

// True iff the monic divisor divides poly exactly, over the prime field.
bool divides_exactly(const std::vector<std::uint32_t>& poly,
                     const std::vector<std::uint32_t>& divisor, std::uint32_t r) {
    std::vector<std::uint32_t> rem = poly;
    const std::size_t dd = divisor.size() - 1;  // divisor degree
    for (std::size_t top = rem.size() - 1; top >= dd; --top) {
        const std::uint32_t c = rem[top];
        if (c != 0) {
            for (std::size_t i = 0; i <= dd; ++i) {
                const std::size_t at = top - dd + i;
                rem[at] = (rem[at] + r - (c * divisor[i]) % r) % r;
            }
        }
        if (top == dd) break;
    }
    for (std::uint32_t c : rem)
        if (c != 0) return false;
    return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t r) {
    // Trial division by every monic polynomial of degree 1..deg/2.
    const int deg = static_cast<int>(poly.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::uint32_t count = 1;
        for (int i = 0; i < d; ++i) count *= r;
        for (std::uint32_t m = 0; m < count; ++m) {
            std::vector<std::uint32_t> divisor = digits(m, r, d + 1);
            divisor[static_cast<std::size_t>(d)] = 1;
            if (divides_exactly(poly, divisor, r)) return false;
        }
    }
    return true;
}

}  // namespace

Fq::Fq(std::uint32_t q) : q_(q) {
    if (q > 4096) throw InvalidArgument("field size too large for table-based arithmetic");
    auto pp = prime_power(q);
    if (!pp) throw InvalidArgument("field size must be a prime power");
    r_ = static_cast<std::uint32_t>(pp->first);
    k_ = pp->second;

    if (k_ == 1) {
        modulus_ = {0, 1};  // the polynomial x: plain arithmetic mod r
    } else {
        for (std::uint32_t m = 0; m < q_; ++m) {
            std::vector<std::uint32_t> candidate = digits(m, r_, k_ + 1);
            candidate[static_cast<std::size_t>(k_)] = 1;
            if (is_irreducible(candidate, r_)) {
                modulus_ = candidate;
                break;
            }
        }
        detail::check(!modulus_.empty(), "an irreducible modulus polynomial exists");
    }

    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        const auto da = digits(a, r_, k_);
        for (std::uint32_t b = 0; b <= a; ++b) {
            const std::uint32_t v =
                k_ == 1 ? (a * b) % r_ : undigits(poly_mul_mod(da, digits(b, r_, k_), modulus_, r_), r_);
            mul_[a * q_ + b] = v;
            mul_[b * q_ + a] = v;
        }
    }

    inv_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) {
        for (std::uint32_t b = 1; b < q_; ++b) {
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }
        }
        detail::check(inv_[a] != 0, "every nonzero field element has an inverse");
    }

    // Least multiplicative generator, certified against each maximal proper
    // divisor of the group order.
    const auto factors = factorize(q_ - 1);
    for (std::uint32_t g = 1; g < q_ && generator_ == 0; ++g) {
        bool ok = true;
        for (const auto& [s, e] : factors) {
            (void)e;
            if (pow(g, (q_ - 1) / s) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) generator_ = g;
    }
    detail::check(generator_ != 0 || q_ == 2, "multiplicative group has a generator");
    if (q_ == 2) generator_ = 1;
}

std::uint32_t Fq::add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return (a + b) % r_;
    const auto da = digits(a, r_, k_), db = digits(b, r_, k_);
    std::vector<std::uint32_t> sum(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i)
        sum[static_cast<std::size_t>(i)] =
            (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % r_;
    return undigits(sum, r_);
}

std::uint32_t Fq::neg(std::uint32_t a) const {
    if (k_ == 1) return (r_ - a) % r_;
    const auto da = digits(a, r_, k_);
    std::vector<std::uint32_t> out(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i)
        out[static_cast<std::size_t>(i)] = (r_ - da[static_cast<std::size_t>(i)]) % r_;
    return undigits(out, r_);
}

std::uint32_t Fq::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Fq::inv(std::uint32_t a) const {
    if (a == 0) throw InvalidArgument("zero has no multiplicative inverse");
    return inv_[a];
}

std::uint32_t Fq::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint64_t Fq::element_order(std::uint32_t a) const {
    if (a == 0) throw InvalidArgument("zero has no multiplicative order");
    std::uint64_t ord = 1;
    std::uint32_t x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

}  // namespace permlab
