#include "permlab/numbers.hpp"

#include <numeric>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 0) throw InvalidArgument("pow_mod with zero modulus");
    std::uint64_t r = m == 1 ? 0 : 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Strong pseudoprime test with the witness set that is exact for all
    // 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    if (n < 2) return out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::string factorization_text(std::uint64_t n) {
    if (n == 1) return "1";
    std::string out;
    for (const auto& [p, e] : factorize(n)) {
        if (!out.empty()) out += "*";
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n) {
    if (n < 2) throw InvalidArgument("prime_power requires n >= 2");
    auto factors = factorize(n);
    if (factors.size() != 1) return std::nullopt;
    return std::make_pair(factors[0].first, factors[0].second);
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t part = 1;
    while (n % p == 0) {
        n /= p;
        part *= p;
    }
    return part;
}

std::uint64_t p_prime_part(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw InvalidArgument("multiplicative_order requires modulus >= 2");
    a %= m;
    if (std::gcd(a, m) != 1)
        throw InvalidArgument("multiplicative_order requires gcd(a, m) = 1");
    // Order divides the group order; strip primes from an over-estimate.
    // For prime m the group order is m - 1; in general use Euler's totient.
    std::uint64_t phi = 1;
    for (const auto& [p, e] : factorize(m)) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    std::uint64_t ord = phi;
    for (const auto& [p, e] : factorize(phi)) {
        (void)e;
        while (ord % p == 0 && pow_mod(a, ord / p, m) == 1) ord /= p;
    }
    detail::check(pow_mod(a, ord, m) == 1, "computed multiplicative order is valid");
    return ord;
}

bool is_primitive_prime_divisor(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
    if (a < 2 || n < 1) throw InvalidArgument("is_primitive_prime_divisor requires a >= 2, n >= 1");
    if (!is_prime(p)) throw InvalidArgument("is_primitive_prime_divisor requires p prime");
    if (a % p == 0) return false;
    return multiplicative_order(a, p) == n;
}

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return out;
}

std::vector<RepunitCandidate> repunit_candidates(std::uint64_t p, std::uint64_t n_max,
                                                 std::uint64_t d_max) {
    if (p % 2 == 0 || !is_prime(p))
        throw InvalidArgument("the sieve requires an odd prime p");
    if (n_max < 1 || d_max < 1) throw InvalidArgument("sieve bounds must be positive");

    const std::uint64_t ord = multiplicative_order(2, p);

    std::vector<RepunitCandidate> out;
    for (std::uint64_t n = 3; n <= n_max; ++n) {
        if (!is_prime(n)) continue;
        for (std::uint64_t d = 1; d <= d_max; d += 2) {
            // p must be a primitive prime divisor of 2^{d(n-1)} - 1.
            if (ord != d * (n - 1)) continue;
            if (d >= 64) throw CutoffExceeded("sieve bound d too large for exact arithmetic");
            const std::uint64_t base = (1ull << d) - 1;  // 2^d - 1
            if (std::gcd(n, base) != 1) continue;
            if (d * n > 126) throw CutoffExceeded("sieve repunit exceeds 128-bit range");
            // (2^{dn} - 1)/(2^d - 1) = sum of 2^{d*i} for i < n.
            unsigned __int128 repunit = 0;
            for (std::uint64_t i = 0; i < n; ++i)
                repunit += static_cast<unsigned __int128>(1) << (d * i);

            RepunitCandidate cand;
            cand.n = n;
            cand.d = d;
            cand.p = p;
            cand.repunit = repunit;
            if (repunit <= static_cast<unsigned __int128>(UINT64_MAX)) {
                cand.verified = true;
                if (!is_prime(static_cast<std::uint64_t>(repunit))) continue;
            } else {
                cand.verified = false;  // reported, not asserted
            }
            out.push_back(cand);
        }
    }
    return out;
}

Psl2FamilyTag psl2_family(std::uint64_t q) {
    auto pp = prime_power(q);
    if (!pp) throw InvalidArgument("psl2_family requires a prime power");
    Psl2FamilyTag tag;
    tag.q = q;
    tag.radix = pp->first;
    tag.exponent = pp->second;
    tag.q_mod_8 = static_cast<int>(q % 8);

    const bool exponent_is_two_power =
        tag.exponent >= 2 && (tag.exponent & (tag.exponent - 1)) == 0;
    const bool radix_odd = tag.radix % 2 == 1;
    tag.member = radix_odd && (exponent_is_two_power ||
                               (tag.exponent == 1 && (q % 8 == 1 || q % 8 == 7)));

    if (q + 1 >= 2) {
        auto next = prime_power(q + 1);
        if (next) tag.q_plus_one_prime_power = *next;
    }
    tag.mersenne = tag.exponent == 1 && is_prime(q) && ((q + 1) & q) == 0;
    return tag;
}

}  // namespace permlab
