#include "permlab/numbers.hpp"

#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "permlab/errors.hpp"

using namespace permlab;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("primality agrees with trial division") {
    for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == trial_division_prime(n));

    // strong-pseudoprime traps and large known values
    CHECK(!is_prime(3215031751ull));            // pseudoprime to bases 2,3,5,7
    CHECK(!is_prime(3825123056546413051ull));   // pseudoprime to bases 2..23
    CHECK(is_prime((1ull << 61) - 1));          // Mersenne prime
    CHECK(is_prime(18446744073709551557ull));   // largest prime below 2^64
    CHECK(!is_prime(18446744073709551615ull));  // 2^64 - 1 = 3*5*17*257*641*65537*6700417
    CHECK(is_prime(262657));
    CHECK(!is_prime(1ull));
}

TEST_CASE("factorization") {
    for (std::uint64_t n = 2; n < 3000; ++n) {
        std::uint64_t back = 1;
        for (const auto& [p, e] : factorize(n)) {
            CHECK(is_prime(p));
            for (int i = 0; i < e; ++i) back *= p;
        }
        CHECK(back == n);
    }
    CHECK(factorization_text(5616) == "2^4*3^3*13");
    CHECK(factorization_text(9999360) == "2^10*3^2*5*7*31");
    CHECK(factorization_text(1) == "1");
    CHECK(factorization_text(97) == "97");

    CHECK(prime_power(8) == std::pair<std::uint64_t, int>(2, 3));
    CHECK(prime_power(9) == std::pair<std::uint64_t, int>(3, 2));
    CHECK(prime_power(31) == std::pair<std::uint64_t, int>(31, 1));
    CHECK(!prime_power(6).has_value());
    CHECK(!prime_power(100).has_value());
    CHECK_THROWS_AS(prime_power(1), InvalidArgument);

    CHECK(p_part(360, 2) == 8);
    CHECK(p_part(360, 3) == 9);
    CHECK(p_part(7, 5) == 1);
    CHECK(p_prime_part(360, 2) == 45);
    CHECK(p_prime_part(7, 7) == 1);
}

TEST_CASE("modular arithmetic") {
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(2, 0, 97) == 1);
    CHECK(pow_mod(123456789, 987654321, 1000000007) == 652541198);
    CHECK(pow_mod(5, 3, 1) == 0);
    CHECK_THROWS_AS(pow_mod(2, 3, 0), InvalidArgument);

    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(2, 31) == 5);
    CHECK(multiplicative_order(2, 19) == 18);
    CHECK(multiplicative_order(2, 13) == 12);
    CHECK(multiplicative_order(2, 9) == 6);
    CHECK(multiplicative_order(2, 101) == 100);
    CHECK(multiplicative_order(2, 131) == 130);
    CHECK_THROWS_AS(multiplicative_order(2, 8), InvalidArgument);
    CHECK_THROWS_AS(multiplicative_order(5, 1), InvalidArgument);

    // brute-force check of the order for every unit modulo small m
    for (std::uint64_t m = 2; m < 200; ++m)
        for (std::uint64_t a = 1; a < m; ++a) {
            bool unit = true;
            for (std::uint64_t d = 2; d <= a && d <= m; ++d)
                if (a % d == 0 && m % d == 0) unit = false;
            if (!unit) continue;
            std::uint64_t x = a % m, ord = 1;
            while (x != 1) {
                x = x * a % m;
                ++ord;
            }
            CHECK(multiplicative_order(a, m) == ord);
        }
}

TEST_CASE("primitive prime divisors by brute force") {
    // p is a primitive prime divisor of a^n - 1 exactly when p divides a^n - 1
    // but none of a^k - 1 for 0 < k < n.
    for (std::uint64_t a : {2ull, 3ull}) {
        for (std::uint64_t n = 1; n <= 20; ++n) {
            unsigned __int128 an = 1;
            for (std::uint64_t i = 0; i < n; ++i) an *= a;
            const std::uint64_t value = static_cast<std::uint64_t>(an - 1);
            for (std::uint64_t p = 2; p < 600; ++p) {
                if (!is_prime(p)) continue;
                bool divides_now = value % p == 0;
                bool divides_earlier = false;
                std::uint64_t ak = 1;
                for (std::uint64_t k = 1; k < n && !divides_earlier; ++k) {
                    ak *= a;
                    if ((ak - 1) % p == 0) divides_earlier = true;
                }
                const bool expected = divides_now && !divides_earlier;
                if (a % p == 0) continue;  // order undefined
                CHECK(is_primitive_prime_divisor(a, n, p) == expected);
            }
        }
    }
    CHECK_THROWS_AS(is_primitive_prime_divisor(2, 5, 6), InvalidArgument);
    CHECK_THROWS_AS(is_primitive_prime_divisor(1, 5, 7), InvalidArgument);
}

TEST_CASE("128-bit decimal rendering") {
    CHECK(u128_to_string(0) == "0");
    CHECK(u128_to_string(42) == "42");
    CHECK(u128_to_string(UINT64_MAX) == "18446744073709551615");
    unsigned __int128 big = static_cast<unsigned __int128>(UINT64_MAX) + 1;
    CHECK(u128_to_string(big) == "18446744073709551616");
    CHECK(u128_to_string(big * big - 1) ==
          "340282366920938463463374607431768211455");  // 2^128 - 1
}

TEST_CASE("repunit sieve") {
    // Frozen outputs for the small parameter sets.
    auto r3 = repunit_candidates(3, 5, 3);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].n == 3);
    CHECK(r3[0].d == 1);
    CHECK(r3[0].repunit == 7);
    CHECK(r3[0].verified);

    auto r5 = repunit_candidates(5, 7, 3);
    REQUIRE(r5.size() == 1);
    CHECK(r5[0].n == 5);
    CHECK(r5[0].d == 1);
    CHECK(r5[0].repunit == 31);
    CHECK(r5[0].verified);

    auto r19 = repunit_candidates(19, 5, 11);
    REQUIRE(r19.size() == 1);
    CHECK(r19[0].n == 3);
    CHECK(r19[0].d == 9);
    CHECK(r19[0].repunit == 262657);
    CHECK(r19[0].verified);

    // A candidate beyond 64 bits is reported but flagged as unverified.
    auto r101 = repunit_candidates(101, 5, 25);
    REQUIRE(r101.size() == 1);
    CHECK(r101[0].n == 5);
    CHECK(r101[0].d == 25);
    CHECK(!r101[0].verified);
    const unsigned __int128 one = 1;
    CHECK(r101[0].repunit == ((one << 125) - 1) / ((one << 25) - 1));

    // No qualifying shape at all: empty result, no error.
    CHECK(repunit_candidates(7, 5, 3).empty());  // ord_7(2) = 3 is odd, never d*(n-1)

    CHECK_THROWS_AS(repunit_candidates(131, 3, 65), CutoffExceeded);
    CHECK_THROWS_AS(repunit_candidates(2, 5, 5), InvalidArgument);
    CHECK_THROWS_AS(repunit_candidates(9, 5, 5), InvalidArgument);
    CHECK_THROWS_AS(repunit_candidates(13, 0, 5), InvalidArgument);
}

TEST_CASE("psl2 family classification") {
    CHECK(psl2_family(7).member);
    CHECK(psl2_family(9).member);
    CHECK(psl2_family(17).member);
    CHECK(psl2_family(25).member);
    CHECK(psl2_family(81).member);
    CHECK(!psl2_family(3).member);
    CHECK(!psl2_family(5).member);
    CHECK(!psl2_family(8).member);
    CHECK(!psl2_family(27).member);
    CHECK(!psl2_family(11).member);
    CHECK(psl2_family(7).mersenne);
    CHECK(psl2_family(31).mersenne);
    CHECK(!psl2_family(11).mersenne);
    CHECK(psl2_family(7).q_plus_one_prime_power == std::pair<std::uint64_t, int>(2, 3));
    CHECK(!psl2_family(9).q_plus_one_prime_power.has_value());  // 10 = 2 * 5
    CHECK(psl2_family(31).q_plus_one_prime_power == std::pair<std::uint64_t, int>(2, 5));
    CHECK_THROWS_AS(psl2_family(6), InvalidArgument);
    CHECK_THROWS_AS(psl2_family(1), InvalidArgument);

    // independent re-derivation for every prime power below 10^4
    for (std::uint64_t q = 2; q < 10000; ++q) {
        std::uint64_t radix = 0;
        int exponent = 0;
        for (std::uint64_t r = 2; r * r <= q; ++r) {
            if (q % r != 0) continue;
            std::uint64_t rest = q;
            int e = 0;
            while (rest % r == 0) {
                rest /= r;
                ++e;
            }
            if (rest == 1) {
                radix = r;
                exponent = e;
            }
            break;
        }
        if (radix == 0 && trial_division_prime(q)) {
            radix = q;
            exponent = 1;
        }
        if (radix == 0) continue;  // not a prime power

        bool expect_member = false;
        if (radix % 2 == 1) {
            if (exponent == 1) {
                expect_member = q % 8 == 1 || q % 8 == 7;
            } else {
                int e = exponent;
                while (e % 2 == 0) e /= 2;
                expect_member = e == 1;
            }
        }
        auto tag = psl2_family(q);
        CHECK(tag.member == expect_member);
        CHECK(tag.mersenne == (exponent == 1 && trial_division_prime(q) && ((q + 1) & q) == 0));
    }
}

TEST_CASE("consecutive prime powers below a million") {
    // Scan for q with q and q+1 both prime powers (q >= 4).  One of the two is
    // a power of two; the odd partners are exactly the Mersenne and Fermat
    // style values frozen here.
    std::set<std::uint64_t> found_odd_q, found_even_q;
    for (std::uint64_t q = 4; q <= 1000000; ++q) {
        auto a = prime_power(q);
        if (!a) continue;
        auto b = prime_power(q + 1);
        if (!b) continue;
        (q % 2 == 1 ? found_odd_q : found_even_q).insert(q);
    }
    CHECK(found_odd_q ==
          std::set<std::uint64_t>{7, 31, 127, 8191, 131071, 524287});  // Mersenne primes
    CHECK(found_even_q == std::set<std::uint64_t>{4, 8, 16, 256, 65536});
    for (std::uint64_t q : found_odd_q) {
        CHECK(is_prime(q));
        CHECK(psl2_family(q).mersenne);
    }
}
