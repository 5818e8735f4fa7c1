#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "permlab/errors.hpp"
#include "permlab/group.hpp"

using permlab::build_chain;
using permlab::Perm;
using permlab::PermGroup;

namespace {

PermGroup sym(int n) {
    if (n < 2) return PermGroup(std::max(n, 1));
    std::vector<std::uint16_t> cycle(n), swap2(n);
    for (int i = 0; i < n; ++i) {
        cycle[i] = static_cast<std::uint16_t>((i + 1) % n);
        swap2[i] = static_cast<std::uint16_t>(i);
    }
    std::swap(swap2[0], swap2[1]);
    return PermGroup(n, {Perm::from_images(swap2), Perm::from_images(cycle)});
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace

TEST_CASE("chain orders of symmetric groups") {
    for (int n = 1; n <= 8; ++n) CHECK(sym(n).order() == factorial(n));
}

TEST_CASE("trivial and cyclic groups") {
    PermGroup trivial(4);
    CHECK(trivial.order() == 1);
    CHECK(trivial.is_trivial());
    CHECK(trivial.elements().size() == 1);

    PermGroup c6(6, {Perm::from_cycles(6, "(1,2,3,4,5,6)")});
    CHECK(c6.order() == 6);
    CHECK(c6.contains(Perm::from_cycles(6, "(1,3,5)(2,4,6)")));
    CHECK(!c6.contains(Perm::from_cycles(6, "(1,2)")));
}

TEST_CASE("membership agrees with naive closure on random subgroups") {
    std::mt19937 rng(987123);
    const int degree = 7;
    std::vector<std::uint16_t> img(degree);
    auto random_perm = [&] {
        for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint16_t>(i);
        std::shuffle(img.begin(), img.end(), rng);
        return Perm::from_images(img);
    };
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Perm> gens{random_perm(), random_perm()};
        PermGroup g(degree, gens);
        std::vector<Perm> brute = oracle::closure(degree, gens);
        CHECK(g.order() == brute.size());
        CHECK(g.elements() == brute);  // both sorted lexicographically
        // spot-check membership of outsiders
        for (int probe = 0; probe < 10; ++probe) {
            Perm x = random_perm();
            bool in_brute = std::binary_search(brute.begin(), brute.end(), x);
            CHECK(g.contains(x) == in_brute);
        }
    }
}

TEST_CASE("element enumeration is sorted, indexed, and cutoff-guarded") {
    PermGroup s5 = sym(5);
    const std::vector<Perm>& elems = s5.elements();
    CHECK(elems.size() == 120);
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    CHECK(elems.front().is_identity());
    for (std::uint32_t i = 0; i < elems.size(); i += 17)
        CHECK(s5.element_position(elems[i]) == i);
    CHECK(s5.element_position(Perm::from_cycles(5, "(1,2)")) >= 0);

    CHECK_THROWS_AS(sym(9).elements(), permlab::CutoffExceeded);  // 362880 > 20000
}

TEST_CASE("conjugacy classes match the oracle") {
    for (int n : {3, 4, 5}) {
        PermGroup g = sym(n);
        auto lib = conjugacy_classes(g);
        auto brute = oracle::conjugacy_classes(g.elements());
        REQUIRE(lib.size() == brute.size());
        for (std::size_t i = 0; i < lib.size(); ++i) {
            REQUIRE(lib[i].members.size() == brute[i].size());
            CHECK(lib[i].representative == brute[i].front());
            for (std::size_t j = 0; j < brute[i].size(); ++j)
                CHECK(g.elements()[lib[i].members[j]] == brute[i][j]);
        }
    }
    // Sym(5) has 7 classes, one per partition of 5.
    CHECK(conjugacy_classes(sym(5)).size() == 7);
}

TEST_CASE("normalizer and centralizer match the oracle") {
    PermGroup s4 = sym(4);
    std::vector<std::vector<Perm>> subgroup_gens = {
        {Perm::from_cycles(4, "(1,2)")},
        {Perm::from_cycles(4, "(1,2,3)")},
        {Perm::from_cycles(4, "(1,2)(3,4)"), Perm::from_cycles(4, "(1,3)(2,4)")},
        {Perm::from_cycles(4, "(1,2,3,4)")},
    };
    for (const auto& gens : subgroup_gens) {
        PermGroup h = generated_subgroup(s4, gens);
        PermGroup n = normalizer(s4, h);
        PermGroup c = centralizer(s4, h);
        std::vector<Perm> n_brute = oracle::normalizer(s4.elements(), h.elements());
        std::vector<Perm> c_brute = oracle::centralizer(s4.elements(), h.elements());
        CHECK(n.order() == n_brute.size());
        CHECK(c.order() == c_brute.size());
        CHECK(n.elements() == n_brute);
        CHECK(c.elements() == c_brute);
        CHECK(is_normal_in(h, n));
    }
    CHECK(center(s4).is_trivial());
    PermGroup d8 = generated_subgroup(
        s4, {Perm::from_cycles(4, "(1,2,3,4)"), Perm::from_cycles(4, "(1,3)")});
    CHECK(center(d8).order() == 2);
}

TEST_CASE("normal closure and commutator subgroup") {
    PermGroup s4 = sym(4);
    PermGroup v4 = normal_closure(s4, {Perm::from_cycles(4, "(1,2)(3,4)")});
    CHECK(v4.order() == 4);
    CHECK(is_normal_in(v4, s4));

    PermGroup a4 = normal_closure(s4, {Perm::from_cycles(4, "(1,2,3)")});
    CHECK(a4.order() == 12);

    PermGroup derived = commutator_subgroup(s4, s4, s4);
    CHECK(derived.order() == 12);
    std::vector<Perm> brute = oracle::derived_subgroup(4, s4.elements());
    CHECK(derived.elements() == brute);

    PermGroup derived2 = commutator_subgroup(s4, derived, derived);
    CHECK(derived2.order() == 4);
}

TEST_CASE("group_from_elements recovers a group from its element set") {
    PermGroup s4 = sym(4);
    PermGroup again = group_from_elements(4, s4.elements());
    CHECK(again.order() == 24);
    CHECK(again.same_group_as(s4));
    CHECK(again.generators().size() <= 4);

    std::vector<Perm> not_closed = {Perm::identity(4), Perm::from_cycles(4, "(1,2,3)")};
    CHECK_THROWS_AS(group_from_elements(4, not_closed), permlab::InternalCheck);
}

TEST_CASE("generated_subgroup validates membership and Lagrange") {
    PermGroup s4 = sym(4);
    CHECK_THROWS_AS(generated_subgroup(s4, {Perm::from_cycles(5, "(1,2)")}),
                    permlab::InvalidArgument);
    PermGroup h = generated_subgroup(s4, {Perm::from_cycles(4, "(1,2,3)")});
    CHECK(h.order() == 3);
    CHECK(is_subgroup_of(h, s4));
    CHECK(!is_normal_in(h, s4));
}

TEST_CASE("degree cutoff enforced at construction") {
    CHECK_THROWS_AS(PermGroup(100000), permlab::CutoffExceeded);
}
