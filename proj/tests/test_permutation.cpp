#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ouroboros/error.hpp"
#include "ouroboros/permutation.hpp"
#include "support/test_support.hpp"

using namespace ouroboros;

namespace {

std::vector<std::vector<std::size_t>> collect(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& p : permutations(n)) out.emplace_back(p.mapping().begin(), p.mapping().end());
    return out;
}

std::uint64_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("small permutation streams") {
    auto one = collect(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == std::vector<std::size_t>{1});
    CHECK(Permutation::identity(1).inversions() == 0);

    std::vector<Permutation> two;
    for (const auto& p : permutations(2)) two.push_back(p);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == Permutation({1, 2}));
    CHECK(two[0].inversions() == 0);
    CHECK(two[1] == Permutation({2, 1}));
    CHECK(two[1].inversions() == 1);

    auto three = collect(3);
    CHECK(three.size() == 6);
    CHECK(Permutation({3, 1, 2}).inversions() == 2);
    CHECK_THROWS_AS(permutations(0), DomainError);
}

TEST_CASE("sign examples") {
    CHECK(sign(Permutation::identity(4)) == 1);
    CHECK(sign(Permutation({2, 1})) == -1);
    CHECK(sign(Permutation({3, 1, 2})) == 1);
    CHECK(Permutation({3, 1, 2})(1) == 3);
}

TEST_CASE("invalid mappings are rejected") {
    CHECK_THROWS_AS(Permutation({}), DomainError);
    CHECK_THROWS_AS(Permutation({1, 1}), DomainError);
    CHECK_THROWS_AS(Permutation({0, 1}), DomainError);
    CHECK_THROWS_AS(Permutation({1, 3}), DomainError);
    CHECK_THROWS_AS(Permutation({1, 2}).compose(Permutation({1})), DomainError);
}

TEST_CASE("stream yields n! distinct bijections in lexicographic order") {
    for (std::size_t n = 1; n <= 7; ++n) {
        auto all = collect(n);
        CHECK(all.size() == factorial(n));
        CHECK(std::is_sorted(all.begin(), all.end()));
        std::set<std::vector<std::size_t>> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("inversion count matches a brute-force pair count and cycle parity") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& p : permutations(n)) {
            auto m = p.mapping();
            std::uint64_t inv = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (a < b && m[a] > m[b]) ++inv;
            CHECK(p.inversions() == inv);
            CHECK(p.sign() == testing::sign_by_cycles({m.begin(), m.end()}));
        }
    }
}

TEST_CASE("sign is multiplicative") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        std::vector<std::size_t> a(n), b(n);
        std::iota(a.begin(), a.end(), std::size_t{1});
        std::iota(b.begin(), b.end(), std::size_t{1});
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        Permutation s(a), t(b);
        auto st = s.compose(t);
        CHECK(sign(st) == sign(s) * sign(t));
        for (std::size_t i = 1; i <= n; ++i) CHECK(st(i) == s(t(i)));
    }
}
