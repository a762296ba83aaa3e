#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "spinblocks/config.hpp"
#include "spinblocks/degrees.hpp"

using namespace spinblocks;

TEST_CASE("2-adic valuations") {
    CHECK(val2_factorial(0) == 0);
    CHECK(val2_factorial(4) == 3);
    CHECK(val2_factorial(6) == 4);
    for (int n = 0; n <= 200; ++n) REQUIRE(val2_factorial(n) == oracle::val2_factorial_by_terms(n));
    CHECK(val2(ExactInteger(1)) == 0);
    CHECK(val2(ExactInteger(48)) == 4);
    CHECK(val2(ExactInteger(16)) == 4);
    CHECK(val2(ExactInteger(-12)) == 2);
    CHECK_THROWS_AS(val2(ExactInteger(0)), std::invalid_argument);
}

TEST_CASE("hook degree examples") {
    for (int n = 1; n <= 8; ++n) CHECK(hook_degree(Partition{n}) == 1);
    CHECK(hook_degree(Partition{2, 2}) == 2);
    CHECK(hook_degree(Partition{3, 1}) == 3);
    CHECK(hook_degree(Partition{3, 2, 1}) == 16);
}

TEST_CASE("syt counts") {
    CHECK(syt_count(Partition{}) == 1);
    CHECK(syt_count(Partition{2, 1}) == 2);
    CHECK(syt_count(Partition{2, 2}) == 2);
    for (int n = 0; n <= 8; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            REQUIRE(syt_count(lambda) == oracle::syt_by_permutations(lambda));
        }
    }
    CHECK_THROWS_AS(syt_count(Partition{config::syt_cap + 1}), std::domain_error);
}

TEST_CASE("hook formula against tableau counts and conjugation") {
    for (int n = 0; n <= 10; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) REQUIRE(hook_degree(lambda) == syt_count(lambda));
    }
    for (int n = 0; n <= 20; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) REQUIRE(hook_degree(lambda) == hook_degree(conjugate(lambda)));
    }
}

TEST_CASE("sum of squares of hook degrees is n!") {
    for (int n = 0; n <= 14; ++n) {
        ExactInteger total = 0;
        for (const auto& lambda : enumerate_partitions(n)) total += hook_degree(lambda) * hook_degree(lambda);
        REQUIRE(total == factorial(n));
    }
}

TEST_CASE("spin degree examples") {
    CHECK(spin_degree(BarPartition{4}) == 2);
    CHECK(spin_degree(BarPartition{2, 1}) == 1);
    CHECK(spin_degree(BarPartition{3, 1}) == 4);
    CHECK(spin_degree(BarPartition{1}) == 1);
}

TEST_CASE("spin degree agrees with shifted tableaux") {
    for (int n = 1; n <= 24; ++n) {
        for (const auto& mu : enumerate_bar_partitions(n)) {
            CAPTURE(mu.to_string());
            ExactInteger expected = oracle::shifted_syt(mu.parts());
            expected <<= static_cast<unsigned>((n - mu.length()) / 2);
            REQUIRE(spin_degree(mu) == expected);
        }
    }
}

TEST_CASE("spin sum rule") {
    for (int n = 1; n <= 12; ++n) {
        ExactInteger total = 0;
        for (const auto& mu : enumerate_bar_partitions(n)) {
            const ExactInteger d = spin_degree(mu);
            total += (mu.is_even() ? 1 : 2) * d * d;
        }
        REQUIRE(total == factorial(n));
    }
}
