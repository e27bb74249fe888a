#include "graphdirac/bigint.hpp"

#include "graphdirac/error.hpp"

#include <doctest.h>

#include <random>

using graphdirac::BigInt;

TEST_CASE("bigint arithmetic matches 64-bit arithmetic on small values") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> dist(-1'000'000'000LL, 1'000'000'000LL);
    for (int i = 0; i < 2000; ++i) {
        long long a = dist(rng);
        long long b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_longlong() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_longlong() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_longlong() == a * b);
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK((BigInt(a) == BigInt(b)) == (a == b));
    }
}

TEST_CASE("bigint grows past 64 bits") {
    // 2^100 computed by repeated doubling, checked against the known decimal
    BigInt x(1);
    for (int i = 0; i < 100; ++i) x += x;
    CHECK(x.str() == "1267650600228229401496703205376");
    CHECK((x - x).is_zero());
    CHECK((-x).is_negative());
    CHECK_THROWS_AS((void)x.to_longlong(), graphdirac::Error);
}

TEST_CASE("bigint exact division") {
    BigInt x = BigInt(123456789) * BigInt(1000000007) * BigInt(12);
    CHECK(x.div_exact(12) == BigInt(123456789) * BigInt(1000000007));
    CHECK_THROWS_AS((void)BigInt(10).div_exact(3), graphdirac::Error);
    CHECK(BigInt(-12).div_exact(4) == BigInt(-3));
    CHECK(BigInt(0).div_exact(5).is_zero());
}

TEST_CASE("bigint decimal rendering pads interior limbs") {
    BigInt x = BigInt(1'000'000'000LL) * BigInt(1'000'000'000LL); // 10^18
    CHECK(x.str() == "1000000000000000000");
    CHECK(BigInt(-42).str() == "-42");
    CHECK(BigInt(0).str() == "0");
}
