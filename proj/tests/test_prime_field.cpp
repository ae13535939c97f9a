#include <doctest.h>

#include "chow/prime_field.hpp"
#include "chow/rng.hpp"

using namespace chow;

TEST_CASE("primality testing") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(31));
    CHECK(is_prime_u64(1048583));      // first prime above 2^20
    CHECK(is_prime_u64(2147483647));   // 2^31 - 1
    CHECK(is_prime_u64(1000000007));
    CHECK(is_prime_u64(4294967291ull));  // 2^32 - 5

    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));          // Carmichael
    CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
    CHECK_FALSE(is_prime_u64(2147483647ull * 2147483629ull));
}

TEST_CASE("prime field construction") {
    CHECK_NOTHROW(PrimeField{kDefaultPrime});
    CHECK_NOTHROW(PrimeField{1048583});
    CHECK_THROWS_AS(PrimeField{65537}, std::invalid_argument);      // <= 2^20
    CHECK_THROWS_AS(PrimeField{1048576}, std::invalid_argument);    // 2^20
    CHECK_THROWS_AS(PrimeField{2147483645u}, std::invalid_argument);  // 5*...
}

TEST_CASE("field arithmetic agrees with wide reference") {
    const PrimeField f(kDefaultPrime);
    const std::uint64_t p = f.modulus();
    SplitMix64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t x = rng.next();
        CHECK(f.reduce(x) == x % p);
    }
    for (int i = 0; i < 2000; ++i) {
        const std::uint32_t a = rng.next_mod(f);
        const std::uint32_t b = rng.next_mod(f);
        CHECK(f.add(a, b) == (a + static_cast<std::uint64_t>(b)) % p);
        CHECK(f.sub(a, b) == (a + p - static_cast<std::uint64_t>(b)) % p);
        CHECK(f.mul(a, b) ==
              static_cast<std::uint64_t>(a) * b % p);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK(f.pow(2, 10) == 1024);
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.neg(0) == 0);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("arithmetic holds near the top of the 32-bit prime range") {
    const PrimeField f(4294967291u);
    const std::uint64_t p = f.modulus();
    const std::uint32_t a = 4294967290u;  // p - 1
    CHECK(f.mul(a, a) == (static_cast<std::uint64_t>(a) * a) % p);
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.reduce(~0ull) == ~0ull % p);
}
