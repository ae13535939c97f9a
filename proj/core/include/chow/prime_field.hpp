#pragma once

#include <cstdint>
#include <stdexcept>

namespace chow {

// Default modulus: the Mersenne prime 2^31 - 1. Recorded in every
// certificate; override with --prime.
inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

bool is_prime_u64(std::uint64_t n);

// Arithmetic context for Z/p with a word-size prime p, 2^20 < p < 2^32.
// Residues are uint32_t in [0, p). Reduction of 64-bit intermediates uses
// Barrett's method so no hardware division appears in elimination loops.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return static_cast<std::uint32_t>(p_); }

    // x mod p for any 64-bit x.
    std::uint32_t reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(x) * mu_) >> 64);
        std::uint64_t r = x - q * p_;
        if (r >= p_) r -= p_;
        if (r >= p_) r -= p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<std::uint32_t>(s);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : static_cast<std::uint32_t>(a + p_ - b);
    }

    std::uint32_t neg(std::uint32_t a) const {
        return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return reduce(static_cast<std::uint64_t>(a) * b);
    }

    std::uint32_t pow(std::uint32_t base, std::uint64_t e) const;

    // Multiplicative inverse via Fermat; a must be nonzero.
    std::uint32_t inv(std::uint32_t a) const;

private:
    std::uint64_t p_;
    std::uint64_t mu_;  // floor(2^64 / p)
};

}  // namespace chow
