#pragma once

#include <cstdint>
#include <vector>

#include "chow/prime_field.hpp"

namespace chow {

// splitmix64 finalizer (Steele/Lea/Vigna). Used both as the PRNG step and
// as the seed-derivation mixer, so streams are reproducible across
// platforms independent of the standard library.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    // Uniform on [0, p) by rejection, so the distribution is exactly
    // uniform and identical on every platform.
    std::uint32_t next_mod(const PrimeField& f) {
        std::uint64_t p = f.modulus();
        std::uint64_t threshold = (-p) % p;  // 2^64 mod p
        std::uint64_t x = next();
        while (x < threshold) x = next();
        return static_cast<std::uint32_t>(x % p);
    }

private:
    std::uint64_t state_;
};

// Stable seed derivation: children of a root seed are indexed by up to
// three tags (trial counters, statement coordinates, case coordinates).
// Scheme: fold each tag into the state with the splitmix finalizer.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t h = mix64(root ^ 0xA0761D6478BD642Full);
    h = mix64(h ^ (a + 0x9E3779B97F4A7C15ull));
    h = mix64(h ^ (b + 0xE7037ED1A0B428DBull));
    h = mix64(h ^ (c + 0x8EBC6AF09C88C6E3ull));
    return h;
}

// Deterministic uniform sample of `count` residues mod p.
std::vector<std::uint32_t> sample_uniform(std::size_t count,
                                          std::uint64_t seed,
                                          const PrimeField& f);

}  // namespace chow
