#include "chow/rng.hpp"

namespace chow {

std::vector<std::uint32_t> sample_uniform(std::size_t count,
                                          std::uint64_t seed,
                                          const PrimeField& f) {
    std::vector<std::uint32_t> out;
    out.reserve(count);
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) out.push_back(rng.next_mod(f));
    return out;
}

}  // namespace chow
