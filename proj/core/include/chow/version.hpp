#pragma once

namespace chow {

inline constexpr const char* kVersion = "0.1.0";

// Fixed default root seed so bare invocations are reproducible; pass
// --seed random to opt into entropy.
inline constexpr unsigned long long kDefaultSeed = 0x5EEDC0DEull;

}  // namespace chow
