#pragma once

#include <cstdint>
#include <string>

namespace chow {

// Exact rational with small terms; every threshold value has denominator
// dividing 18.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);
std::string to_string(const Rational& r);

// -1, 0, +1 as r <=> the integer s, exactly.
int compare(const Rational& r, std::int64_t s);

inline bool rational_le_int(const Rational& r, std::int64_t s) {
    return compare(r, s) <= 0;
}
inline bool int_lt_rational(std::int64_t s, const Rational& r) {
    return compare(r, s) > 0;
}
bool rational_lt_rational(const Rational& a, const Rational& b);

// The two piecewise-quadratic threshold functions (by d mod 6) bounding
// the secant indices known nondefective for n=3 or d=3: nondefective when
// s <= s1 or s >= s2. Defined for d >= 3. s1 merges the d = 2,5 (mod 6)
// branches; s2 keeps them separate.
Rational s1_threshold(int d);
Rational s2_threshold(int d);

}  // namespace chow
