#include "chow/thresholds.hpp"

#include <numeric>
#include <stdexcept>

namespace chow {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

int compare(const Rational& r, std::int64_t s) {
    const std::int64_t lhs = r.num;            // r = num/den, den > 0
    const std::int64_t rhs = s * r.den;        // small values only
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

bool rational_lt_rational(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
}

namespace {

// 18 * s1(d) and 18 * s2(d); all branch constants clear denominator 18.
std::int64_t s1_num18(std::int64_t d) {
    switch (d % 6) {
        case 0: return d * d + 3 * d + 18;
        case 1: return d * d + 4 * d - 5;
        case 2:
        case 5: return d * d + 5 * d + 4;
        case 3: return d * d + 3 * d;
        default: return d * d + 4 * d + 4;  // d = 4 (mod 6)
    }
}

std::int64_t s2_num18(std::int64_t d) {
    switch (d % 6) {
        case 0: return d * d + 6 * d + 18;
        case 1: return d * d + 7 * d + 28;
        case 2: return d * d + 8 * d + 16;
        case 3: return d * d + 6 * d + 9;
        case 4: return d * d + 7 * d + 10;
        default: return d * d + 8 * d + 7;  // d = 5 (mod 6)
    }
}

}  // namespace

Rational s1_threshold(int d) {
    if (d < 3) throw std::invalid_argument("s1: defined for d >= 3");
    return make_rational(s1_num18(d), 18);
}

Rational s2_threshold(int d) {
    if (d < 3) throw std::invalid_argument("s2: defined for d >= 3");
    return make_rational(s2_num18(d), 18);
}

}  // namespace chow
