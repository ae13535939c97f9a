#include "chow/statement.hpp"

#include <stdexcept>

#include "chow/monomials.hpp"

namespace chow {

void validate_statement(const Statement& st) {
    if (st.n < 1)
        throw std::invalid_argument("statement: n must be at least 1");
    if (st.d < 0 || st.s < 0 || st.t < 0 || st.u < 0 || st.v < 0)
        throw std::invalid_argument("statement: negative field");
    if (st.d == 0 && (st.s > 0 || st.t > 0 || st.u > 0 || st.v > 0))
        throw std::invalid_argument(
            "statement: block counts require d >= 1 (d = 0 is the scalar space)");
}

bool is_empty_statement(const Statement& st) {
    return st.s == 0 && st.t == 0 && st.u == 0 && st.v == 0;
}

std::uint64_t a_value(const Statement& st) {
    const std::uint64_t n = st.n, d = st.d;
    return static_cast<std::uint64_t>(st.s) * (d * n + 1) +
           static_cast<std::uint64_t>(st.t) +
           static_cast<std::uint64_t>(st.u) * (d + 1) +
           static_cast<std::uint64_t>(st.v) * (n + 1);
}

bool is_subabundant(const Statement& st) {
    const std::uint64_t a = a_value(st);
    return binomial_capped(static_cast<std::uint64_t>(st.n) + st.d, st.d, a) == a;
}

std::uint64_t statement_rows(const Statement& st) {
    const std::uint64_t n = st.n, d = st.d;
    return static_cast<std::uint64_t>(st.s) * d * (n + 1) +
           static_cast<std::uint64_t>(st.t) +
           static_cast<std::uint64_t>(st.u) * (d + 1) +
           static_cast<std::uint64_t>(st.v) * (n + 1);
}

std::string to_string(const Statement& st) {
    return "A(" + std::to_string(st.n) + "," + std::to_string(st.d) + "," +
           std::to_string(st.s) + "," + std::to_string(st.t) + "," +
           std::to_string(st.u) + "," + std::to_string(st.v) + ")";
}

}  // namespace chow
