#pragma once

// Test-only reference implementations, kept independent of the library's
// computation paths.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "chow/dense_matrix.hpp"
#include "chow/monomials.hpp"

namespace oracle {

// Rank over F_p by fraction-free cross-multiplication elimination (no
// inverses, plain % reduction).
std::size_t naive_rank(chow::DenseMatrix m, std::uint64_t p);

// Sparse exponent-map polynomials for term-by-term multiply-and-collect.
using ExpMap = std::map<std::vector<int>, std::uint64_t>;

ExpMap expmap_of(const chow::PolyVector& p);
ExpMap naive_multiply(const ExpMap& a, const ExpMap& b, std::uint64_t p);
bool expmap_equals_poly(const ExpMap& m, const chow::PolyVector& p);

// Exact rational Gaussian elimination over small integer matrices.
std::size_t rational_rank(std::vector<std::vector<long long>> rows);

// Independent scan of the three case-reduction clauses.
struct BruteCase {
    int n, d;
    std::string clause;
    auto operator<=>(const BruteCase&) const = default;
};
std::vector<BruteCase> brute_cases(int s);

}  // namespace oracle
