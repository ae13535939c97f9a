#pragma once

#include <cstdint>

#include "chow/dense_matrix.hpp"
#include "chow/monomials.hpp"
#include "chow/prime_field.hpp"
#include "chow/statement.hpp"

namespace chow {

// Result of a randomized rank check of one statement. certified means the
// achieved rank reached a(n,d,s,t,u,v), which proves the statement (a
// specialization's rank lower-bounds the generic rank); an uncertified
// outcome is evidence only. seed is the seed of the trial that produced
// achieved_rank, so (seed, prime) replays to the identical rank.
struct CheckOutcome {
    bool certified = false;
    std::uint64_t achieved_rank = 0;
    std::uint64_t target = 0;
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    int trials_used = 0;
};

struct SecantDimResult {
    int n = 0, d = 0, s = 0;
    std::int64_t dim_lower_bound = -1;  // projective dimension
    std::int64_t expected = -1;
    bool nondefective_certified = false;
    bool fills_ambient = false;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    int trials_used = 0;
};

// Specialization matrix of A(n,d,s,t,u,v) over F_p with C(n+d,d) columns
// and s*d*(n+1) + t + u(d+1) + v(n+1) rows, deterministic given seed.
// Layout: s blocks (rows pi_j(f_i)*x_k, j then k ascending), then t rows
// pi_1(f'_i), then u blocks (rows pi_j(f''_i)), then v blocks (rows
// pi_1(f'''_i)*x_k). Tuples are sampled in that order, one linear form at
// a time (n+1 coefficients each; an all-zero draw is redrawn).
DenseMatrix build_statement_matrix(const Statement& st, std::uint64_t seed,
                                   const PrimeField& f);

// Up to `trials` independent build+rank rounds; certifies on the first
// round whose rank equals a_value(st). Trial k uses derive_seed(seed, k).
// Superabundant statements are reported impossible (uncertified, no linear
// algebra); empty statements are certified vacuously.
CheckOutcome check_statement(const Statement& st, int trials,
                             std::uint64_t seed, const PrimeField& f);

// dim and expected dim of the s-th secant variety of the Chow variety of
// degree-d forms on P^n, via the tangent-space rank. d = 1 is answered
// without linear algebra.
SecantDimResult secant_dimension(int n, int d, int s, int trials,
                                 std::uint64_t seed, const PrimeField& f);

// min{s(dn+1), C(n+d,d)} - 1
std::uint64_t expected_dimension(int n, int d, int s);

// Exact dimension for d = 2 from the closed form: the tangent span of s
// generic points is sum of 2s generic l*R_1, of dimension
// C(n+2,2) - C(n+2-2s, 2) when 2s <= n+1 and full otherwise (this equals
// min{s(2n+1)-2s(s-1), C(n+2,2)} throughout the subabundant range).
std::uint64_t d2_dimension(int n, int s);

// Affine dimension of the d = 2 span (d2_dimension + 1).
std::uint64_t d2_span_dim(int n, int s);

}  // namespace chow
