#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace chow {

// The 6-tuple naming the space A(n,d,s,t,u,v): s tangent-type blocks from
// d-tuples of linear forms, t single-form blocks and u all-partial-product
// blocks from (d+1)-tuples, v times-R1 blocks from d-tuples.
struct Statement {
    int n = 1;
    int d = 0;
    int s = 0;
    int t = 0;
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Statement&, const Statement&) = default;
};

// Throws std::invalid_argument on malformed tuples (n < 1, negative block
// counts, or d = 0 with a positive block count).
void validate_statement(const Statement& st);

bool is_empty_statement(const Statement& st);

// a(n,d,s,t,u,v) = s(dn+1) + t + u(d+1) + v(n+1): the dimension the space
// reaches exactly when the statement is true. The t coefficient is 1, not
// d: each t block spans a single degree-d form.
std::uint64_t a_value(const Statement& st);

// a(n,d,s,t,u,v) <= C(n+d,d)
bool is_subabundant(const Statement& st);

// Row count of the specialization matrix: s*d*(n+1) + t + u(d+1) + v(n+1).
std::uint64_t statement_rows(const Statement& st);

std::string to_string(const Statement& st);

}  // namespace chow
