#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chow/prime_field.hpp"
#include "chow/terracini.hpp"
#include "chow/thresholds.hpp"

namespace chow {

// A secant case (n, d) required for a fixed s, with the clause of the
// case-reduction proposition that produced it.
struct SecantCase {
    int s = 0;
    int n = 0;
    int d = 0;
    std::string clause;  // "i", "ii", "iii", or "no-trust"
};

struct CaseList {
    int s = 0;
    std::vector<SecantCase> cases;  // duplicate-free, sorted by (d, n)
};

// The finite case list for a fixed s: every (n, d) the induction on n
// cannot reach from already-known results. Scans use exact rational
// comparison; a hard ceiling of 10^4 on any scan index throws.
CaseList enumerate_cases(int s);

// Widened list that additionally rank-checks cases the clauses treat as
// already known: every d in [3, max{d : s > s1(d)} + 2] (at least [3,5])
// with n in [2, min{n : s(dn+1) <= C(n+d,d)}]. Superset of
// enumerate_cases(s).
CaseList enumerate_cases_no_trust(int s);

// Least n with s(dn+1) <= C(n+d,d) (the ratio is nondecreasing in n).
int min_filling_n(int s, int d);

// ceil(C(n+d,d) / (dn+1)): the generic Chow rank whenever the secant
// varieties are nondefective. d = 2 is rejected (use the d = 2 scan).
std::uint64_t generic_chow_rank(int n, int d);

// Least s whose d = 2 secant fills, from the exact closed form.
int generic_chow_rank_d2(int n);

struct CaseOutcome {
    SecantCase c;
    std::string method;  // "rank" or "closed-form"
    bool certified = false;
    bool expected_exception = false;  // d=2 defective within the known range
    std::int64_t dim = -1;
    std::int64_t expected = -1;
    bool fills = false;
    int trials_used = 0;
};

struct ConjectureReport {
    int s_max = 0;
    std::uint32_t prime = 0;
    std::uint64_t root_seed = 0;
    int trials = 0;
    bool no_trust = false;
    std::vector<CaseOutcome> results;     // sorted by (s, d, n)
    std::vector<CaseOutcome> exceptions;  // d=2 defectives observed
    std::vector<CaseOutcome> failures;    // uncertified non-exceptions

    bool ok() const { return failures.empty(); }
};

// Invoked as each rank case finishes (any thread, serialized by the
// caller-facing lock); for progress reporting only.
using CaseProgressFn = std::function<void(const CaseOutcome&)>;

// For each s <= s_max: rank-certifies every enumerated case (seed per case
// derived from the root seed and (s, n, d), so results are independent of
// worker count), and scans the d = 2 closed form over n in [1, 2s+4],
// confirming the defective set is exactly {n >= 2s, s >= 2}.
ConjectureReport verify_conjecture(int s_max, int trials, std::uint64_t seed,
                                   const PrimeField& f, int jobs,
                                   bool no_trust = false,
                                   const CaseProgressFn& on_case = {});

}  // namespace chow
