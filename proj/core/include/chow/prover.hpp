#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>

#include "chow/certificate.hpp"
#include "chow/prime_field.hpp"

namespace chow {

// When a goal may be closed by a direct rank computation instead of
// recursing: whenever C(n+d,d) is at most max_direct_basis.
struct BasePolicy {
    std::uint64_t max_direct_basis = 5000;
};

struct SearchBudget {
    std::size_t max_memo_entries = 100000;
};

enum class ProveStatus {
    proved,
    not_subabundant,   // precondition failure: a > C(n+d,d)
    unprovable,        // search exhausted without a proof
    budget_exhausted,
    hypothesis_failed, // extend_n base hypothesis violated
};

struct ProveOutcome {
    ProveStatus status = ProveStatus::unprovable;
    CertPtr certificate;
    std::string detail;

    bool proved() const { return status == ProveStatus::proved; }
};

// Memoized depth-first proof search over statements. Goal order: trivial
// bases (empty, d <= 1, the d = 2 closed form for (n,2,s,0,0,0)), then the
// transfer lemma against already-proven antecedents, then a direct rank
// check within the base policy, then splitting enumeration. The splitting
// probe order for s' is 0, s, then floor(s/2) outward; t', u', v' ascend.
// Deterministic given (statement, policy, budget, root seed) on a fresh
// prover. Safe for concurrent prove calls (the memo is mutex-guarded).
class Prover {
public:
    Prover(const PrimeField& field, std::uint64_t root_seed,
           BasePolicy policy = {}, SearchBudget budget = {}, int trials = 3);

    ProveOutcome prove(const Statement& st);

    // The induction on n: prove (n0,d,s,0,0,0), then chain splitting steps
    // (k,d,s) + transfer -> (k+1,d,s) up to n_target. Requires d >= 3 and
    // the base subabundance s(d*n0+1) <= C(n0+d,d).
    ProveOutcome extend_n(int n0, int d, int s, int n_target);

    std::size_t memo_entries() const;

private:
    struct MemoEntry {
        bool proved = false;
        CertPtr cert;
    };
    using Key = std::array<int, 6>;

    static Key key_of(const Statement& st) {
        return {st.n, st.d, st.s, st.t, st.u, st.v};
    }

    ProveOutcome prove_locked(const Statement& st);
    CertPtr search(const Statement& st, int depth);  // nullptr on failure
    CertPtr memo_lookup(const Key& k, bool* found) const;
    void memo_store(const Key& k, MemoEntry e);
    std::uint64_t statement_seed(const Statement& st) const;

    const PrimeField& field_;
    std::uint64_t root_seed_;
    BasePolicy policy_;
    SearchBudget budget_;
    int trials_;
    int depth_ceiling_ = 0;

    mutable std::mutex mu_;
    std::map<Key, MemoEntry> memo_;
};

struct VerifyResult {
    bool ok = true;
    std::string path;    // node path like "tree.children[1].children[0]"
    std::string reason;
};

// Re-validates every arithmetic side condition of the tree (statement
// validity, subabundance, splitting sums and child shapes, lemma shapes,
// closed forms) and replays every direct leaf with its stored (seed,
// prime), requiring the identical rank.
VerifyResult verify_certificate(const Certificate& cert);

}  // namespace chow
