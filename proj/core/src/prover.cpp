#include "chow/prover.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

#include "chow/rng.hpp"

namespace chow {

namespace {

struct SearchLimit {
    const char* what;
};

std::vector<int> s_probe_order(int s) {
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(s) + 1, 0);
    auto push = [&](int x) {
        if (x >= 0 && x <= s && !seen[x]) {
            seen[x] = 1;
            order.push_back(x);
        }
    };
    // extremes first (the induction-on-n pattern), then balanced outward
    push(0);
    push(s);
    const int mid = s / 2;
    for (int off = 0; off <= s; ++off) {
        push(mid - off);
        push(mid + off);
    }
    return order;
}

}  // namespace

Prover::Prover(const PrimeField& field, std::uint64_t root_seed,
               BasePolicy policy, SearchBudget budget, int trials)
    : field_(field),
      root_seed_(root_seed),
      policy_(policy),
      budget_(budget),
      trials_(trials) {
    if (trials_ < 1) throw std::invalid_argument("prover: trials < 1");
}

std::uint64_t Prover::statement_seed(const Statement& st) const {
    const auto pack = [](int hi, int lo) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(hi)) << 32) |
               static_cast<std::uint32_t>(lo);
    };
    return derive_seed(root_seed_, pack(st.n, st.d), pack(st.s, st.t),
                       pack(st.u, st.v));
}

CertPtr Prover::memo_lookup(const Key& k, bool* found) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(k);
    if (it == memo_.end()) {
        *found = false;
        return nullptr;
    }
    *found = true;
    return it->second.proved ? it->second.cert : nullptr;
}

void Prover::memo_store(const Key& k, MemoEntry e) {
    std::lock_guard<std::mutex> lock(mu_);
    if (memo_.size() >= budget_.max_memo_entries)
        throw SearchLimit{"memo entry budget exhausted"};
    memo_[k] = std::move(e);
}

std::size_t Prover::memo_entries() const {
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.size();
}

ProveOutcome Prover::prove(const Statement& st) {
    validate_statement(st);
    if (!is_subabundant(st))
        return {ProveStatus::not_subabundant, nullptr,
                to_string(st) + " is not subabundant"};
    depth_ceiling_ = st.n + 1;
    try {
        CertPtr cert = search(st, 0);
        if (cert) return {ProveStatus::proved, cert, {}};
        return {ProveStatus::unprovable, nullptr,
                "no certificate found for " + to_string(st)};
    } catch (const SearchLimit& limit) {
        return {ProveStatus::budget_exhausted, nullptr, limit.what};
    }
}

CertPtr Prover::search(const Statement& st, int depth) {
    if (depth > depth_ceiling_) throw SearchLimit{"recursion depth ceiling"};
    const Key key = key_of(st);
    bool found = false;
    CertPtr cached = memo_lookup(key, &found);
    if (found) return cached;

    const auto fail = [&]() -> CertPtr {
        memo_store(key, MemoEntry{false, nullptr});
        return nullptr;
    };
    const auto settle = [&](Certificate cert) -> CertPtr {
        auto ptr = std::make_shared<const Certificate>(std::move(cert));
        memo_store(key, MemoEntry{true, ptr});
        return ptr;
    };

    if (!is_subabundant(st)) return fail();

    // d <= 1: each block spans exactly its a-contribution and the spans are
    // generically independent, so subabundance alone forces truth.
    if (st.d <= 1) return settle({st, CertMethod::trivial_d1, {}, {}, {}});

    if (is_empty_statement(st))
        return settle({st, CertMethod::trivial_empty, {}, {}, {}});

    if (st.d == 2 && st.t == 0 && st.u == 0 && st.v == 0) {
        if (d2_span_dim(st.n, st.s) == a_value(st))
            return settle({st, CertMethod::closed_form_d2, {}, {}, {}});
        return fail();  // exact closed form: the statement is false
    }

    // transfer lemma, applied against already-proven antecedents only
    if (st.s == 0 && st.t == 0 && st.v == 0 && st.u > 0) {
        const Statement antecedent{st.n, st.d + 1, st.u, 0, 0, 0};
        bool have = false;
        CertPtr ante = memo_lookup(key_of(antecedent), &have);
        if (have && ante)
            return settle({st, CertMethod::lemma_f, {}, {ante}, {}});
    }

    if (binomial_capped(static_cast<std::uint64_t>(st.n) + st.d, st.d,
                        policy_.max_direct_basis + 1) <=
        policy_.max_direct_basis) {
        CheckOutcome outcome =
            check_statement(st, trials_, statement_seed(st), field_);
        if (outcome.certified)
            return settle({st, CertMethod::direct, {}, {}, outcome});
        return fail();
    }

    if (st.n >= 2 && st.d >= 3) {
        for (int sp_s : s_probe_order(st.s)) {
            for (int sp_t = 0; sp_t <= st.t; ++sp_t) {
                for (int sp_u = 0; sp_u <= st.u; ++sp_u) {
                    for (int sp_v = 0; sp_v <= st.v; ++sp_v) {
                        Splitting sp;
                        sp.s = {sp_s, st.s - sp_s};
                        sp.t = {sp_t, st.t - sp_t};
                        sp.u = {sp_u, st.u - sp_u};
                        sp.v = {sp_v, st.v - sp_v};
                        const auto kids = split_children(st, sp);
                        if (!is_subabundant(kids[0]) ||
                            !is_subabundant(kids[1]) ||
                            !is_subabundant(kids[2]))
                            continue;
                        std::vector<CertPtr> proofs;
                        proofs.reserve(3);
                        for (const Statement& kid : kids) {
                            CertPtr c = search(kid, depth + 1);
                            if (!c) break;
                            proofs.push_back(c);
                        }
                        if (proofs.size() == 3)
                            return settle({st, CertMethod::split, sp,
                                           std::move(proofs), {}});
                    }
                }
            }
        }
    }
    return fail();
}

ProveOutcome Prover::extend_n(int n0, int d, int s, int n_target) {
    if (n0 < 1 || s < 1 || n_target < n0)
        throw std::invalid_argument("extend_n: need n0 >= 1, s >= 1, n_target >= n0");
    if (d < 3)
        return {ProveStatus::hypothesis_failed, nullptr,
                "extend_n: the splitting step requires d >= 3"};
    const Statement base{n0, d, s, 0, 0, 0};
    if (!is_subabundant(base))
        return {ProveStatus::hypothesis_failed, nullptr,
                "extend_n: base " + to_string(base) + " is not subabundant"};

    ProveOutcome out = prove(base);
    if (!out.proved()) {
        out.detail = "extend_n: base not provable: " + out.detail;
        return out;
    }
    CertPtr cert = out.certificate;
    try {
        for (int k = n0; k < n_target; ++k) {
            const Statement parent{k + 1, d, s, 0, 0, 0};
            const Statement lf = lemma_f_consequence(cert->statement);
            auto transfer = std::make_shared<const Certificate>(Certificate{
                lf, CertMethod::lemma_f, {}, {cert}, {}});
            memo_store(key_of(lf), MemoEntry{true, transfer});
            const Statement empty{k, d - 2, 0, 0, 0, 0};
            auto trivial = std::make_shared<const Certificate>(
                Certificate{empty, CertMethod::trivial_empty, {}, {}, {}});

            Splitting sp;
            sp.s = {0, s};
            const auto kids = split_children(parent, sp);
            if (kids[0] != cert->statement || kids[1] != lf || kids[2] != empty)
                throw std::logic_error("extend_n: splitting step mismatch");
            auto step = std::make_shared<const Certificate>(Certificate{
                parent, CertMethod::split, sp, {cert, transfer, trivial}, {}});
            memo_store(key_of(parent), MemoEntry{true, step});
            cert = step;
        }
    } catch (const SearchLimit& limit) {
        return {ProveStatus::budget_exhausted, nullptr, limit.what};
    }
    return {ProveStatus::proved, cert, {}};
}

namespace {

struct ReplayCache {
    std::map<std::tuple<std::array<int, 6>, std::uint64_t, std::uint32_t>,
             std::uint64_t>
        ranks;
};

std::string child_path(const std::string& base, std::size_t i) {
    return base + ".children[" + std::to_string(i) + "]";
}

VerifyResult fail_at(const std::string& path, std::string reason) {
    return VerifyResult{false, path, std::move(reason)};
}

VerifyResult verify_node(const Certificate& node, const std::string& path,
                         ReplayCache& cache) {
    try {
        validate_statement(node.statement);
    } catch (const std::exception& e) {
        return fail_at(path, e.what());
    }
    if (!is_subabundant(node.statement))
        return fail_at(path, to_string(node.statement) + " is not subabundant");

    const std::uint64_t a = a_value(node.statement);
    switch (node.method) {
        case CertMethod::trivial_empty: {
            if (!is_empty_statement(node.statement))
                return fail_at(path, "TrivialEmpty node has blocks");
            if (!node.children.empty())
                return fail_at(path, "TrivialEmpty node has children");
            return {};
        }
        case CertMethod::trivial_d1: {
            if (node.statement.d > 1)
                return fail_at(path, "TrivialD1 node has d > 1");
            if (!node.children.empty())
                return fail_at(path, "TrivialD1 node has children");
            return {};
        }
        case CertMethod::closed_form_d2: {
            if (node.statement.d != 2 || node.statement.t != 0 ||
                node.statement.u != 0 || node.statement.v != 0)
                return fail_at(path, "ClosedFormD2 node is not (n,2,s,0,0,0)");
            if (d2_span_dim(node.statement.n, node.statement.s) != a)
                return fail_at(path, "closed form does not reach a(...)");
            if (!node.children.empty())
                return fail_at(path, "ClosedFormD2 node has children");
            return {};
        }
        case CertMethod::lemma_f: {
            if (node.children.size() != 1)
                return fail_at(path, "LemmaF node needs exactly one child");
            const Statement& st = node.statement;
            if (st.s != 0 || st.t != 0 || st.v != 0 || st.u <= 0)
                return fail_at(path, "LemmaF node is not (n,d,0,0,s,0)");
            const Statement expect{st.n, st.d + 1, st.u, 0, 0, 0};
            if (node.children[0]->statement != expect)
                return fail_at(child_path(path, 0),
                               "LemmaF antecedent must be " + to_string(expect));
            return verify_node(*node.children[0], child_path(path, 0), cache);
        }
        case CertMethod::split: {
            if (!node.splitting)
                return fail_at(path, "Split node lacks a splitting");
            if (node.children.size() != 3)
                return fail_at(path, "Split node needs exactly three children");
            std::array<Statement, 3> kids;
            try {
                kids = split_children(node.statement, *node.splitting);
            } catch (const std::exception& e) {
                return fail_at(path, e.what());
            }
            for (std::size_t i = 0; i < 3; ++i) {
                if (node.children[i]->statement != kids[i])
                    return fail_at(child_path(path, i),
                                   "statement does not match the splitting rule (expected " +
                                       to_string(kids[i]) + ")");
            }
            for (std::size_t i = 0; i < 3; ++i) {
                VerifyResult r =
                    verify_node(*node.children[i], child_path(path, i), cache);
                if (!r.ok) return r;
            }
            return {};
        }
        case CertMethod::direct: {
            if (!node.evidence)
                return fail_at(path, "Direct node lacks evidence");
            if (!node.children.empty())
                return fail_at(path, "Direct node has children");
            const CheckOutcome& ev = *node.evidence;
            if (!ev.certified)
                return fail_at(path, "Direct node evidence is not certified");
            if (ev.target != a)
                return fail_at(path, "evidence target differs from a(...)");
            if (ev.achieved_rank != a)
                return fail_at(path, "evidence rank differs from a(...)");
            if (ev.rows != statement_rows(node.statement))
                return fail_at(path, "evidence row count differs from the statement");
            std::uint64_t cols = 0;
            try {
                cols = basis_size(node.statement.n, node.statement.d);
            } catch (const std::exception& e) {
                return fail_at(path, e.what());
            }
            if (ev.cols != cols)
                return fail_at(path, "evidence column count differs from the statement");
            // replay
            try {
                const PrimeField f(ev.prime);
                const auto key = std::make_tuple(
                    std::array<int, 6>{node.statement.n, node.statement.d,
                                       node.statement.s, node.statement.t,
                                       node.statement.u, node.statement.v},
                    ev.seed, ev.prime);
                auto it = cache.ranks.find(key);
                std::uint64_t r;
                if (it != cache.ranks.end()) {
                    r = it->second;
                } else {
                    r = rank(build_statement_matrix(node.statement, ev.seed, f),
                             f);
                    cache.ranks.emplace(key, r);
                }
                if (r != ev.achieved_rank)
                    return fail_at(path,
                                   "replay rank " + std::to_string(r) +
                                       " differs from recorded rank " +
                                       std::to_string(ev.achieved_rank));
            } catch (const std::exception& e) {
                return fail_at(path, std::string("replay failed: ") + e.what());
            }
            return {};
        }
    }
    return fail_at(path, "unknown certificate method");
}

}  // namespace

VerifyResult verify_certificate(const Certificate& cert) {
    ReplayCache cache;
    return verify_node(cert, "tree", cache);
}

}  // namespace chow
