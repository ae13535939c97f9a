#include <doctest.h>

#include "chow/cert_io.hpp"
#include "chow/prover.hpp"
#include "chow/rng.hpp"

using namespace chow;

TEST_CASE("split_children on the induction pattern") {
    const Statement st{4, 3, 2, 0, 0, 0};
    Splitting sp;
    sp.s = {0, 2};
    const auto kids = split_children(st, sp);
    CHECK(kids[0] == Statement{3, 3, 2, 0, 0, 0});
    CHECK(kids[1] == Statement{3, 2, 0, 0, 2, 0});
    CHECK(kids[2] == Statement{3, 1, 0, 0, 0, 0});
}

TEST_CASE("split_children of an empty statement") {
    const auto kids = split_children({2, 3, 0, 0, 0, 0}, Splitting{});
    for (const Statement& k : kids) CHECK(is_empty_statement(k));
    CHECK(kids[0].d == 3);
    CHECK(kids[1].d == 2);
    CHECK(kids[2].d == 1);
}

TEST_CASE("split_children general substitution") {
    const Statement st{5, 4, 3, 1, 1, 1};
    Splitting sp;
    sp.s = {1, 2};
    sp.t = {1, 0};
    sp.u = {0, 1};
    sp.v = {1, 0};
    const auto kids = split_children(st, sp);
    CHECK(kids[0] == Statement{4, 4, 2, 0, 1, 1});
    CHECK(kids[1] == Statement{4, 3, 1, 1, 2, 1});
    CHECK(kids[2] == Statement{4, 2, 0, 1, 1, 0});
}

TEST_CASE("split_children rejects bad inputs") {
    Splitting sp;
    sp.s = {0, 2};
    CHECK_THROWS_AS(split_children({1, 3, 2, 0, 0, 0}, sp),
                    std::invalid_argument);  // n < 2
    CHECK_THROWS_AS(split_children({4, 2, 2, 0, 0, 0}, sp),
                    std::invalid_argument);  // d < 3
    sp.s = {1, 2};
    CHECK_THROWS_AS(split_children({4, 3, 2, 0, 0, 0}, sp),
                    std::invalid_argument);  // sums
}

TEST_CASE("children a-values sum to the parent a-value") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        Statement st;
        st.n = 2 + static_cast<int>(rng.next() % 6);
        st.d = 3 + static_cast<int>(rng.next() % 6);
        st.s = static_cast<int>(rng.next() % 5);
        st.t = static_cast<int>(rng.next() % 5);
        st.u = static_cast<int>(rng.next() % 5);
        st.v = static_cast<int>(rng.next() % 5);
        Splitting sp;
        const auto part = [&](int total) {
            const int a = total == 0 ? 0 : static_cast<int>(rng.next() % (total + 1));
            return std::array<int, 2>{a, total - a};
        };
        sp.s = part(st.s);
        sp.t = part(st.t);
        sp.u = part(st.u);
        sp.v = part(st.v);
        const auto kids = split_children(st, sp);
        CHECK(a_value(kids[0]) + a_value(kids[1]) + a_value(kids[2]) ==
              a_value(st));
    }
}

TEST_CASE("lemma_f_consequence") {
    CHECK(lemma_f_consequence({3, 3, 2, 0, 0, 0}) == Statement{3, 2, 0, 0, 2, 0});
    CHECK(lemma_f_consequence({5, 2, 3, 0, 0, 0}) == Statement{5, 1, 0, 0, 3, 0});
    SplitMix64 rng(2);
    for (int i = 0; i < 20; ++i) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        const int d = 2 + static_cast<int>(rng.next() % 6);
        const int s = 1 + static_cast<int>(rng.next() % 6);
        CHECK(a_value(lemma_f_consequence({n, d, s, 0, 0, 0})) ==
              static_cast<std::uint64_t>(s) * d);
    }
    CHECK_THROWS_AS(lemma_f_consequence({3, 1, 2, 0, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(lemma_f_consequence({3, 3, 2, 1, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("prove: trivial, precondition failure, induction shape") {
    const PrimeField f(kDefaultPrime);

    Prover trivial_prover(f, 42);
    const ProveOutcome d1 = trivial_prover.prove({3, 1, 0, 0, 0, 0});
    REQUIRE(d1.proved());
    CHECK(d1.certificate->method == CertMethod::trivial_d1);

    const ProveOutcome super = trivial_prover.prove({2, 2, 3, 0, 0, 0});
    CHECK(super.status == ProveStatus::not_subabundant);

    // force a split at (4,3,2,0,0,0) by allowing direct checks only at
    // basis size <= 20 = C(3+3,3)
    Prover prover(f, 42, BasePolicy{20});
    const ProveOutcome out = prover.prove({4, 3, 2, 0, 0, 0});
    REQUIRE(out.proved());
    const Certificate& root = *out.certificate;
    CHECK(root.method == CertMethod::split);
    REQUIRE(root.children.size() == 3);
    CHECK(root.splitting->s == std::array<int, 2>{0, 2});
    CHECK(root.children[0]->statement == Statement{3, 3, 2, 0, 0, 0});
    CHECK(root.children[0]->method == CertMethod::direct);
    CHECK(root.children[1]->statement == Statement{3, 2, 0, 0, 2, 0});
    CHECK(root.children[1]->method == CertMethod::lemma_f);
    CHECK(root.children[1]->children[0] == root.children[0]);
    CHECK(root.children[2]->statement == Statement{3, 1, 0, 0, 0, 0});
    CHECK(root.children[2]->method == CertMethod::trivial_d1);

    CHECK(verify_certificate(root).ok);
}

TEST_CASE("prove is deterministic on fresh provers") {
    const PrimeField f(kDefaultPrime);
    Prover a(f, 11, BasePolicy{20});
    Prover b(f, 11, BasePolicy{20});
    const ProveOutcome ra = a.prove({4, 3, 2, 0, 0, 0});
    const ProveOutcome rb = b.prove({4, 3, 2, 0, 0, 0});
    REQUIRE(ra.proved());
    REQUIRE(rb.proved());
    const CertificateFile fa{1, kDefaultPrime, 11, ra.certificate};
    const CertificateFile fb{1, kDefaultPrime, 11, rb.certificate};
    CHECK(certificate_to_json(fa) == certificate_to_json(fb));
}

TEST_CASE("prove honors the memo budget") {
    const PrimeField f(kDefaultPrime);
    Prover prover(f, 1, BasePolicy{1}, SearchBudget{2});
    const ProveOutcome out = prover.prove({4, 3, 2, 0, 0, 0});
    CHECK(out.status == ProveStatus::budget_exhausted);
}

TEST_CASE("d=2 closed form inside the search") {
    const PrimeField f(kDefaultPrime);
    Prover prover(f, 3);
    const ProveOutcome one = prover.prove({4, 2, 1, 0, 0, 0});
    REQUIRE(one.proved());
    CHECK(one.certificate->method == CertMethod::closed_form_d2);
    // subabundant but false: s >= 2 quadric statements are never true
    const ProveOutcome two = prover.prove({6, 2, 2, 0, 0, 0});
    CHECK(two.status == ProveStatus::unprovable);
}

TEST_CASE("extend_n chains the induction and cross-checks directly") {
    const PrimeField f(kDefaultPrime);
    Prover prover(f, 321);
    const ProveOutcome out = prover.extend_n(3, 3, 2, 6);
    REQUIRE(out.proved());
    CHECK(out.certificate->statement == Statement{6, 3, 2, 0, 0, 0});
    CHECK(verify_certificate(*out.certificate).ok);

    // every derived statement re-certifies by direct rank
    for (int n = 4; n <= 6; ++n) {
        const CheckOutcome direct =
            check_statement({n, 3, 2, 0, 0, 0}, 3, 1000 + n, f);
        CHECK(direct.certified);
    }

    // n_target = n0 returns the base certificate
    Prover base_prover(f, 321);
    const ProveOutcome base = base_prover.extend_n(3, 3, 2, 3);
    REQUIRE(base.proved());
    CHECK(base.certificate->statement == Statement{3, 3, 2, 0, 0, 0});
    CHECK(base.certificate->method == CertMethod::direct);

    // hypothesis failure: 3*(4*3+1) = 39 > C(7,4) = 35
    Prover bad(f, 321);
    CHECK(bad.extend_n(3, 4, 3, 5).status == ProveStatus::hypothesis_failed);
}

TEST_CASE("verify_certificate flags corrupted trees with a node path") {
    const PrimeField f(kDefaultPrime);
    Prover prover(f, 42, BasePolicy{20});
    const ProveOutcome out = prover.prove({4, 3, 2, 0, 0, 0});
    REQUIRE(out.proved());

    // corrupt the middle child's statement
    Certificate broken = *out.certificate;
    Certificate child = *broken.children[1];
    child.statement.s = 1;
    broken.children[1] = std::make_shared<const Certificate>(child);
    const VerifyResult bad = verify_certificate(broken);
    CHECK_FALSE(bad.ok);
    CHECK(bad.path == "tree.children[1]");

    // corrupt a direct leaf's recorded rank
    Certificate broken2 = *out.certificate;
    Certificate leaf = *broken2.children[0];
    REQUIRE(leaf.evidence.has_value());
    leaf.evidence->achieved_rank -= 1;
    leaf.evidence->target -= 1;
    broken2.children[0] = std::make_shared<const Certificate>(leaf);
    const VerifyResult bad2 = verify_certificate(broken2);
    CHECK_FALSE(bad2.ok);
    CHECK(bad2.path == "tree.children[0]");
}

TEST_CASE("soundness: proved statements re-certify directly") {
    const PrimeField f(kDefaultPrime);
    SplitMix64 rng(5);
    int proved = 0;
    int attempts = 0;
    while (proved < 20 && attempts < 500) {
        ++attempts;
        Statement st;
        st.n = 2 + static_cast<int>(rng.next() % 3);
        st.d = 3 + static_cast<int>(rng.next() % 2);
        st.s = static_cast<int>(rng.next() % 3);
        st.t = static_cast<int>(rng.next() % 3);
        st.u = static_cast<int>(rng.next() % 3);
        st.v = static_cast<int>(rng.next() % 3);
        if (!is_subabundant(st)) continue;
        Prover prover(f, rng.next(), BasePolicy{15});  // shallow direct layer
        const ProveOutcome out = prover.prove(st);
        if (!out.proved()) continue;
        ++proved;
        CHECK(verify_certificate(*out.certificate).ok);
        const CheckOutcome direct = check_statement(st, 3, rng.next(), f);
        CHECK(direct.certified);
    }
    CHECK(proved == 20);
}
