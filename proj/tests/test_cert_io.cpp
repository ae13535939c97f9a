#include <doctest.h>

#include <cstdio>

#include "chow/cert_io.hpp"
#include "chow/prover.hpp"

using namespace chow;

namespace {

CertificateFile sample_file() {
    const PrimeField f(kDefaultPrime);
    Prover prover(f, 42, BasePolicy{20});
    const ProveOutcome out = prover.prove({4, 3, 2, 0, 0, 0});
    REQUIRE(out.proved());
    return CertificateFile{1, kDefaultPrime, 42, out.certificate};
}

}  // namespace

TEST_CASE("certificate JSON round trip") {
    const CertificateFile file = sample_file();
    const std::string text = certificate_to_json(file);

    // primes and seeds are decimal strings in the file
    CHECK(text.find("\"prime\": \"2147483647\"") != std::string::npos);
    CHECK(text.find("\"root_seed\": \"42\"") != std::string::npos);
    CHECK(text.find("\"seed\": \"") != std::string::npos);

    const CertificateFile parsed = certificate_from_json(text);
    CHECK(parsed.version == 1);
    CHECK(parsed.prime == file.prime);
    CHECK(parsed.root_seed == file.root_seed);
    CHECK(certificate_to_json(parsed) == text);
    CHECK(verify_certificate(*parsed.tree).ok);
}

TEST_CASE("certificate file save/load") {
    const CertificateFile file = sample_file();
    const std::string path = "cert_roundtrip_test.json";
    save_certificate(path, file);
    const CertificateFile loaded = load_certificate(path);
    CHECK(certificate_to_json(loaded) == certificate_to_json(file));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_certificate("does_not_exist.json"),
                    std::runtime_error);
}

TEST_CASE("malformed certificates are rejected") {
    CHECK_THROWS_AS(certificate_from_json("{"), std::runtime_error);
    CHECK_THROWS_AS(certificate_from_json("{}"), std::runtime_error);

    const char* bad_version =
        R"({"version":9,"prime":"2147483647","root_seed":"1",
            "statement":[3,1,0,0,0,0],
            "tree":{"statement":[3,1,0,0,0,0],"method":"TrivialD1","children":[]}})";
    CHECK_THROWS_AS(certificate_from_json(bad_version), std::runtime_error);

    const char* bad_method =
        R"({"version":1,"prime":"2147483647","root_seed":"1",
            "statement":[3,1,0,0,0,0],
            "tree":{"statement":[3,1,0,0,0,0],"method":"Blorp","children":[]}})";
    CHECK_THROWS_AS(certificate_from_json(bad_method), std::runtime_error);

    // top-level statement must agree with the tree root
    const char* bad_root =
        R"({"version":1,"prime":"2147483647","root_seed":"1",
            "statement":[5,1,0,0,0,0],
            "tree":{"statement":[3,1,0,0,0,0],"method":"TrivialD1","children":[]}})";
    CHECK_THROWS_AS(certificate_from_json(bad_root), std::runtime_error);

    // a compact well-formed trivial certificate parses and verifies
    const char* good =
        R"({"version":1,"prime":"2147483647","root_seed":"1",
            "statement":[3,1,0,0,0,0],
            "tree":{"statement":[3,1,0,0,0,0],"method":"TrivialD1","children":[]}})";
    const CertificateFile parsed = certificate_from_json(good);
    CHECK(verify_certificate(*parsed.tree).ok);
}

TEST_CASE("corrupted evidence fails verification with the node path") {
    const CertificateFile file = sample_file();
    std::string text = certificate_to_json(file);
    const auto pos = text.find("\"rank\": 20");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 10, "\"rank\": 19");
    const CertificateFile tampered = certificate_from_json(text);
    const VerifyResult r = verify_certificate(*tampered.tree);
    CHECK_FALSE(r.ok);
    CHECK(r.path == "tree.children[0]");
}
