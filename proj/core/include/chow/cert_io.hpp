#pragma once

#include <cstdint>
#include <string>

#include "chow/certificate.hpp"

namespace chow {

// Stable, versioned certificate file format (JSON):
//   {version, prime, root_seed, statement:[n,d,s,t,u,v], tree}
// with tree nodes
//   {statement, method, splitting?, children[], evidence?}
// and evidence {seed, prime, rank, rows, cols, trials_used}. Primes and
// seeds are decimal strings so 64-bit values survive JSON readers that
// parse numbers as doubles; everything else is a plain JSON number.
struct CertificateFile {
    int version = 1;
    std::uint32_t prime = 0;
    std::uint64_t root_seed = 0;
    CertPtr tree;
};

std::string certificate_to_json(const CertificateFile& file, int indent = 2);

// Throws std::runtime_error on malformed input or unsupported version.
CertificateFile certificate_from_json(const std::string& text);

void save_certificate(const std::string& path, const CertificateFile& file);
CertificateFile load_certificate(const std::string& path);

}  // namespace chow
