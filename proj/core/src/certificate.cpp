#include "chow/certificate.hpp"

#include <stdexcept>

namespace chow {

const char* to_string(CertMethod m) {
    switch (m) {
        case CertMethod::direct: return "Direct";
        case CertMethod::split: return "Split";
        case CertMethod::lemma_f: return "LemmaF";
        case CertMethod::closed_form_d2: return "ClosedFormD2";
        case CertMethod::trivial_d1: return "TrivialD1";
        case CertMethod::trivial_empty: return "TrivialEmpty";
    }
    return "?";
}

std::optional<CertMethod> cert_method_from_string(const std::string& name) {
    for (CertMethod m : {CertMethod::direct, CertMethod::split,
                         CertMethod::lemma_f, CertMethod::closed_form_d2,
                         CertMethod::trivial_d1, CertMethod::trivial_empty}) {
        if (name == to_string(m)) return m;
    }
    return std::nullopt;
}

std::array<Statement, 3> split_children(const Statement& st, const Splitting& sp) {
    validate_statement(st);
    if (st.n < 2 || st.d < 3)
        throw std::invalid_argument("split_children: requires n >= 2 and d >= 3");
    for (int part : {sp.s[0], sp.s[1], sp.t[0], sp.t[1], sp.u[0], sp.u[1],
                     sp.v[0], sp.v[1]})
        if (part < 0)
            throw std::invalid_argument("split_children: negative splitting part");
    if (sp.s[0] + sp.s[1] != st.s || sp.t[0] + sp.t[1] != st.t ||
        sp.u[0] + sp.u[1] != st.u || sp.v[0] + sp.v[1] != st.v)
        throw std::invalid_argument("split_children: splitting sums do not match");

    return {
        Statement{st.n - 1, st.d, sp.s[1], sp.t[1] + sp.u[0], sp.u[1],
                  sp.s[0] + sp.v[1]},
        Statement{st.n - 1, st.d - 1, sp.s[0], sp.t[0] + sp.v[1],
                  sp.s[1] + sp.u[0], sp.v[0]},
        Statement{st.n - 1, st.d - 2, 0, sp.v[0], sp.s[0], 0},
    };
}

Statement lemma_f_consequence(const Statement& st) {
    validate_statement(st);
    if (st.d < 2 || st.t != 0 || st.u != 0 || st.v != 0)
        throw std::invalid_argument(
            "lemma_f_consequence: statement must be (n,d,s,0,0,0) with d >= 2");
    return Statement{st.n, st.d - 1, 0, 0, st.s, 0};
}

}  // namespace chow
