#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chow/statement.hpp"
#include "chow/terracini.hpp"

namespace chow {

// How a statement's truth was established.
enum class CertMethod {
    direct,          // rank certificate (replayable evidence attached)
    split,           // splitting induction, three children
    lemma_f,         // transfer A(n,d,s,0,0,0) -> A(n,d-1,0,0,s,0), one child
    closed_form_d2,  // d = 2 closed form
    trivial_d1,      // d <= 1: subabundance already forces truth
    trivial_empty,   // no blocks at all
};

const char* to_string(CertMethod m);
std::optional<CertMethod> cert_method_from_string(const std::string& name);

// A decomposition s = s'+s'', t = t'+t'', u = u'+u'', v = v'+v'' feeding
// the splitting rule; index 0 is the primed part.
struct Splitting {
    std::array<int, 2> s{0, 0};
    std::array<int, 2> t{0, 0};
    std::array<int, 2> u{0, 0};
    std::array<int, 2> v{0, 0};

    friend bool operator==(const Splitting&, const Splitting&) = default;
};

// The three child statements of the splitting rule, in order:
//   (n-1, d,   s'', t''+u', u'', s'+v'')
//   (n-1, d-1, s',  t'+v'', s''+u', v')
//   (n-1, d-2, 0,   v',     s',     0)
// Requires n >= 2, d >= 3 and splitting sums matching st.
std::array<Statement, 3> split_children(const Statement& st, const Splitting& sp);

// If A(n,d,s,0,0,0) is true and subabundant then so is A(n,d-1,0,0,s,0).
// Requires d >= 2 and t = u = v = 0; returns the consequence statement.
Statement lemma_f_consequence(const Statement& st);

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

// Proof tree: leaves are trivial facts, closed forms, or recorded modular
// rank computations; internal nodes apply the splitting rule or the
// transfer lemma. Subtrees may be shared.
struct Certificate {
    Statement statement;
    CertMethod method = CertMethod::trivial_empty;
    std::optional<Splitting> splitting;   // split nodes
    std::vector<CertPtr> children;        // 3 for split, 1 for lemma_f
    std::optional<CheckOutcome> evidence; // direct leaves
};

}  // namespace chow
