#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "chow/prime_field.hpp"

namespace chow {

// Exponent vector (e_0,...,e_n) of a monomial x_0^{e_0}...x_n^{e_n}.
using ExponentVector = std::vector<int>;

// Binomial coefficient by the multiplicative formula with exact division;
// throws std::overflow_error instead of wrapping.
std::uint64_t binomial_checked(std::uint64_t a, std::uint64_t b);

// min(C(a,b), cap) without ever overflowing.
std::uint64_t binomial_capped(std::uint64_t a, std::uint64_t b,
                              std::uint64_t cap);

// C(n+d, d), the dimension of the space of degree-d forms in x_0..x_n.
std::uint64_t basis_size(int n, int d);

// Indexed basis of the degree-d monomials in x_0..x_n, ordered graded-lex
// descending on the exponent vector; for n=2, d=2 the order is
// (2,0,0),(1,1,0),(1,0,1),(0,2,0),(0,1,1),(0,0,2) at indices 0..5.
class MonomialBasis {
public:
    MonomialBasis(int n, int d);

    int var_bound() const { return n_; }  // variables are x_0..x_n
    int degree() const { return d_; }
    std::size_t size() const { return size_; }

    std::size_t index_of(const ExponentVector& e) const;
    ExponentVector exp_of(std::size_t i) const;

    // Rank without input validation; e must have length n+1, entries >= 0,
    // sum equal to the basis degree.
    std::size_t index_unchecked(const ExponentVector& e) const;

private:
    std::uint64_t pascal(int m, int k) const { return pascal_[m * (n_ + 2) + k]; }

    int n_;
    int d_;
    std::size_t size_;
    std::vector<std::uint64_t> pascal_;  // C(m,k), m <= n+d+1, k <= n+1
};

std::shared_ptr<const MonomialBasis> make_basis(int n, int d);

// Advance e to its successor in the basis order; false after the last one.
bool next_exponent(ExponentVector& e);

struct LinearForm {
    std::vector<std::uint32_t> coeffs;  // coeffs[k] is the coefficient of x_k
    int var_bound() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Dense coefficient vector of a form over a monomial basis.
struct PolyVector {
    std::shared_ptr<const MonomialBasis> basis;
    std::vector<std::uint32_t> coeffs;

    int var_bound() const { return basis->var_bound(); }
    int degree() const { return basis->degree(); }
};

PolyVector poly_one(int n);
PolyVector poly_from_linear(const LinearForm& l);

// p * l, one degree up. `target`, when given, must be the basis of
// (p.var_bound, p.degree+1); otherwise it is constructed.
PolyVector multiply_by_linear(const PolyVector& p, const LinearForm& l,
                              const PrimeField& f,
                              std::shared_ptr<const MonomialBasis> target = nullptr);

// General product, used for the prefix*suffix combination of partial
// products.
PolyVector multiply(const PolyVector& p, const PolyVector& q,
                    const PrimeField& f,
                    std::shared_ptr<const MonomialBasis> target = nullptr);

// Product of the given linear forms over the target basis; the number of
// factors must equal the target degree. Built by iterated
// multiply_by_linear.
PolyVector expand_product(const std::vector<LinearForm>& forms,
                          std::shared_ptr<const MonomialBasis> target,
                          const PrimeField& f);

}  // namespace chow
