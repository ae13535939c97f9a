#include "chow/monomials.hpp"

#include <numeric>
#include <stdexcept>

namespace chow {

std::uint64_t binomial_checked(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        std::uint64_t hi;
        if (__builtin_mul_overflow(r, a - b + i, &hi))
            throw std::overflow_error("binomial coefficient overflows 64 bits");
        r = hi / i;  // exact: hi = C(a-b+i-1, i-1) * (a-b+i)
    }
    return r;
}

std::uint64_t binomial_capped(std::uint64_t a, std::uint64_t b,
                              std::uint64_t cap) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        std::uint64_t hi;
        // intermediates C(a-b+i, i) are nondecreasing in i, so any
        // overflow or cap crossing already decides the comparison
        if (__builtin_mul_overflow(r, a - b + i, &hi)) return cap;
        r = hi / i;
        if (r >= cap) return cap;
    }
    return r < cap ? r : cap;
}

std::uint64_t basis_size(int n, int d) {
    if (n < 0 || d < 0)
        throw std::invalid_argument("basis_size: n and d must be nonnegative");
    return binomial_checked(static_cast<std::uint64_t>(n) + d, d);
}

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
    if (n < 0 || d < 0)
        throw std::invalid_argument("monomial basis: n and d must be nonnegative");
    std::uint64_t sz = basis_size(n, d);
    if (sz > static_cast<std::uint64_t>(SIZE_MAX))
        throw std::overflow_error("monomial basis: size exceeds addressable range");
    size_ = static_cast<std::size_t>(sz);

    // Saturating Pascal triangle; saturated entries are never consulted by
    // rank/unrank on valid inputs (every summand is bounded by the index).
    const int rows = n + d + 2;
    const int cols = n + 2;
    pascal_.assign(static_cast<std::size_t>(rows) * cols, 0);
    for (int m = 0; m < rows; ++m) {
        pascal_[m * cols + 0] = 1;
        if (m == 0) continue;
        for (int k = 1; k < cols; ++k) {
            const std::uint64_t up = pascal_[(m - 1) * cols + k];
            const std::uint64_t upleft = pascal_[(m - 1) * cols + k - 1];
            std::uint64_t sum;
            pascal_[m * cols + k] =
                __builtin_add_overflow(up, upleft, &sum) ? UINT64_MAX : sum;
        }
    }
}

std::size_t MonomialBasis::index_unchecked(const ExponentVector& e) const {
    std::size_t idx = 0;
    int deg = d_;
    for (int q = 0; q < n_; ++q) {
        const int a = e[q];
        const int vl = n_ - q;  // variables after position q
        if (a < deg)
            idx += static_cast<std::size_t>(pascal(deg - a - 1 + vl, vl));
        deg -= a;
    }
    return idx;
}

std::size_t MonomialBasis::index_of(const ExponentVector& e) const {
    if (static_cast<int>(e.size()) != n_ + 1)
        throw std::invalid_argument("index_of: exponent vector has wrong length");
    int sum = 0;
    for (int x : e) {
        if (x < 0)
            throw std::invalid_argument("index_of: negative exponent");
        sum += x;
    }
    if (sum != d_)
        throw std::invalid_argument("index_of: exponent vector has wrong degree");
    return index_unchecked(e);
}

ExponentVector MonomialBasis::exp_of(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("exp_of: index out of range");
    ExponentVector e(n_ + 1, 0);
    int deg = d_;
    std::uint64_t rem = i;
    for (int q = 0; q < n_; ++q) {
        const int vl = n_ - q;
        for (int a = deg; a >= 0; --a) {
            const std::uint64_t cnt = pascal(deg - a + vl - 1, vl - 1);
            if (rem < cnt) {
                e[q] = a;
                deg -= a;
                break;
            }
            rem -= cnt;
        }
    }
    e[n_] = deg;
    return e;
}

std::shared_ptr<const MonomialBasis> make_basis(int n, int d) {
    return std::make_shared<const MonomialBasis>(n, d);
}

bool next_exponent(ExponentVector& e) {
    const int n = static_cast<int>(e.size()) - 1;
    int j = n - 1;
    while (j >= 0 && e[j] == 0) --j;
    if (j < 0) return false;
    const int rem = e[n] + 1;
    e[j] -= 1;
    e[j + 1] = rem;
    for (int i = j + 2; i <= n; ++i) e[i] = 0;
    return true;
}

PolyVector poly_one(int n) {
    return PolyVector{make_basis(n, 0), {1}};
}

PolyVector poly_from_linear(const LinearForm& l) {
    // the degree-1 basis order is x_0, x_1, ..., x_n
    return PolyVector{make_basis(l.var_bound(), 1), l.coeffs};
}

PolyVector multiply_by_linear(const PolyVector& p, const LinearForm& l,
                              const PrimeField& f,
                              std::shared_ptr<const MonomialBasis> target) {
    const int n = p.var_bound();
    if (l.var_bound() != n)
        throw std::invalid_argument("multiply_by_linear: mismatched variable count");
    if (!target) target = make_basis(n, p.degree() + 1);
    if (target->var_bound() != n || target->degree() != p.degree() + 1)
        throw std::invalid_argument("multiply_by_linear: wrong target basis");

    PolyVector out{target, std::vector<std::uint32_t>(target->size(), 0)};
    ExponentVector e(n + 1, 0);
    e[0] = p.degree();
    std::size_t i = 0;
    do {
        const std::uint32_t c = p.coeffs[i];
        if (c != 0) {
            for (int k = 0; k <= n; ++k) {
                if (l.coeffs[k] == 0) continue;
                e[k] += 1;
                const std::size_t idx = target->index_unchecked(e);
                e[k] -= 1;
                out.coeffs[idx] = f.add(out.coeffs[idx], f.mul(c, l.coeffs[k]));
            }
        }
        ++i;
    } while (next_exponent(e));
    return out;
}

PolyVector multiply(const PolyVector& p, const PolyVector& q,
                    const PrimeField& f,
                    std::shared_ptr<const MonomialBasis> target) {
    const int n = p.var_bound();
    if (q.var_bound() != n)
        throw std::invalid_argument("multiply: mismatched variable count");
    const int deg = p.degree() + q.degree();
    if (!target) target = make_basis(n, deg);
    if (target->var_bound() != n || target->degree() != deg)
        throw std::invalid_argument("multiply: wrong target basis");

    PolyVector out{target, std::vector<std::uint32_t>(target->size(), 0)};
    ExponentVector ep(n + 1, 0), sum(n + 1, 0);
    ep[0] = p.degree();
    std::size_t i = 0;
    do {
        const std::uint32_t cp = p.coeffs[i];
        if (cp != 0) {
            ExponentVector eq(n + 1, 0);
            eq[0] = q.degree();
            std::size_t j = 0;
            do {
                const std::uint32_t cq = q.coeffs[j];
                if (cq != 0) {
                    for (int k = 0; k <= n; ++k) sum[k] = ep[k] + eq[k];
                    const std::size_t idx = target->index_unchecked(sum);
                    out.coeffs[idx] = f.add(out.coeffs[idx], f.mul(cp, cq));
                }
                ++j;
            } while (next_exponent(eq));
        }
        ++i;
    } while (next_exponent(ep));
    return out;
}

PolyVector expand_product(const std::vector<LinearForm>& forms,
                          std::shared_ptr<const MonomialBasis> target,
                          const PrimeField& f) {
    if (forms.empty())
        throw std::invalid_argument("expand_product: empty factor list");
    if (!target || target->degree() != static_cast<int>(forms.size()))
        throw std::invalid_argument("expand_product: degree mismatch");
    const int n = target->var_bound();
    if (forms.front().var_bound() != n)
        throw std::invalid_argument("expand_product: mismatched variable count");
    if (forms.size() == 1) return PolyVector{target, forms.front().coeffs};
    PolyVector acc = poly_from_linear(forms.front());
    for (std::size_t i = 1; i < forms.size(); ++i) {
        auto next = static_cast<int>(i) + 1 == static_cast<int>(forms.size())
                        ? target
                        : make_basis(n, static_cast<int>(i) + 1);
        acc = multiply_by_linear(acc, forms[i], f, next);
    }
    return acc;
}

}  // namespace chow
