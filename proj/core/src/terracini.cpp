#include "chow/terracini.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "chow/rng.hpp"

namespace chow {

namespace {

LinearForm sample_form(SplitMix64& rng, int n, const PrimeField& f) {
    LinearForm l;
    l.coeffs.resize(n + 1);
    for (;;) {
        bool all_zero = true;
        for (int k = 0; k <= n; ++k) {
            l.coeffs[k] = rng.next_mod(f);
            if (l.coeffs[k] != 0) all_zero = false;
        }
        if (!all_zero) return l;  // a zero factor is not a linear form
    }
}

std::vector<LinearForm> sample_tuple(SplitMix64& rng, int count, int n,
                                     const PrimeField& f) {
    std::vector<LinearForm> tuple;
    tuple.reserve(count);
    for (int i = 0; i < count; ++i) tuple.push_back(sample_form(rng, n, f));
    return tuple;
}

// Bases of degrees 0..d for a fixed n.
struct BasisTower {
    std::vector<std::shared_ptr<const MonomialBasis>> by_degree;

    BasisTower(int n, int d) {
        by_degree.reserve(d + 1);
        for (int q = 0; q <= d; ++q) by_degree.push_back(make_basis(n, q));
    }
    const std::shared_ptr<const MonomialBasis>& at(int deg) const {
        return by_degree[deg];
    }
};

// All partial products pi_j (product of every factor except the j-th) of a
// k-tuple, degree k-1 each, via cached prefix and suffix chains.
std::vector<PolyVector> all_partial_products(const std::vector<LinearForm>& tuple,
                                             const BasisTower& tower,
                                             const PrimeField& f) {
    const int k = static_cast<int>(tuple.size());
    const int n = tuple.front().var_bound();
    std::vector<PolyVector> pre(k), suf(k + 2);
    pre[0] = poly_one(n);
    for (int i = 1; i <= k - 1; ++i)
        pre[i] = multiply_by_linear(pre[i - 1], tuple[i - 1], f, tower.at(i));
    suf[k + 1] = poly_one(n);
    for (int i = k; i >= 2; --i)
        suf[i] = multiply_by_linear(suf[i + 1], tuple[i - 1], f, tower.at(k - i + 1));

    std::vector<PolyVector> pi;
    pi.reserve(k);
    for (int j = 1; j <= k; ++j) {
        if (j == 1)
            pi.push_back(suf[2]);
        else if (j == k)
            pi.push_back(pre[k - 1]);
        else
            pi.push_back(multiply(pre[j - 1], suf[j + 1], f, tower.at(k - 1)));
    }
    return pi;
}

// Product of all factors except the first (the only pi needed for t and v
// blocks), degree k-1.
PolyVector first_partial_product(const std::vector<LinearForm>& tuple,
                                 const BasisTower& tower, const PrimeField& f) {
    const int k = static_cast<int>(tuple.size());
    const int n = tuple.front().var_bound();
    PolyVector acc = poly_one(n);
    for (int i = 2; i <= k; ++i)
        acc = multiply_by_linear(acc, tuple[i - 1], f, tower.at(i - 1));
    return acc;
}

void put_poly_row(DenseMatrix& m, std::size_t row, const PolyVector& p) {
    std::uint32_t* dst = m.row_ptr(row);
    std::copy(p.coeffs.begin(), p.coeffs.end(), dst);
}

// Row of p * x_k over the target basis (one degree above p): monomial
// relocation, no arithmetic.
void put_shifted_row(DenseMatrix& m, std::size_t row, const PolyVector& p,
                     int k, const MonomialBasis& target) {
    std::uint32_t* dst = m.row_ptr(row);
    const int n = p.var_bound();
    ExponentVector e(n + 1, 0);
    e[0] = p.degree();
    std::size_t i = 0;
    do {
        if (p.coeffs[i] != 0) {
            e[k] += 1;
            dst[target.index_unchecked(e)] = p.coeffs[i];
            e[k] -= 1;
        }
        ++i;
    } while (next_exponent(e));
}

}  // namespace

DenseMatrix build_statement_matrix(const Statement& st, std::uint64_t seed,
                                   const PrimeField& f) {
    validate_statement(st);
    const int n = st.n, d = st.d;
    const std::uint64_t cols64 = basis_size(n, d);
    const std::uint64_t rows64 = statement_rows(st);
    DenseMatrix m(static_cast<std::size_t>(rows64),
                  static_cast<std::size_t>(cols64));
    if (is_empty_statement(st)) return m;

    BasisTower tower(n, d);
    const MonomialBasis& top = *tower.at(d);
    SplitMix64 rng(seed);
    std::size_t row = 0;

    // s blocks: d-tuples; rows pi_j(f_i) * x_k
    for (int i = 0; i < st.s; ++i) {
        auto tuple = sample_tuple(rng, d, n, f);
        auto pi = all_partial_products(tuple, tower, f);
        for (int j = 0; j < d; ++j)
            for (int k = 0; k <= n; ++k)
                put_shifted_row(m, row++, pi[j], k, top);
    }
    // t blocks: (d+1)-tuples; single row pi_1(f'_i)
    for (int i = 0; i < st.t; ++i) {
        auto tuple = sample_tuple(rng, d + 1, n, f);
        put_poly_row(m, row++, first_partial_product(tuple, tower, f));
    }
    // u blocks: (d+1)-tuples; rows pi_j(f''_i), j = 1..d+1
    for (int i = 0; i < st.u; ++i) {
        auto tuple = sample_tuple(rng, d + 1, n, f);
        auto pi = all_partial_products(tuple, tower, f);
        for (int j = 0; j <= d; ++j) put_poly_row(m, row++, pi[j]);
    }
    // v blocks: d-tuples; rows pi_1(f'''_i) * x_k
    for (int i = 0; i < st.v; ++i) {
        auto tuple = sample_tuple(rng, d, n, f);
        auto p1 = first_partial_product(tuple, tower, f);
        for (int k = 0; k <= n; ++k) put_shifted_row(m, row++, p1, k, top);
    }
    return m;
}

CheckOutcome check_statement(const Statement& st, int trials,
                             std::uint64_t seed, const PrimeField& f) {
    validate_statement(st);
    if (trials < 1) throw std::invalid_argument("check_statement: trials < 1");
    CheckOutcome out;
    out.target = a_value(st);
    out.rows = statement_rows(st);
    out.cols = basis_size(st.n, st.d);
    out.prime = f.modulus();
    out.seed = seed;
    if (is_empty_statement(st)) {
        out.certified = true;  // vacuous: rank 0 = a = 0
        return out;
    }
    if (!is_subabundant(st)) return out;  // impossible, never true

    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t ts = derive_seed(seed, trial);
        const std::uint64_t r = rank(build_statement_matrix(st, ts, f), f);
        out.trials_used = trial + 1;
        if (r > out.achieved_rank || trial == 0) {
            out.achieved_rank = r;
            out.seed = ts;
        }
        if (r == out.target) {
            out.certified = true;
            return out;
        }
    }
    return out;
}

SecantDimResult secant_dimension(int n, int d, int s, int trials,
                                 std::uint64_t seed, const PrimeField& f) {
    if (n < 1 || d < 1 || s < 1)
        throw std::invalid_argument("secant_dimension: need n, d, s >= 1");
    if (trials < 1) throw std::invalid_argument("secant_dimension: trials < 1");
    SecantDimResult res;
    res.n = n;
    res.d = d;
    res.s = s;
    res.prime = f.modulus();
    res.seed = seed;
    res.expected = static_cast<std::int64_t>(expected_dimension(n, d, s));

    const std::uint64_t ambient = basis_size(n, d);
    if (d == 1) {
        // the Chow variety of linear forms is P^n itself, as is every
        // secant of it
        res.dim_lower_bound = n;
        res.nondefective_certified = true;
        res.fills_ambient = true;
        return res;
    }

    const Statement st{n, d, s, 0, 0, 0};
    const std::uint64_t target = std::min(
        static_cast<std::uint64_t>(s) * (static_cast<std::uint64_t>(d) * n + 1),
        ambient);
    std::uint64_t best = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t ts = derive_seed(seed, trial);
        const std::uint64_t r = rank(build_statement_matrix(st, ts, f), f);
        res.trials_used = trial + 1;
        if (r > best || trial == 0) {
            best = r;
            res.seed = ts;
        }
        if (best == target) break;
    }
    res.dim_lower_bound = static_cast<std::int64_t>(best) - 1;
    res.nondefective_certified = res.dim_lower_bound == res.expected;
    res.fills_ambient =
        res.dim_lower_bound == static_cast<std::int64_t>(ambient) - 1;
    return res;
}

std::uint64_t expected_dimension(int n, int d, int s) {
    if (n < 1 || d < 1 || s < 1)
        throw std::invalid_argument("expected_dimension: need n, d, s >= 1");
    const std::uint64_t span =
        static_cast<std::uint64_t>(s) * (static_cast<std::uint64_t>(d) * n + 1);
    return std::min(span, basis_size(n, d)) - 1;
}

std::uint64_t d2_span_dim(int n, int s) {
    if (n < 1 || s < 1)
        throw std::invalid_argument("d2_span_dim: need n, s >= 1");
    const std::uint64_t full = basis_size(n, 2);
    if (2 * static_cast<std::uint64_t>(s) > static_cast<std::uint64_t>(n))
        return full;  // 2s generic linear forms span R_1
    const std::uint64_t k = static_cast<std::uint64_t>(n) + 2 - 2 * s;
    return full - binomial_checked(k, 2);
}

std::uint64_t d2_dimension(int n, int s) { return d2_span_dim(n, s) - 1; }

}  // namespace chow
