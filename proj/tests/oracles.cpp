#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

std::size_t naive_rank(chow::DenseMatrix m, std::uint64_t p) {
    const std::size_t nrows = m.rows(), ncols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && m(piv, c) == 0) ++piv;
        if (piv == nrows) continue;
        m.swap_rows(r, piv);
        const std::uint64_t pv = m(r, c);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const std::uint64_t lead = m(i, c);
            if (lead == 0) continue;
            for (std::size_t j = c; j < ncols; ++j) {
                // row_i <- pv*row_i - lead*row_r, no normalization
                const std::uint64_t x = mulmod(pv, m(i, j), p);
                const std::uint64_t y = mulmod(lead, m(r, j), p);
                m(i, j) = static_cast<std::uint32_t>((x + p - y) % p);
            }
        }
        ++r;
    }
    return r;
}

ExpMap expmap_of(const chow::PolyVector& p) {
    ExpMap out;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        if (p.coeffs[i] != 0) out[p.basis->exp_of(i)] = p.coeffs[i];
    return out;
}

ExpMap naive_multiply(const ExpMap& a, const ExpMap& b, std::uint64_t p) {
    ExpMap out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out[e] = (out[e] + mulmod(ca, cb, p)) % p;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

bool expmap_equals_poly(const ExpMap& m, const chow::PolyVector& p) {
    ExpMap got = expmap_of(p);
    return got == m;
}

namespace {

struct Frac {
    long long num = 0;
    long long den = 1;
};

Frac reduce(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational oracle: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
        throw std::overflow_error("rational oracle: entry too large");
    return Frac{static_cast<long long>(n), static_cast<long long>(d)};
}

Frac sub_mul(const Frac& a, const Frac& m, const Frac& b) {
    // a - m*b
    const __int128 num = static_cast<__int128>(a.num) * m.den * b.den -
                         static_cast<__int128>(m.num) * b.num * a.den;
    const __int128 den =
        static_cast<__int128>(a.den) * m.den * b.den;
    return reduce(num, den);
}

Frac div(const Frac& a, const Frac& b) {
    return reduce(static_cast<__int128>(a.num) * b.den,
                  static_cast<__int128>(a.den) * b.num);
}

}  // namespace

std::size_t rational_rank(std::vector<std::vector<long long>> rows) {
    if (rows.empty()) return 0;
    const std::size_t nrows = rows.size(), ncols = rows.front().size();
    std::vector<std::vector<Frac>> m(nrows, std::vector<Frac>(ncols));
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m[i][j] = Frac{rows[i][j], 1};

    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && m[piv][c].num == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            if (m[i][c].num == 0) continue;
            const Frac mult = div(m[i][c], m[r][c]);
            for (std::size_t j = c; j < ncols; ++j)
                m[i][j] = sub_mul(m[i][j], mult, m[r][j]);
        }
        ++r;
    }
    return r;
}

namespace {

// Everything below mirrors the clause text directly with integer
// arithmetic scaled by 18.
long long s1x18(long long d) {
    switch (d % 6) {
        case 0: return d * d + 3 * d + 18;
        case 1: return d * d + 4 * d - 5;
        case 2: return d * d + 5 * d + 4;
        case 3: return d * d + 3 * d;
        case 4: return d * d + 4 * d + 4;
        default: return d * d + 5 * d + 4;
    }
}

long long s2x18(long long d) {
    switch (d % 6) {
        case 0: return d * d + 6 * d + 18;
        case 1: return d * d + 7 * d + 28;
        case 2: return d * d + 8 * d + 16;
        case 3: return d * d + 6 * d + 9;
        case 4: return d * d + 7 * d + 10;
        default: return d * d + 8 * d + 7;
    }
}

unsigned __int128 comb128(int a, int b) {
    if (b < 0 || b > a) return 0;
    unsigned __int128 r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<unsigned>(a - b + i) / i;
    return r;
}

bool fills(int s, int d, int n) {
    const unsigned __int128 need =
        static_cast<unsigned __int128>(s) *
        (static_cast<unsigned __int128>(d) * n + 1);
    return need <= comb128(n + d, d);
}

int first_filling_n(int s, int d) {
    for (int n = 1;; ++n)
        if (fills(s, d, n)) return n;
}

}  // namespace

std::vector<BruteCase> brute_cases(int s) {
    std::set<BruteCase> out;
    // clause i
    {
        int lo = 3;
        while (!(18ll * s < s2x18(lo))) ++lo;
        const int hi = first_filling_n(s, 3);
        for (int n = lo; n <= hi; ++n) out.insert(BruteCase{n, 3, "i"});
    }
    // clause ii
    {
        int dmax = 0;
        for (int d = 4; d * d <= 18 * s + 20; ++d)
            if (18ll * s >= s2x18(d)) dmax = d;
        for (int d = 4; d <= dmax; ++d) {
            const int hi = first_filling_n(s, d);
            for (int n = 4; n <= hi; ++n)
                out.insert(BruteCase{n, d, "ii"});
        }
    }
    // clause iii
    {
        int dlo = 3;
        while (!(18ll * s < s2x18(dlo))) ++dlo;
        int dhi = 0;
        for (int d = 3; d * d <= 18 * s + 20; ++d)
            if (18ll * s > s1x18(d)) dhi = d;
        for (int d = dlo; d <= dhi; ++d) {
            const int hi = first_filling_n(s, d);
            for (int n = 3; n <= hi; ++n)
                out.insert(BruteCase{n, d, "iii"});
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace oracle
