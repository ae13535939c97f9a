#include "chow/dense_matrix.hpp"

#include <algorithm>

namespace chow {

void DenseMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap_ranges(row_ptr(i), row_ptr(i) + cols_, row_ptr(j));
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::size_t rank(DenseMatrix m, const PrimeField& f) {
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    const std::uint64_t p = f.modulus();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t pivot = r;
        while (pivot < nrows && m(pivot, c) == 0) ++pivot;
        if (pivot == nrows) continue;
        m.swap_rows(r, pivot);

        // Scale the pivot row so the pivot is 1; rows below then subtract
        // lead * pivot_row with a single Barrett reduction per entry.
        std::uint32_t* pr = m.row_ptr(r);
        const std::uint32_t piv_inv = f.inv(pr[c]);
        pr[c] = 1;
        for (std::size_t j = c + 1; j < ncols; ++j)
            pr[j] = f.mul(pr[j], piv_inv);

        for (std::size_t i = r + 1; i < nrows; ++i) {
            std::uint32_t* ri = m.row_ptr(i);
            const std::uint64_t lead = ri[c];
            if (lead == 0) continue;
            ri[c] = 0;
            const std::uint64_t mneg = p - lead;
            for (std::size_t j = c + 1; j < ncols; ++j) {
                // ri[j] + mneg*pr[j] <= (p-1) + p(p-1) < 2^64 for p < 2^32
                ri[j] = f.reduce(ri[j] + mneg * pr[j]);
            }
        }
        ++r;
    }
    return r;
}

}  // namespace chow
