#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chow/prime_field.hpp"

namespace chow {

// Dense row-major matrix of residues mod a word-size prime.
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    std::uint32_t operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    std::uint32_t* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
    const std::uint32_t* row_ptr(std::size_t i) const {
        return data_.data() + i * cols_;
    }

    void swap_rows(std::size_t i, std::size_t j);

    DenseMatrix transposed() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

// Exact rank over F_p by Gaussian elimination with pivot-by-first-nonzero.
// Takes the matrix by value and destroys it. Entries must be reduced mod p.
std::size_t rank(DenseMatrix m, const PrimeField& f);

}  // namespace chow
