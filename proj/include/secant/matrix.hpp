#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "secant/gf_poly.hpp"

namespace secant {

/// Row-major dense matrix with entries in [0, p).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows)
        , cols_(cols)
        , data_(rows * cols, 0)
    {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint32_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const std::uint32_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    /// Throws Error(InvalidArgument) if the width differs from cols().
    void append_row(std::span<const std::uint32_t> values);

    /// Rows of `top` followed by rows of `bottom`; widths must agree.
    static Matrix stack(const Matrix& top, const Matrix& bottom);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, const PrimeField& field);

/// Exact rank over the field; 0 for empty matrices.
std::size_t rank(Matrix m, const PrimeField& field);

/// Rows form a basis of {v : m v = 0}.
Matrix right_kernel(const Matrix& m, const PrimeField& field);

/// a * b^T
Matrix multiply_transposed(const Matrix& a, const Matrix& b, const PrimeField& field);

/// dim(rowspace(a) cap rowspace(b)), computed as rank(a) - rank(a K^T) where
/// the rows of K span the right kernel of b.
std::size_t row_space_intersection_dim(const Matrix& a, const Matrix& b, const PrimeField& field);

}  // namespace secant
