#include "secant/matrix.hpp"

#include <algorithm>

#include "secant/error.hpp"

namespace secant {

void Matrix::append_row(std::span<const std::uint32_t> values)
{
    if (values.size() != cols_)
        throw Error(ErrorCode::InvalidArgument, "row width does not match matrix");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::stack(const Matrix& top, const Matrix& bottom)
{
    if (top.cols_ != bottom.cols_)
        throw Error(ErrorCode::InvalidArgument, "cannot stack matrices of different widths");
    Matrix out = top;
    out.data_.insert(out.data_.end(), bottom.data_.begin(), bottom.data_.end());
    out.rows_ += bottom.rows_;
    return out;
}

std::vector<std::size_t> row_reduce(Matrix& m, const PrimeField& field)
{
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t next = 0;
    for (std::size_t col = 0; col < cols && next < rows; ++col) {
        std::size_t pivot = next;
        while (pivot < rows && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != next)
            std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(next).begin());

        auto prow = m.row(next);
        const std::uint32_t scale = field.inv(prow[col]);
        for (std::size_t j = col; j < cols; ++j)
            prow[j] = field.mul(prow[j], scale);

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == next)
                continue;
            auto row = m.row(i);
            const std::uint32_t factor = row[col];
            if (factor == 0)
                continue;
            for (std::size_t j = col; j < cols; ++j) {
                if (prow[j])
                    row[j] = field.sub(row[j], field.mul(factor, prow[j]));
            }
        }
        pivots.push_back(col);
        ++next;
    }
    return pivots;
}

std::size_t rank(Matrix m, const PrimeField& field)
{
    return row_reduce(m, field).size();
}

Matrix right_kernel(const Matrix& m, const PrimeField& field)
{
    Matrix reduced = m;
    const auto pivots = row_reduce(reduced, field);
    const std::size_t cols = m.cols();

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    Matrix kernel(0, cols);
    std::vector<std::uint32_t> v(cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::ranges::fill(v, 0u);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = field.neg(reduced.at(i, free));
        kernel.append_row(v);
    }
    return kernel;
}

Matrix multiply_transposed(const Matrix& a, const Matrix& b, const PrimeField& field)
{
    if (a.cols() != b.cols())
        throw Error(ErrorCode::InvalidArgument, "inner dimensions differ");
    const std::uint64_t p = field.modulus();
    Matrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto ar = a.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const auto br = b.row(j);
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc = (acc + static_cast<std::uint64_t>(ar[k]) * br[k]) % p;
            out.at(i, j) = static_cast<std::uint32_t>(acc);
        }
    }
    return out;
}

std::size_t row_space_intersection_dim(const Matrix& a, const Matrix& b, const PrimeField& field)
{
    if (a.cols() != b.cols())
        throw Error(ErrorCode::InvalidArgument, "row spaces live in different ambient spaces");
    const Matrix kernel = right_kernel(b, field);
    return rank(a, field) - rank(multiply_transposed(a, kernel, field), field);
}

}  // namespace secant
