#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zkhom/field.hpp"

namespace zkhom {

/// Dense row-major matrix over a Field.
class FieldMatrix {
public:
    FieldMatrix(Field field, std::size_t rows, std::size_t cols);
    /// Integer entries given row by row; all rows must have equal length.
    FieldMatrix(Field field, const std::vector<std::vector<long long>>& rows);

    static FieldMatrix identity(Field field, std::size_t n);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    FieldMatrix transpose() const;
    FieldMatrix permuted(const std::vector<std::size_t>& row_order, const std::vector<std::size_t>& col_order) const;

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

/// Rank by exact Gaussian elimination. Row updates below each pivot run
/// in an OpenMP parallel loop over typed storage (GMP rationals or word residues).
std::size_t field_rank(const FieldMatrix& m);

/// Reference rank: textbook single-threaded elimination on Scalar values.
std::size_t field_rank_serial(const FieldMatrix& m);

} // namespace zkhom
