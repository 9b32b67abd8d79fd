#pragma once

#include <cstddef>
#include <vector>

#include "zkhom/poly.hpp"

namespace zkhom {

/// Dense row-major matrix over F[x].
class PolyMatrix {
public:
    PolyMatrix(Field field, std::size_t rows, std::size_t cols);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Poly> entries_;
};

/// Diagonal of a Smith normal form over F[x]: min(rows, cols) entries,
/// the nonzero ones monic and forming a divisibility chain, zeros last.
struct PolySnf {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Poly> diagonal;

    PolyMatrix as_matrix(Field field) const;
};

/// Classical gcd-driven reduction: move a least-degree entry to the pivot,
/// clear its row and column by Euclidean division, and fold in any row
/// whose entries the pivot fails to divide. Transformations are discarded.
PolySnf snf_over_polys(PolyMatrix m);

} // namespace zkhom
