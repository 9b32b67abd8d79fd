#include "zkhom/field_matrix.hpp"

#include <cstdint>
#include <sstream>
#include <utility>

#include "zkhom/error.hpp"

namespace zkhom {

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field))
{
}

FieldMatrix::FieldMatrix(Field field, const std::vector<std::vector<long long>>& rows)
    : field_(field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size())
{
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw InvalidArgumentError("ragged matrix literal");
        for (long long v : row)
            entries_.emplace_back(field, v);
    }
}

FieldMatrix FieldMatrix::identity(Field field, std::size_t n)
{
    FieldMatrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        out(i, i) = Scalar::one(field);
    return out;
}

bool FieldMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

FieldMatrix FieldMatrix::transpose() const
{
    FieldMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

FieldMatrix FieldMatrix::permuted(const std::vector<std::size_t>& row_order, const std::vector<std::size_t>& col_order) const
{
    if (row_order.size() != rows_ || col_order.size() != cols_)
        throw InvalidArgumentError("permutation size does not match matrix shape");
    FieldMatrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(i, j) = (*this)(row_order[i], col_order[j]);
    return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b)
{
    if (!(a.field_ == b.field_))
        throw DomainMismatchError("matrix product across fields");
    if (a.cols_ != b.rows_)
        throw InvalidArgumentError("matrix product shape mismatch");
    FieldMatrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const Scalar& ail = a(i, l);
            if (ail.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += ail * b(l, j);
        }
    return out;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InvalidArgumentError("matrix sum shape mismatch");
    FieldMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i)
        out.entries_[i] += b.entries_[i];
    return out;
}

std::string FieldMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

struct RationalOps {
    static bool is_zero(const Rational& x) { return x == 0; }
    // row[j] -= factor * pivot_row[j]
    static Rational factor(const Rational& entry, const Rational& pivot) { return entry / pivot; }
    static void axpy(Rational& target, const Rational& factor, const Rational& source) { target -= factor * source; }
};

struct ModPOps {
    std::uint64_t p;
    bool is_zero(std::uint32_t x) const { return x == 0; }
    std::uint32_t inverse(std::uint32_t x) const
    {
        std::uint64_t result = 1;
        std::uint64_t base = x;
        std::uint64_t exp = p - 2;
        while (exp > 0) {
            if (exp & 1U)
                result = result * base % p;
            base = base * base % p;
            exp >>= 1U;
        }
        return static_cast<std::uint32_t>(result);
    }
    std::uint32_t factor(std::uint32_t entry, std::uint32_t pivot) const { return static_cast<std::uint32_t>(std::uint64_t{entry} * inverse(pivot) % p); }
    void axpy(std::uint32_t& target, std::uint32_t factor, std::uint32_t source) const
    {
        const std::uint64_t sub = std::uint64_t{factor} * source % p;
        target = static_cast<std::uint32_t>((target + p - sub) % p);
    }
};

// Forward elimination on a dense row-major buffer; returns the rank.
template <class Elem, class Ops>
std::size_t eliminate(std::vector<Elem>& a, std::size_t rows, std::size_t cols, const Ops& ops)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (!ops.is_zero(a[r * cols + c])) {
                pivot = r;
                break;
            }
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(a[pivot * cols + j], a[rank * cols + j]);

        const std::size_t top = rank;
        const auto n_rows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 8)
        for (std::ptrdiff_t rr = static_cast<std::ptrdiff_t>(top) + 1; rr < n_rows; ++rr) {
            const auto r = static_cast<std::size_t>(rr);
            if (ops.is_zero(a[r * cols + c]))
                continue;
            const Elem f = ops.factor(a[r * cols + c], a[top * cols + c]);
            for (std::size_t j = c; j < cols; ++j)
                ops.axpy(a[r * cols + j], f, a[top * cols + j]);
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t field_rank(const FieldMatrix& m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (m.field().is_rational()) {
        std::vector<Rational> a;
        a.reserve(rows * cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                a.push_back(m(i, j).rational());
        return eliminate(a, rows, cols, RationalOps{});
    }
    std::vector<std::uint32_t> a;
    a.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a.push_back(m(i, j).residue());
    return eliminate(a, rows, cols, ModPOps{m.field().modulus()});
}

std::size_t field_rank_serial(const FieldMatrix& m)
{
    FieldMatrix a = m;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a(pivot, c).is_zero())
            ++pivot;
        if (pivot == a.rows())
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            std::swap(a(pivot, j), a(rank, j));
        const Scalar inv = a(rank, c).inverse();
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            if (a(r, c).is_zero())
                continue;
            const Scalar f = a(r, c) * inv;
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(r, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace zkhom
