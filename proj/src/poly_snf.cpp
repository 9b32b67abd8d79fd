#include "zkhom/poly_snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "zkhom/error.hpp"

namespace zkhom {

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Poly(field))
{
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw InvalidArgumentError("polynomial matrix product shape mismatch");
    PolyMatrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            if (a(i, l).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += a(i, l) * b(l, j);
        }
    return out;
}

PolyMatrix PolySnf::as_matrix(Field field) const
{
    PolyMatrix out(field, rows, cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i)
        out(i, i) = diagonal[i];
    return out;
}

namespace {

class Reducer {
public:
    explicit Reducer(PolyMatrix& m) : m_(m) {}

    // Least-degree nonzero entry in the trailing block starting at (t, t).
    std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(std::size_t t) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        std::size_t best_degree = 0;
        for (std::size_t i = t; i < m_.rows(); ++i)
            for (std::size_t j = t; j < m_.cols(); ++j) {
                const auto deg = m_(i, j).degree();
                if (deg && (!best || *deg < best_degree)) {
                    best = {i, j};
                    best_degree = *deg;
                    if (best_degree == 0)
                        return best;
                }
            }
        return best;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < m_.cols(); ++j)
            std::swap(m_(a, j), m_(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < m_.rows(); ++i)
            std::swap(m_(i, a), m_(i, b));
    }

    // row_target -= q * row_source, from column `from` onward.
    void row_axpy(std::size_t target, const Poly& q, std::size_t source, std::size_t from)
    {
        for (std::size_t j = from; j < m_.cols(); ++j)
            if (!m_(source, j).is_zero())
                m_(target, j) -= q * m_(source, j);
    }

    void col_axpy(std::size_t target, const Poly& q, std::size_t source, std::size_t from)
    {
        for (std::size_t i = from; i < m_.rows(); ++i)
            if (!m_(i, source).is_zero())
                m_(i, target) -= q * m_(i, source);
    }

    // Clears row t and column t outside the pivot. Returns false when a
    // nonzero remainder appeared, i.e. a smaller-degree pivot is available.
    bool clear_pivot_cross(std::size_t t)
    {
        bool clean = true;
        for (std::size_t i = t + 1; i < m_.rows(); ++i) {
            if (m_(i, t).is_zero())
                continue;
            auto [q, r] = divmod(m_(i, t), m_(t, t));
            row_axpy(i, q, t, t);
            if (!r.is_zero())
                clean = false;
        }
        for (std::size_t j = t + 1; j < m_.cols(); ++j) {
            if (m_(t, j).is_zero())
                continue;
            auto [q, r] = divmod(m_(t, j), m_(t, t));
            col_axpy(j, q, t, t);
            if (!r.is_zero())
                clean = false;
        }
        return clean;
    }

    // Moves the least-degree nonzero entry of row t / column t to (t, t).
    void repivot_on_cross(std::size_t t)
    {
        std::size_t best_i = t;
        std::size_t best_j = t;
        std::size_t best_degree = *m_(t, t).degree();
        for (std::size_t i = t + 1; i < m_.rows(); ++i)
            if (auto d = m_(i, t).degree(); d && *d < best_degree) {
                best_degree = *d;
                best_i = i;
                best_j = t;
            }
        for (std::size_t j = t + 1; j < m_.cols(); ++j)
            if (auto d = m_(t, j).degree(); d && *d < best_degree) {
                best_degree = *d;
                best_i = t;
                best_j = j;
            }
        swap_rows(t, best_i);
        swap_cols(t, best_j);
    }

    // Row index i > t with an entry not divisible by the pivot, if any.
    std::optional<std::size_t> non_divisible_row(std::size_t t) const
    {
        for (std::size_t i = t + 1; i < m_.rows(); ++i)
            for (std::size_t j = t + 1; j < m_.cols(); ++j)
                if (!m_(i, j).is_zero() && !divides(m_(t, t), m_(i, j)))
                    return i;
        return std::nullopt;
    }

private:
    PolyMatrix& m_;
};

} // namespace

PolySnf snf_over_polys(PolyMatrix m)
{
    PolySnf out;
    out.rows = m.rows();
    out.cols = m.cols();
    const std::size_t diag = std::min(m.rows(), m.cols());
    Reducer reducer(m);

    std::size_t t = 0;
    for (; t < diag; ++t) {
        auto pos = reducer.smallest_entry(t);
        if (!pos)
            break;
        reducer.swap_rows(t, pos->first);
        reducer.swap_cols(t, pos->second);
        for (;;) {
            if (!reducer.clear_pivot_cross(t)) {
                reducer.repivot_on_cross(t);
                continue;
            }
            if (auto bad = reducer.non_divisible_row(t)) {
                // Adding the offending row brings a non-multiple into row t.
                for (std::size_t j = t; j < m.cols(); ++j)
                    m(t, j) += m(*bad, j);
                continue;
            }
            break;
        }
    }

    out.diagonal.reserve(diag);
    for (std::size_t i = 0; i < diag; ++i)
        out.diagonal.push_back(i < t ? m(i, i).monic() : Poly(m.field()));
    return out;
}

} // namespace zkhom
