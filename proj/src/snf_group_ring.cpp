#include "zkhom/snf_group_ring.hpp"

#include <algorithm>
#include <sstream>

#include "zkhom/poly_snf.hpp"

namespace zkhom {

std::string SnfDiagonal::lifts_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < lifts.size(); ++i)
        os << (i ? ", " : "") << lifts[i].to_string();
    os << ']';
    return os.str();
}

SnfDiagonal snf_over_group_ring(const GroupRingMatrix& m, std::uint32_t s)
{
    const GroupOrdering check(m.k(), s); // validates s
    const std::uint32_t k = m.k();
    const Field field = m.field();
    SnfDiagonal out;
    out.rows = m.rows();
    out.cols = m.cols();
    if (m.rows() == 0 || m.cols() == 0)
        return out;

    const Poly modulus = Poly::cyclotomic_modulus(field, k);
    PolyMatrix aug(field, m.rows(), m.cols() + m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j).reexpress(check.generator()).lift();
        aug(i, m.cols() + i) = modulus;
    }
    PolySnf snf = snf_over_polys(std::move(aug));
    // Every invariant factor is nonzero because the augmentation has full row rank.
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < n; ++i) {
        out.lifts.push_back(snf.diagonal[i]);
        out.diagonal.push_back(GroupRingElem::from_poly(snf.diagonal[i], k));
    }
    return out;
}

} // namespace zkhom
