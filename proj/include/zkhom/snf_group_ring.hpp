#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zkhom/group_ring.hpp"
#include "zkhom/poly.hpp"

namespace zkhom {

/// Smith normal form diagonal over F Z_k = F[x]/(x^k - 1).
struct SnfDiagonal {
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// Monic divisors of x^k - 1 forming a divisibility chain.
    std::vector<Poly> lifts;
    /// lifts reduced mod x^k - 1, read in powers of alpha^s.
    std::vector<GroupRingElem> diagonal;

    /// "[1, 1, x^2-1]"
    std::string lifts_string() const;
};

/// Invariant factors of [M~ | (x^k - 1) I_m] over F[x], truncated to
/// min(m, n) and reduced. With s != 1 the entries are first rewritten in
/// the basis of powers of alpha^s. Throws InvalidGeneratorError when s is
/// not coprime to k.
SnfDiagonal snf_over_group_ring(const GroupRingMatrix& m, std::uint32_t s = 1);

} // namespace zkhom
