#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zkhom/action.hpp"
#include "zkhom/field_matrix.hpp"
#include "zkhom/group_ring.hpp"
#include "zkhom/snf_group_ring.hpp"
#include "zkhom/transfer.hpp"

namespace zkhom {

/// A regular action with everything that fixes the compatible ordered bases:
/// the quotient, a lift, an ordering of Z_k and an ordering of the quotient
/// simplices in each dimension.
struct ChainBasis {
    const CyclicAction* action = nullptr;
    QuotientData qd;
    Lift lift;
    GroupOrdering ordering{1};
    ComplexOrdering quotient_order;

    /// Throws RegularityRequiredError for non-regular actions.
    static ChainBasis make(const CyclicAction& action, LiftPolicy policy = LiftPolicy::lex_min,
                           std::uint32_t generator = 1);
    static ChainBasis make(const CyclicAction& action, QuotientData qd, Lift lift, std::uint32_t generator = 1);

    LiftedPartition partition(std::size_t d) const;
    IsotropyTriple triple() const;
};

struct CompatibleOrientations {
    OrientationAssignment x;
    OrientationAssignment quotient;
};

/// Quotient simplices keep increasing label order. Each lift is ordered by
/// the labels of its vertices, and alpha^g carries that ordered tuple to
/// every other simplex in the orbit.
CompatibleOrientations compatible_orientations(const ChainBasis& basis);

/// Boundary matrix of X in the compatible ordered bases. Valid for
/// 1 <= d <= dim X + 1.
FieldMatrix compatible_boundary(const ChainBasis& basis, std::size_t d, Field field);

/// E(i, j) = C(J^{d-1}(i), J^d(j)) for the compatible boundary C and the
/// index-reducing maps J.
FieldMatrix isotropy_expansion(const ChainBasis& basis, std::size_t d, Field field);

/// Quotient boundary (increasing labels, +-1 placed on e) times the transfer
/// matrix, entrywise. Empty orders mean the canonical one.
GroupRingMatrix g_boundary_matrix(const IsotropyTriple& triple, std::size_t d, Field field,
                                  const ComplexOrdering& quotient_order = {});

/// Sum over the SNF diagonal (computed in powers of alpha^generator) of the
/// circulant ranks. 0 for d = 0 and above the top dimension. Throws
/// InvalidGeneratorError when the generator is not coprime to k.
std::size_t compressed_rank(const IsotropyTriple& triple, std::size_t d, Field field, std::uint32_t generator = 1,
                            const ComplexOrdering& quotient_order = {});

struct DimensionReport {
    std::size_t d = 0;
    std::size_t dim_chains = 0;
    std::size_t rank = 0;
    SnfDiagonal snf;
};

struct CompressedResult {
    Field field = Field::rationals();
    std::uint32_t generator = 1;
    std::vector<DimensionReport> per_dim;
    std::vector<std::size_t> betti;
};

/// Betti numbers of X from the triple alone. dim C_d = sum_b k / |S(psi_b)|.
/// Dimensions are processed in parallel.
CompressedResult compressed_betti(const IsotropyTriple& triple, Field field, std::uint32_t generator = 1,
                                  const ComplexOrdering& quotient_order = {});

struct LemmaCheck {
    bool ok = true;
    std::string detail;
};

/// Compares the isotropy expansion with rho_extend of the G-boundary matrix
/// entry by entry, and checks that an entry is nonzero exactly when
/// g_c l(omega_a) is a face of g_c' l(psi_b).
LemmaCheck verify_expansion_lemma(const ChainBasis& basis, std::size_t d, Field field);

} // namespace zkhom
