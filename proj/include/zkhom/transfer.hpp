#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zkhom/action.hpp"
#include "zkhom/group_ring.hpp"

namespace zkhom {

/// A codimension-1 pair of quotient simplices: psi of dimension d, omega of
/// dimension d - 1, both as indices into the quotient.
struct FacePair {
    std::size_t d = 1;
    std::size_t psi = 0;
    std::size_t omega = 0;
    friend auto operator<=>(const FacePair&, const FacePair&) = default;
};

/// The compressed data (X/G, S, T*): everything needed for the homology of X.
struct IsotropyTriple {
    std::uint32_t k = 1;
    Complex quotient;
    /// S[d][a]: isotropy subgroup of the lift of quotient simplex (d, a).
    std::vector<std::vector<Subgroup>> S;
    /// T* on face pairs; pairs that are not faces are absent (empty set).
    std::map<FacePair, ExponentSet> tstar;

    Subgroup isotropy(std::size_t d, std::size_t a) const { return S.at(d).at(a); }
    const ExponentSet& transfer(std::size_t d, std::size_t psi, std::size_t omega) const;
};

/// {g : g l(omega') is a face of l(psi')}, by testing containment for every g.
/// Throws UnknownSimplexError for simplices outside the quotient and
/// DimensionError unless dim psi' = dim omega' + 1.
ExponentSet extended_transfer(const CyclicAction& action, const QuotientData& qd, const Lift& lift, const Simplex& psi,
                              const Simplex& omega);

/// Same set, found through the unique face of l(psi') over omega' and the
/// group elements carrying l(omega') onto it.
ExponentSet extended_transfer_via_face(const CyclicAction& action, const QuotientData& qd, const Lift& lift,
                                       const Simplex& psi, const Simplex& omega);

/// Throws RegularityRequiredError for non-regular actions and
/// ValidationError if the coset invariant fails.
IsotropyTriple build_triple(const CyclicAction& action, const QuotientData& qd, const Lift& lift);
IsotropyTriple build_triple(const CyclicAction& action, LiftPolicy policy = LiftPolicy::lex_min);

/// First violated invariant of a triple (subgroup orders divide k, every
/// face pair carries a coset of S(omega), non-faces carry nothing).
std::optional<std::string> triple_violation(const IsotropyTriple& triple);

/// m x n matrix, rows the (d-1)-simplices and columns the d-simplices of the
/// quotient: entry (a, b) is sigma(T*(psi_b, omega_a)). Empty orders mean
/// the canonical one. Throws DimensionError outside 1..dim + 1.
GroupRingMatrix transfer_matrix(const IsotropyTriple& triple, std::size_t d, Field field,
                                const std::vector<std::size_t>& row_order = {},
                                const std::vector<std::size_t>& col_order = {});

/// 1-based index of the coset g S(omega') among the cosets of S(omega')
/// listed by first appearance along e, alpha, alpha^2, ...
std::size_t coset_map(const IsotropyTriple& triple, const Simplex& omega, Exponent g);

/// How the 2-cells are assembled from the single-valued transfer T.
enum class TwoCellRule {
    /// T(psi2, psi3) T(psi1, psi2) T(psi1, psi3)^-1
    with_inverse,
    /// T(psi2, psi3) T(psi1, psi2) T(psi1, psi3), read literally
    literal,
};

/// Complex of groups over the quotient together with its morphism to the
/// constant Z_k-valued complex of groups. The group at psi is S(psi); since
/// Z_k is abelian every f map is an inclusion.
class ComplexOfGroups {
public:
    /// T(psi', omega') is the inverse of the least exponent in T*(psi', omega').
    static ComplexOfGroups build(const IsotropyTriple& triple, TwoCellRule rule = TwoCellRule::with_inverse);

    std::uint32_t k() const { return k_; }
    const Complex& base() const { return base_; }
    Subgroup group(const Simplex& psi) const;
    /// T on any pair psi2 <= psi1, composed along the chain that drops the
    /// missing vertices in increasing order; T(psi, psi) = e.
    Exponent transfer(const Simplex& psi1, const Simplex& psi2) const;
    /// The 2-cell g(psi1, psi2, psi3) for psi3 <= psi2 <= psi1.
    Exponent two_cell(const Simplex& psi1, const Simplex& psi2, const Simplex& psi3) const;
    /// Phi(psi1, psi2) = T(psi1, psi2).
    Exponent morphism_cell(const Simplex& psi1, const Simplex& psi2) const { return transfer(psi1, psi2); }

private:
    std::uint32_t k_ = 1;
    TwoCellRule rule_ = TwoCellRule::with_inverse;
    Complex base_;
    std::vector<std::vector<Subgroup>> groups_;
    std::map<FacePair, Exponent> codim1_;
};

struct AxiomViolation {
    std::string axiom;
    std::vector<Simplex> simplices;
    std::string to_string() const;
};

/// Checks the f maps are injective homomorphisms into the face groups, the
/// 2-cells lie in the right groups, axioms (a)-(c) and the morphism
/// constraints. Returns the first violation.
std::optional<AxiomViolation> validate(const ComplexOfGroups& cog);

} // namespace zkhom
