#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zkhom/simplicial.hpp"

namespace zkhom {

/// alpha^c is represented by its exponent c in [0, k).
using Exponent = std::uint32_t;
/// A subset of Z_k as a sorted list of exponents.
using ExponentSet = std::vector<Exponent>;

/// The unique subgroup of Z_k of the given order, <alpha^(k/order)>.
struct Subgroup {
    std::uint32_t order = 1;

    ExponentSet elements(std::uint32_t k) const;
    bool contains(Exponent g, std::uint32_t k) const { return g % (k / order) == 0; }
    friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

/// Subgroups of Z_k, by increasing order.
std::vector<Subgroup> subgroups(std::uint32_t k);

/// Listing (e, beta, beta^2, ...) of Z_k for a generator beta = alpha^generator.
class GroupOrdering {
public:
    /// Throws InvalidGeneratorError unless gcd(generator, k) = 1.
    GroupOrdering(std::uint32_t k, std::uint32_t generator = 1);

    std::uint32_t k() const { return k_; }
    std::uint32_t generator() const { return generator_; }
    /// Exponent of the c-th listed element (0-based).
    Exponent element(std::size_t c) const { return static_cast<Exponent>((std::uint64_t{generator_} * c) % k_); }
    /// Position of alpha^g in the listing.
    std::size_t position(Exponent g) const { return position_.at(g); }

private:
    std::uint32_t k_;
    std::uint32_t generator_;
    std::vector<std::size_t> position_;
};

/// Left cosets of h, in order of first appearance while walking the group
/// ordering. The first coset is h itself.
std::vector<ExponentSet> coset_ordering(Subgroup h, const GroupOrdering& ordering);

/// Position (0-based) of the coset alpha^g h in coset_ordering(h, ordering).
std::size_t coset_position(Subgroup h, const GroupOrdering& ordering, Exponent g);

/// Z_k acting on a complex through the powers of one vertex permutation.
/// Orbit and isotropy tables are filled at construction.
class CyclicAction {
public:
    /// Checks the permutation is a bijection covering every vertex, maps
    /// simplices to simplices and has order dividing k. Throws
    /// InvalidActionError naming a witness otherwise.
    static CyclicAction create(Complex complex, std::vector<Vertex> generator, std::uint32_t k);

    std::uint32_t k() const { return k_; }
    const Complex& complex() const { return complex_; }
    const std::vector<Vertex>& generator() const { return generator_; }

    Vertex apply(Exponent g, Vertex v) const { return powers_[g][v]; }
    Simplex apply(Exponent g, const Simplex& s) const;
    /// Index of alpha^g applied to simplex (d, index).
    std::size_t image(std::size_t d, std::size_t index, Exponent g) const { return images_[d][g][index]; }

    Subgroup isotropy(std::size_t d, std::size_t index) const { return isotropy_[d][index]; }
    /// Throws UnknownSimplexError when s is not in the complex.
    Subgroup isotropy(const Simplex& s) const;
    std::size_t orbit_size(std::size_t d, std::size_t index) const { return k_ / isotropy_[d][index].order; }

private:
    CyclicAction() = default;
    Simplex apply_raw(Exponent g, const Simplex& s) const;

    Complex complex_;
    std::vector<Vertex> generator_;
    std::uint32_t k_ = 1;
    std::vector<std::vector<Vertex>> powers_;
    std::vector<std::vector<std::vector<std::size_t>>> images_;
    std::vector<std::vector<Subgroup>> isotropy_;
};

/// Violation of regularity: {h_i v_i} is a simplex but no single h in the
/// subgroup realizes it. The vertex list may repeat a vertex.
struct RegularityWitness {
    Subgroup subgroup;
    std::vector<Vertex> vertices;
    std::vector<Exponent> exponents;

    std::string to_string() const;
};

struct RegularityResult {
    bool regular = true;
    std::optional<RegularityWitness> witness;
};

/// Exhaustive check over every subgroup, every simplex and every tuple of
/// subgroup elements.
RegularityResult is_regular(const CyclicAction& action);

/// Action induced on the barycentric subdivision.
CyclicAction subdivide(const CyclicAction& action);

/// Two subdivisions; the result is always regular.
CyclicAction regularize(const CyclicAction& action);

/// The quotient complex X/G with the projection and the orbit of each
/// quotient simplex. Quotient vertices are labelled 0.. in order of the
/// least vertex of each orbit.
struct QuotientData {
    Complex quotient;
    /// vertex_label[v] for every vertex v of X.
    std::vector<Vertex> vertex_label;
    /// projection[d][i]: quotient index of simplex (d, i) of X.
    std::vector<std::vector<std::size_t>> projection;
    /// orbits[d][a]: indices of the X-simplices over quotient simplex (d, a), increasing.
    std::vector<std::vector<std::vector<std::size_t>>> orbits;
};

/// Throws RegularityRequiredError for non-regular actions.
QuotientData quotient(const CyclicAction& action);

/// A section of the projection on simplices: of[d][a] is the index of the chosen
/// X-simplex over quotient simplex (d, a). Face relations need not be preserved.
struct Lift {
    std::vector<std::vector<std::size_t>> of;

    std::size_t operator()(std::size_t d, std::size_t a) const { return of[d][a]; }
};

enum class LiftPolicy { lex_min, lex_max };

Lift lex_lift(const QuotientData& qd);
Lift lex_max_lift(const QuotientData& qd);
Lift make_lift(const QuotientData& qd, LiftPolicy policy);
/// True when every chosen simplex lies over its quotient simplex.
bool is_lift(const QuotientData& qd, const Lift& lift);

/// Compatible ordering of the d-simplices of X with its lifted partition.
struct LiftedPartition {
    std::size_t dim = 0;
    std::vector<std::size_t> quotient_order;
    /// block_start[a] is n_a - 1: the position of the lift of the a-th quotient simplex.
    std::vector<std::size_t> block_start;
    std::vector<Subgroup> block_isotropy;
    /// X simplex indices in compatible order.
    std::vector<std::size_t> ordering;

    std::size_t block_count() const { return block_start.size(); }
    std::size_t block_size(std::size_t a, std::uint32_t k) const { return k / block_isotropy[a].order; }
};

/// Concatenates the orbits in quotient order; inside orbit a the j-th
/// simplex is the j-th coset of the lift's isotropy applied to the lift.
LiftedPartition compatible_ordering(const CyclicAction& action, const QuotientData& qd, const Lift& lift, std::size_t d,
                                    const std::vector<std::size_t>& quotient_order, const GroupOrdering& ordering);

/// Isotropy index-reducing map as a 0-based table of length n*k: entry
/// b*k + c is block_start[b] + (position of the coset of the c-th group
/// element among the cosets of the block's isotropy).
std::vector<std::size_t> index_reducing(const LiftedPartition& lp, const GroupOrdering& ordering);

} // namespace zkhom
