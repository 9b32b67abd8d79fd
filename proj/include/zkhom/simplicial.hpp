#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zkhom/field_matrix.hpp"

namespace zkhom {

using Vertex = std::uint32_t;

/// A simplex as its strictly increasing vertex list.
class Simplex {
public:
    Simplex() = default;
    /// Sorts and de-duplicates; throws InvalidSimplexError on an empty list.
    explicit Simplex(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    std::size_t dim() const { return vertices_.size() - 1; }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }

    /// The codimension-1 face omitting vertex i.
    Simplex facet(std::size_t omit) const;
    bool contains(const Simplex& face) const;
    bool contains(Vertex v) const;

    std::string to_string() const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// Reference to the idx-th simplex of dimension dim.
struct SimplexRef {
    std::size_t dim = 0;
    std::size_t index = 0;
    friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

/// Finite abstract simplicial complex, canonically indexed: the simplices of
/// each dimension are kept sorted lexicographically.
class Complex {
public:
    Complex() = default;

    /// Downward closure of the generators.
    static Complex from_generators(const std::vector<std::vector<Vertex>>& generators);

    /// -1 for the empty complex.
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }
    std::size_t count(std::size_t d) const { return d < by_dim_.size() ? by_dim_[d].size() : 0; }
    std::size_t total_count() const;
    const std::vector<Simplex>& simplices(std::size_t d) const;
    const Simplex& simplex(std::size_t d, std::size_t index) const { return by_dim_.at(d).at(index); }
    const Simplex& simplex(SimplexRef ref) const { return simplex(ref.dim, ref.index); }

    std::optional<std::size_t> find(const Simplex& s) const;
    /// Throws UnknownSimplexError when absent.
    std::size_t index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return find(s).has_value(); }

    std::vector<Vertex> vertices() const;
    /// Simplices not contained in a larger one, by dimension then lex.
    std::vector<Simplex> facets() const;
    long long euler_characteristic() const;

    friend bool operator==(const Complex& a, const Complex& b) { return a.by_dim_ == b.by_dim_; }

private:
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, std::size_t>> index_;
};

/// One permutation of simplex indices per dimension; order[d][i] is the
/// index of the i-th simplex of dimension d in the chosen ordering.
struct ComplexOrdering {
    std::vector<std::vector<std::size_t>> by_dim;

    /// Lexicographic order, i.e. the identity permutation in every dimension.
    static ComplexOrdering canonical(const Complex& complex);

    /// Empty when d is beyond the stored dimensions.
    const std::vector<std::size_t>& operator[](std::size_t d) const;
    /// Checks that every level is a permutation of the matching simplex list.
    bool is_valid_for(const Complex& complex) const;
};

/// Sign of the chosen elementary chain of every simplex, relative to the
/// increasing vertex order.
class OrientationAssignment {
public:
    OrientationAssignment() = default;
    /// All +1 (increasing vertex order).
    explicit OrientationAssignment(const Complex& complex);

    int sign(std::size_t d, std::size_t index) const { return signs_.at(d).at(index); }
    void set_sign(std::size_t d, std::size_t index, int sign);

private:
    std::vector<std::vector<std::int8_t>> signs_;
};

/// Sign of the permutation sorting `order` increasingly (+1 even, -1 odd).
int permutation_sign(const std::vector<Vertex>& order);

/// Matrix of the d-th boundary map. row_order lists (d-1)-simplex indices,
/// col_order d-simplex indices; empty orders mean the canonical one.
/// Valid for 1 <= d <= dim + 1; throws DimensionError otherwise.
FieldMatrix boundary_matrix(const Complex& complex, std::size_t d, Field field, const OrientationAssignment& orient,
                            const std::vector<std::size_t>& row_order = {},
                            const std::vector<std::size_t>& col_order = {});

FieldMatrix boundary_matrix(const Complex& complex, std::size_t d, Field field);

/// beta_d = dim C_d - rank d_d - rank d_{d+1}, d = 0..dim, with rank d_0 = 0.
std::vector<std::size_t> betti_direct(const Complex& complex, Field field);

struct Subdivision {
    Complex complex;
    /// barycenter[d][i] is the vertex of B(X) standing for simplex i of dimension d.
    std::vector<std::vector<Vertex>> barycenter;
};

/// Vertices of B(X) are numbered by enumerating simplices of X in
/// (dimension, lex) order; its simplices are the strict chains.
Subdivision barycentric_subdivision(const Complex& complex);

} // namespace zkhom
