#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zkhom/action.hpp"
#include "zkhom/field_matrix.hpp"
#include "zkhom/poly.hpp"

namespace zkhom {

/// Element sum_i a_i alpha^i of the group ring F Z_k.
class GroupRingElem {
public:
    GroupRingElem(Field field, std::uint32_t k);
    /// Exactly k coefficients over `field`.
    GroupRingElem(Field field, std::uint32_t k, std::vector<Scalar> coeffs);

    static GroupRingElem zero(Field field, std::uint32_t k) { return GroupRingElem(field, k); }
    static GroupRingElem identity(Field field, std::uint32_t k);
    /// c * alpha^g
    static GroupRingElem monomial(const Scalar& c, std::uint32_t k, Exponent g);
    /// Reduces p modulo x^k - 1 and reads x as alpha.
    static GroupRingElem from_poly(const Poly& p, std::uint32_t k);

    Field field() const { return field_; }
    std::uint32_t k() const { return k_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& coeff(Exponent g) const { return coeffs_[g % k_]; }
    Scalar& coeff(Exponent g) { return coeffs_[g % k_]; }
    bool is_zero() const;

    /// Polynomial of degree < k with the same coefficients.
    Poly lift() const;
    /// Coordinates in the basis of powers of beta = alpha^s: b_j = a_{s j mod k}.
    GroupRingElem reexpress(std::uint32_t s) const;

    GroupRingElem operator-() const;
    GroupRingElem& operator+=(const GroupRingElem& rhs);
    GroupRingElem& operator-=(const GroupRingElem& rhs);
    GroupRingElem& operator*=(const Scalar& c);
    friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
    friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
    /// Cyclic convolution.
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator*(GroupRingElem a, const Scalar& c) { return a *= c; }
    friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

    /// Ascending exponents: "1 + a^1", "-1 + 2*a^3", "0".
    std::string to_string() const;

private:
    void require_compatible(const GroupRingElem& rhs) const;

    Field field_;
    std::uint32_t k_;
    std::vector<Scalar> coeffs_;
};

/// Sum of the listed group elements; sigma of the empty set is 0.
GroupRingElem sigma(const ExponentSet& elements, Field field, std::uint32_t k);

/// k x k matrix of multiplication by w: entry (i, j) is a_{s (i - j) mod k}.
/// With s = 1 this is the transposed circulant of (a_0, ..., a_{k-1}).
FieldMatrix rho(const GroupRingElem& w, std::uint32_t s = 1);

/// Dense matrix over F Z_k.
class GroupRingMatrix {
public:
    GroupRingMatrix(Field field, std::uint32_t k, std::size_t rows, std::size_t cols);

    Field field() const { return field_; }
    std::uint32_t k() const { return k_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GroupRingElem& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const GroupRingElem& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b);
    friend bool operator==(const GroupRingMatrix&, const GroupRingMatrix&) = default;
    std::string to_string() const;

private:
    Field field_;
    std::uint32_t k_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<GroupRingElem> entries_;
};

/// Block matrix whose (a, b) block is rho(M(a, b), s). Blocks are filled in
/// an OpenMP parallel loop.
FieldMatrix rho_extend(const GroupRingMatrix& m, std::uint32_t s = 1);
/// Single-threaded reference for rho_extend.
FieldMatrix rho_extend_serial(const GroupRingMatrix& m, std::uint32_t s = 1);

/// rank rho(w) = k - deg gcd(lift(w), x^k - 1); 0 for w = 0.
std::size_t circulant_rank(const GroupRingElem& w);

} // namespace zkhom
