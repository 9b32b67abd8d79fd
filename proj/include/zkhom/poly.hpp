#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zkhom/field.hpp"

namespace zkhom {

/// Univariate polynomial over a Field, coefficients lowest degree first.
///
/// The zero polynomial has no coefficients and no integer degree:
/// degree() returns std::nullopt, which plays the role of minus infinity
/// in every comparison made by this library.
class Poly {
public:
    explicit Poly(Field field) : field_(field) {}
    Poly(Field field, std::vector<Scalar> coeffs);
    /// Integer coefficients, lowest degree first.
    Poly(Field field, std::initializer_list<long long> coeffs);

    static Poly constant(const Scalar& c);
    static Poly monomial(const Scalar& c, std::size_t exponent);
    /// x^k - 1
    static Poly cyclotomic_modulus(Field field, std::size_t k);

    Field field() const { return field_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    /// Coefficient of x^i, zero past the end.
    Scalar coeff(std::size_t i) const;
    /// Throws on the zero polynomial.
    const Scalar& leading() const;

    bool is_monic() const { return !is_zero() && leading().is_one(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Scalar& rhs);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Descending powers, e.g. "x^2-1", "1/2*x+3", "0".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    void require_same_field(const Poly& rhs) const;

    Field field_;
    std::vector<Scalar> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division; throws InvalidArgumentError on a zero divisor.
PolyDivision divmod(const Poly& a, const Poly& b);

/// True when a divides b. Only zero is divisible by zero.
bool divides(const Poly& a, const Poly& b);

/// Monic gcd; poly_gcd(0, 0) = 0. Throws DomainMismatchError across fields.
Poly poly_gcd(const Poly& a, const Poly& b);

} // namespace zkhom
