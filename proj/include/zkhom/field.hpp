#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/gmp.hpp>

namespace zkhom {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Coefficient field descriptor: the rationals or a prime field F_p.
class Field {
public:
    enum class Kind { rational, prime };

    static Field rationals() { return Field(Kind::rational, 0); }

    /// Throws InvalidArgumentError unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);

    /// Accepts "Q" or "Fp:<prime>".
    static Field parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::rational; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t characteristic() const { return modulus_; }

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

/// Exact element of a Field. Rationals stay reduced (gmp canonicalizes),
/// residues stay in [0, p).
class Scalar {
public:
    explicit Scalar(Field field);
    Scalar(Field field, long long value);
    Scalar(Field field, const Rational& value);

    static Scalar zero(Field field) { return Scalar(field); }
    static Scalar one(Field field) { return Scalar(field, 1); }

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Valid only over Q.
    const Rational& rational() const { return std::get<Rational>(value_); }
    /// Valid only over F_p.
    std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    /// Scalars over different fields compare unequal.
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    void require_same_field(const Scalar& rhs) const;

    Field field_;
    std::variant<Rational, std::uint32_t> value_;
};

} // namespace zkhom
