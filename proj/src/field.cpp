#include "zkhom/field.hpp"

#include <charconv>
#include <limits>

#include "zkhom/error.hpp"

namespace zkhom {

namespace {

std::uint32_t reduce(long long value, std::uint32_t p)
{
    long long r = value % static_cast<long long>(p);
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const Integer& value, std::uint32_t p)
{
    Integer r = value % p;
    if (r < 0)
        r += p;
    return r.convert_to<std::uint32_t>();
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p)
{
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1U)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (p >= (1U << 31) || !is_prime(p))
        throw InvalidArgumentError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
    return Field(Kind::prime, p);
}

Field Field::parse(std::string_view text)
{
    if (text == "Q")
        return rationals();
    constexpr std::string_view prefix = "Fp:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        std::uint32_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
            return prime(p);
    }
    throw InvalidArgumentError("unrecognized field descriptor '" + std::string(text) + "' (expected Q or Fp:<prime>)");
}

std::string Field::name() const
{
    return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

Scalar::Scalar(Field field) : field_(field)
{
    if (field.is_rational())
        value_ = Rational(0);
    else
        value_ = std::uint32_t{0};
}

Scalar::Scalar(Field field, long long value) : field_(field)
{
    if (field.is_rational())
        value_ = Rational(value);
    else
        value_ = reduce(value, field.modulus());
}

Scalar::Scalar(Field field, const Rational& value) : field_(field)
{
    if (field.is_rational()) {
        value_ = value;
        return;
    }
    const std::uint32_t p = field.modulus();
    const std::uint32_t den = reduce(Integer(denominator(value)), p);
    if (den == 0)
        throw InvalidArgumentError("denominator vanishes in " + field.name());
    const std::uint64_t num = reduce(Integer(numerator(value)), p);
    value_ = static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

bool Scalar::is_zero() const
{
    if (field_.is_rational())
        return rational() == 0;
    return residue() == 0;
}

bool Scalar::is_one() const
{
    if (field_.is_rational())
        return rational() == 1;
    return residue() == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const
{
    if (!(field_ == rhs.field_))
        throw DomainMismatchError("scalar arithmetic across fields " + field_.name() + " and " + rhs.field_.name());
}

Scalar Scalar::operator-() const
{
    Scalar out(field_);
    if (field_.is_rational())
        out.value_ = Rational(-rational());
    else
        out.value_ = residue() == 0 ? 0U : field_.modulus() - residue();
    return out;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw InvalidArgumentError("inverse of zero");
    Scalar out(field_);
    if (field_.is_rational())
        out.value_ = Rational(1 / rational());
    else
        out.value_ = pow_mod(residue(), field_.modulus() - 2, field_.modulus());
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<Rational>(value_) += rhs.rational();
    } else {
        const std::uint64_t s = std::uint64_t{residue()} + rhs.residue();
        value_ = static_cast<std::uint32_t>(s % field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<Rational>(value_) -= rhs.rational();
    } else {
        const std::uint64_t p = field_.modulus();
        value_ = static_cast<std::uint32_t>((residue() + p - rhs.residue()) % p);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<Rational>(value_) *= rhs.rational();
    } else {
        const std::uint64_t prod = std::uint64_t{residue()} * rhs.residue();
        value_ = static_cast<std::uint32_t>(prod % field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const
{
    if (field_.is_rational())
        return rational().str();
    return std::to_string(residue());
}

} // namespace zkhom
