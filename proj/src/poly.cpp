#include "zkhom/poly.hpp"

#include <sstream>

#include "zkhom/error.hpp"

namespace zkhom {

Poly::Poly(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs))
{
    for (const auto& c : coeffs_)
        if (!(c.field() == field_))
            throw DomainMismatchError("coefficient over " + c.field().name() + " in polynomial over " + field_.name());
    trim();
}

Poly::Poly(Field field, std::initializer_list<long long> coeffs) : field_(field)
{
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs)
        coeffs_.emplace_back(field, c);
    trim();
}

Poly Poly::constant(const Scalar& c)
{
    return Poly(c.field(), std::vector<Scalar>{c});
}

Poly Poly::monomial(const Scalar& c, std::size_t exponent)
{
    std::vector<Scalar> coeffs(exponent + 1, Scalar::zero(c.field()));
    coeffs[exponent] = c;
    return Poly(c.field(), std::move(coeffs));
}

Poly Poly::cyclotomic_modulus(Field field, std::size_t k)
{
    return monomial(Scalar::one(field), k) - constant(Scalar::one(field));
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& rhs) const
{
    if (!(field_ == rhs.field_))
        throw DomainMismatchError("polynomial arithmetic across fields " + field_.name() + " and " + rhs.field_.name());
}

std::optional<std::size_t> Poly::degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

Scalar Poly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

const Scalar& Poly::leading() const
{
    if (coeffs_.empty())
        throw InvalidArgumentError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Poly Poly::monic() const
{
    if (is_zero() || leading().is_one())
        return *this;
    return *this * leading().inverse();
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs)
{
    require_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    require_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    a.require_same_field(b);
    if (a.is_zero() || b.is_zero())
        return Poly(a.field_);
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(a.field_, std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs)
{
    *this = *this * rhs;
    return *this;
}

Poly& Poly::operator*=(const Scalar& rhs)
{
    if (!(rhs.field() == field_))
        throw DomainMismatchError("scaling a polynomial over " + field_.name() + " by a scalar over " + rhs.field().name());
    for (auto& c : coeffs_)
        c *= rhs;
    trim();
    return *this;
}

std::string Poly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Scalar& c = coeffs_[i];
        if (c.is_zero())
            continue;
        std::string text = c.to_string();
        bool negative = !text.empty() && text.front() == '-';
        if (negative)
            text.erase(0, 1);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? "-" : "+");
        first = false;
        if (i == 0) {
            os << text;
            continue;
        }
        if (text != "1")
            os << text << '*';
        os << var;
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

PolyDivision divmod(const Poly& a, const Poly& b)
{
    if (!(a.field() == b.field()))
        throw DomainMismatchError("polynomial division across fields " + a.field().name() + " and " + b.field().name());
    if (b.is_zero())
        throw InvalidArgumentError("polynomial division by zero");
    const Field field = a.field();
    if (a.is_zero() || *a.degree() < *b.degree())
        return {Poly(field), a};

    std::vector<Scalar> rem = a.coeffs();
    const std::size_t db = *b.degree();
    const Scalar inv_lead = b.leading().inverse();
    std::vector<Scalar> quot(rem.size() - db, Scalar::zero(field));
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero())
            continue;
        Scalar factor = rem[i] * inv_lead;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] -= factor * b.coeffs()[j];
        quot[i - db] = std::move(factor);
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
    return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

bool divides(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return b.is_zero();
    return divmod(b, a).remainder.is_zero();
}

Poly poly_gcd(const Poly& a, const Poly& b)
{
    if (!(a.field() == b.field()))
        throw DomainMismatchError("gcd across fields " + a.field().name() + " and " + b.field().name());
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

} // namespace zkhom
