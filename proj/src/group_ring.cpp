#include "zkhom/group_ring.hpp"

#include <sstream>

#include "zkhom/error.hpp"

namespace zkhom {

GroupRingElem::GroupRingElem(Field field, std::uint32_t k) : field_(field), k_(k), coeffs_(k, Scalar(field))
{
    if (k == 0)
        throw InvalidArgumentError("group order must be positive");
}

GroupRingElem::GroupRingElem(Field field, std::uint32_t k, std::vector<Scalar> coeffs)
    : field_(field), k_(k), coeffs_(std::move(coeffs))
{
    if (k == 0 || coeffs_.size() != k)
        throw InvalidArgumentError("group ring element needs exactly k = " + std::to_string(k) + " coefficients");
    for (const auto& c : coeffs_)
        if (c.field() != field)
            throw DomainMismatchError("coefficient over " + c.field().name() + " in element over " + field.name());
}

GroupRingElem GroupRingElem::identity(Field field, std::uint32_t k)
{
    GroupRingElem out(field, k);
    out.coeffs_[0] = Scalar::one(field);
    return out;
}

GroupRingElem GroupRingElem::monomial(const Scalar& c, std::uint32_t k, Exponent g)
{
    GroupRingElem out(c.field(), k);
    out.coeffs_[g % k] = c;
    return out;
}

GroupRingElem GroupRingElem::from_poly(const Poly& p, std::uint32_t k)
{
    GroupRingElem out(p.field(), k);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        out.coeffs_[i % k] += p.coeffs()[i];
    return out;
}

bool GroupRingElem::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

Poly GroupRingElem::lift() const
{
    return Poly(field_, coeffs_);
}

GroupRingElem GroupRingElem::reexpress(std::uint32_t s) const
{
    GroupRingElem out(field_, k_);
    for (std::uint32_t j = 0; j < k_; ++j)
        out.coeffs_[j] = coeffs_[(std::uint64_t{s} * j) % k_];
    return out;
}

void GroupRingElem::require_compatible(const GroupRingElem& rhs) const
{
    if (field_ != rhs.field_ || k_ != rhs.k_)
        throw DomainMismatchError("group ring elements over different fields or group orders");
}

GroupRingElem GroupRingElem::operator-() const
{
    GroupRingElem out(*this);
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& rhs)
{
    require_compatible(rhs);
    for (std::uint32_t i = 0; i < k_; ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& rhs)
{
    require_compatible(rhs);
    for (std::uint32_t i = 0; i < k_; ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

GroupRingElem& GroupRingElem::operator*=(const Scalar& c)
{
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b)
{
    a.require_compatible(b);
    GroupRingElem out(a.field_, a.k_);
    for (std::uint32_t i = 0; i < a.k_; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::uint32_t j = 0; j < a.k_; ++j)
            out.coeffs_[(i + j) % a.k_] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

std::string GroupRingElem::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i = 0; i < k_; ++i) {
        const Scalar& c = coeffs_[i];
        if (c.is_zero())
            continue;
        std::string text = c.to_string();
        bool negative = !text.empty() && text[0] == '-';
        if (negative)
            text.erase(0, 1);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (i == 0)
            os << text;
        else if (text == "1")
            os << "a^" << i;
        else
            os << text << "*a^" << i;
    }
    return first ? "0" : os.str();
}

GroupRingElem sigma(const ExponentSet& elements, Field field, std::uint32_t k)
{
    GroupRingElem out(field, k);
    for (Exponent g : elements)
        out.coeff(g) += Scalar::one(field);
    return out;
}

FieldMatrix rho(const GroupRingElem& w, std::uint32_t s)
{
    const std::uint32_t k = w.k();
    FieldMatrix out(w.field(), k, k);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
            out(i, j) = w.coeff(static_cast<Exponent>((std::uint64_t{s} * ((i + k - j) % k)) % k));
    return out;
}

GroupRingMatrix::GroupRingMatrix(Field field, std::uint32_t k, std::size_t rows, std::size_t cols)
    : field_(field), k_(k), rows_(rows), cols_(cols), entries_(rows * cols, GroupRingElem(field, k))
{
}

GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b)
{
    if (a.cols_ != b.rows_ || a.k_ != b.k_ || a.field_ != b.field_)
        throw InvalidArgumentError("group ring matrix product shape or domain mismatch");
    GroupRingMatrix out(a.field_, a.k_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            if (a(i, l).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += a(i, l) * b(l, j);
        }
    return out;
}

std::string GroupRingMatrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

namespace {

void write_block(FieldMatrix& out, const GroupRingMatrix& m, std::size_t a, std::size_t b, std::uint32_t s)
{
    const std::uint32_t k = m.k();
    const GroupRingElem& w = m(a, b);
    if (w.is_zero())
        return;
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
            out(a * k + i, b * k + j) = w.coeff(static_cast<Exponent>((std::uint64_t{s} * ((i + k - j) % k)) % k));
}

} // namespace

FieldMatrix rho_extend(const GroupRingMatrix& m, std::uint32_t s)
{
    FieldMatrix out(m.field(), m.rows() * m.k(), m.cols() * m.k());
    const long long blocks = static_cast<long long>(m.rows() * m.cols());
    // Blocks are disjoint, so concurrent writes never alias.
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < blocks; ++t)
        write_block(out, m, static_cast<std::size_t>(t) / m.cols(), static_cast<std::size_t>(t) % m.cols(), s);
    return out;
}

FieldMatrix rho_extend_serial(const GroupRingMatrix& m, std::uint32_t s)
{
    const std::uint32_t k = m.k();
    FieldMatrix out(m.field(), m.rows() * k, m.cols() * k);
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) {
            const FieldMatrix block = rho(m(a, b), s);
            for (std::uint32_t i = 0; i < k; ++i)
                for (std::uint32_t j = 0; j < k; ++j)
                    out(a * k + i, b * k + j) = block(i, j);
        }
    return out;
}

std::size_t circulant_rank(const GroupRingElem& w)
{
    if (w.is_zero())
        return 0;
    const Poly g = poly_gcd(w.lift(), Poly::cyclotomic_modulus(w.field(), w.k()));
    return w.k() - *g.degree();
}

} // namespace zkhom
