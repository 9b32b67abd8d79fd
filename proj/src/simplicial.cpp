#include "zkhom/simplicial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zkhom/error.hpp"

namespace zkhom {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.empty())
        throw InvalidSimplexError("simplex with no vertices");
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

Simplex Simplex::facet(std::size_t omit) const
{
    std::vector<Vertex> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (i != omit)
            out.push_back(vertices_[i]);
    Simplex s;
    s.vertices_ = std::move(out);
    return s;
}

bool Simplex::contains(const Simplex& face) const
{
    return std::includes(vertices_.begin(), vertices_.end(), face.vertices_.begin(), face.vertices_.end());
}

bool Simplex::contains(Vertex v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::string Simplex::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        os << (i ? "," : "") << vertices_[i];
    os << '}';
    return os.str();
}

Complex Complex::from_generators(const std::vector<std::vector<Vertex>>& generators)
{
    std::vector<std::set<Simplex>> sets;
    for (const auto& gen : generators) {
        const Simplex top(gen);
        const std::size_t n = top.size();
        if (n > 24)
            throw InvalidSimplexError("simplex of dimension " + std::to_string(n - 1) + " is too large to close downward");
        if (sets.size() < n)
            sets.resize(n);
        for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
            std::vector<Vertex> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1U << i))
                    face.push_back(top[i]);
            sets[face.size() - 1].insert(Simplex(std::move(face)));
        }
    }
    Complex out;
    out.by_dim_.reserve(sets.size());
    out.index_.resize(sets.size());
    for (std::size_t d = 0; d < sets.size(); ++d) {
        out.by_dim_.emplace_back(sets[d].begin(), sets[d].end());
        for (std::size_t i = 0; i < out.by_dim_[d].size(); ++i)
            out.index_[d].emplace(out.by_dim_[d][i], i);
    }
    return out;
}

std::size_t Complex::total_count() const
{
    std::size_t total = 0;
    for (const auto& level : by_dim_)
        total += level.size();
    return total;
}

const std::vector<Simplex>& Complex::simplices(std::size_t d) const
{
    static const std::vector<Simplex> none;
    return d < by_dim_.size() ? by_dim_[d] : none;
}

std::optional<std::size_t> Complex::find(const Simplex& s) const
{
    if (s.size() == 0 || s.dim() >= index_.size())
        return std::nullopt;
    const auto& level = index_[s.dim()];
    auto it = level.find(s);
    if (it == level.end())
        return std::nullopt;
    return it->second;
}

std::size_t Complex::index_of(const Simplex& s) const
{
    if (auto idx = find(s))
        return *idx;
    throw UnknownSimplexError("simplex " + s.to_string() + " is not in the complex");
}

std::vector<Vertex> Complex::vertices() const
{
    std::vector<Vertex> out;
    for (const auto& s : simplices(0))
        out.push_back(s[0]);
    return out;
}

std::vector<Simplex> Complex::facets() const
{
    std::vector<Simplex> out;
    for (std::size_t d = 0; d < by_dim_.size(); ++d) {
        std::set<Simplex> covered;
        if (d + 1 < by_dim_.size())
            for (const auto& s : by_dim_[d + 1])
                for (std::size_t i = 0; i < s.size(); ++i)
                    covered.insert(s.facet(i));
        for (const auto& s : by_dim_[d])
            if (!covered.count(s))
                out.push_back(s);
    }
    return out;
}

long long Complex::euler_characteristic() const
{
    long long chi = 0;
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[d].size());
    return chi;
}

ComplexOrdering ComplexOrdering::canonical(const Complex& complex)
{
    ComplexOrdering out;
    for (int d = 0; d <= complex.dim(); ++d) {
        std::vector<std::size_t> level(complex.count(static_cast<std::size_t>(d)));
        for (std::size_t i = 0; i < level.size(); ++i)
            level[i] = i;
        out.by_dim.push_back(std::move(level));
    }
    return out;
}

const std::vector<std::size_t>& ComplexOrdering::operator[](std::size_t d) const
{
    static const std::vector<std::size_t> none;
    return d < by_dim.size() ? by_dim[d] : none;
}

bool ComplexOrdering::is_valid_for(const Complex& complex) const
{
    if (by_dim.size() != static_cast<std::size_t>(complex.dim() + 1))
        return false;
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
        auto sorted = by_dim[d];
        std::sort(sorted.begin(), sorted.end());
        if (sorted.size() != complex.count(d))
            return false;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != i)
                return false;
    }
    return true;
}

OrientationAssignment::OrientationAssignment(const Complex& complex)
{
    for (int d = 0; d <= complex.dim(); ++d)
        signs_.emplace_back(complex.count(static_cast<std::size_t>(d)), std::int8_t{1});
}

void OrientationAssignment::set_sign(std::size_t d, std::size_t index, int sign)
{
    if (sign != 1 && sign != -1)
        throw InvalidArgumentError("orientation sign must be +1 or -1");
    signs_.at(d).at(index) = static_cast<std::int8_t>(sign);
}

int permutation_sign(const std::vector<Vertex>& order)
{
    int sign = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j])
                sign = -sign;
    return sign;
}

namespace {

std::vector<std::size_t> identity_order(std::size_t n)
{
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = i;
    return out;
}

} // namespace

FieldMatrix boundary_matrix(const Complex& complex, std::size_t d, Field field, const OrientationAssignment& orient,
                            const std::vector<std::size_t>& row_order, const std::vector<std::size_t>& col_order)
{
    if (d < 1 || static_cast<int>(d) > complex.dim() + 1)
        throw DimensionError("boundary dimension " + std::to_string(d) + " outside 1.." +
                             std::to_string(complex.dim() + 1));
    const std::size_t m = complex.count(d - 1);
    const std::size_t n = complex.count(d);
    const auto rows = row_order.empty() ? identity_order(m) : row_order;
    const auto cols = col_order.empty() ? identity_order(n) : col_order;
    if (rows.size() != m || cols.size() != n)
        throw InvalidArgumentError("ordering size does not match simplex count");

    std::vector<std::size_t> row_position(m);
    for (std::size_t i = 0; i < m; ++i)
        row_position[rows[i]] = i;

    FieldMatrix out(field, m, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Simplex& s = complex.simplex(d, cols[j]);
        const int col_sign = orient.sign(d, cols[j]);
        for (std::size_t t = 0; t < s.size(); ++t) {
            const std::size_t face = complex.index_of(s.facet(t));
            const int sign = col_sign * (t % 2 == 0 ? 1 : -1) * orient.sign(d - 1, face);
            out(row_position[face], j) = Scalar(field, sign);
        }
    }
    return out;
}

FieldMatrix boundary_matrix(const Complex& complex, std::size_t d, Field field)
{
    return boundary_matrix(complex, d, field, OrientationAssignment(complex));
}

std::vector<std::size_t> betti_direct(const Complex& complex, Field field)
{
    const int top = complex.dim();
    if (top < 0)
        return {};
    // ranks[d] = rank of the d-th boundary; ranks[0] = 0 and ranks[top + 1] = 0.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (std::size_t d = 1; d <= static_cast<std::size_t>(top); ++d)
        ranks[d] = field_rank(boundary_matrix(complex, d, field));
    std::vector<std::size_t> betti;
    for (std::size_t d = 0; d <= static_cast<std::size_t>(top); ++d)
        betti.push_back(complex.count(d) - ranks[d] - ranks[d + 1]);
    return betti;
}

Subdivision barycentric_subdivision(const Complex& complex)
{
    Subdivision out;
    Vertex next = 0;
    for (int d = 0; d <= complex.dim(); ++d) {
        out.barycenter.emplace_back();
        for (std::size_t i = 0; i < complex.count(static_cast<std::size_t>(d)); ++i)
            out.barycenter.back().push_back(next++);
    }

    // flags[d][i]: full flags v0 < e1 < ... < s ending at simplex (d, i), as barycenter
    // lists. Every strict chain of faces is a subchain of a full flag, so the
    // flags of all simplices generate B(X) under downward closure.
    std::vector<std::vector<std::vector<std::vector<Vertex>>>> flags(out.barycenter.size());
    std::vector<std::vector<Vertex>> generators;
    for (std::size_t d = 0; d < out.barycenter.size(); ++d) {
        flags[d].resize(complex.count(d));
        for (std::size_t i = 0; i < complex.count(d); ++i) {
            const Vertex top = out.barycenter[d][i];
            auto& mine = flags[d][i];
            if (d == 0) {
                mine.push_back({top});
            } else {
                const Simplex& s = complex.simplex(d, i);
                for (std::size_t t = 0; t < s.size(); ++t) {
                    const std::size_t f = complex.index_of(s.facet(t));
                    for (const auto& below : flags[d - 1][f]) {
                        auto flag = below;
                        flag.push_back(top);
                        mine.push_back(std::move(flag));
                    }
                }
            }
            generators.insert(generators.end(), mine.begin(), mine.end());
        }
    }
    out.complex = Complex::from_generators(generators);
    return out;
}

} // namespace zkhom
