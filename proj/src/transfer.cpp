#include "zkhom/transfer.hpp"

#include <algorithm>
#include <sstream>

#include "zkhom/error.hpp"

namespace zkhom {

const ExponentSet& IsotropyTriple::transfer(std::size_t d, std::size_t psi, std::size_t omega) const
{
    static const ExponentSet none;
    auto it = tstar.find(FacePair{d, psi, omega});
    return it == tstar.end() ? none : it->second;
}

namespace {

struct PairIndex {
    std::size_t d;
    std::size_t psi;
    std::size_t omega;
};

PairIndex locate(const QuotientData& qd, const Simplex& psi, const Simplex& omega)
{
    if (psi.size() != omega.size() + 1)
        throw DimensionError("extended transfer needs dim psi = dim omega + 1, got " + psi.to_string() + " and " +
                             omega.to_string());
    return {psi.dim(), qd.quotient.index_of(psi), qd.quotient.index_of(omega)};
}

} // namespace

ExponentSet extended_transfer(const CyclicAction& action, const QuotientData& qd, const Lift& lift, const Simplex& psi,
                              const Simplex& omega)
{
    const PairIndex p = locate(qd, psi, omega);
    const Simplex& top = action.complex().simplex(p.d, lift(p.d, p.psi));
    const Simplex& face = action.complex().simplex(p.d - 1, lift(p.d - 1, p.omega));
    ExponentSet out;
    for (Exponent g = 0; g < action.k(); ++g)
        if (top.contains(action.apply(g, face)))
            out.push_back(g);
    return out;
}

ExponentSet extended_transfer_via_face(const CyclicAction& action, const QuotientData& qd, const Lift& lift,
                                       const Simplex& psi, const Simplex& omega)
{
    const PairIndex p = locate(qd, psi, omega);
    const Simplex& top = action.complex().simplex(p.d, lift(p.d, p.psi));
    std::vector<Vertex> over;
    for (Vertex v : top.vertices())
        if (omega.contains(qd.vertex_label[v]))
            over.push_back(v);
    if (over.size() != omega.size())
        return {};
    const std::size_t target = action.complex().index_of(Simplex(over));
    const std::size_t base = lift(p.d - 1, p.omega);
    ExponentSet out;
    for (Exponent g = 0; g < action.k(); ++g)
        if (action.image(p.d - 1, base, g) == target)
            out.push_back(g);
    return out;
}

IsotropyTriple build_triple(const CyclicAction& action, const QuotientData& qd, const Lift& lift)
{
    if (!is_lift(qd, lift))
        throw InvalidArgumentError("lift does not choose a simplex over every quotient simplex");
    IsotropyTriple triple;
    triple.k = action.k();
    triple.quotient = qd.quotient;
    const int top = qd.quotient.dim();
    for (int d = 0; d <= top; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        triple.S.emplace_back();
        for (std::size_t a = 0; a < qd.quotient.count(ud); ++a)
            triple.S.back().push_back(action.isotropy(ud, lift(ud, a)));
    }
    for (std::size_t d = 1; d <= static_cast<std::size_t>(std::max(top, 0)); ++d)
        for (std::size_t b = 0; b < qd.quotient.count(d); ++b) {
            const Simplex& psi = qd.quotient.simplex(d, b);
            for (std::size_t t = 0; t < psi.size(); ++t) {
                const Simplex omega = psi.facet(t);
                triple.tstar[FacePair{d, b, qd.quotient.index_of(omega)}] =
                    extended_transfer(action, qd, lift, psi, omega);
            }
        }
    if (auto bad = triple_violation(triple))
        throw ValidationError(*bad);
    return triple;
}

IsotropyTriple build_triple(const CyclicAction& action, LiftPolicy policy)
{
    const QuotientData qd = quotient(action);
    return build_triple(action, qd, make_lift(qd, policy));
}

std::optional<std::string> triple_violation(const IsotropyTriple& triple)
{
    const Complex& q = triple.quotient;
    const std::uint32_t k = triple.k;
    if (k == 0)
        return "group order k must be positive";
    if (triple.S.size() != static_cast<std::size_t>(q.dim() + 1))
        return "isotropy table does not match the quotient's dimensions";
    for (std::size_t d = 0; d < triple.S.size(); ++d) {
        if (triple.S[d].size() != q.count(d))
            return "isotropy table misses simplices of dimension " + std::to_string(d);
        for (std::size_t a = 0; a < q.count(d); ++a)
            if (triple.S[d][a].order == 0 || k % triple.S[d][a].order != 0)
                return "S" + q.simplex(d, a).to_string() + " has order " + std::to_string(triple.S[d][a].order) +
                       ", which does not divide k = " + std::to_string(k);
    }
    for (const auto& [key, set] : triple.tstar) {
        if (key.d == 0 || key.d >= triple.S.size() || key.psi >= q.count(key.d) || key.omega >= q.count(key.d - 1))
            return "T* entry refers to a simplex outside the quotient";
        const Simplex& psi = q.simplex(key.d, key.psi);
        const Simplex& omega = q.simplex(key.d - 1, key.omega);
        const std::string where = "T*(" + psi.to_string() + ", " + omega.to_string() + ")";
        if (!psi.contains(omega)) {
            if (!set.empty())
                return where + " is nonempty although " + omega.to_string() + " is not a face";
            continue;
        }
        const Subgroup h = triple.S[key.d - 1][key.omega];
        if (set.size() != h.order)
            return where + " has " + std::to_string(set.size()) + " elements, expected |S(omega)| = " +
                   std::to_string(h.order);
        if (!std::is_sorted(set.begin(), set.end()) || std::adjacent_find(set.begin(), set.end()) != set.end())
            return where + " is not a sorted set";
        for (Exponent g : set) {
            if (g >= k)
                return where + " contains exponent " + std::to_string(g) + " outside Z_" + std::to_string(k);
            for (Exponent s : h.elements(k))
                if (!std::binary_search(set.begin(), set.end(), (g + s) % k))
                    return where + " is not a left coset of S(omega)";
        }
    }
    for (std::size_t d = 1; d < triple.S.size(); ++d)
        for (std::size_t b = 0; b < q.count(d); ++b) {
            const Simplex& psi = q.simplex(d, b);
            for (std::size_t t = 0; t < psi.size(); ++t)
                if (triple.transfer(d, b, q.index_of(psi.facet(t))).empty())
                    return "T*(" + psi.to_string() + ", " + psi.facet(t).to_string() + ") is empty";
        }
    return std::nullopt;
}

GroupRingMatrix transfer_matrix(const IsotropyTriple& triple, std::size_t d, Field field,
                                const std::vector<std::size_t>& row_order, const std::vector<std::size_t>& col_order)
{
    const Complex& q = triple.quotient;
    if (d < 1 || static_cast<int>(d) > q.dim() + 1)
        throw DimensionError("transfer matrix dimension " + std::to_string(d) + " outside 1.." +
                             std::to_string(q.dim() + 1));
    const std::size_t m = q.count(d - 1);
    const std::size_t n = q.count(d);
    if ((!row_order.empty() && row_order.size() != m) || (!col_order.empty() && col_order.size() != n))
        throw InvalidArgumentError("ordering size does not match simplex count");
    GroupRingMatrix out(field, triple.k, m, n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t omega = row_order.empty() ? a : row_order[a];
            const std::size_t psi = col_order.empty() ? b : col_order[b];
            out(a, b) = sigma(triple.transfer(d, psi, omega), field, triple.k);
        }
    return out;
}

std::size_t coset_map(const IsotropyTriple& triple, const Simplex& omega, Exponent g)
{
    const std::size_t idx = triple.quotient.index_of(omega);
    return coset_position(triple.isotropy(omega.dim(), idx), GroupOrdering(triple.k), g % triple.k) + 1;
}

ComplexOfGroups ComplexOfGroups::build(const IsotropyTriple& triple, TwoCellRule rule)
{
    if (auto bad = triple_violation(triple))
        throw ValidationError(*bad);
    ComplexOfGroups cog;
    cog.k_ = triple.k;
    cog.rule_ = rule;
    cog.base_ = triple.quotient;
    cog.groups_ = triple.S;
    for (const auto& [key, set] : triple.tstar)
        if (!set.empty())
            cog.codim1_[key] = (triple.k - set.front()) % triple.k;
    return cog;
}

Subgroup ComplexOfGroups::group(const Simplex& psi) const
{
    return groups_.at(psi.dim()).at(base_.index_of(psi));
}

Exponent ComplexOfGroups::transfer(const Simplex& psi1, const Simplex& psi2) const
{
    if (!psi1.contains(psi2))
        throw InvalidArgumentError(psi2.to_string() + " is not a face of " + psi1.to_string());
    Exponent total = 0;
    Simplex current = psi1;
    while (current.size() > psi2.size()) {
        std::size_t drop = 0;
        while (psi2.contains(current[drop]))
            ++drop;
        Simplex next = current.facet(drop);
        const FacePair key{current.dim(), base_.index_of(current), base_.index_of(next)};
        total = (total + codim1_.at(key)) % k_;
        current = std::move(next);
    }
    return total;
}

Exponent ComplexOfGroups::two_cell(const Simplex& psi1, const Simplex& psi2, const Simplex& psi3) const
{
    const Exponent t12 = transfer(psi1, psi2);
    const Exponent t23 = transfer(psi2, psi3);
    const Exponent t13 = transfer(psi1, psi3);
    if (rule_ == TwoCellRule::literal)
        return (t23 + t12 + t13) % k_;
    return (t23 + t12 + k_ - t13) % k_;
}

std::string AxiomViolation::to_string() const
{
    std::ostringstream os;
    os << axiom << " fails at (";
    for (std::size_t i = 0; i < simplices.size(); ++i)
        os << (i ? ", " : "") << simplices[i].to_string();
    os << ')';
    return os.str();
}

namespace {

std::vector<Simplex> faces_of(const Simplex& s)
{
    std::vector<Simplex> out;
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        std::vector<Vertex> face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1U << i))
                face.push_back(s[i]);
        out.emplace_back(std::move(face));
    }
    return out;
}

} // namespace

std::optional<AxiomViolation> validate(const ComplexOfGroups& cog)
{
    const std::uint32_t k = cog.k();
    const Complex& y = cog.base();
    for (int d = 0; d <= y.dim(); ++d)
        for (const Simplex& p1 : y.simplices(static_cast<std::size_t>(d))) {
            const auto faces = faces_of(p1);
            if (cog.transfer(p1, p1) != 0)
                return AxiomViolation{"(a) f(psi, psi) = id", {p1}};
            if (cog.morphism_cell(p1, p1) != 0)
                return AxiomViolation{"morphism (a) Phi(psi, psi) = e", {p1}};
            for (const Simplex& p2 : faces) {
                // f is conjugation in an abelian group, hence the inclusion S(p1) -> S(p2).
                if (cog.group(p2).order % cog.group(p1).order != 0)
                    return AxiomViolation{"f(psi1, psi2) maps into the face group", {p1, p2}};
                if (cog.two_cell(p1, p1, p2) != 0 || cog.two_cell(p1, p2, p2) != 0)
                    return AxiomViolation{"(b) degenerate 2-cells are trivial", {p1, p2}};
                for (const Simplex& p3 : faces_of(p2)) {
                    const Exponent g123 = cog.two_cell(p1, p2, p3);
                    if (!cog.group(p3).contains(g123, k))
                        return AxiomViolation{"2-cell lies in the group of the smallest simplex", {p1, p2, p3}};
                    if ((g123 + cog.morphism_cell(p1, p3)) % k !=
                        (cog.morphism_cell(p2, p3) + cog.morphism_cell(p1, p2)) % k)
                        return AxiomViolation{"morphism (b) compatibility with 2-cells", {p1, p2, p3}};
                    for (const Simplex& p4 : faces_of(p3)) {
                        const Exponent lhs = (g123 + cog.two_cell(p1, p3, p4)) % k;
                        const Exponent rhs = (cog.two_cell(p2, p3, p4) + cog.two_cell(p1, p2, p4)) % k;
                        if (lhs != rhs)
                            return AxiomViolation{"(c) cocycle condition", {p1, p2, p3, p4}};
                    }
                }
            }
        }
    return std::nullopt;
}

} // namespace zkhom
