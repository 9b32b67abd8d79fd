#include "zkhom/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "zkhom/error.hpp"

namespace zkhom {

ExponentSet Subgroup::elements(std::uint32_t k) const
{
    ExponentSet out;
    const std::uint32_t step = k / order;
    for (std::uint32_t g = 0; g < k; g += step)
        out.push_back(g);
    return out;
}

std::vector<Subgroup> subgroups(std::uint32_t k)
{
    std::vector<Subgroup> out;
    for (std::uint32_t d = 1; d <= k; ++d)
        if (k % d == 0)
            out.push_back(Subgroup{d});
    return out;
}

GroupOrdering::GroupOrdering(std::uint32_t k, std::uint32_t generator) : k_(k), generator_(k ? generator % k : 0)
{
    if (k == 0)
        throw InvalidArgumentError("group order must be positive");
    if (std::gcd(generator_, k) != 1 && k != 1)
        throw InvalidGeneratorError("exponent " + std::to_string(generator) + " does not generate Z_" + std::to_string(k));
    position_.resize(k);
    for (std::size_t c = 0; c < k; ++c)
        position_[element(c)] = c;
}

std::vector<ExponentSet> coset_ordering(Subgroup h, const GroupOrdering& ordering)
{
    const std::uint32_t k = ordering.k();
    const ExponentSet members = h.elements(k);
    std::vector<ExponentSet> out;
    for (std::size_t c = 0; c < k; ++c) {
        const Exponent g = ordering.element(c);
        ExponentSet coset;
        for (Exponent m : members)
            coset.push_back((g + m) % k);
        std::sort(coset.begin(), coset.end());
        if (std::find(out.begin(), out.end(), coset) == out.end())
            out.push_back(std::move(coset));
    }
    return out;
}

std::size_t coset_position(Subgroup h, const GroupOrdering& ordering, Exponent g)
{
    const auto cosets = coset_ordering(h, ordering);
    for (std::size_t i = 0; i < cosets.size(); ++i)
        if (std::binary_search(cosets[i].begin(), cosets[i].end(), g % ordering.k()))
            return i;
    throw InvalidArgumentError("exponent outside the group");
}

CyclicAction CyclicAction::create(Complex complex, std::vector<Vertex> generator, std::uint32_t k)
{
    if (k == 0)
        throw InvalidActionError("group order k must be positive");
    const std::size_t n = generator.size();
    std::vector<bool> hit(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        if (generator[v] >= n)
            throw InvalidActionError("vertex " + std::to_string(v) + " maps to " + std::to_string(generator[v]) +
                                     ", outside the permutation's domain 0.." + std::to_string(n - 1));
        if (hit[generator[v]])
            throw InvalidActionError("not a bijection: vertex " + std::to_string(generator[v]) + " is hit twice");
        hit[generator[v]] = true;
    }
    for (Vertex v : complex.vertices())
        if (v >= n)
            throw InvalidActionError("permutation is undefined on vertex " + std::to_string(v));

    CyclicAction action;
    action.k_ = k;
    action.powers_.resize(k + 1);
    action.powers_[0].resize(n);
    std::iota(action.powers_[0].begin(), action.powers_[0].end(), Vertex{0});
    for (std::uint32_t c = 1; c <= k; ++c) {
        action.powers_[c].resize(n);
        for (std::size_t v = 0; v < n; ++v)
            action.powers_[c][v] = generator[action.powers_[c - 1][v]];
    }
    for (std::size_t v = 0; v < n; ++v)
        if (action.powers_[k][v] != v)
            throw InvalidActionError("order of the permutation does not divide k = " + std::to_string(k) +
                                     ": vertex " + std::to_string(v) + " is not fixed by the k-th power");
    action.powers_.pop_back();

    const int top = complex.dim();
    action.images_.resize(static_cast<std::size_t>(top + 1));
    action.isotropy_.resize(static_cast<std::size_t>(top + 1));
    for (std::size_t d = 0; d < action.images_.size(); ++d) {
        const auto& level = complex.simplices(d);
        action.images_[d].assign(k, std::vector<std::size_t>(level.size()));
        for (std::size_t i = 0; i < level.size(); ++i) {
            std::uint32_t fixed = 0;
            for (std::uint32_t c = 0; c < k; ++c) {
                const Simplex img = action.apply_raw(c, level[i]);
                auto idx = complex.find(img);
                if (!idx || img.size() != level[i].size())
                    throw InvalidActionError("not simplicial: " + level[i].to_string() + " maps to " +
                                             img.to_string() + ", which is not a simplex");
                action.images_[d][c][i] = *idx;
                if (*idx == i)
                    ++fixed;
            }
            action.isotropy_[d].push_back(Subgroup{fixed});
        }
    }
    action.complex_ = std::move(complex);
    action.generator_ = std::move(generator);
    return action;
}

Simplex CyclicAction::apply_raw(Exponent g, const Simplex& s) const
{
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (Vertex v : s.vertices())
        out.push_back(powers_[g][v]);
    return Simplex(std::move(out));
}

Simplex CyclicAction::apply(Exponent g, const Simplex& s) const
{
    return apply_raw(g % k_, s);
}

Subgroup CyclicAction::isotropy(const Simplex& s) const
{
    return isotropy(s.dim(), complex_.index_of(s));
}

std::string RegularityWitness::to_string() const
{
    std::ostringstream os;
    os << "subgroup of order " << subgroup.order << ", vertices (";
    for (std::size_t i = 0; i < vertices.size(); ++i)
        os << (i ? "," : "") << vertices[i];
    os << "), exponents (";
    for (std::size_t i = 0; i < exponents.size(); ++i)
        os << (i ? "," : "") << exponents[i];
    os << ')';
    return os.str();
}

namespace {

// Searches h_0..h_d over `members` for a tuple whose image set is a simplex
// that no single subgroup element realizes.
std::optional<RegularityWitness> check_simplex(const CyclicAction& action, Subgroup h, const ExponentSet& members,
                                               const Simplex& s)
{
    const std::size_t n = s.size();
    std::vector<std::size_t> digit(n, 0);
    std::vector<Vertex> image(n);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i)
            image[i] = action.apply(members[digit[i]], s[i]);
        if (action.complex().contains(Simplex(image))) {
            bool realized = false;
            for (Exponent g : members) {
                bool all = true;
                for (std::size_t i = 0; i < n && all; ++i)
                    all = action.apply(g, s[i]) == image[i];
                if (all) {
                    realized = true;
                    break;
                }
            }
            if (!realized) {
                RegularityWitness w{h, s.vertices(), {}};
                for (std::size_t i = 0; i < n; ++i)
                    w.exponents.push_back(members[digit[i]]);
                return w;
            }
        }
        // Odometer with the last position running fastest.
        std::size_t pos = n;
        while (pos > 0 && ++digit[pos - 1] == members.size())
            digit[--pos] = 0;
        if (pos == 0)
            return std::nullopt;
    }
}

} // namespace

RegularityResult is_regular(const CyclicAction& action)
{
    const Complex& x = action.complex();
    for (Subgroup h : subgroups(action.k())) {
        const ExponentSet members = h.elements(action.k());
        for (int d = 0; d <= x.dim(); ++d)
            for (const Simplex& s : x.simplices(static_cast<std::size_t>(d)))
                if (auto w = check_simplex(action, h, members, s))
                    return {false, std::move(w)};
        // A repeated vertex v, v with exponents e, g: {v, g v} must not be an
        // edge unless g fixes v.
        for (Vertex v : x.vertices())
            for (Exponent g : members) {
                const Vertex w = action.apply(g, v);
                if (w != v && x.contains(Simplex({v, w})))
                    return {false, RegularityWitness{h, {v, v}, {0, g}}};
            }
    }
    return {};
}

CyclicAction subdivide(const CyclicAction& action)
{
    Subdivision sd = barycentric_subdivision(action.complex());
    std::vector<Vertex> generator(sd.complex.count(0));
    for (std::size_t d = 0; d < sd.barycenter.size(); ++d)
        for (std::size_t i = 0; i < sd.barycenter[d].size(); ++i)
            generator[sd.barycenter[d][i]] = sd.barycenter[d][action.image(d, i, 1 % action.k())];
    return CyclicAction::create(std::move(sd.complex), std::move(generator), action.k());
}

CyclicAction regularize(const CyclicAction& action)
{
    return subdivide(subdivide(action));
}

QuotientData quotient(const CyclicAction& action)
{
    if (auto check = is_regular(action); !check.regular)
        throw RegularityRequiredError("quotient requires a regular action; witness: " + check.witness->to_string());

    const Complex& x = action.complex();
    QuotientData qd;
    // Vertex orbits are labelled by increasing least element.
    qd.vertex_label.assign(action.generator().size(), Vertex(-1));
    Vertex next = 0;
    for (Vertex v : x.vertices()) {
        if (qd.vertex_label[v] != Vertex(-1))
            continue;
        for (std::uint32_t c = 0; c < action.k(); ++c)
            qd.vertex_label[action.apply(c, v)] = next;
        ++next;
    }

    std::vector<std::vector<Vertex>> generators;
    for (int d = 0; d <= x.dim(); ++d)
        for (const Simplex& s : x.simplices(static_cast<std::size_t>(d))) {
            std::vector<Vertex> labels;
            for (Vertex v : s.vertices())
                labels.push_back(qd.vertex_label[v]);
            generators.push_back(std::move(labels));
        }
    qd.quotient = Complex::from_generators(generators);

    const int top = x.dim();
    qd.projection.resize(static_cast<std::size_t>(top + 1));
    qd.orbits.resize(static_cast<std::size_t>(top + 1));
    std::size_t g = 0;
    for (std::size_t d = 0; d < qd.projection.size(); ++d) {
        qd.orbits[d].resize(qd.quotient.count(d));
        for (std::size_t i = 0; i < x.count(d); ++i, ++g) {
            const Simplex image(generators[g]);
            if (image.size() != d + 1)
                throw RegularityRequiredError("simplex " + x.simplex(d, i).to_string() + " collapses in the quotient");
            const std::size_t a = qd.quotient.index_of(image);
            qd.projection[d].push_back(a);
            qd.orbits[d][a].push_back(i);
        }
        for (std::size_t a = 0; a < qd.orbits[d].size(); ++a) {
            const auto& members = qd.orbits[d][a];
            if (members.size() != action.orbit_size(d, members.front()))
                throw RegularityRequiredError("preimage of quotient simplex " + qd.quotient.simplex(d, a).to_string() +
                                              " is not a single orbit");
        }
    }
    return qd;
}

Lift lex_lift(const QuotientData& qd)
{
    Lift lift;
    for (const auto& level : qd.orbits) {
        lift.of.emplace_back();
        for (const auto& orbit : level)
            lift.of.back().push_back(orbit.front());
    }
    return lift;
}

Lift lex_max_lift(const QuotientData& qd)
{
    Lift lift;
    for (const auto& level : qd.orbits) {
        lift.of.emplace_back();
        for (const auto& orbit : level)
            lift.of.back().push_back(orbit.back());
    }
    return lift;
}

Lift make_lift(const QuotientData& qd, LiftPolicy policy)
{
    return policy == LiftPolicy::lex_min ? lex_lift(qd) : lex_max_lift(qd);
}

bool is_lift(const QuotientData& qd, const Lift& lift)
{
    if (lift.of.size() != qd.orbits.size())
        return false;
    for (std::size_t d = 0; d < qd.orbits.size(); ++d) {
        if (lift.of[d].size() != qd.orbits[d].size())
            return false;
        for (std::size_t a = 0; a < lift.of[d].size(); ++a) {
            const std::size_t i = lift.of[d][a];
            if (i >= qd.projection[d].size() || qd.projection[d][i] != a)
                return false;
        }
    }
    return true;
}

LiftedPartition compatible_ordering(const CyclicAction& action, const QuotientData& qd, const Lift& lift, std::size_t d,
                                    const std::vector<std::size_t>& quotient_order, const GroupOrdering& ordering)
{
    if (ordering.k() != action.k())
        throw DomainMismatchError("group ordering and action disagree on k");
    if (quotient_order.size() != qd.quotient.count(d))
        throw InvalidArgumentError("quotient ordering does not cover dimension " + std::to_string(d));
    LiftedPartition lp;
    lp.dim = d;
    lp.quotient_order = quotient_order;
    for (std::size_t a : quotient_order) {
        const std::size_t base = lift(d, a);
        const Subgroup h = action.isotropy(d, base);
        lp.block_start.push_back(lp.ordering.size());
        lp.block_isotropy.push_back(h);
        // Any element of a coset moves the lift to the same simplex; use the first listed.
        for (const ExponentSet& coset : coset_ordering(h, ordering)) {
            Exponent rep = coset.front();
            for (std::size_t c = 0; c < ordering.k(); ++c)
                if (std::binary_search(coset.begin(), coset.end(), ordering.element(c))) {
                    rep = ordering.element(c);
                    break;
                }
            lp.ordering.push_back(action.image(d, base, rep));
        }
    }
    return lp;
}

std::vector<std::size_t> index_reducing(const LiftedPartition& lp, const GroupOrdering& ordering)
{
    const std::uint32_t k = ordering.k();
    std::vector<std::size_t> out;
    out.reserve(lp.block_count() * k);
    for (std::size_t b = 0; b < lp.block_count(); ++b) {
        const auto cosets = coset_ordering(lp.block_isotropy[b], ordering);
        for (std::size_t c = 0; c < k; ++c) {
            const Exponent g = ordering.element(c);
            std::size_t gamma = 0;
            while (!std::binary_search(cosets[gamma].begin(), cosets[gamma].end(), g))
                ++gamma;
            out.push_back(lp.block_start[b] + gamma);
        }
    }
    return out;
}

} // namespace zkhom
