#include "zkhom/pipeline.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "zkhom/error.hpp"

namespace zkhom {

ChainBasis ChainBasis::make(const CyclicAction& action, LiftPolicy policy, std::uint32_t generator)
{
    QuotientData qd = quotient(action);
    Lift lift = make_lift(qd, policy);
    return make(action, std::move(qd), std::move(lift), generator);
}

ChainBasis ChainBasis::make(const CyclicAction& action, QuotientData qd, Lift lift, std::uint32_t generator)
{
    if (!is_lift(qd, lift))
        throw InvalidArgumentError("lift does not choose a simplex over every quotient simplex");
    ChainBasis basis;
    basis.action = &action;
    basis.ordering = GroupOrdering(action.k(), generator);
    basis.quotient_order = ComplexOrdering::canonical(qd.quotient);
    basis.qd = std::move(qd);
    basis.lift = std::move(lift);
    return basis;
}

LiftedPartition ChainBasis::partition(std::size_t d) const
{
    return compatible_ordering(*action, qd, lift, d, quotient_order[d], ordering);
}

IsotropyTriple ChainBasis::triple() const
{
    return build_triple(*action, qd, lift);
}

CompatibleOrientations compatible_orientations(const ChainBasis& basis)
{
    const CyclicAction& action = *basis.action;
    const Complex& x = action.complex();
    CompatibleOrientations out{OrientationAssignment(x), OrientationAssignment(basis.qd.quotient)};
    for (std::size_t d = 0; d < basis.lift.of.size(); ++d)
        for (std::size_t a = 0; a < basis.lift.of[d].size(); ++a) {
            const std::size_t base = basis.lift(d, a);
            std::vector<Vertex> tuple = x.simplex(d, base).vertices();
            std::sort(tuple.begin(), tuple.end(),
                      [&](Vertex u, Vertex v) { return basis.qd.vertex_label[u] < basis.qd.vertex_label[v]; });
            std::vector<Vertex> moved(tuple.size());
            for (Exponent g = 0; g < action.k(); ++g) {
                for (std::size_t i = 0; i < tuple.size(); ++i)
                    moved[i] = action.apply(g, tuple[i]);
                out.x.set_sign(d, action.image(d, base, g), permutation_sign(moved));
            }
        }
    return out;
}

FieldMatrix compatible_boundary(const ChainBasis& basis, std::size_t d, Field field)
{
    const Complex& x = basis.action->complex();
    if (d < 1 || static_cast<int>(d) > x.dim() + 1)
        throw DimensionError("boundary dimension " + std::to_string(d) + " outside 1.." + std::to_string(x.dim() + 1));
    const auto orient = compatible_orientations(basis);
    return boundary_matrix(x, d, field, orient.x, basis.partition(d - 1).ordering, basis.partition(d).ordering);
}

FieldMatrix isotropy_expansion(const ChainBasis& basis, std::size_t d, Field field)
{
    const FieldMatrix c = compatible_boundary(basis, d, field);
    const auto rows = index_reducing(basis.partition(d - 1), basis.ordering);
    const auto cols = index_reducing(basis.partition(d), basis.ordering);
    FieldMatrix out(field, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = c(rows[i], cols[j]);
    return out;
}

GroupRingMatrix g_boundary_matrix(const IsotropyTriple& triple, std::size_t d, Field field,
                                  const ComplexOrdering& quotient_order)
{
    const Complex& q = triple.quotient;
    const auto& rows = quotient_order[d == 0 ? 0 : d - 1];
    const auto& cols = quotient_order[d];
    GroupRingMatrix t = transfer_matrix(triple, d, field, rows, cols);
    const FieldMatrix b = boundary_matrix(q, d, field, OrientationAssignment(q), rows, cols);
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
            t(i, j) *= b(i, j);
    return t;
}

namespace {

std::size_t rank_of_diagonal(const SnfDiagonal& snf)
{
    std::size_t total = 0;
    for (const auto& w : snf.diagonal)
        total += circulant_rank(w);
    return total;
}

bool in_range(const IsotropyTriple& triple, std::size_t d)
{
    return d >= 1 && static_cast<int>(d) <= triple.quotient.dim();
}

} // namespace

std::size_t compressed_rank(const IsotropyTriple& triple, std::size_t d, Field field, std::uint32_t generator,
                            const ComplexOrdering& quotient_order)
{
    const GroupOrdering check(triple.k, generator);
    if (!in_range(triple, d))
        return 0;
    return rank_of_diagonal(snf_over_group_ring(g_boundary_matrix(triple, d, field, quotient_order), generator));
}

CompressedResult compressed_betti(const IsotropyTriple& triple, Field field, std::uint32_t generator,
                                  const ComplexOrdering& quotient_order)
{
    const GroupOrdering check(triple.k, generator);
    CompressedResult out;
    out.field = field;
    out.generator = check.generator();
    const int top = triple.quotient.dim();
    if (top < 0)
        return out;
    const std::size_t levels = static_cast<std::size_t>(top) + 1;
    out.per_dim.resize(levels);
    std::vector<std::exception_ptr> errors(levels);

#pragma omp parallel for schedule(dynamic, 1)
    for (long long t = 0; t < static_cast<long long>(levels); ++t) {
        const auto d = static_cast<std::size_t>(t);
        try {
            DimensionReport& r = out.per_dim[d];
            r.d = d;
            for (const Subgroup& s : triple.S[d])
                r.dim_chains += triple.k / s.order;
            if (d >= 1) {
                r.snf = snf_over_group_ring(g_boundary_matrix(triple, d, field, quotient_order), generator);
                r.rank = rank_of_diagonal(r.snf);
            }
        } catch (...) {
            errors[d] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    for (std::size_t d = 0; d < levels; ++d) {
        const std::size_t above = d + 1 < levels ? out.per_dim[d + 1].rank : 0;
        if (out.per_dim[d].dim_chains < out.per_dim[d].rank + above)
            throw ValidationError("triple yields a negative Betti number in dimension " + std::to_string(d));
        out.betti.push_back(out.per_dim[d].dim_chains - out.per_dim[d].rank - above);
    }
    return out;
}

LemmaCheck verify_expansion_lemma(const ChainBasis& basis, std::size_t d, Field field)
{
    const CyclicAction& action = *basis.action;
    const std::uint32_t k = action.k();
    const FieldMatrix e = isotropy_expansion(basis, d, field);
    const IsotropyTriple triple = basis.triple();
    const FieldMatrix r = rho_extend(g_boundary_matrix(triple, d, field, basis.quotient_order), basis.ordering.generator());
    if (e.rows() != r.rows() || e.cols() != r.cols())
        return {false, "shape " + std::to_string(e.rows()) + "x" + std::to_string(e.cols()) + " vs " +
                           std::to_string(r.rows()) + "x" + std::to_string(r.cols())};

    const auto& rows = basis.quotient_order[d - 1];
    const auto& cols = basis.quotient_order[d];
    const Complex& x = action.complex();
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j) {
            if (!(e(i, j) == r(i, j))) {
                std::ostringstream os;
                os << "d=" << d << " entry (" << i << "," << j << "): expansion " << e(i, j).to_string()
                   << ", representation " << r(i, j).to_string();
                return {false, os.str()};
            }
            const Simplex face = action.apply(basis.ordering.element(i % k),
                                              x.simplex(d - 1, basis.lift(d - 1, rows[i / k])));
            const Simplex top = action.apply(basis.ordering.element(j % k), x.simplex(d, basis.lift(d, cols[j / k])));
            if (top.contains(face) == e(i, j).is_zero()) {
                std::ostringstream os;
                os << "d=" << d << " entry (" << i << "," << j << ") disagrees with containment of " << face.to_string()
                   << " in " << top.to_string();
                return {false, os.str()};
            }
        }
    return {};
}

} // namespace zkhom
