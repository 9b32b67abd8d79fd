#include "zkhom/verify.hpp"

#include <numeric>
#include <sstream>

#include "zkhom/error.hpp"
#include "zkhom/pipeline.hpp"

namespace zkhom {

namespace {

class Suite {
public:
    void fail(const std::string& name, const std::string& detail)
    {
        for (auto& r : results_)
            if (r.name == name) {
                if (r.ok) {
                    r.ok = false;
                    r.detail = detail;
                }
                return;
            }
        results_.push_back({name, false, detail});
    }

    void touch(const std::string& name)
    {
        for (const auto& r : results_)
            if (r.name == name)
                return;
        results_.push_back({name, true, ""});
    }

    void check(const std::string& name, bool ok, const std::string& detail)
    {
        touch(name);
        if (!ok)
            fail(name, detail);
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    os << ']';
    return os.str();
}

std::vector<std::uint32_t> generators_of(std::uint32_t k)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 1; s <= std::max<std::uint32_t>(k - 1, 1); ++s)
        if (std::gcd(s, k) == 1 || k == 1)
            out.push_back(s);
    return out;
}

void triple_checks(Suite& suite, const IsotropyTriple& triple, const std::vector<Field>& fields,
                   std::vector<std::vector<std::size_t>>* betti_out)
{
    const auto bad = triple_violation(triple);
    suite.check("tstar_coset", !bad, bad.value_or(""));
    if (bad)
        return;

    const auto cog = validate(ComplexOfGroups::build(triple));
    suite.check("complex_of_groups_axioms", !cog, cog ? cog->to_string() : "");

    for (const Field& f : fields) {
        std::vector<std::size_t> first;
        for (std::uint32_t s : generators_of(triple.k)) {
            CompressedResult r;
            try {
                r = compressed_betti(triple, f, s);
            } catch (const ValidationError& e) {
                suite.fail("betti_nonnegative", f.name() + ": " + e.what());
                return;
            }
            suite.touch("betti_nonnegative");
            for (const auto& dim : r.per_dim) {
                const std::string why = snf_chain_violation(dim.snf, triple.k);
                suite.check("snf_divisibility_chain", why.empty(),
                            f.name() + " d=" + std::to_string(dim.d) + ": " + why);
            }
            if (first.empty())
                first = r.betti;
            suite.check("generator_independence", r.betti == first,
                        f.name() + " generator " + std::to_string(s) + ": " + join(r.betti) + " vs " + join(first));
        }
        if (betti_out)
            betti_out->push_back(first);
    }
}

} // namespace

std::string snf_chain_violation(const SnfDiagonal& snf, std::uint32_t k)
{
    for (std::size_t i = 0; i < snf.lifts.size(); ++i) {
        const Poly& f = snf.lifts[i];
        if (!f.is_monic())
            return "lift " + f.to_string() + " is not monic";
        if (!divides(f, Poly::cyclotomic_modulus(f.field(), k)))
            return "lift " + f.to_string() + " does not divide x^" + std::to_string(k) + "-1";
        if (i + 1 < snf.lifts.size() && !divides(f, snf.lifts[i + 1]))
            return "lift " + f.to_string() + " does not divide " + snf.lifts[i + 1].to_string();
    }
    return {};
}

std::vector<CheckResult> verify_triple(const IsotropyTriple& triple, const std::vector<Field>& fields)
{
    Suite suite;
    triple_checks(suite, triple, fields, nullptr);
    return suite.take();
}

std::vector<CheckResult> verify_action(const CyclicAction& action, const std::vector<Field>& fields)
{
    Suite suite;
    const Complex& x = action.complex();
    const auto top = static_cast<std::size_t>(std::max(x.dim(), 0));
    const ChainBasis lo = ChainBasis::make(action, LiftPolicy::lex_min);
    const ChainBasis hi = ChainBasis::make(action, LiftPolicy::lex_max);

    for (const ChainBasis* basis : {&lo, &hi}) {
        const std::string which = basis == &lo ? "lex-min" : "lex-max";
        const Complex& q = basis->qd.quotient;
        for (std::size_t d = 1; d <= top; ++d)
            for (std::size_t b = 0; b < q.count(d); ++b)
                for (std::size_t t = 0; t <= d; ++t) {
                    const Simplex& psi = q.simplex(d, b);
                    const Simplex omega = psi.facet(t);
                    const bool same = extended_transfer(action, basis->qd, basis->lift, psi, omega) ==
                                      extended_transfer_via_face(action, basis->qd, basis->lift, psi, omega);
                    suite.check("tstar_two_routes", same, which + " at " + psi.to_string() + ", " + omega.to_string());
                }
    }

    const IsotropyTriple triple = lo.triple();
    std::vector<std::vector<std::size_t>> compressed;
    triple_checks(suite, triple, fields, &compressed);

    for (std::size_t d = 0; d <= top && x.dim() >= 0; ++d) {
        std::size_t dim_c = 0;
        for (const Subgroup& s : triple.S[d])
            dim_c += triple.k / s.order;
        suite.check("orbit_stabilizer", dim_c == x.count(d),
                    "d=" + std::to_string(d) + ": " + std::to_string(dim_c) + " vs " + std::to_string(x.count(d)));
    }

    for (std::size_t fi = 0; fi < fields.size(); ++fi) {
        const Field f = fields[fi];
        for (std::size_t d = 1; d <= top; ++d) {
            const FieldMatrix c = compatible_boundary(lo, d, f);
            if (d + 1 <= top) {
                const FieldMatrix c_up = compatible_boundary(lo, d + 1, f);
                suite.check("boundary_squared_zero", (c * c_up).is_zero(), f.name() + " d=" + std::to_string(d));
            }
            const std::size_t rank_c = field_rank(c);
            for (const ChainBasis* basis : {&lo, &hi}) {
                const LemmaCheck lemma = verify_expansion_lemma(*basis, d, f);
                suite.check("expansion_lemma", lemma.ok, f.name() + " " + lemma.detail);
            }
            const std::size_t rank_e = field_rank(isotropy_expansion(lo, d, f));
            suite.check("rank_preservation", rank_e == rank_c,
                        f.name() + " d=" + std::to_string(d) + ": " + std::to_string(rank_e) + " vs " +
                            std::to_string(rank_c));
            for (std::uint32_t s : generators_of(action.k())) {
                const std::size_t r = compressed_rank(triple, d, f, s);
                suite.check("main_theorem_rank", r == rank_c,
                            f.name() + " d=" + std::to_string(d) + " generator " + std::to_string(s) + ": " +
                                std::to_string(r) + " vs " + std::to_string(rank_c));
            }
        }
        if (fi < compressed.size()) {
            const auto direct = betti_direct(x, f);
            suite.check("betti_match", compressed[fi] == direct,
                        f.name() + ": compressed " + join(compressed[fi]) + ", direct " + join(direct));
            const auto other = compressed_betti(hi.triple(), f).betti;
            suite.check("lift_independence", other == compressed[fi],
                        f.name() + ": " + join(other) + " vs " + join(compressed[fi]));
        }
    }
    return suite.take();
}

} // namespace zkhom
