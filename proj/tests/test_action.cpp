#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "catch_support.hpp"

#include "support.hpp"
#include "zkhom/action.hpp"
#include "zkhom/error.hpp"

using namespace zkhom;

namespace {

CyclicAction path_action()
{
    return CyclicAction::create(Complex::from_generators({{0, 1}, {1, 2}}), {2, 1, 0}, 2);
}

// Literal transcription of regularity: vertex lists drawn from a simplex with
// repetition, of every length up to one more than the simplex size.
bool oracle_regular(const CyclicAction& a)
{
    const std::uint32_t k = a.k();
    for (std::uint32_t order = 1; order <= k; ++order) {
        if (k % order)
            continue;
        const auto members = Subgroup{order}.elements(k);
        for (int d = 0; d <= a.complex().dim(); ++d)
            for (const Simplex& s : a.complex().simplices(static_cast<std::size_t>(d))) {
                for (std::size_t len = 1; len <= s.size() + 1; ++len) {
                    std::vector<std::size_t> pick(len, 0), exps(len, 0);
                    for (;;) {
                        std::vector<Vertex> img;
                        for (std::size_t i = 0; i < len; ++i)
                            img.push_back(a.apply(members[exps[i]], s[pick[i]]));
                        if (a.complex().contains(Simplex(img))) {
                            bool ok = false;
                            for (Exponent h : members) {
                                bool all = true;
                                for (std::size_t i = 0; i < len; ++i)
                                    all = all && a.apply(h, s[pick[i]]) == img[i];
                                ok = ok || all;
                            }
                            if (!ok)
                                return false;
                        }
                        std::size_t pos = 0;
                        while (pos < len) {
                            if (++exps[pos] < members.size())
                                break;
                            exps[pos] = 0;
                            if (++pick[pos] < s.size())
                                break;
                            pick[pos] = 0;
                            ++pos;
                        }
                        if (pos == len)
                            break;
                    }
                }
            }
    }
    return true;
}

} // namespace

TEST_CASE("action validation")
{
    std::vector<std::vector<Vertex>> octagon;
    std::vector<Vertex> rot;
    for (Vertex i = 0; i < 8; ++i) {
        octagon.push_back({i, (i + 1) % 8});
        rot.push_back((i + 4) % 8);
    }
    CHECK_NOTHROW(CyclicAction::create(Complex::from_generators(octagon), rot, 2));
    CHECK_NOTHROW(path_action());
    const Complex tri = Complex::from_generators({{0, 1, 2}});
    CHECK_THROWS_AS(CyclicAction::create(tri, {1, 0, 2}, 3), InvalidActionError);
    CHECK_THROWS_AS(CyclicAction::create(tri, {1, 1, 2}, 2), InvalidActionError);
    CHECK_THROWS_AS(CyclicAction::create(tri, {0, 1}, 1), InvalidActionError);
    CHECK_THROWS_AS(CyclicAction::create(Complex::from_generators({{0, 1}, {2}}), {2, 1, 0}, 2), InvalidActionError);
    CHECK_THROWS_AS(CyclicAction::create(tri, {0, 1, 2}, 0), InvalidActionError);
}

TEST_CASE("regularity examples")
{
    const CyclicAction antipodal = testsupport::load_corpus("cycle4_antipodal").action();
    const auto r = is_regular(antipodal);
    REQUIRE_FALSE(r.regular);
    CHECK(r.witness->subgroup.order == 2);
    CHECK(r.witness->vertices == std::vector<Vertex>{0, 1});
    CHECK(r.witness->exponents == std::vector<Exponent>{0, 1});
    CHECK(is_regular(testsupport::load_corpus("cycle8_rot").action()).regular);
    CHECK(is_regular(testsupport::load_corpus("trivial_k1_triangle").action()).regular);
    CHECK_THROWS_AS(quotient(antipodal), RegularityRequiredError);
}

TEST_CASE("repeated-vertex witness: an edge joining a vertex to its image")
{
    // Z_2 swaps the ends of a single edge.
    const CyclicAction flip = CyclicAction::create(Complex::from_generators({{0, 1}}), {1, 0}, 2);
    const auto r = is_regular(flip);
    REQUIRE_FALSE(r.regular);
    CHECK_FALSE(oracle_regular(flip));
}

TEST_CASE("regularity agrees with the literal oracle")
{
    for (const auto& name : testsupport::corpus_names()) {
        CAPTURE(name);
        const CyclicAction a = testsupport::load_corpus(name).action();
        CHECK(is_regular(a).regular == oracle_regular(a));
    }
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const CyclicAction a = testsupport::random_action(rng, 2 + rng() % 3, 2, false);
        CHECK(is_regular(a).regular == oracle_regular(a));
    }
}

TEST_CASE("regularize yields regular actions and keeps homology")
{
    const CyclicAction a = regularize(testsupport::load_corpus("cycle4_antipodal").action());
    CHECK(a.complex().count(0) == 16);
    CHECK(a.complex().count(1) == 16);
    CHECK(is_regular(a).regular);
    CHECK(oracle_regular(a));
    std::mt19937 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const CyclicAction raw = testsupport::random_action(rng, 2 + rng() % 2, 1, false);
        const CyclicAction reg = regularize(raw);
        CHECK(is_regular(reg).regular);
        CHECK(betti_direct(reg.complex(), Field::rationals()) == betti_direct(raw.complex(), Field::rationals()));
    }
    const CyclicAction again = regularize(testsupport::load_corpus("path_flip").action());
    CHECK(is_regular(again).regular);
}

TEST_CASE("quotient examples")
{
    const QuotientData oct = quotient(testsupport::load_corpus("cycle8_rot").action());
    CHECK(oct.quotient.count(0) == 4);
    CHECK(oct.quotient.count(1) == 4);
    const QuotientData path = quotient(path_action());
    CHECK(path.quotient == Complex::from_generators({{0, 1}}));
    CHECK(path.vertex_label == std::vector<Vertex>{0, 1, 0});
    const QuotientData tri = quotient(testsupport::load_corpus("two_triangles_swap").action());
    CHECK(tri.quotient == Complex::from_generators({{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("lifts and isotropy")
{
    const CyclicAction path = path_action();
    const QuotientData qd = quotient(path);
    const Lift lo = lex_lift(qd);
    CHECK(path.complex().simplex(1, lo(1, 0)) == Simplex({0, 1}));
    CHECK(path.complex().simplex(0, lo(0, 1)) == Simplex({1}));
    CHECK(path.complex().simplex(1, lex_max_lift(qd)(1, 0)) == Simplex({1, 2}));
    CHECK(is_lift(qd, lo));

    const CyclicAction oct = testsupport::load_corpus("cycle8_rot").action();
    const QuotientData oq = quotient(oct);
    const std::size_t edge = oq.projection[1][oct.complex().index_of(Simplex({3, 4}))];
    CHECK(oct.complex().simplex(1, lex_lift(oq)(1, edge)) == Simplex({0, 7}));

    CHECK(path.isotropy(Simplex({1})).order == 2);
    CHECK(path.isotropy(Simplex({0, 1})).order == 1);
    CHECK_THROWS_AS(path.isotropy(Simplex({0, 2})), UnknownSimplexError);
    const CyclicAction trivial = testsupport::load_corpus("trivial_k3_tetrahedron").action();
    for (std::size_t d = 0; d <= 2; ++d)
        for (std::size_t i = 0; i < trivial.complex().count(d); ++i)
            CHECK(trivial.isotropy(d, i).order == 3);
}

TEST_CASE("coset orderings")
{
    const GroupOrdering two(2);
    CHECK(coset_ordering(Subgroup{1}, two) == std::vector<ExponentSet>{{0}, {1}});
    CHECK(coset_ordering(Subgroup{2}, two) == std::vector<ExponentSet>{{0, 1}});
    CHECK(coset_ordering(Subgroup{2}, GroupOrdering(4)) == std::vector<ExponentSet>{{0, 2}, {1, 3}});
    CHECK(coset_ordering(Subgroup{1}, GroupOrdering(5, 2)) == std::vector<ExponentSet>{{0}, {2}, {4}, {1}, {3}});
    CHECK_THROWS_AS(GroupOrdering(4, 2), InvalidGeneratorError);
}

TEST_CASE("compatible ordering and index-reducing map, path example")
{
    const CyclicAction path = path_action();
    const QuotientData qd = quotient(path);
    const Lift lift = lex_lift(qd);
    const GroupOrdering g(2);
    const LiftedPartition p0 = compatible_ordering(path, qd, lift, 0, {0, 1}, g);
    std::vector<Simplex> got;
    for (std::size_t i : p0.ordering)
        got.push_back(path.complex().simplex(0, i));
    CHECK(got == std::vector<Simplex>{Simplex({0}), Simplex({2}), Simplex({1})});
    CHECK(p0.block_start == std::vector<std::size_t>{0, 2});
    CHECK(index_reducing(p0, g) == std::vector<std::size_t>{0, 1, 2, 2});

    const LiftedPartition p1 = compatible_ordering(path, qd, lift, 1, {0}, g);
    CHECK(path.complex().simplex(1, p1.ordering[0]) == Simplex({0, 1}));
    CHECK(path.complex().simplex(1, p1.ordering[1]) == Simplex({1, 2}));
    CHECK(index_reducing(p1, g) == std::vector<std::size_t>{0, 1});

    const CyclicAction trivial = testsupport::load_corpus("trivial_k2_triangles").action();
    const QuotientData tq = quotient(trivial);
    const LiftedPartition tp = compatible_ordering(trivial, tq, lex_lift(tq), 1,
                                                   ComplexOrdering::canonical(tq.quotient)[1], g);
    for (std::size_t i = 0; i < tp.ordering.size(); ++i)
        CHECK(tp.ordering[i] == i);
    const auto j = index_reducing(tp, g);
    for (std::size_t i = 0; i < j.size(); ++i)
        CHECK(j[i] == i / 2);
}

TEST_CASE("structural properties over the corpus and random actions")
{
    std::vector<CyclicAction> actions;
    for (const auto& name : testsupport::corpus_names())
        actions.push_back(testsupport::regular_corpus_action(name));
    std::mt19937 rng(21);
    for (int trial = 0; trial < 8; ++trial)
        actions.push_back(testsupport::random_action(rng, 2 + rng() % 3, 2));

    for (const CyclicAction& a : actions) {
        const Complex& x = a.complex();
        const std::uint32_t k = a.k();
        REQUIRE(is_regular(a).regular);
        const QuotientData qd = quotient(a);
        for (std::size_t d = 0; d <= static_cast<std::size_t>(x.dim()); ++d)
            for (std::size_t i = 0; i < x.count(d); ++i) {
                const Simplex& psi = x.simplex(d, i);
                CHECK(a.orbit_size(d, i) * a.isotropy(d, i).order == k);
                for (Exponent g = 0; g < k; ++g) {
                    const Simplex moved = a.apply(g, psi);
                    // g fixes psi and g psi in common vertex-wise.
                    for (Vertex v : psi.vertices())
                        if (moved.contains(v))
                            CHECK(a.apply(g, v) == v);
                    // A face and its translate inside the same simplex coincide.
                    for (std::size_t t = 0; t < psi.size() && d > 0; ++t) {
                        const Simplex face = psi.facet(t);
                        if (psi.contains(a.apply(g, face)))
                            CHECK(a.apply(g, face) == face);
                    }
                }
                // Exactly one face of psi over each face of its image.
                const Simplex& image = qd.quotient.simplex(d, qd.projection[d][i]);
                for (std::size_t t = 0; t < image.size() && d > 0; ++t) {
                    const Simplex omega = image.facet(t);
                    int over = 0;
                    for (std::size_t u = 0; u < psi.size(); ++u)
                        over += qd.quotient.index_of(Simplex([&] {
                                    std::vector<Vertex> l;
                                    const Simplex face = psi.facet(u);
                                    for (Vertex v : face.vertices())
                                        l.push_back(qd.vertex_label[v]);
                                    return l;
                                }())) == qd.quotient.index_of(omega);
                    CHECK(over == 1);
                }
            }
        // J(L_b) = I_b, for both lifts and every generator of Z_k.
        for (const Lift& lift : {lex_lift(qd), lex_max_lift(qd)})
            for (std::uint32_t s = 1; s < std::max<std::uint32_t>(k, 2); ++s) {
                if (std::gcd(s, k) != 1)
                    continue;
                const GroupOrdering ord(k, s);
                for (std::size_t d = 0; d <= static_cast<std::size_t>(x.dim()); ++d) {
                    const auto order = ComplexOrdering::canonical(qd.quotient)[d];
                    const LiftedPartition lp = compatible_ordering(a, qd, lift, d, order, ord);
                    const auto j = index_reducing(lp, ord);
                    std::vector<std::size_t> sorted = lp.ordering;
                    std::sort(sorted.begin(), sorted.end());
                    for (std::size_t i = 0; i < sorted.size(); ++i)
                        CHECK(sorted[i] == i);
                    for (std::size_t b = 0; b < lp.block_count(); ++b) {
                        CHECK(lp.ordering[lp.block_start[b]] == lift(d, order[b]));
                        std::set<std::size_t> image(j.begin() + static_cast<long>(b * k),
                                                    j.begin() + static_cast<long>((b + 1) * k));
                        std::set<std::size_t> block;
                        for (std::size_t t = 0; t < lp.block_size(b, k); ++t)
                            block.insert(lp.block_start[b] + t);
                        CHECK(image == block);
                    }
                }
            }
    }
}
