#include <numeric>
#include <random>

#include "catch_support.hpp"

#include "support.hpp"
#include "zkhom/error.hpp"
#include "zkhom/snf_group_ring.hpp"

using namespace zkhom;

namespace {

GroupRingElem random_elem(std::mt19937& rng, Field f, std::uint32_t k)
{
    GroupRingElem w = GroupRingElem::zero(f, k);
    const int terms = static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t)
        w += GroupRingElem::monomial(Scalar(f, static_cast<long long>(rng() % 3) - 1), k, rng() % k);
    return w;
}

GroupRingMatrix random_matrix(std::mt19937& rng, Field f, std::uint32_t k, std::size_t m, std::size_t n)
{
    GroupRingMatrix a(f, k, m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = random_elem(rng, f, k);
    return a;
}

GroupRingMatrix identity(Field f, std::uint32_t k, std::size_t n)
{
    GroupRingMatrix id(f, k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        id(i, i) = GroupRingElem::identity(f, k);
    return id;
}

// Product of elementary operations with unit pivots +-alpha^g.
GroupRingMatrix random_unimodular(std::mt19937& rng, Field f, std::uint32_t k, std::size_t n)
{
    GroupRingMatrix u = identity(f, k, n);
    for (int step = 0; step < 8; ++step) {
        GroupRingMatrix e = identity(f, k, n);
        const std::size_t i = rng() % n, j = rng() % n;
        if (i == j)
            e(i, i) = GroupRingElem::monomial(Scalar(f, rng() % 2 ? 1 : -1), k, rng() % k);
        else
            e(i, j) = random_elem(rng, f, k);
        u = rng() % 2 ? u * e : e * u;
    }
    return u;
}

std::size_t rank_from_lifts(const SnfDiagonal& snf, std::uint32_t k)
{
    std::size_t r = 0;
    for (const Poly& f : snf.lifts)
        r += k - *f.degree();
    return r;
}

std::vector<std::vector<long long>> ints(const FieldMatrix& m)
{
    std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& s = m(i, j);
            out[i][j] = s.field().is_rational() ? boost::multiprecision::numerator(s.rational()).convert_to<long long>()
                                                : static_cast<long long>(s.residue());
        }
    return out;
}

} // namespace

TEST_CASE("snf examples")
{
    const Field q = Field::rationals();
    GroupRingMatrix path(q, 2, 2, 1);
    path(0, 0) = -GroupRingElem::identity(q, 2);
    path(1, 0) = sigma({0, 1}, q, 2);
    const SnfDiagonal p = snf_over_group_ring(path);
    CHECK(p.lifts_string() == "[1]");
    CHECK(p.diagonal == std::vector<GroupRingElem>{GroupRingElem::identity(q, 2)});

    // Boundary of the hollow triangle, every entry +-e.
    const FieldMatrix tri = boundary_matrix(Complex::from_generators({{0, 1}, {1, 2}, {0, 2}}), 1, q);
    GroupRingMatrix t(q, 2, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            t(i, j) = GroupRingElem::monomial(tri(i, j), 2, 0);
    const SnfDiagonal ts = snf_over_group_ring(t);
    CHECK(ts.lifts_string() == "[1, 1, x^2-1]");
    CHECK(ts.diagonal[0] == GroupRingElem::identity(q, 2));
    CHECK(ts.diagonal[1] == GroupRingElem::identity(q, 2));
    CHECK(ts.diagonal[2].is_zero());

    const SnfDiagonal z = snf_over_group_ring(GroupRingMatrix(q, 2, 2, 2));
    CHECK(z.lifts_string() == "[x^2-1, x^2-1]");
    CHECK(z.diagonal[0].is_zero());
    CHECK(z.diagonal[1].is_zero());

    CHECK(snf_over_group_ring(GroupRingMatrix(q, 3, 0, 4)).lifts.empty());
    CHECK(snf_over_group_ring(GroupRingMatrix(q, 3, 2, 0)).lifts_string() == "[]");

    // 1 + a over F_2 with k = 2 is nilpotent: the factor is x + 1.
    GroupRingMatrix nil(Field::prime(2), 2, 1, 1);
    nil(0, 0) = sigma({0, 1}, Field::prime(2), 2);
    CHECK(snf_over_group_ring(nil).lifts_string() == "[x+1]");

    CHECK_THROWS_AS(snf_over_group_ring(path, 2), InvalidGeneratorError);
}

TEST_CASE("snf properties on random matrices")
{
    std::mt19937 rng(2024);
    for (const Field& f : testsupport::standard_fields())
        for (int trial = 0; trial < 80; ++trial) {
            const std::uint32_t k = 1 + rng() % 8;
            const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
            const GroupRingMatrix a = random_matrix(rng, f, k, m, n);
            const SnfDiagonal snf = snf_over_group_ring(a);
            REQUIRE(snf.lifts.size() == std::min(m, n));
            const Poly mod = Poly::cyclotomic_modulus(f, k);
            for (std::size_t i = 0; i < snf.lifts.size(); ++i) {
                CHECK(snf.lifts[i].is_monic());
                CHECK(divides(snf.lifts[i], mod));
                if (i + 1 < snf.lifts.size())
                    CHECK(divides(snf.lifts[i], snf.lifts[i + 1]));
                CHECK(snf.diagonal[i] == GroupRingElem::from_poly(snf.lifts[i], k));
            }

            const FieldMatrix expanded = rho_extend(a);
            const std::size_t r = rank_from_lifts(snf, k);
            CHECK(r == field_rank(expanded));
            CHECK(r == testsupport::oracle_rank(ints(expanded), f.modulus()));

            // Feeding the diagonal back in reproduces it.
            GroupRingMatrix d(f, k, m, n);
            for (std::size_t i = 0; i < snf.diagonal.size(); ++i)
                d(i, i) = snf.diagonal[i];
            CHECK(snf_over_group_ring(d).lifts == snf.lifts);

            const GroupRingMatrix p = random_unimodular(rng, f, k, m);
            const GroupRingMatrix qm = random_unimodular(rng, f, k, n);
            CHECK(snf_over_group_ring(p * a * qm).lifts == snf.lifts);

            for (std::uint32_t s = 1; s < k; ++s)
                if (std::gcd(s, k) == 1) {
                    const SnfDiagonal other = snf_over_group_ring(a, s);
                    CHECK(rank_from_lifts(other, k) == r);
                    CHECK(r == field_rank(rho_extend(a, s)));
                }
        }
}
