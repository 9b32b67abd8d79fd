#include <algorithm>
#include <numeric>
#include <random>

#include "catch_amalgamated.hpp"

#include "support.hpp"
#include "zkhom/error.hpp"
#include "zkhom/field_matrix.hpp"
#include "zkhom/poly.hpp"
#include "zkhom/poly_snf.hpp"

using namespace zkhom;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

Poly X(Field f)
{
    return Poly(f, {0, 1});
}

std::vector<std::vector<long long>> random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int spread)
{
    std::uniform_int_distribution<int> d(-spread, spread);
    std::vector<std::vector<long long>> m(r, std::vector<long long>(c));
    for (auto& row : m)
        for (auto& x : row)
            x = d(rng);
    return m;
}

// Determinantal divisor: monic gcd of all i x i minors, computed by cofactor expansion.
Poly minor_det(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    if (rows.size() == 1)
        return m(rows[0], cols[0]);
    Poly total(m.field());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<std::size_t> r(rows.begin() + 1, rows.end());
        std::vector<std::size_t> c = cols;
        c.erase(c.begin() + static_cast<long>(j));
        Poly term = m(rows[0], cols[j]) * minor_det(m, r, c);
        total = j % 2 ? total - term : total + term;
    }
    return total;
}

void subsets(std::size_t n, std::size_t size, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        subsets(n, size, i + 1, cur, out);
        cur.pop_back();
    }
}

Poly determinantal_divisor(const PolyMatrix& m, std::size_t i)
{
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), i, 0, cur, rs);
    subsets(m.cols(), i, 0, cur, cs);
    Poly g(m.field());
    for (const auto& r : rs)
        for (const auto& c : cs)
            g = poly_gcd(g, minor_det(m, r, c));
    return g;
}

} // namespace

TEST_CASE("fields parse and reject non-primes")
{
    CHECK(Field::parse("Q") == Q);
    CHECK(Field::parse("Fp:5") == Field::prime(5));
    CHECK(Field::parse("Fp:5").name() == "Fp:5");
    CHECK_THROWS_AS(Field::parse("Fp:4"), InvalidArgumentError);
    CHECK_THROWS_AS(Field::parse("R"), InvalidArgumentError);
}

TEST_CASE("rationals stay reduced and residues canonical")
{
    const Scalar half(Q, Rational(2, 4));
    CHECK(half.rational() == Rational(1, 2));
    CHECK(denominator(Scalar(Q, Rational(3, -6)).rational()) > 0);
    const Field f7 = Field::prime(7);
    CHECK(Scalar(f7, -1).residue() == 6);
    CHECK(Scalar(f7, Rational(1, 2)).residue() == 4);
    CHECK((Scalar(f7, 3) * Scalar(f7, 5)).residue() == 1);
    CHECK((Scalar(f7, 3) / Scalar(f7, 3)).is_one());
    CHECK_THROWS_AS(Scalar(f7, 0).inverse(), InvalidArgumentError);
    CHECK_THROWS_AS(Scalar(f7, 1) + Scalar(Q, 1), DomainMismatchError);
    CHECK_FALSE(Scalar(f7, 1) == Scalar(Q, 1));
}

TEST_CASE("polynomial gcd examples")
{
    CHECK(poly_gcd(Poly(Q, {-1, 0, 1}), Poly(Q, {1, 1})) == Poly(Q, {1, 1}));
    CHECK(poly_gcd(Poly(F2, {1, 0, 1}), Poly(F2, {1, 1})) == Poly(F2, {1, 1}));
    CHECK(poly_gcd(Poly(Q), Poly(Q, {0, 3})) == X(Q));
    CHECK(poly_gcd(Poly(Q), Poly(Q)).is_zero());
    CHECK_THROWS_AS(poly_gcd(Poly(Q, {1}), Poly(F2, {1})), DomainMismatchError);
    CHECK(Poly(Q, {-1, 0, 1}).to_string() == "x^2-1");
    CHECK(Poly(Q).to_string() == "0");
    CHECK_FALSE(Poly(Q).degree().has_value());
}

TEST_CASE("polynomial gcd properties on random inputs")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const Field f : {Q, Field::prime(3), Field::prime(5)}) {
        for (int trial = 0; trial < 100; ++trial) {
            auto rand_poly = [&] {
                std::vector<Scalar> c;
                for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i)
                    c.emplace_back(f, coef(rng));
                return Poly(f, c);
            };
            const Poly a = rand_poly(), b = rand_poly(), c = rand_poly();
            const Poly g = poly_gcd(a, b);
            CHECK(g == poly_gcd(b, a));
            if (!a.is_zero()) {
                CHECK(poly_gcd(a, Poly(f)) == a.monic());
                CHECK(divides(g, a));
            }
            if (!c.is_zero()) {
                const Poly gc = poly_gcd(a * c, b * c);
                CHECK(gc == (g * c).monic());
            }
            if (!b.is_zero()) {
                auto [q, r] = divmod(a, b);
                CHECK(q * b + r == a);
                CHECK((r.is_zero() || *r.degree() < *b.degree()));
            }
        }
    }
}

TEST_CASE("field rank examples")
{
    CHECK(field_rank(FieldMatrix(Q, {{1, 1}, {1, 1}})) == 1);
    CHECK(field_rank(FieldMatrix(Q, {{-1, 0}, {0, -1}, {1, 1}, {1, 1}})) == 2);
    CHECK(field_rank(FieldMatrix(Q, 0, 5)) == 0);
    CHECK(field_rank(FieldMatrix(Q, 3, 0)) == 0);
    CHECK(field_rank(FieldMatrix(F2, {{1, 1}, {1, -1}})) == 1);
    CHECK(field_rank(FieldMatrix(Q, {{1, 1}, {1, -1}})) == 2);
}

TEST_CASE("field rank: parallel, serial and oracle agree; permutation and transpose invariant")
{
    std::mt19937 rng(5);
    for (std::uint32_t p : {0u, 2u, 3u, 5u}) {
        const Field f = p ? Field::prime(p) : Q;
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
            auto ints = random_int_matrix(rng, r, c, 2);
            // Low-rank products exercise dependent rows.
            if (trial % 3 == 0 && r > 2) {
                auto a = random_int_matrix(rng, r, 2, 2), b = random_int_matrix(rng, 2, c, 2);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < c; ++j)
                        ints[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
            const FieldMatrix m(f, ints);
            const std::size_t expected = testsupport::oracle_rank(ints, p);
            CHECK(field_rank(m) == expected);
            CHECK(field_rank_serial(m) == expected);
            CHECK(field_rank(m.transpose()) == expected);
            std::vector<std::size_t> ro(r), co(c);
            std::iota(ro.begin(), ro.end(), 0);
            std::iota(co.begin(), co.end(), 0);
            std::shuffle(ro.begin(), ro.end(), rng);
            std::shuffle(co.begin(), co.end(), rng);
            CHECK(field_rank(m.permuted(ro, co)) == expected);
        }
    }
}

TEST_CASE("SNF over F[x] examples")
{
    PolyMatrix a(Q, 2, 2);
    a(0, 0) = X(Q);
    a(1, 1) = X(Q) * X(Q);
    CHECK(snf_over_polys(a).diagonal == std::vector<Poly>{X(Q), X(Q) * X(Q)});

    PolyMatrix b(Q, 2, 2);
    b(0, 1) = Poly(Q, {1});
    b(1, 0) = Poly(Q, {1});
    CHECK(snf_over_polys(b).diagonal == std::vector<Poly>{Poly(Q, {1}), Poly(Q, {1})});

    PolyMatrix c(Q, 2, 2);
    c(0, 0) = Poly(Q, {1, 1});
    c(0, 1) = Poly(Q, {-1, 1});
    c(1, 0) = Poly(Q, {-1, 1});
    c(1, 1) = Poly(Q, {1, 1});
    CHECK(snf_over_polys(c).diagonal == std::vector<Poly>{Poly(Q, {1}), X(Q)});

    CHECK(snf_over_polys(PolyMatrix(Q, 0, 3)).diagonal.empty());
    CHECK(snf_over_polys(PolyMatrix(Q, 2, 2)).diagonal == std::vector<Poly>{Poly(Q), Poly(Q)});
}

TEST_CASE("SNF over F[x] matches determinantal divisors on random 4x4 matrices")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (const Field f : {Q, Field::prime(2), Field::prime(3)}) {
        for (int trial = 0; trial < 15; ++trial) {
            PolyMatrix m(f, 4, 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    std::vector<Scalar> c;
                    for (int e = 0; e <= 2; ++e)
                        c.emplace_back(f, rng() % 3 == 0 ? 0 : coef(rng));
                    m(i, j) = Poly(f, c);
                }
            // Some trials get a common factor so the invariant factors are non-trivial.
            if (trial % 2 == 0)
                for (std::size_t j = 0; j < 4; ++j)
                    m(3, j) = m(3, j) * Poly(f, {1, 1});
            const PolySnf snf = snf_over_polys(m);
            REQUIRE(snf.diagonal.size() == 4);
            Poly product(f, {1});
            for (std::size_t i = 1; i <= 3; ++i) {
                product = product * snf.diagonal[i - 1];
                const Poly expected = determinantal_divisor(m, i);
                CHECK((product.is_zero() ? product : product.monic()) == expected);
            }
            for (std::size_t i = 0; i + 1 < 4; ++i)
                if (!snf.diagonal[i + 1].is_zero())
                    CHECK(divides(snf.diagonal[i], snf.diagonal[i + 1]));
        }
    }
}
