#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/multiprecision/gmp.hpp>

namespace testsupport {

using zkhom::CyclicAction;
using zkhom::Field;

std::string corpus_path(const std::string& name)
{
    return std::string(ZKHOM_CORPUS_DIR) + "/" + name + ".json";
}

std::vector<std::string> corpus_names()
{
    return {"path_flip",        "cycle8_rot",          "two_triangles_swap",
            "cycle9_z3",        "torus_z3",            "cycle4_antipodal",
            "trivial_k1_triangle", "trivial_k2_triangles", "trivial_k3_tetrahedron"};
}

zkhom::ActionInput load_corpus(const std::string& name)
{
    return std::get<zkhom::ActionInput>(zkhom::read_input(corpus_path(name)));
}

CyclicAction regular_corpus_action(const std::string& name)
{
    CyclicAction a = load_corpus(name).action();
    return zkhom::is_regular(a).regular ? a : zkhom::regularize(a);
}

std::vector<Field> standard_fields()
{
    return {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)};
}

CyclicAction random_action(std::mt19937& rng, std::uint32_t k, std::size_t max_dim, bool make_regular)
{
    // Vertices 0..f-1 are fixed; the rest form free orbits {f + o + j*m}.
    std::uniform_int_distribution<int> fixed_count(0, 2);
    std::uniform_int_distribution<int> orbit_count(1, 3);
    const std::uint32_t f = static_cast<std::uint32_t>(fixed_count(rng));
    const std::uint32_t m = static_cast<std::uint32_t>(orbit_count(rng));
    const std::uint32_t n = f + m * k;
    std::vector<zkhom::Vertex> gen(n);
    for (std::uint32_t v = 0; v < n; ++v)
        gen[v] = v < f ? v : f + (v - f + m) % (m * k);

    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    std::uniform_int_distribution<std::size_t> size(1, max_dim + 1);
    std::vector<std::vector<zkhom::Vertex>> generators;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < count; ++s) {
        std::set<zkhom::Vertex> simplex;
        const std::size_t want = size(rng);
        for (std::size_t tries = 0; simplex.size() < want && tries < 20; ++tries)
            simplex.insert(pick(rng));
        std::vector<zkhom::Vertex> base(simplex.begin(), simplex.end());
        for (std::uint32_t c = 0; c < k; ++c) {
            generators.push_back(base);
            for (auto& v : base)
                v = gen[v];
        }
    }
    for (std::uint32_t v = 0; v < n; ++v)
        generators.push_back({v});
    CyclicAction a = CyclicAction::create(zkhom::Complex::from_generators(generators), gen, k);
    return !make_regular || zkhom::is_regular(a).regular ? a : zkhom::regularize(a);
}

namespace {

using Q = boost::multiprecision::mpq_rational;

std::size_t rank_mod_p(std::vector<std::vector<long long>> m, long long p)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (auto& row : m)
        for (auto& x : row)
            x = ((x % p) + p) % p;
    auto inv = [p](long long a) {
        long long r = 1, e = p - 2;
        while (e) {
            if (e & 1)
                r = r * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return r;
    };
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        const long long iv = inv(m[rank][c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            const long long f = m[r][c] * iv % p;
            for (std::size_t j = c; j < cols; ++j)
                m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_rational(const std::vector<std::vector<long long>>& in)
{
    std::vector<std::vector<Q>> m;
    for (const auto& row : in)
        m.emplace_back(row.begin(), row.end());
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0)
                continue;
            const Q f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t oracle_rank(const std::vector<std::vector<long long>>& m, std::uint32_t p)
{
    return p == 0 ? rank_rational(m) : rank_mod_p(m, p);
}

std::vector<std::size_t> oracle_betti(const std::vector<std::vector<std::uint32_t>>& facets, std::uint32_t p)
{
    std::vector<std::set<std::vector<std::uint32_t>>> levels;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        for (std::uint32_t mask = 1; mask < (1U << f.size()); ++mask) {
            std::vector<std::uint32_t> s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask >> i & 1)
                    s.push_back(f[i]);
            if (levels.size() < s.size())
                levels.resize(s.size());
            levels[s.size() - 1].insert(s);
        }
    }
    std::vector<std::size_t> ranks(levels.size() + 1, 0);
    for (std::size_t d = 1; d < levels.size(); ++d) {
        std::map<std::vector<std::uint32_t>, std::size_t> row;
        for (const auto& s : levels[d - 1])
            row.emplace(s, row.size());
        std::vector<std::vector<long long>> m(levels[d - 1].size(), std::vector<long long>(levels[d].size(), 0));
        std::size_t j = 0;
        for (const auto& s : levels[d]) {
            for (std::size_t t = 0; t < s.size(); ++t) {
                auto face = s;
                face.erase(face.begin() + static_cast<long>(t));
                m[row.at(face)][j] = t % 2 ? -1 : 1;
            }
            ++j;
        }
        ranks[d] = oracle_rank(m, p);
    }
    std::vector<std::size_t> betti;
    for (std::size_t d = 0; d < levels.size(); ++d)
        betti.push_back(levels[d].size() - ranks[d] - ranks[d + 1]);
    return betti;
}

std::size_t oracle_circulant_rank(const std::vector<long long>& a, std::uint32_t p)
{
    // Row i holds the coefficients of x^i * w reduced mod x^k - 1.
    const std::size_t k = a.size();
    std::vector<std::vector<long long>> m(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            m[i][(i + j) % k] = a[j];
    return oracle_rank(m, p);
}

} // namespace testsupport
