// Serial references against the OpenMP kernels, and direct homology against
// the compressed pipeline on growing complexes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include <CLI11.hpp>
#include <omp.h>

#include "zkhom/group_ring.hpp"
#include "zkhom/pipeline.hpp"

using namespace zkhom;

namespace {

double seconds(const std::function<void()>& f, int reps)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

FieldMatrix random_matrix(std::mt19937& rng, Field f, std::size_t n)
{
    FieldMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Scalar(f, static_cast<long long>(rng() % 7) - 3);
    return m;
}

GroupRingMatrix random_group_matrix(std::mt19937& rng, Field f, std::uint32_t k, std::size_t n)
{
    GroupRingMatrix m(f, k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = GroupRingElem::monomial(Scalar(f, static_cast<long long>(rng() % 3) - 1), k, rng() % k);
    return m;
}

// Torus grid of (k * n) x n squares with Z_k shifting the first coordinate by n.
CyclicAction torus(std::uint32_t k, Vertex n)
{
    const Vertex rows = k * n;
    auto id = [&](Vertex i, Vertex j) { return (i % rows) * n + j % n; };
    std::vector<std::vector<Vertex>> tris;
    for (Vertex i = 0; i < rows; ++i)
        for (Vertex j = 0; j < n; ++j) {
            tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            tris.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
        }
    std::vector<Vertex> gen(rows * n);
    for (Vertex i = 0; i < rows; ++i)
        for (Vertex j = 0; j < n; ++j)
            gen[id(i, j)] = id(i + n, j);
    return CyclicAction::create(Complex::from_generators(tris), gen, k);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zkhom kernel benchmarks"};
    int reps = 3;
    std::size_t size = 240;
    app.add_option("--reps", reps, "repetitions; the best time is reported");
    app.add_option("--size", size, "matrix dimension for the rank benchmark");
    CLI11_PARSE(app, argc, argv);

    std::mt19937 rng(1);
    std::printf("threads: %d\n\n", omp_get_max_threads());

    std::printf("%-28s %10s %10s %8s\n", "rank kernel", "serial s", "openmp s", "speedup");
    for (const Field f : {Field::prime(5), Field::rationals()}) {
        const std::size_t n = f.is_rational() ? size / 3 : size;
        const FieldMatrix m = random_matrix(rng, f, n);
        std::size_t r1 = 0, r2 = 0;
        const double ts = seconds([&] { r1 = field_rank_serial(m); }, reps);
        const double tp = seconds([&] { r2 = field_rank(m); }, reps);
        char label[64];
        std::snprintf(label, sizeof label, "%s %zux%zu", f.name().c_str(), n, n);
        std::printf("%-28s %10.4f %10.4f %7.2fx%s\n", label, ts, tp, ts / tp, r1 == r2 ? "" : "  RANK MISMATCH");
    }

    std::printf("\n%-28s %10s %10s %8s\n", "rho_extend", "serial s", "openmp s", "speedup");
    for (const std::uint32_t k : {4U, 12U}) {
        const GroupRingMatrix g = random_group_matrix(rng, Field::prime(7), k, 60);
        FieldMatrix a(Field::prime(7), 0, 0), b(Field::prime(7), 0, 0);
        const double ts = seconds([&] { a = rho_extend_serial(g); }, reps);
        const double tp = seconds([&] { b = rho_extend(g); }, reps);
        char label[64];
        std::snprintf(label, sizeof label, "60x60 blocks, k=%u", k);
        std::printf("%-28s %10.4f %10.4f %7.2fx%s\n", label, ts, tp, ts / tp, a == b ? "" : "  MISMATCH");
    }

    std::printf("\n%-28s %10s %10s %8s\n", "homology over F_2", "direct s", "quotient s", "ratio");
    for (const auto& [k, n] : std::vector<std::pair<std::uint32_t, Vertex>>{{3, 3}, {4, 4}, {6, 4}, {8, 5}}) {
        const CyclicAction a = torus(k, n);
        const Field f = Field::prime(2);
        std::vector<std::size_t> direct, compressed;
        const double td = seconds([&] { direct = betti_direct(a.complex(), f); }, reps);
        const double tc = seconds([&] { compressed = compressed_betti(build_triple(a), f).betti; }, reps);
        char label[64];
        std::snprintf(label, sizeof label, "torus k=%u, %zu triangles", k, a.complex().count(2));
        std::printf("%-28s %10.4f %10.4f %7.2fx%s\n", label, td, tc, td / tc, direct == compressed ? "" : "  MISMATCH");
    }
    return 0;
}
