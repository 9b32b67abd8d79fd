#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zkhom/action.hpp"
#include "zkhom/field.hpp"
#include "zkhom/io.hpp"

namespace testsupport {

std::string corpus_path(const std::string& name);
std::vector<std::string> corpus_names();
zkhom::ActionInput load_corpus(const std::string& name);
/// The corpus action, regularized when it is not regular already.
zkhom::CyclicAction regular_corpus_action(const std::string& name);

std::vector<zkhom::Field> standard_fields();

/// Random complex closed under i -> i + n/k on n = k * orbit_count vertices,
/// where some vertices are fixed points; regular after two subdivisions.
zkhom::CyclicAction random_action(std::mt19937& rng, std::uint32_t k, std::size_t max_dim, bool make_regular = true);

// Oracles written independently of the library, on plain integer data.

/// Rank over F_p (p > 0) or Q (p == 0) of an integer matrix.
std::size_t oracle_rank(const std::vector<std::vector<long long>>& m, std::uint32_t p);

/// Betti numbers of the downward closure of `facets` over F_p or Q.
std::vector<std::size_t> oracle_betti(const std::vector<std::vector<std::uint32_t>>& facets, std::uint32_t p);

/// Rank over F_p or Q of the k x k matrix of multiplication by sum a_i x^i in F[x]/(x^k - 1).
std::size_t oracle_circulant_rank(const std::vector<long long>& a, std::uint32_t p);

} // namespace testsupport
