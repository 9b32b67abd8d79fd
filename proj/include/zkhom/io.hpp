#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "zkhom/action.hpp"
#include "zkhom/pipeline.hpp"
#include "zkhom/transfer.hpp"

namespace zkhom {

/// {"k": 2, "simplices": [[0,1],[1,2]], "generator": [2,1,0]}
struct ActionInput {
    std::uint32_t k = 1;
    Complex complex;
    std::vector<Vertex> generator;

    /// Throws InvalidActionError for invalid permutations.
    CyclicAction action() const { return CyclicAction::create(complex, generator, k); }
};

using Input = std::variant<ActionInput, IsotropyTriple>;

/// "0,1"
std::string simplex_key(const Simplex& s);
/// Throws ParseError.
Simplex parse_simplex_key(const std::string& key);

/// Either schema; throws ParseError on malformed documents. Triples are not
/// validated here.
Input parse_input(const nlohmann::json& doc);
Input read_input(const std::string& path);

nlohmann::json to_json(const ActionInput& input);
nlohmann::json to_json(const CyclicAction& action);
/// {"k": .., "triple": {"quotient": [...], "S": {...}, "Tstar": {"psi|omega": [...]}}}
nlohmann::json to_json(const IsotropyTriple& triple);
nlohmann::json to_json(const Input& input);

/// {"field", "betti", "per_dim": [{"d", "dimC", "rank", "snf_lifts"}]}
nlohmann::json to_json(const CompressedResult& result);

} // namespace zkhom
