#pragma once

#include <string>
#include <vector>

#include "zkhom/action.hpp"
#include "zkhom/field.hpp"
#include "zkhom/snf_group_ring.hpp"
#include "zkhom/transfer.hpp"

namespace zkhom {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

/// Lifts monic, dividing x^k - 1, each dividing the next. Empty string when fine.
std::string snf_chain_violation(const SnfDiagonal& snf, std::uint32_t k);

/// The full invariant suite on a regular action, for every field given.
std::vector<CheckResult> verify_action(const CyclicAction& action, const std::vector<Field>& fields);

/// The checks that need only the triple.
std::vector<CheckResult> verify_triple(const IsotropyTriple& triple, const std::vector<Field>& fields);

} // namespace zkhom
