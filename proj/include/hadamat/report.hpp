#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hadamat/circulant_search.hpp"
#include "hadamat/constructions.hpp"
#include "hadamat/matrix.hpp"

namespace hadamat {

/// Result of a CLI-level check: the boolean verdict plus ready-to-print
/// human and JSON renderings.
struct CheckOutcome {
    bool verdict;
    std::string human;
    std::string json;
};

/// kind: "hadamard", "unitary", "inverse-orthogonal" or "mub". Inputs of
/// different root orders are embedded into their least common multiple.
CheckOutcome run_check(const std::string& kind,
                       const std::vector<std::pair<std::string, CycloMatrix>>& inputs);

CheckOutcome run_equiv(const std::pair<std::string, CycloMatrix>& a,
                       const std::pair<std::string, CycloMatrix>& b);

/// Search output: one exponent row per line plus a '#'-prefixed summary
/// block; as_matrices expands each row into the matrix file format,
/// blank-line separated.
std::string run_search_text(const SearchTask& task, bool as_matrices);

/// The complete machine-checked claim report ("hadamat-report/1"),
/// byte-deterministic, stable key order, newline-terminated.
std::string verify_paper_json(Branch branch = Branch::Principal);

/// Fixed 12-decimal complex rendering "re+imi" used in reports.
std::string complex_to_string(const CycloNum& x);

} // namespace hadamat
