#pragma once

#include <vector>

#include "hadamat/matrix.hpp"

namespace hadamat {

/// Exhaustive search for circulant Butson-type Hadamard matrices: all
/// first rows with entries in <zeta_N> whose circulant passes the exact
/// Hadamard test. fix_first pins the first entry to 1, shrinking the
/// space from N^n to N^(n-1).
struct SearchTask {
    int dim;        // n, 1..7
    int root_order; // N, 1..20
    bool fix_first = true;
    long budget = 0; // 0: HADAMAT_BUDGET env var or 10^8
};

struct SearchResult {
    /// Solutions as exponent vectors (entries in 0..N-1), sorted
    /// lexicographically. Every row is re-verified by the exact
    /// matrix-level Hadamard check.
    std::vector<std::vector<int>> rows;
    long candidates_enumerated;
    /// Number of Hadamard-equivalence classes among the solutions,
    /// grouped by fingerprint with exact confirmation at n <= 5.
    int class_count;
};

SearchResult search(const SearchTask& task, bool enable_pruning = true);

/// The circulant matrix induced by a solution row.
CycloMatrix row_to_matrix(const std::vector<int>& row, int root_order);

/// The unimodular roots of 1 + a + a^2 + a^3 + a^4 in Q(zeta_10), in the
/// order of the four displayed order-5 solutions.
std::vector<CycloNum> pattern_solutions_c5();

long default_search_budget();

} // namespace hadamat
