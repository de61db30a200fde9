#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hadamat/matrix.hpp"

namespace hadamat {

/// Replayable certificate of H2 = D1 * P1 * H1 * P2 * D2, where P1 acts on
/// rows ((P1 H)_(i,j) = H_(p1[i], j)), P2 acts on columns, and D1, D2 are
/// unimodular diagonals.
struct EquivalenceWitness {
    std::vector<int> p1;
    std::vector<int> p2;
    std::vector<CycloNum> d1;
    std::vector<CycloNum> d2;
};

struct EquivVerdict {
    bool equivalent;
    std::optional<EquivalenceWitness> witness;
    long pairs_examined;
    bool prefilter_rejected; // fingerprints differed, search skipped
};

/// Equivalence-invariant fingerprint: the sorted multiset of the complex
/// values h_ij * conj(h_il) * conj(h_kj) * h_kl over all index quadruples,
/// rounded to 1e-9 (stored as integer billionths).
using Fingerprint = std::vector<std::pair<long long, long long>>;
Fingerprint canonical_fingerprint(const CycloMatrix& h);

/// Exhaustive Hadamard-equivalence decision for n <= 5, comparing dephased
/// forms over all n! * n! permutation pairs in lexicographic order. The
/// witness belongs to the lexicographically first matching pair; a false
/// verdict searched the full space (pairs_examined = n! * n!) unless the
/// fingerprint prefilter rejected first (pairs_examined = 0).
EquivVerdict equiv(const CycloMatrix& h1, const CycloMatrix& h2,
                   bool use_prefilter = true);

/// True iff D1 * P1 * H1 * P2 * D2 equals H2 entrywise exactly.
bool replay(const EquivalenceWitness& w, const CycloMatrix& h1, const CycloMatrix& h2);

} // namespace hadamat
