#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hadamat/matrix.hpp"

namespace hadamat {

/// An orthogonal basis given by matrix columns. scale_exp 1 means the
/// columns carry an implicit 1/sqrt(n); Hadamard members get 1, identity
/// and unitary-diagonal members get 0.
struct Basis {
    std::string name;
    CycloMatrix matrix;
    int scale_exp;
};

/// Classify a matrix as a basis: unitary diagonals (including the
/// identity) get scale 0, Hadamard matrices scale 1. Returns an error
/// message when the matrix is neither (i.e. not unitary up to scale).
struct BasisClassification {
    std::optional<Basis> basis;
    std::string error;
};
BasisClassification classify_basis(const std::string& name, const CycloMatrix& m);

/// Outcome of the exact unbiasedness test for one basis pair.
/// deviation is the exact value of n * |<u_i, v_j>|^2 - 1 over normalized
/// columns at the first failing (i, j); zero everywhere iff unbiased.
struct UnbiasedResult {
    bool unbiased;
    int i = -1;
    int j = -1;
    std::optional<CycloNum> deviation;
};

UnbiasedResult unbiased(const Basis& b1, const Basis& b2);

struct MubPairCell {
    int a;
    int b;
    bool checked;
    UnbiasedResult result;
};

struct MubReport {
    std::vector<Basis> bases;
    std::vector<std::string> member_errors; // one per member, empty when valid
    std::vector<MubPairCell> pairs;         // all a < b, row-major
    bool verdict;
};

/// Full pairwise table; verdict is the conjunction and is false when any
/// member fails classification. Raises ExceedsMaximum when more than
/// n + 1 bases are supplied.
MubReport check_mub_set(const std::vector<std::pair<std::string, CycloMatrix>>& members);

/// Greedily extend a valid MUB seed by candidates, keeping each candidate
/// whose addition leaves the whole set mutually unbiased. Deterministic in
/// candidate order. InvalidArgument when the seed itself does not verify.
std::vector<Basis> mub_extend_greedy(
    const std::vector<std::pair<std::string, CycloMatrix>>& seed,
    const std::vector<std::pair<std::string, CycloMatrix>>& candidates);

} // namespace hadamat
