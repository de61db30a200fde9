#include "hadamat/mub.hpp"

#include <string>

namespace hadamat {

BasisClassification classify_basis(const std::string& name, const CycloMatrix& m) {
    if (is_unitary_diagonal(m))
        return {Basis{name, m, 0}, ""};
    if (is_hadamard(m).is_hadamard)
        return {Basis{name, m, 1}, ""};
    return {std::nullopt,
            name + ": neither a unitary diagonal nor a Hadamard matrix"};
}

UnbiasedResult unbiased(const Basis& b1, const Basis& b2) {
    if (b1.matrix.dim() != b2.matrix.dim())
        raise(ErrorCode::DimensionMismatch, "bases must have equal dimension");
    if (b1.matrix.order() != b2.matrix.order())
        raise(ErrorCode::OrderMismatch, "bases must share one root order (use embed)");
    const int n = b1.matrix.dim();
    const int order = b1.matrix.order();
    // Raw column inner products are (B1^* B2)_(i,j). With normalization
    // n^(-s/2) per member, unbiasedness |<u, v>|^2 = 1/n is exactly
    // |raw|^2 * n^(1 - s1 - s2) = 1.
    CycloMatrix p = matmul(conj_transpose(b1.matrix), b2.matrix);
    const int e = 1 - b1.scale_exp - b2.scale_exp;
    long pw = 1;
    for (int t = 0; t < (e >= 0 ? e : -e); ++t) pw *= n;
    const mpq_class factor =
        e >= 0 ? mpq_class(pw) : mpq_class(mpz_class(1), mpz_class(pw));
    const CycloNum scale = CycloNum::from_rational(factor, order);
    const CycloNum one = CycloNum::one(order);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CycloNum dev = p.at(i, j) * p.at(i, j).conj() * scale - one;
            if (!dev.is_zero()) return {false, i, j, std::move(dev)};
        }
    return {true, -1, -1, std::nullopt};
}

MubReport check_mub_set(const std::vector<std::pair<std::string, CycloMatrix>>& members) {
    if (members.empty())
        raise(ErrorCode::InvalidArgument, "empty basis list");
    const int n = members.front().second.dim();
    if (static_cast<int>(members.size()) > n + 1)
        raise(ErrorCode::ExceedsMaximum,
              "at most n + 1 = " + std::to_string(n + 1) +
                  " mutually unbiased bases exist in dimension " + std::to_string(n));
    MubReport report;
    report.verdict = true;
    for (const auto& [name, m] : members) {
        if (m.dim() != n)
            raise(ErrorCode::DimensionMismatch, "all bases must have equal dimension");
        BasisClassification c = classify_basis(name, m);
        if (c.basis) {
            report.bases.push_back(*c.basis);
            report.member_errors.emplace_back();
        } else {
            // Keep the slot so pair indices stay stable.
            report.bases.push_back(Basis{name, m, 0});
            report.member_errors.push_back(c.error);
            report.verdict = false;
        }
    }
    const int k = static_cast<int>(members.size());
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            MubPairCell cell{a, b, false, {}};
            if (report.member_errors[a].empty() && report.member_errors[b].empty()) {
                cell.checked = true;
                cell.result = unbiased(report.bases[a], report.bases[b]);
                if (!cell.result.unbiased) report.verdict = false;
            }
            report.pairs.push_back(std::move(cell));
        }
    return report;
}

std::vector<Basis> mub_extend_greedy(
    const std::vector<std::pair<std::string, CycloMatrix>>& seed,
    const std::vector<std::pair<std::string, CycloMatrix>>& candidates) {
    MubReport seed_report = check_mub_set(seed);
    if (!seed_report.verdict)
        raise(ErrorCode::InvalidArgument, "seed is not a valid MUB set");
    std::vector<std::pair<std::string, CycloMatrix>> current = seed;
    const int n = seed.front().second.dim();
    for (const auto& cand : candidates) {
        if (static_cast<int>(current.size()) >= n + 1) break;
        std::vector<std::pair<std::string, CycloMatrix>> trial = current;
        trial.push_back(cand);
        bool ok = true;
        try {
            ok = check_mub_set(trial).verdict;
        } catch (const Error&) {
            ok = false;
        }
        if (ok) current = std::move(trial);
    }
    std::vector<Basis> result;
    for (const auto& [name, m] : current) {
        BasisClassification c = classify_basis(name, m);
        result.push_back(*c.basis);
    }
    return result;
}

} // namespace hadamat
