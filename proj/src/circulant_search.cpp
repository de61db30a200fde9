#include "hadamat/circulant_search.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <string>

#include "hadamat/constructions.hpp"
#include "hadamat/equivalence.hpp"

namespace hadamat {

namespace {

// Does sum_t counts[t] * zeta_N^t vanish? Exact: reduce the integer
// polynomial modulo Phi_N.
bool root_sum_is_zero(const std::vector<long>& counts, int root_order,
                      const std::vector<mpz_class>& phi_poly) {
    std::vector<mpz_class> p(counts.begin(), counts.end());
    const int phi = static_cast<int>(phi_poly.size()) - 1;
    for (int d = static_cast<int>(p.size()) - 1; d >= phi; --d) {
        if (p[d] == 0) continue;
        mpz_class c = p[d];
        for (int i = 0; i <= phi; ++i) p[d - phi + i] -= c * phi_poly[i];
    }
    for (int i = 0; i < phi; ++i)
        if (p[i] != 0) return false;
    return true;
}

struct SearchContext {
    int n;
    int N;
    bool prune;
    const std::vector<mpz_class>* phi_poly;
    std::vector<std::complex<double>> unit_roots;
    std::vector<int> row;
    std::vector<std::vector<int>>* out;
    long enumerated = 0;

    bool row_is_hadamard() const {
        std::vector<long> counts(N, 0);
        for (int k = 1; k < n; ++k) {
            std::fill(counts.begin(), counts.end(), 0L);
            for (int j = 0; j < n; ++j) {
                int d = row[j] - row[((j - k) % n + n) % n];
                counts[((d % N) + N) % N] += 1;
            }
            if (!root_sum_is_zero(counts, N, *phi_poly)) return false;
        }
        return true;
    }

    // Partial feasibility of the shift-1 constraint: the known terms must
    // stay within reach of the remaining unimodular ones. Conservative by
    // a small tolerance so pruning can never drop an exact solution.
    bool partial_feasible(int placed) const {
        if (placed < 2 || placed >= n) return true;
        std::complex<double> s = 0.0;
        for (int j = 1; j < placed; ++j)
            s += unit_roots[((row[j] - row[j - 1]) % N + N) % N];
        const double remaining = static_cast<double>(n - placed + 1);
        return std::abs(s) <= remaining + 1e-9;
    }

    void descend(int pos) {
        if (pos == n) {
            ++enumerated;
            if (row_is_hadamard()) out->push_back(row);
            return;
        }
        for (int e = 0; e < N; ++e) {
            row[pos] = e;
            if (prune && !partial_feasible(pos + 1)) {
                // Every completion shares this infeasible prefix.
                long skipped = 1;
                for (int rest = pos + 1; rest < n; ++rest) skipped *= N;
                enumerated += skipped;
                continue;
            }
            descend(pos + 1);
        }
    }
};

int count_classes(const std::vector<std::vector<int>>& rows, int n, int N) {
    if (rows.empty()) return 0;
    std::map<Fingerprint, std::vector<int>> groups;
    std::vector<CycloMatrix> mats;
    mats.reserve(rows.size());
    for (const auto& r : rows) mats.push_back(row_to_matrix(r, N));
    for (size_t i = 0; i < mats.size(); ++i)
        groups[canonical_fingerprint(mats[i])].push_back(static_cast<int>(i));
    int classes = 0;
    for (const auto& [fp, idx] : groups) {
        if (n > 5 || idx.size() == 1) {
            // Fingerprint granularity only; exact splitting needs n <= 5.
            ++classes;
            continue;
        }
        std::vector<int> reps;
        for (int i : idx) {
            bool matched = false;
            for (int r : reps)
                if (equiv(mats[i], mats[r], /*use_prefilter=*/false).equivalent) {
                    matched = true;
                    break;
                }
            if (!matched) reps.push_back(i);
        }
        classes += static_cast<int>(reps.size());
    }
    return classes;
}

} // namespace

long default_search_budget() {
    if (const char* env = std::getenv("HADAMAT_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100000000L; // 10^8
}

CycloMatrix row_to_matrix(const std::vector<int>& row, int root_order) {
    std::vector<CycloNum> fr;
    fr.reserve(row.size());
    for (int e : row) fr.push_back(CycloNum::root_of_unity(root_order, e));
    return circulant({static_cast<int>(row.size()), std::move(fr)});
}

SearchResult search(const SearchTask& task, bool enable_pruning) {
    const int n = task.dim, N = task.root_order;
    if (n < 1 || n > 7)
        raise(ErrorCode::InvalidArgument, "search dimension must be in 1..7");
    if (N < 1 || N > 20)
        raise(ErrorCode::InvalidArgument, "search root order must be in 1..20");
    long budget = task.budget > 0 ? task.budget : default_search_budget();
    long space = 1;
    bool over = false;
    for (int i = 0; i < (task.fix_first ? n - 1 : n); ++i) {
        if (space > budget / N) {
            over = true;
            break;
        }
        space *= N;
    }
    if (over || space > budget)
        raise(ErrorCode::BudgetExceeded,
              "search space " + std::string(task.fix_first ? "N^(n-1)" : "N^n") +
                  " exceeds budget " + std::to_string(budget) +
                  " (set HADAMAT_BUDGET to at least the space size)");

    SearchResult result;
    SearchContext ctx;
    ctx.n = n;
    ctx.N = N;
    ctx.prune = enable_pruning && n >= 3;
    ctx.phi_poly = &cyclotomic_polynomial(N);
    ctx.unit_roots.resize(N);
    for (int t = 0; t < N; ++t) {
        double ang = 2.0 * 3.14159265358979323846 * t / N;
        ctx.unit_roots[t] = {std::cos(ang), std::sin(ang)};
    }
    ctx.row.assign(n, 0);
    ctx.out = &result.rows;
    if (task.fix_first) {
        ctx.row[0] = 0;
        ctx.descend(1);
    } else {
        ctx.descend(0);
    }
    result.candidates_enumerated = ctx.enumerated;

    // Pruning and the shift-sum filter are search aids only; the exact
    // matrix-level check is the authority on every reported row.
    for (const auto& r : result.rows)
        if (!is_hadamard(row_to_matrix(r, N)).is_hadamard)
            raise(ErrorCode::DomainError, "internal: search emitted a non-Hadamard row");

    std::sort(result.rows.begin(), result.rows.end());
    result.class_count = count_classes(result.rows, n, N);
    return result;
}

std::vector<CycloNum> pattern_solutions_c5() {
    // Roots of unity in Q(zeta_10) with vanishing factor polynomial.
    std::vector<int> zeros;
    for (int k = 0; k < 10; ++k)
        if (c5_factor(CycloNum::root_of_unity(10, k)).is_zero()) zeros.push_back(k);
    // Order of the four displayed solutions under the principal reading:
    // -(-1)^(1/5), (-1)^(2/5), -(-1)^(3/5), (-1)^(4/5).
    std::vector<CycloNum> out;
    for (int e : {6, 2, 8, 4})
        if (std::find(zeros.begin(), zeros.end(), e) != zeros.end())
            out.push_back(CycloNum::root_of_unity(10, e));
    for (int e : zeros)
        if (e != 6 && e != 2 && e != 8 && e != 4)
            out.push_back(CycloNum::root_of_unity(10, e));
    return out;
}

} // namespace hadamat
