#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "hadamat/circulant_search.hpp"
#include "hadamat/constructions.hpp"

#include "oracle.hpp"

using namespace hadamat;

namespace {

// Brute-force floating enumeration of all N^n (or N^(n-1)) circulant
// candidates; the independent oracle for small searches.
std::set<std::vector<int>> float_search(int n, int N, bool fix_first, double tol = 1e-8) {
    std::set<std::vector<int>> found;
    const int free_slots = fix_first ? n - 1 : n;
    long total = 1;
    for (int i = 0; i < free_slots; ++i) total *= N;
    for (long code = 0; code < total; ++code) {
        std::vector<int> row(n, 0);
        long c = code;
        for (int i = fix_first ? 1 : 0; i < n; ++i) {
            row[i] = static_cast<int>(c % N);
            c /= N;
        }
        oracle::CMat z(n, std::vector<std::complex<double>>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int e = row[((j - i) % n + n) % n];
                z[i][j] = std::polar(1.0, 2 * M_PI * e / N);
            }
        if (oracle::hadamard_residual(z) < tol) found.insert(row);
    }
    return found;
}

} // namespace

TEST_CASE("small searches match the floating oracle") {
    for (auto [n, N] : {std::pair{3, 3}, std::pair{2, 4}, std::pair{2, 2},
                        std::pair{4, 2}, std::pair{3, 6}}) {
        SearchResult r = search({n, N, true});
        std::set<std::vector<int>> expected = float_search(n, N, true);
        std::set<std::vector<int>> got(r.rows.begin(), r.rows.end());
        CHECK_MESSAGE(got == expected, "n=" << n << " N=" << N);
    }
}

TEST_CASE("known small counts") {
    CHECK(search({2, 2, true}).rows.empty());

    SearchResult r24 = search({2, 4, true});
    REQUIRE(r24.rows.size() == 2);
    CHECK(r24.rows[0] == std::vector<int>{0, 1});
    CHECK(r24.rows[1] == std::vector<int>{0, 3});

    SearchResult r55 = search({5, 5, true});
    CHECK(r55.rows.size() == 20);
    std::vector<int> pattern{0, 1, 4, 4, 1};
    CHECK(std::find(r55.rows.begin(), r55.rows.end(), pattern) != r55.rows.end());
    CHECK(r55.class_count == 1);
}

TEST_CASE("pruning never drops a solution") {
    for (auto [n, N] : {std::pair{3, 3}, std::pair{3, 6}, std::pair{4, 4},
                        std::pair{5, 5}, std::pair{4, 6}}) {
        SearchResult pruned = search({n, N, true}, /*enable_pruning=*/true);
        SearchResult full = search({n, N, true}, /*enable_pruning=*/false);
        CHECK_MESSAGE(pruned.rows == full.rows, "n=" << n << " N=" << N);
    }
}

TEST_CASE("all reported rows verify exactly") {
    SearchResult r = search({5, 5, true});
    for (const auto& row : r.rows)
        CHECK(is_hadamard(row_to_matrix(row, 5)).is_hadamard);
    CHECK(std::is_sorted(r.rows.begin(), r.rows.end()));
}

TEST_CASE("closure under rotation and global root multiplication") {
    SearchResult r = search({5, 5, false});
    std::set<std::vector<int>> rows(r.rows.begin(), r.rows.end());
    for (const auto& row : r.rows) {
        const int n = static_cast<int>(row.size());
        std::vector<int> rotated(n), scaled(n);
        for (int i = 0; i < n; ++i) {
            rotated[i] = row[(i + 1) % n];
            scaled[i] = (row[i] + 1) % 5;
        }
        CHECK(rows.count(rotated) == 1);
        CHECK(rows.count(scaled) == 1);
    }
    // The fixed-first slice is exactly the e0 = 0 subset.
    SearchResult fixed = search({5, 5, true});
    std::set<std::vector<int>> slice;
    for (const auto& row : r.rows)
        if (row[0] == 0) slice.insert(row);
    CHECK(slice == std::set<std::vector<int>>(fixed.rows.begin(), fixed.rows.end()));
}

TEST_CASE("determinism") {
    SearchResult a = search({5, 5, true});
    SearchResult b = search({5, 5, true});
    CHECK(a.rows == b.rows);
    CHECK(a.candidates_enumerated == b.candidates_enumerated);
    CHECK(a.class_count == b.class_count);
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(search({8, 3, true}), Error);
    CHECK_THROWS_AS(search({3, 21, true}), Error);
    try {
        search({7, 20, true, 1000});
        FAIL("expected budget error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
}

TEST_CASE("budget env variable") {
    CHECK(default_search_budget() == 100000000L);
    setenv("HADAMAT_BUDGET", "50", 1);
    CHECK(default_search_budget() == 50);
    CHECK_NOTHROW(search({3, 5, true}));       // 5^2 = 25 fits
    CHECK_THROWS_AS(search({4, 5, true}), Error); // 5^3 = 125 does not
    unsetenv("HADAMAT_BUDGET");
    CHECK(default_search_budget() == 100000000L);
}

TEST_CASE("pattern_solutions_c5") {
    std::vector<CycloNum> sols = pattern_solutions_c5();
    REQUIRE(sols.size() == 4);
    std::set<int> exps;
    for (const auto& s : sols) {
        CHECK(s.order() == 10);
        CHECK(s.is_unimodular());
        CHECK(c5_factor(s).is_zero());
        auto e = s.root_exponent();
        REQUIRE(e.has_value());
        exps.insert(*e);
    }
    // Exactly the four primitive fifth roots of unity (in zeta_10 form).
    CHECK(exps == std::set<int>{2, 4, 6, 8});
    // Leading solution is the first displayed one: exp(i*6*pi/5).
    CHECK(sols[0] == CycloNum::root_of_unity(10, 6));

    // Each solution's circulant is Hadamard.
    for (const auto& a : sols) {
        CycloNum a4 = a * a * a * a;
        CHECK(is_hadamard(circulant({5, {CycloNum::one(10), a, a4, a4, a}})).is_hadamard);
    }
}
