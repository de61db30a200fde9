#include <doctest.h>

#include <random>

#include "hadamat/constructions.hpp"
#include "hadamat/mub.hpp"

#include "oracle.hpp"

using namespace hadamat;

namespace {

Basis basis_of(const std::string& name, const CycloMatrix& m) {
    BasisClassification c = classify_basis(name, m);
    REQUIRE_MESSAGE(c.basis.has_value(), c.error);
    return *c.basis;
}

double float_unbias_residual(const Basis& b1, const Basis& b2) {
    auto z1 = oracle::to_cmat(b1.matrix);
    auto z2 = oracle::to_cmat(b2.matrix);
    const int n = static_cast<int>(z1.size());
    double norm1 = b1.scale_exp ? std::sqrt(double(n)) : 1.0;
    double norm2 = b2.scale_exp ? std::sqrt(double(n)) : 1.0;
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> ip = 0.0;
            for (int k = 0; k < n; ++k) ip += std::conj(z1[k][i]) * z2[k][j];
            double val = std::norm(ip / (norm1 * norm2));
            worst = std::max(worst, std::abs(val * n - 1.0));
        }
    return worst;
}

} // namespace

TEST_CASE("classify_basis assigns scales") {
    CHECK(basis_of("I", CycloMatrix::identity(3, 60)).scale_exp == 0);
    CHECK(basis_of("I_2/3", catalog_find("I_2/3")->matrix).scale_exp == 0);
    CHECK(basis_of("F_3", catalog_find("F_3")->matrix).scale_exp == 1);

    CycloMatrix junk(2, 60);
    junk.at(0, 0) = CycloNum::from_int(2, 60);
    BasisClassification c = classify_basis("junk", junk);
    CHECK_FALSE(c.basis.has_value());
    CHECK_FALSE(c.error.empty());
}

TEST_CASE("unbiased basics") {
    Basis i3 = basis_of("I", CycloMatrix::identity(3, 60));
    Basis f3 = basis_of("F_3", catalog_find("F_3")->matrix);
    CHECK(unbiased(i3, f3).unbiased);

    UnbiasedResult same = unbiased(i3, i3);
    REQUIRE_FALSE(same.unbiased);
    CHECK(same.i == 0);
    CHECK(same.j == 0);
    // Witness is n * |<e0, e0>|^2 - 1 = n - 1 = 2.
    CHECK(*same.deviation == CycloNum::from_int(2, 60));

    Basis a11 = basis_of("A_11", catalog_find("A_11")->matrix);
    Basis a12 = basis_of("A_12", catalog_find("A_12")->matrix);
    CHECK(unbiased(a11, a12).unbiased);

    CHECK_THROWS_AS(unbiased(i3, basis_of("I5", CycloMatrix::identity(5, 60))), Error);
}

TEST_CASE("unbiased is symmetric and transform-invariant") {
    std::mt19937 rng(13);
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"A_11", "A_12"}, {"A_1112", "A_1211"}, {"D_1", "D_2"}, {"F_3", "A_31"}};
    for (const auto& [n1, n2] : pairs) {
        Basis b1 = basis_of(n1, catalog_find(n1)->matrix);
        Basis b2 = basis_of(n2, catalog_find(n2)->matrix);
        UnbiasedResult fwd = unbiased(b1, b2);
        CHECK(fwd.unbiased == unbiased(b2, b1).unbiased);

        // Unimodular column scaling and column permutation of either side
        // leave the verdict unchanged.
        const int n = b1.matrix.dim();
        for (int t = 0; t < 5; ++t) {
            std::vector<CycloNum> d;
            for (int i = 0; i < n; ++i) d.push_back(oracle::random_root(rng, 60));
            CycloMatrix scrambled = scale_diag(
                permute_cols(b1.matrix, oracle::random_perm(rng, n)), d, Side::Right);
            Basis b1s = basis_of(n1 + std::string("'"), scrambled);
            CHECK(unbiased(b1s, b2).unbiased == fwd.unbiased);
        }

        // Exact and floating verdicts agree.
        bool exact = fwd.unbiased;
        double res = float_unbias_residual(b1, b2);
        CHECK(exact == (res < 1e-8));
    }
}

TEST_CASE("identity is unbiased with every Hadamard") {
    for (const char* name : {"F_3", "A_11", "A_1112", "D_11", "B_51"}) {
        const CycloMatrix& m = catalog_find(name)->matrix;
        Basis i = basis_of("I", CycloMatrix::identity(m.dim(), 60));
        CHECK(unbiased(i, basis_of(name, m)).unbiased);
    }
}

TEST_CASE("check_mub_set") {
    auto member = [](const char* name) {
        return std::make_pair(std::string(name), catalog_find(name)->matrix);
    };

    // The displayed order-3 triple verifies.
    MubReport r = check_mub_set(
        {{"I", CycloMatrix::identity(3, 60)}, member("A_11"), member("A_12")});
    CHECK(r.verdict);
    CHECK(r.pairs.size() == 3);

    // The five-element order-5 set: all ten pairs check out.
    MubReport r5 = check_mub_set({{"I", CycloMatrix::identity(5, 60)},
                                  member("D_1"),
                                  member("D_2"),
                                  member("D_3"),
                                  member("D_4")});
    CHECK(r5.verdict);
    CHECK(r5.pairs.size() == 10);
    for (const auto& cell : r5.pairs) {
        CHECK(cell.checked);
        CHECK(cell.result.unbiased);
    }

    // Duplicate members are never unbiased.
    MubReport dup = check_mub_set(
        {{"I", CycloMatrix::identity(3, 60)}, member("F_3"), member("F_3")});
    CHECK_FALSE(dup.verdict);

    // Cardinality guard: n + 2 bases is a distinct error.
    std::vector<std::pair<std::string, CycloMatrix>> too_many;
    too_many.emplace_back("I", CycloMatrix::identity(2, 60));
    for (int i = 1; i <= 3; ++i) too_many.push_back(member(("H_" + std::to_string(i)).c_str()));
    try {
        check_mub_set(too_many);
        FAIL("expected exceeds-maximum");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ExceedsMaximum);
    }

    // A non-unitary member yields a recorded error and a false verdict.
    CycloMatrix junk(3, 60);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) junk.at(i, j) = CycloNum::from_int(i == j ? 2 : 0, 60);
    MubReport bad = check_mub_set(
        {{"I", CycloMatrix::identity(3, 60)}, {"junk", junk}, member("A_11")});
    CHECK_FALSE(bad.verdict);
    CHECK_FALSE(bad.member_errors[1].empty());
    int checked = 0, skipped = 0;
    for (const auto& cell : bad.pairs) cell.checked ? ++checked : ++skipped;
    CHECK(checked == 1);
    CHECK(skipped == 2);
}

TEST_CASE("mub_extend_greedy") {
    auto member = [](const char* name) {
        return std::make_pair(std::string(name), catalog_find(name)->matrix);
    };
    std::vector<std::pair<std::string, CycloMatrix>> seed{
        {"I", CycloMatrix::identity(3, 60)}};

    // Any catalog order-3 Hadamard extends the bare identity.
    auto grown = mub_extend_greedy(seed, {member("A_11"), member("A_12")});
    CHECK(grown.size() == 3);

    // A duplicate candidate never extends.
    auto dup = mub_extend_greedy({{"I", CycloMatrix::identity(3, 60)}, member("F_3")},
                                 {member("F_3")});
    CHECK(dup.size() == 2);

    // The order-5 chain accepts the whole displayed family.
    auto five = mub_extend_greedy({{"I", CycloMatrix::identity(5, 60)}, member("D_1")},
                                  {member("D_2"), member("D_3"), member("D_4")});
    CHECK(five.size() == 5);

    // Invalid seed is rejected.
    CHECK_THROWS_AS(
        mub_extend_greedy({{"I", CycloMatrix::identity(3, 60)},
                           {"I2", CycloMatrix::identity(3, 60)}},
                          {member("A_11")}),
        Error);
}
