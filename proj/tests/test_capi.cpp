#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <string>

#include "hadamat.h"

namespace {

struct StrFree {
    void operator()(char* p) const { hm_string_free(p); }
};
using CStr = std::unique_ptr<char, StrFree>;

struct MatFree {
    void operator()(hm_matrix* m) const { hm_matrix_free(m); }
};
using Mat = std::unique_ptr<hm_matrix, MatFree>;

Mat named(const char* name) {
    hm_matrix* raw = nullptr;
    REQUIRE(hm_gen_named(name, &raw) == HM_OK);
    return Mat(raw);
}

} // namespace

TEST_CASE("version and catalog") {
    CHECK(std::string(hm_version()) == "1.0.0");
    char* names = nullptr;
    REQUIRE(hm_catalog_names(&names) == HM_OK);
    CStr guard(names);
    std::string all(names);
    CHECK(all.find("F_5\n") != std::string::npos);
    CHECK(all.find("D_1\n") != std::string::npos);
    CHECK(all.find("I_2/3\n") != std::string::npos);
}

TEST_CASE("gen, print, parse, dim") {
    Mat f5 = named("F_5");
    int dim = 0, order = 0;
    CHECK(hm_matrix_dim(f5.get(), &dim) == HM_OK);
    CHECK(hm_matrix_order(f5.get(), &order) == HM_OK);
    CHECK(dim == 5);
    CHECK(order == 60);

    char* text = nullptr;
    REQUIRE(hm_matrix_print(f5.get(), &text) == HM_OK);
    CStr tguard(text);
    hm_matrix* back = nullptr;
    REQUIRE(hm_matrix_parse(text, &back) == HM_OK);
    Mat bguard(back);
    char* text2 = nullptr;
    REQUIRE(hm_matrix_print(back, &text2) == HM_OK);
    CStr tguard2(text2);
    CHECK(std::string(text) == text2);

    // Name aliases without separators work.
    Mat alias = named("F5");
    char* alias_text = nullptr;
    REQUIRE(hm_matrix_print(alias.get(), &alias_text) == HM_OK);
    CStr aguard(alias_text);
    CHECK(std::string(alias_text) == text);

    hm_matrix* missing = nullptr;
    CHECK(hm_gen_named("Q_77", &missing) == HM_ERR_UNKNOWN_NAME);
    CHECK(std::string(hm_last_error()).find("Q_77") != std::string::npos);
}

TEST_CASE("circulant generation from entry syntax") {
    hm_matrix* raw = nullptr;
    REQUIRE(hm_gen_circulant("1,z5^1,z5^4,z5^4,z5^1", 0, &raw) == HM_OK);
    Mat c5(raw);
    int order = 0;
    CHECK(hm_matrix_order(c5.get(), &order) == HM_OK);
    CHECK(order == 5);
    int verdict = 0;
    const hm_matrix* ms[] = {c5.get()};
    REQUIRE(hm_check("hadamard", ms, nullptr, 1, 0, &verdict, nullptr) == HM_OK);
    CHECK(verdict == 1);

    CHECK(hm_gen_circulant("1,z7^1,bogus", 0, &raw) == HM_ERR_PARSE);
}

TEST_CASE("check and equiv through the C surface") {
    Mat i5, d1 = named("D_1"), d2 = named("D_2"), d3 = named("D_3"), d4 = named("D_4");
    hm_matrix* raw = nullptr;
    REQUIRE(hm_gen_identity(5, &raw) == HM_OK);
    i5.reset(raw);
    // The identity arrives at order 1; embed to the catalog order.
    hm_matrix* embedded = nullptr;
    REQUIRE(hm_matrix_embed(i5.get(), 60, &embedded) == HM_OK);
    i5.reset(embedded);

    const hm_matrix* ms[] = {i5.get(), d1.get(), d2.get(), d3.get(), d4.get()};
    const char* names[] = {"I", "D_1", "D_2", "D_3", "D_4"};
    int verdict = 0;
    char* text = nullptr;
    REQUIRE(hm_check("mub", ms, names, 5, 1, &verdict, &text) == HM_OK);
    CStr guard(text);
    CHECK(verdict == 1);
    CHECK(std::string(text).find("\"verdict\": true") != std::string::npos);

    Mat f5 = named("F_5");
    int eq_verdict = 0;
    char* eq_text = nullptr;
    REQUIRE(hm_equiv(d1.get(), f5.get(), "D_1", "F_5", 0, &eq_verdict, &eq_text) == HM_OK);
    CStr eguard(eq_text);
    CHECK(eq_verdict == 1);
    CHECK(std::string(eq_text).find("pairs examined: 14400") != std::string::npos);

    Mat f3 = named("F_3");
    CHECK(hm_equiv(d1.get(), f3.get(), "D_1", "F_3", 0, &eq_verdict, &eq_text) ==
          HM_ERR_DIMENSION_MISMATCH);
}

TEST_CASE("search and dephase") {
    char* text = nullptr;
    REQUIRE(hm_search(5, 5, 1, 0, 0, &text) == HM_OK);
    CStr guard(text);
    std::string out(text);
    CHECK(out.find("0 1 4 4 1") != std::string::npos);
    CHECK(out.find("# solutions 20") != std::string::npos);

    CHECK(hm_search(7, 20, 1, 1000, 0, &text) == HM_ERR_BUDGET_EXCEEDED);

    Mat a11 = named("A_11");
    hm_matrix* deph = nullptr;
    REQUIRE(hm_dephase(a11.get(), &deph) == HM_OK);
    Mat dguard(deph);
    char* dtext = nullptr;
    REQUIRE(hm_matrix_print(deph, &dtext) == HM_OK);
    CStr dtguard(dtext);
    CHECK(std::string(dtext).find("\n1 1 1\n") != std::string::npos);
}

TEST_CASE("verify-paper through the C surface") {
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(hm_verify_paper(nullptr, &a) == HM_OK);
    REQUIRE(hm_verify_paper("principal", &b) == HM_OK);
    CStr ga(a), gb(b);
    CHECK(std::string(a) == b);
    CHECK(std::string(a).find("hadamat-report/1") != std::string::npos);

    char* bad = nullptr;
    CHECK(hm_verify_paper("sideways", &bad) == HM_ERR_INVALID_ARGUMENT);
}
