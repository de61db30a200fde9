#include <doctest.h>

#include <fstream>
#include <set>

#include <json.hpp>

#include "hadamat/constructions.hpp"
#include "hadamat/matrix_io.hpp"
#include "hadamat/report.hpp"

using namespace hadamat;

TEST_CASE("entry syntax") {
    CHECK(entry_to_string(CycloNum::one(60)) == "1");
    CHECK(entry_to_string(CycloNum::from_int(-7, 60)) == "-7");
    CHECK(entry_to_string(CycloNum::root_of_unity(60, 20)) == "z60^20");
    CHECK(entry_to_string(CycloNum::from_rational(mpq_class(mpz_class(1), mpz_class(2)), 4)) ==
          "[1/2,0]");

    CHECK(parse_entry("z60^20", 60) == CycloNum::root_of_unity(60, 20));
    CHECK(parse_entry("-1", 60) == CycloNum::from_int(-1, 60));
    CHECK(parse_entry("z5^1", 60) == CycloNum::root_of_unity(60, 12));
    CHECK(parse_entry("[0,1]", 3) == CycloNum::root_of_unity(3, 1));

    CHECK_THROWS_AS(parse_entry("z7^1", 60), Error); // 7 does not divide 60
    CHECK_THROWS_AS(parse_entry("[1,2,3]", 3), Error); // wrong list length
    CHECK_THROWS_AS(parse_entry("1.5", 3), Error);
    CHECK_THROWS_AS(parse_entry("[1/0,0]", 3), Error);
}

TEST_CASE("round-trip over the catalog") {
    for (const auto& nm : catalog()) {
        std::string text = print_matrix(nm.matrix);
        CycloMatrix back = parse_matrix(text);
        CHECK_MESSAGE(back == nm.matrix, nm.name);
        CHECK(back.scale_exp() == nm.matrix.scale_exp());
        CHECK(print_matrix(back) == text);
        CHECK(text.back() == '\n');
    }
}

TEST_CASE("parse rejections") {
    CHECK_THROWS_AS(parse_matrix(""), Error);
    CHECK_THROWS_AS(parse_matrix("nonsense v1\norder 3\ndim 1\nscale 0\n1\n"), Error);
    CHECK_THROWS_AS(parse_matrix("hadamat-matrix v1\norder 3\ndim 2\nscale 0\n1 1\n"),
                    Error); // missing row
    CHECK_THROWS_AS(
        parse_matrix("hadamat-matrix v1\norder 3\ndim 2\nscale 0\n1 1 1\n1 1\n"),
        Error); // wrong entry count
    CHECK_THROWS_AS(
        parse_matrix("hadamat-matrix v1\norder 0\ndim 1\nscale 0\n1\n"), Error);
    CHECK_THROWS_AS(
        parse_matrix("hadamat-matrix v1\norder 3\ndim 1\nscale -1\n1\n"), Error);

    // Scale metadata survives the trip.
    CycloMatrix m = fourier(3);
    m.set_scale_exp(1);
    CHECK(parse_matrix(print_matrix(m)).scale_exp() == 1);
}

TEST_CASE("complex rendering is fixed-width") {
    CHECK(complex_to_string(CycloNum::one(60)) == "1.000000000000+0.000000000000i");
    CHECK(complex_to_string(CycloNum::root_of_unity(4, 1)) ==
          "0.000000000000+1.000000000000i");
    CHECK(complex_to_string(CycloNum::root_of_unity(4, 3)) ==
          "0.000000000000-1.000000000000i");
    CHECK(complex_to_string(CycloNum::from_int(-1, 4)) ==
          "-1.000000000000+0.000000000000i");
}

TEST_CASE("check outcomes") {
    auto named = [](const char* n) {
        return std::make_pair(std::string(n), catalog_find(n)->matrix);
    };
    CheckOutcome h = run_check("hadamard", {named("F_5")});
    CHECK(h.verdict);
    CHECK(h.human.find("verdict: true") != std::string::npos);
    CHECK(h.json.find("\"verdict\": true") != std::string::npos);

    CheckOutcome u = run_check("unitary", {named("I_2/3")});
    CHECK(u.verdict);
    CHECK(u.human.find("gram = I") != std::string::npos);

    CheckOutcome m = run_check("mub", {{"I", CycloMatrix::identity(5, 60)},
                                       named("D_1"), named("D_2"), named("D_3"),
                                       named("D_4")});
    CHECK(m.verdict);

    // Inputs of different orders are embedded to the lcm.
    CheckOutcome mixed = run_check("mub", {{"I", CycloMatrix::identity(3, 1)},
                                           {"F_3", fourier(3)}});
    CHECK(mixed.verdict);

    CHECK_THROWS_AS(run_check("bogus", {named("F_5")}), Error);
}

TEST_CASE("report conforms to the published schema") {
    using nlohmann::json;
    std::ifstream schema_file(HADAMAT_SCHEMA_PATH);
    REQUIRE(schema_file.good());
    json schema = json::parse(schema_file);
    CHECK(schema["$id"] == "hadamat-report/1");

    json report = json::parse(verify_paper_json());
    for (const auto& key : schema["required"])
        CHECK_MESSAGE(report.contains(key.get<std::string>()), key);
    CHECK(report["schema"] == "hadamat-report/1");
    CHECK(report["root_order"].is_number_integer());
    CHECK((report["branch"] == "principal" || report["branch"] == "conjugate"));
    CHECK(report["generate_convention"].contains("determined"));

    const std::set<std::string> verdicts{"pass", "fail", "unresolvable"};
    int pass = 0, fail = 0, unresolved = 0;
    for (const auto& claim : report["claims"]) {
        for (const auto& key : schema["properties"]["claims"]["items"]["required"])
            CHECK_MESSAGE(claim.contains(key.get<std::string>()), key);
        CHECK(claim["asserted"].is_boolean());
        CHECK((claim["computed"].is_boolean() || claim["computed"].is_null()));
        std::string v = claim["verdict"];
        CHECK(verdicts.count(v) == 1);
        if (v == "pass") ++pass;
        if (v == "fail") ++fail;
        if (v == "unresolvable") ++unresolved;
        // Unresolvable exactly when nothing could be computed as written.
        CHECK((v == "unresolvable") == claim["computed"].is_null());
    }
    CHECK(report["summary"]["pass"] == pass);
    CHECK(report["summary"]["fail"] == fail);
    CHECK(report["summary"]["unresolvable"] == unresolved);
    CHECK(report["summary"]["claims"] == pass + fail + unresolved);
    for (const auto& e : report["errata"]) {
        CHECK(e.contains("ref"));
        CHECK(e.contains("note"));
    }
}

TEST_CASE("verify-paper output is deterministic and contains key claims") {
    std::string a = verify_paper_json();
    std::string b = verify_paper_json();
    CHECK(a == b);
    CHECK(a.find("\"schema\": \"hadamat-report/1\"") != std::string::npos);
    CHECK(a.find("S5.D1-hadamard") != std::string::npos);
    CHECK(a.find("S6.AB-not-hadamard") != std::string::npos);
    CHECK(a.find("S6.F5-equivalence") != std::string::npos);
    CHECK(a.find("S4.A11-hadamard") != std::string::npos);
    CHECK(a.find("S5.D-mub") != std::string::npos);
    CHECK(a.back() == '\n');
}
