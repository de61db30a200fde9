#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hadamat.h"

namespace {

struct StringDeleter {
    void operator()(char* p) const { hm_string_free(p); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct MatrixDeleter {
    void operator()(hm_matrix* m) const { hm_matrix_free(m); }
};
using Matrix = std::unique_ptr<hm_matrix, MatrixDeleter>;

int report_error() {
    std::cerr << "error: " << hm_last_error() << "\n";
    return 2;
}

bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        out = buf.str();
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return false;
    }
    out << text;
    return true;
}

bool load_matrix(const std::string& path, Matrix& m) {
    std::string text;
    if (!read_input(path, text)) return false;
    hm_matrix* raw = nullptr;
    if (hm_matrix_parse(text.c_str(), &raw) != HM_OK) {
        std::cerr << "error: " << path << ": " << hm_last_error() << "\n";
        return false;
    }
    m.reset(raw);
    return true;
}

int print_matrix_result(hm_matrix* raw, int order, const std::string& out_path) {
    Matrix m(raw);
    if (order > 0) {
        hm_matrix* embedded = nullptr;
        if (hm_matrix_embed(m.get(), order, &embedded) != HM_OK) return report_error();
        m.reset(embedded);
    }
    char* text = nullptr;
    if (hm_matrix_print(m.get(), &text) != HM_OK) return report_error();
    CString guard(text);
    return write_output(out_path, text) ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hadamat: exact complex Hadamard matrix toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    bool do_assert = false;
    int order = 0;
    app.add_flag("--json", as_json, "emit machine-readable JSON");
    app.add_flag("--assert", do_assert, "exit with status 1 when the verdict is false");
    app.add_option("--order", order, "embed generated matrices into Q(zeta_order)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a matrix (catalog name, "
                                          "fourier, identity or circulant)");
    std::string gen_name, gen_row, gen_out;
    int gen_n = 0;
    gen->add_option("name", gen_name, "catalog name or family keyword")->required();
    gen->add_option("--n", gen_n, "size for fourier/identity/circulant");
    gen->add_option("--row", gen_row, "first row for circulant, comma-separated entries");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "check hadamard | unitary | "
                                              "inverse-orthogonal | mub");
    std::string check_kind;
    std::vector<std::string> check_files;
    check->add_option("kind", check_kind, "check kind")->required();
    check->add_option("files", check_files, "matrix files ('-' for stdin)")->required();

    // canon
    auto* canon = app.add_subcommand("canon", "dephased canonical form");
    std::string canon_file, canon_out;
    canon->add_option("file", canon_file, "matrix file")->required();
    canon->add_option("-o,--output", canon_out, "output file (default stdout)");

    // equiv
    auto* eq = app.add_subcommand("equiv", "exhaustive Hadamard-equivalence test (n <= 5)");
    std::string eq_file1, eq_file2;
    eq->add_option("file1", eq_file1)->required();
    eq->add_option("file2", eq_file2)->required();

    // search
    auto* sr = app.add_subcommand("search", "exhaustive circulant Butson search");
    int sr_n = 0, sr_N = 0;
    bool sr_fix = true;
    long sr_budget = 0;
    std::string sr_format = "rows";
    sr->add_option("--n", sr_n, "matrix dimension (1..7)")->required();
    sr->add_option("--N", sr_N, "root order (1..20)")->required();
    sr->add_flag("--fix-first,!--no-fix-first", sr_fix, "pin the first entry to 1 (default on)");
    sr->add_option("--budget", sr_budget, "candidate budget (default HADAMAT_BUDGET or 1e8)");
    sr->add_option("--format", sr_format, "rows | matrix")
        ->check(CLI::IsMember({"rows", "matrix"}));

    // verify-paper
    auto* vp = app.add_subcommand("verify-paper",
                                  "run the built-in claim suite and emit the JSON report");
    std::string vp_branch = "principal";
    vp->add_option("--branch", vp_branch, "principal | conjugate")
        ->check(CLI::IsMember({"principal", "conjugate"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        hm_matrix* raw = nullptr;
        hm_status st;
        if (gen_name == "list") {
            char* names = nullptr;
            if (hm_catalog_names(&names) != HM_OK) return report_error();
            CString guard(names);
            return write_output(gen_out, names) ? 0 : 2;
        }
        if (gen_name == "fourier") {
            st = hm_gen_fourier(gen_n, &raw);
        } else if (gen_name == "identity") {
            st = hm_gen_identity(gen_n, &raw);
        } else if (gen_name == "circulant") {
            if (gen_row.empty()) {
                std::cerr << "error: gen circulant needs --row\n";
                return 2;
            }
            if (gen_n > 0) {
                long commas = std::count(gen_row.begin(), gen_row.end(), ',');
                if (commas + 1 != gen_n) {
                    std::cerr << "error: --row has " << commas + 1
                              << " entries but --n is " << gen_n << "\n";
                    return 2;
                }
            }
            st = hm_gen_circulant(gen_row.c_str(), 0, &raw);
        } else {
            st = hm_gen_named(gen_name.c_str(), &raw);
            if (st == HM_ERR_UNKNOWN_NAME) {
                std::cerr << "error: " << hm_last_error() << "\nknown names:\n";
                char* names = nullptr;
                if (hm_catalog_names(&names) == HM_OK) {
                    CString guard(names);
                    std::cerr << names;
                }
                std::cerr << "families: fourier --n N | identity --n N | "
                             "circulant --row \"e0,e1,...\"\n";
                return 2;
            }
        }
        if (st != HM_OK) return report_error();
        return print_matrix_result(raw, order, gen_out);
    }

    if (check->parsed()) {
        std::vector<Matrix> ms;
        std::vector<const hm_matrix*> raw;
        std::vector<const char*> names;
        for (const auto& f : check_files) {
            Matrix m;
            if (!load_matrix(f, m)) return 2;
            raw.push_back(m.get());
            ms.push_back(std::move(m));
        }
        for (const auto& f : check_files) names.push_back(f.c_str());
        int verdict = 0;
        char* text = nullptr;
        if (hm_check(check_kind.c_str(), raw.data(), names.data(), raw.size(),
                     as_json ? 1 : 0, &verdict, &text) != HM_OK)
            return report_error();
        CString guard(text);
        std::cout << text;
        return (do_assert && !verdict) ? 1 : 0;
    }

    if (canon->parsed()) {
        Matrix m;
        if (!load_matrix(canon_file, m)) return 2;
        hm_matrix* out = nullptr;
        if (hm_dephase(m.get(), &out) != HM_OK) return report_error();
        return print_matrix_result(out, order, canon_out);
    }

    if (eq->parsed()) {
        Matrix a, b;
        if (!load_matrix(eq_file1, a) || !load_matrix(eq_file2, b)) return 2;
        int verdict = 0;
        char* text = nullptr;
        if (hm_equiv(a.get(), b.get(), eq_file1.c_str(), eq_file2.c_str(),
                     as_json ? 1 : 0, &verdict, &text) != HM_OK)
            return report_error();
        CString guard(text);
        std::cout << text;
        return (do_assert && !verdict) ? 1 : 0;
    }

    if (sr->parsed()) {
        char* text = nullptr;
        if (hm_search(sr_n, sr_N, sr_fix ? 1 : 0, sr_budget,
                      sr_format == "matrix" ? 1 : 0, &text) != HM_OK)
            return report_error();
        CString guard(text);
        std::cout << text;
        return 0;
    }

    if (vp->parsed()) {
        char* text = nullptr;
        if (hm_verify_paper(vp_branch.c_str(), &text) != HM_OK) return report_error();
        CString guard(text);
        std::cout << text;
        return 0;
    }

    return 2;
}
