#include "hadamat.h"

#include <cstdlib>
#include <cstring>
#include <numeric>
#include <string>
#include <vector>

#include "hadamat/circulant_search.hpp"
#include "hadamat/constructions.hpp"
#include "hadamat/matrix_io.hpp"
#include "hadamat/report.hpp"

struct hm_matrix {
    hadamat::CycloMatrix m;
};

namespace {

thread_local std::string g_last_error;

hm_status map_code(hadamat::ErrorCode c) {
    using EC = hadamat::ErrorCode;
    switch (c) {
        case EC::InvalidArgument: return HM_ERR_INVALID_ARGUMENT;
        case EC::UnsupportedOrder: return HM_ERR_UNSUPPORTED_ORDER;
        case EC::OrderMismatch: return HM_ERR_ORDER_MISMATCH;
        case EC::DimensionMismatch: return HM_ERR_DIMENSION_MISMATCH;
        case EC::DomainError: return HM_ERR_DOMAIN;
        case EC::NotRepresentable: return HM_ERR_NOT_REPRESENTABLE;
        case EC::ParseError: return HM_ERR_PARSE;
        case EC::BudgetExceeded: return HM_ERR_BUDGET_EXCEEDED;
        case EC::UnknownName: return HM_ERR_UNKNOWN_NAME;
        case EC::ExceedsMaximum: return HM_ERR_EXCEEDS_MAXIMUM;
        case EC::ComplexityGuard: return HM_ERR_COMPLEXITY_GUARD;
    }
    return HM_ERR_INTERNAL;
}

template <typename F>
hm_status wrap(F&& f) {
    try {
        f();
        return HM_OK;
    } catch (const hadamat::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HM_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

hm_status require(bool cond, const char* msg) {
    if (cond) return HM_OK;
    g_last_error = msg;
    return HM_ERR_INVALID_ARGUMENT;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip_separators(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != '_' && c != '/') out += c;
    return out;
}

} // namespace

extern "C" {

const char* hm_version(void) { return "1.0.0"; }

const char* hm_last_error(void) { return g_last_error.c_str(); }

void hm_string_free(char* s) { std::free(s); }

void hm_matrix_free(hm_matrix* m) { delete m; }

hm_status hm_matrix_parse(const char* text, hm_matrix** out) {
    if (require(text && out, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] { *out = new hm_matrix{hadamat::parse_matrix(text)}; });
}

hm_status hm_matrix_print(const hm_matrix* m, char** out) {
    if (require(m && out, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] { *out = dup_string(hadamat::print_matrix(m->m)); });
}

hm_status hm_matrix_dim(const hm_matrix* m, int* out) {
    if (require(m && out, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    *out = m->m.dim();
    return HM_OK;
}

hm_status hm_matrix_order(const hm_matrix* m, int* out) {
    if (require(m && out, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    *out = m->m.order();
    return HM_OK;
}

hm_status hm_matrix_embed(const hm_matrix* m, int order, hm_matrix** out) {
    if (require(m && out, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] { *out = new hm_matrix{m->m.embedded(order)}; });
}

hm_status hm_gen_named(const char* name, hm_matrix** out) {
    if (require(name && out, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] {
        const hadamat::NamedMatrix* nm = hadamat::catalog_find(name);
        if (!nm) {
            const std::string wanted = strip_separators(name);
            for (const auto& cand : hadamat::catalog())
                if (strip_separators(cand.name) == wanted) {
                    nm = &cand;
                    break;
                }
        }
        if (!nm)
            hadamat::raise(hadamat::ErrorCode::UnknownName,
                           "unknown matrix name '" + std::string(name) + "'");
        *out = new hm_matrix{nm->matrix};
    });
}

hm_status hm_catalog_names(char** out) {
    if (require(out, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] {
        std::string all;
        for (const auto& n : hadamat::catalog_names()) {
            all += n;
            all += "\n";
        }
        *out = dup_string(all);
    });
}

hm_status hm_gen_fourier(int n, hm_matrix** out) {
    if (require(out, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] { *out = new hm_matrix{hadamat::fourier(n)}; });
}

hm_status hm_gen_identity(int n, hm_matrix** out) {
    if (require(out, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] { *out = new hm_matrix{hadamat::CycloMatrix::identity(n, 1)}; });
}

hm_status hm_gen_circulant(const char* row, int order, hm_matrix** out) {
    if (require(row && out, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] {
        auto tokens = split_commas(row);
        long ord = order;
        if (ord == 0) {
            ord = 1;
            for (const auto& t : tokens) {
                if (t.empty())
                    hadamat::raise(hadamat::ErrorCode::ParseError, "empty row entry");
                if (t[0] == 'z') {
                    size_t caret = t.find('^');
                    if (caret == std::string::npos || caret < 2)
                        hadamat::raise(hadamat::ErrorCode::ParseError,
                                       "bad root token '" + t + "'");
                    long root_order = 0;
                    try {
                        root_order = std::stol(t.substr(1, caret - 1));
                    } catch (const std::exception&) {
                        hadamat::raise(hadamat::ErrorCode::ParseError,
                                       "bad root token '" + t + "'");
                    }
                    ord = std::lcm(ord, root_order);
                } else if (t[0] == '[') {
                    hadamat::raise(hadamat::ErrorCode::InvalidArgument,
                                   "coefficient-list entries need an explicit order");
                }
                if (ord > hadamat::kMaxOrder)
                    hadamat::raise(hadamat::ErrorCode::UnsupportedOrder,
                                   "combined root order exceeds " +
                                       std::to_string(hadamat::kMaxOrder));
            }
        }
        std::vector<hadamat::CycloNum> fr;
        fr.reserve(tokens.size());
        for (const auto& t : tokens)
            fr.push_back(hadamat::parse_entry(t, static_cast<int>(ord)));
        *out = new hm_matrix{
            hadamat::circulant({static_cast<int>(tokens.size()), std::move(fr)})};
    });
}

hm_status hm_dephase(const hm_matrix* m, hm_matrix** out) {
    if (require(m && out, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] { *out = new hm_matrix{hadamat::dephase(m->m)}; });
}

hm_status hm_check(const char* kind, const hm_matrix* const* ms,
                   const char* const* names, size_t count, int as_json,
                   int* verdict, char** out_text) {
    if (require(kind && ms && count > 0, "null argument") != HM_OK)
        return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] {
        std::vector<std::pair<std::string, hadamat::CycloMatrix>> inputs;
        inputs.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            std::string name = (names && names[i]) ? names[i]
                                                   : "input" + std::to_string(i);
            inputs.emplace_back(std::move(name), ms[i]->m);
        }
        hadamat::CheckOutcome o = hadamat::run_check(kind, inputs);
        if (verdict) *verdict = o.verdict ? 1 : 0;
        if (out_text) *out_text = dup_string(as_json ? o.json : o.human);
    });
}

hm_status hm_equiv(const hm_matrix* a, const hm_matrix* b, const char* name_a,
                   const char* name_b, int as_json, int* verdict, char** out_text) {
    if (require(a && b, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] {
        hadamat::CheckOutcome o = hadamat::run_equiv(
            {name_a ? name_a : "first", a->m}, {name_b ? name_b : "second", b->m});
        if (verdict) *verdict = o.verdict ? 1 : 0;
        if (out_text) *out_text = dup_string(as_json ? o.json : o.human);
    });
}

hm_status hm_search(int n, int root_order, int fix_first, long budget,
                    int as_matrices, char** out_text) {
    if (require(out_text, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] {
        hadamat::SearchTask task{n, root_order, fix_first != 0, budget};
        *out_text = dup_string(hadamat::run_search_text(task, as_matrices != 0));
    });
}

hm_status hm_verify_paper(const char* branch, char** out_json) {
    if (require(out_json, "null argument") != HM_OK) return HM_ERR_INVALID_ARGUMENT;
    return wrap([&] {
        hadamat::Branch b = hadamat::Branch::Principal;
        if (branch && std::string(branch) == "conjugate")
            b = hadamat::Branch::Conjugate;
        else if (branch && std::string(branch) != "principal" && branch[0] != '\0')
            hadamat::raise(hadamat::ErrorCode::InvalidArgument,
                           "branch must be 'principal' or 'conjugate'");
        *out_json = dup_string(hadamat::verify_paper_json(b));
    });
}

} // extern "C"
