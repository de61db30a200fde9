#include "hadamat/matrix_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace hadamat {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    raise(ErrorCode::ParseError, "matrix parse error: " + what);
}

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpq_class parse_rational(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s)) parse_fail("bad rational '" + s + "'");
        mpq_class q(s);
        q.canonicalize();
        return q;
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den) || den.empty() || den[0] == '-')
        parse_fail("bad rational '" + s + "'");
    mpq_class q(s);
    if (q.get_den() == 0) parse_fail("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long checked_stol(const std::string& s) {
    try {
        return std::stol(s);
    } catch (const std::exception&) {
        parse_fail("integer out of range: '" + s + "'");
    }
}

long parse_header_int(const std::string& line, const std::string& key) {
    auto parts = split_ws(line);
    if (parts.size() != 2 || parts[0] != key || !is_integer_token(parts[1]))
        parse_fail("expected '" + key + " <integer>', got '" + line + "'");
    return checked_stol(parts[1]);
}

} // namespace

CycloNum parse_entry(const std::string& token, int order) {
    if (token.empty()) parse_fail("empty entry");
    if (token[0] == '[') {
        if (token.back() != ']') parse_fail("unterminated coefficient list");
        std::vector<mpq_class> coeffs;
        std::string inner = token.substr(1, token.size() - 2);
        size_t pos = 0;
        while (pos <= inner.size()) {
            size_t comma = inner.find(',', pos);
            std::string piece =
                comma == std::string::npos ? inner.substr(pos) : inner.substr(pos, comma - pos);
            coeffs.push_back(parse_rational(piece));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (static_cast<int>(coeffs.size()) != euler_phi(order))
            parse_fail("coefficient list must have exactly phi(order) = " +
                       std::to_string(euler_phi(order)) + " entries");
        return CycloNum::from_coeffs(order, std::move(coeffs));
    }
    if (token[0] == 'z') {
        size_t caret = token.find('^');
        if (caret == std::string::npos) parse_fail("bad root token '" + token + "'");
        std::string m_str = token.substr(1, caret - 1), k_str = token.substr(caret + 1);
        if (!is_integer_token(m_str) || !is_integer_token(k_str))
            parse_fail("bad root token '" + token + "'");
        long m = checked_stol(m_str), k = checked_stol(k_str);
        if (m < 1 || m > kMaxOrder) parse_fail("root order out of range in '" + token + "'");
        if (order % m != 0)
            parse_fail("root order " + m_str + " does not divide matrix order " +
                       std::to_string(order));
        return CycloNum::root_of_unity(static_cast<int>(m), k).embedded(order);
    }
    if (is_integer_token(token)) {
        mpq_class q(token);
        q.canonicalize();
        return CycloNum::from_rational(q, order);
    }
    parse_fail("unrecognized entry '" + token + "'");
}

std::string entry_to_string(const CycloNum& x) {
    if (x.is_rational() && x.coeffs()[0].get_den() == 1)
        return x.coeffs()[0].get_num().get_str();
    if (auto k = x.root_exponent())
        return "z" + std::to_string(x.order()) + "^" + std::to_string(*k);
    std::string out = "[";
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        if (i) out += ",";
        out += x.coeffs()[i].get_str();
    }
    out += "]";
    return out;
}

CycloMatrix parse_matrix(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }
    // Drop trailing blank lines.
    while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
    if (lines.size() < 5) parse_fail("truncated file");
    if (lines[0] != "hadamat-matrix v1")
        parse_fail("bad header line '" + lines[0] + "'");
    long order = parse_header_int(lines[1], "order");
    long dim = parse_header_int(lines[2], "dim");
    long scale = parse_header_int(lines[3], "scale");
    if (order < 1 || order > kMaxOrder) parse_fail("order out of range");
    if (dim < 1) parse_fail("dim must be positive");
    if (scale < 0) parse_fail("scale must be nonnegative");
    if (static_cast<long>(lines.size()) != 4 + dim)
        parse_fail("expected " + std::to_string(dim) + " body rows, got " +
                   std::to_string(lines.size() - 4));
    CycloMatrix m(static_cast<int>(dim), static_cast<int>(order), static_cast<int>(scale));
    for (long i = 0; i < dim; ++i) {
        auto tokens = split_ws(lines[4 + i]);
        if (static_cast<long>(tokens.size()) != dim)
            parse_fail("row " + std::to_string(i) + " has " + std::to_string(tokens.size()) +
                       " entries, expected " + std::to_string(dim));
        for (long j = 0; j < dim; ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) =
                parse_entry(tokens[j], static_cast<int>(order));
    }
    return m;
}

std::string print_matrix(const CycloMatrix& m) {
    std::string out = "hadamat-matrix v1\n";
    out += "order " + std::to_string(m.order()) + "\n";
    out += "dim " + std::to_string(m.dim()) + "\n";
    out += "scale " + std::to_string(m.scale_exp()) + "\n";
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out += " ";
            out += entry_to_string(m.at(i, j));
        }
        out += "\n";
    }
    return out;
}

} // namespace hadamat
