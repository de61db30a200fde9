#include "hadamat/constructions.hpp"

#include <mutex>

namespace hadamat {

CycloMatrix fourier(int n) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "fourier size must be positive");
    CycloMatrix f(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            f.at(j, k) = CycloNum::root_of_unity(n, static_cast<long>(j) * k);
    return f;
}

CycloMatrix circulant(const CirculantSpec& spec) {
    const int n = spec.dim;
    if (n < 1 || static_cast<int>(spec.first_row.size()) != n)
        raise(ErrorCode::InvalidArgument, "circulant first row must have length dim");
    const int order = spec.first_row[0].order();
    for (const auto& e : spec.first_row)
        if (e.order() != order)
            raise(ErrorCode::OrderMismatch, "circulant row entries must share one order");
    CycloMatrix m(n, order);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = spec.first_row[((j - i) % n + n) % n];
    return m;
}

CycloMatrix c2_solution(const CycloNum& a, const CycloNum& b,
                        const CycloNum& c, const CycloNum& d, int which) {
    if (which < 1 || which > 4)
        raise(ErrorCode::InvalidArgument, "which must be in 1..4");
    const int order = a.order();
    for (const CycloNum* v : {&b, &c, &d})
        if (v->order() != order)
            raise(ErrorCode::OrderMismatch, "parameters must share one order");
    auto solve = [](const CycloNum& num1, const CycloNum& num2, const CycloNum& den) {
        if (den.is_zero())
            raise(ErrorCode::DomainError, "constraint denominator is zero");
        return -(num1 * num2 / den);
    };
    CycloMatrix h(2, order);
    h.at(0, 0) = a;
    h.at(0, 1) = b;
    h.at(1, 0) = c;
    h.at(1, 1) = d;
    switch (which) {
        case 1: h.at(0, 0) = solve(b, c, d); break;
        case 2: h.at(0, 1) = solve(a, d, c); break;
        case 3: h.at(1, 0) = solve(a, d, b); break;
        case 4: h.at(1, 1) = solve(b, c, a); break;
    }
    return h;
}

std::pair<CycloNum, CycloNum> c3_constraints(const CycloNum& a, const CycloNum& b,
                                             const CycloNum& c) {
    CycloNum r1 = a * a * b + b * b * c + a * c * c;
    CycloNum r2 = a * b * b + a * a * c + b * c * c;
    return {std::move(r1), std::move(r2)};
}

QuadraticRoots c3_quadratic_roots(const CycloNum& b, const CycloNum& c) {
    if (b.is_zero())
        raise(ErrorCode::DomainError, "quadratic leading coefficient b is zero");
    const int order = b.order();
    if (c.order() != order)
        raise(ErrorCode::OrderMismatch, "parameters must share one order");
    // b*a^2 + c^2*a + b^2*c = 0; discriminant c^4 - 4 b^3 c.
    CycloNum c2 = c * c;
    CycloNum disc = c2 * c2 - CycloNum::from_int(4, order) * b * b * b * c;
    auto root = sqrt_in_field(disc);
    if (!root)
        return {false, CycloNum::zero(order), CycloNum::zero(order)};
    CycloNum two_b = CycloNum::from_int(2, order) * b;
    CycloNum plus = (-c2 + *root) / two_b;
    CycloNum minus = (-c2 - *root) / two_b;
    return {true, std::move(plus), std::move(minus)};
}

CycloNum c5_factor(const CycloNum& a) {
    CycloNum s = CycloNum::one(a.order());
    CycloNum p = CycloNum::one(a.order());
    for (int i = 0; i < 4; ++i) {
        p *= a;
        s += p;
    }
    return s;
}

namespace {

// sqrt(n) as an exact value: n = s^2 * m with m squarefree; m must be
// 1, 2, 3 or 5.
CycloNum sqrt_dim(int n, int order) {
    int s = 1, m = n;
    for (int p = 2; p * p <= m; ++p)
        while (m % (p * p) == 0) {
            s *= p;
            m /= p * p;
        }
    CycloNum base = CycloNum::from_int(s, order);
    if (m == 1) return base;
    if (m == 2 || m == 3 || m == 5) return base * sqrt_int(m, order);
    raise(ErrorCode::UnsupportedOrder,
          "sqrt(" + std::to_string(n) + ") is not representable in a cyclotomic field");
}

} // namespace

CycloMatrix transfer(const CycloMatrix& h1, const CycloMatrix& h2, int order) {
    if (h1.dim() != h2.dim())
        raise(ErrorCode::DimensionMismatch, "transfer requires equal dimensions");
    for (const CycloMatrix* h : {&h1, &h2})
        for (int i = 0; i < h->dim(); ++i)
            for (int j = 0; j < h->dim(); ++j)
                if (!h->at(i, j).is_unimodular())
                    raise(ErrorCode::DomainError, "transfer requires unimodular entries");
    if (order % h1.order() != 0 || order % h2.order() != 0)
        raise(ErrorCode::OrderMismatch, "target order must be a multiple of both input orders");
    const int n = h1.dim();
    CycloNum root = sqrt_dim(n, order);
    CycloNum inv_root = root / CycloNum::from_int(n, order);
    CycloMatrix p = matmul(conj_transpose(h1.embedded(order)), h2.embedded(order));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.at(i, j) *= inv_root;
    return p;
}

CycloNum signed_power_root(int p, int q, bool negated, Branch branch, int order) {
    if (q < 1) raise(ErrorCode::InvalidArgument, "root denominator must be positive");
    // (-1)^(p/q) = exp(i*pi*p/q) = zeta_(2q)^p; negation shifts by q.
    if (order % (2 * q) != 0)
        raise(ErrorCode::UnsupportedOrder, "order does not contain zeta_" + std::to_string(2 * q));
    long e = (static_cast<long>(order) / (2 * q)) * (p + (negated ? q : 0));
    if (branch == Branch::Conjugate) e = -e;
    return CycloNum::root_of_unity(order, e);
}

namespace {

constexpr int kCatalogOrder = 60;

std::vector<NamedMatrix> make_catalog(Branch br) {
    std::vector<NamedMatrix> cat;
    const int M = kCatalogOrder;
    auto rz = [&](long k) { return CycloNum::root_of_unity(M, k); };
    auto pm = [&](int p, int q, bool neg) { return signed_power_root(p, q, neg, br, M); };
    auto one = CycloNum::one(M);
    auto add = [&](const std::string& name, CycloMatrix m, const std::string& prov) {
        cat.push_back(NamedMatrix{name, std::move(m), prov});
    };
    auto circ3 = [&](CycloNum x, CycloNum y, CycloNum z) {
        return circulant({3, {std::move(x), std::move(y), std::move(z)}});
    };
    auto diag3 = [&](const CycloNum& v) {
        CycloMatrix m(3, M);
        for (int i = 0; i < 3; ++i) m.at(i, i) = v;
        return m;
    };

    add("F_2", fourier(2).embedded(M), "eq:f3");
    add("F_3", fourier(3).embedded(M), "eq:f3");
    add("F_5", fourier(5).embedded(M), "eq:c5");

    // omega = zeta_3 (the value gamma = e^(2*pi*i/3) of the order-3 display).
    CycloNum om = rz(20), om2 = rz(40);
    add("A_1", circ3(om, one, one), "eq:a15");
    add("A_2", circ3(one, om, one), "eq:a15");
    add("A_3", circ3(om, om, one), "eq:a15");
    add("A_4", circ3(one, one, om), "eq:a15");
    add("A_5", circ3(om, one, om), "eq:a15");
    add("B_1", circ3(om2, one, one), "eq:b15");
    add("B_2", circ3(one, om2, one), "eq:b15");
    add("B_3", circ3(om2, om2, one), "eq:b15");
    add("B_4", circ3(one, one, om2), "eq:b15");
    add("B_5", circ3(om2, one, om2), "eq:b15");

    CycloNum m13 = pm(1, 3, true);   // -(-1)^(1/3)
    CycloNum p23 = pm(2, 3, false);  // (-1)^(2/3)
    add("A_11", circ3(m13, one, one), "eq:a1112");
    add("A_12", circ3(p23, one, one), "eq:a1112");
    add("A_21", circ3(one, m13, one), "eq:a2122");
    add("A_22", circ3(one, p23, one), "eq:a2122");
    add("A_31", circ3(m13, m13, one), "eq:a3132");
    add("A_32", circ3(p23, p23, one), "eq:a3132");
    add("A_41", circ3(one, one, m13), "eq:a4142");
    add("A_42", circ3(one, one, p23), "eq:a4142");
    add("A_51", circ3(m13, one, m13), "eq:a5152");
    add("A_52", circ3(p23, one, p23), "eq:a5152");

    CycloNum p16 = pm(1, 6, false), p56 = pm(5, 6, false);
    CycloNum m16 = pm(1, 6, true), m56 = pm(5, 6, true);
    CycloNum iu = pm(1, 2, false);   // i
    CycloNum mi = pm(1, 2, true);    // -i
    add("A_1112", circ3(p16, mi, mi), "eq:a11121211");
    add("A_1211", circ3(p56, mi, mi), "eq:a11121211");
    add("A_3132", circ3(iu, m16, m16), "eq:A31323231");
    add("A_3231", circ3(iu, m56, m56), "eq:A31323231");
    add("A_5152", circ3(iu, m16, m16), "eq:A5152a5251");
    add("A_5251", circ3(iu, m56, m56), "eq:A5152a5251");
    add("D_11", circ3(p16, p56, p56), "eq:d11d12");
    add("D_12", circ3(p56, p16, p16), "eq:d11d12");

    add("B_11", circ3(p23, one, one), "eq:b1112");
    add("B_12", circ3(m13, one, one), "eq:b1112");
    add("B_21", circ3(p23, one, one), "eq:b21b22");
    add("B_22", circ3(m13, one, one), "eq:b21b22");
    add("B_31", circ3(p23, p23, one), "eq:b3132");
    add("B_32", circ3(m13, m13, one), "eq:b3132");
    add("B_41", circ3(one, one, p23), "eq:b4142");
    add("B_42", circ3(one, one, m13), "eq:b4142");
    add("B_51", circ3(p23, one, p23), "eq:B5152");
    add("B_52", circ3(m13, one, m13), "eq:B5152");
    add("B_4142", circ3(p56, mi, mi), "eq:B41424241");
    add("B_4241", circ3(p16, mi, mi), "eq:B41424241");

    add("I_2/3", diag3(p23), "eq:I_2/3");
    add("I_1/3", diag3(m13), "eq:I_m1/3");

    // Order-5 circulants at the four roots of 1 + a + a^2 + a^3 + a^4.
    auto d_matrix = [&](const CycloNum& a) {
        CycloNum a4 = a * a * a * a;
        return circulant({5, {one, a, a4, a4, a}});
    };
    add("D_1", d_matrix(pm(1, 5, true)), "eq:d12");
    add("D_2", d_matrix(pm(2, 5, false)), "eq:d12");
    add("D_3", d_matrix(pm(3, 5, true)), "eq:d34");
    add("D_4", d_matrix(pm(4, 5, false)), "eq:d34");

    // Reference instantiation b = c = d = 1 (and a = 1 where free).
    for (int which = 1; which <= 4; ++which)
        add("H_" + std::to_string(which), c2_solution(one, one, one, one, which), "eq:h14");

    return cat;
}

std::once_flag g_catalog_once;
std::vector<NamedMatrix> g_catalog;

} // namespace

const std::vector<NamedMatrix>& catalog() {
    std::call_once(g_catalog_once, [] { g_catalog = make_catalog(Branch::Principal); });
    return g_catalog;
}

std::vector<NamedMatrix> build_catalog(Branch branch) { return make_catalog(branch); }

const NamedMatrix* catalog_find(const std::string& name) {
    for (const auto& nm : catalog())
        if (nm.name == name) return &nm;
    return nullptr;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    names.reserve(catalog().size());
    for (const auto& nm : catalog()) names.push_back(nm.name);
    return names;
}

} // namespace hadamat
