#include "hadamat/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace hadamat {

namespace {

void check_order_range(int m) {
    if (m < 1 || m > kMaxOrder)
        raise(ErrorCode::UnsupportedOrder,
              "unsupported root order " + std::to_string(m) +
                  " (supported: 1.." + std::to_string(kMaxOrder) + ")");
}

std::vector<int> divisors_of(int m) {
    std::vector<int> d;
    for (int i = 1; i <= m; ++i)
        if (m % i == 0) d.push_back(i);
    return d;
}

// Exact division of f by a monic integer polynomial g; f must be divisible.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> f,
                                    const std::vector<mpz_class>& g) {
    const int dg = static_cast<int>(g.size()) - 1;
    const int df = static_cast<int>(f.size()) - 1;
    std::vector<mpz_class> q(df - dg + 1, mpz_class(0));
    for (int d = df; d >= dg; --d) {
        mpz_class c = f[d];
        if (c == 0) continue;
        q[d - dg] = c;
        for (int i = 0; i <= dg; ++i) f[d - dg + i] -= c * g[i];
    }
    return q;
}

std::mutex g_cache_mutex;
std::map<int, std::vector<mpz_class>> g_phi_polys;
std::map<int, std::vector<std::vector<mpq_class>>> g_root_tables;

const std::vector<mpz_class>& cyclotomic_polynomial_locked(int m) {
    auto it = g_phi_polys.find(m);
    if (it != g_phi_polys.end()) return it->second;
    for (int d : divisors_of(m)) {
        if (g_phi_polys.count(d)) continue;
        // x^d - 1 divided by the product of all lower-order Phi_e, e | d.
        std::vector<mpz_class> f(d + 1, mpz_class(0));
        f[0] = -1;
        f[d] = 1;
        for (int e : divisors_of(d))
            if (e != d) f = divide_monic(std::move(f), g_phi_polys.at(e));
        g_phi_polys.emplace(d, std::move(f));
    }
    return g_phi_polys.at(m);
}

// Reduce a polynomial in zeta_m of arbitrary degree to the phi(m) basis.
void reduce_mod_phi(std::vector<mpq_class>& p, int m, int phi,
                    const std::vector<mpz_class>& phi_poly) {
    for (int d = static_cast<int>(p.size()) - 1; d >= phi; --d) {
        if (p[d] == 0) continue;
        mpq_class c = p[d];
        for (int i = 0; i <= phi; ++i) p[d - phi + i] -= c * phi_poly[i];
    }
    p.resize(phi);
    for (auto& c : p) c.canonicalize();
}

std::vector<mpq_class> reduced(std::vector<mpq_class> p, int m) {
    int phi = euler_phi(m);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    const auto& phi_poly = cyclotomic_polynomial_locked(m);
    reduce_mod_phi(p, m, phi, phi_poly);
    return p;
}

// Reduced coefficient vectors of zeta_m^k for k in [0, m).
const std::vector<std::vector<mpq_class>>& root_table(int m) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_root_tables.find(m);
    if (it != g_root_tables.end()) return it->second;
    const auto& phi_poly = cyclotomic_polynomial_locked(m);
    int phi = euler_phi(m);
    std::vector<std::vector<mpq_class>> table;
    table.reserve(m);
    for (int k = 0; k < m; ++k) {
        std::vector<mpq_class> p(k + 1, mpq_class(0));
        p[k] = 1;
        reduce_mod_phi(p, m, phi, phi_poly);
        table.push_back(std::move(p));
    }
    return g_root_tables.emplace(m, std::move(table)).first->second;
}

} // namespace

int euler_phi(int m) {
    check_order_range(m);
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int m) {
    check_order_range(m);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return cyclotomic_polynomial_locked(m);
}

CycloNum CycloNum::zero(int order) {
    check_order_range(order);
    return CycloNum(order, std::vector<mpq_class>(euler_phi(order), mpq_class(0)));
}

CycloNum CycloNum::one(int order) { return from_int(1, order); }

CycloNum CycloNum::from_rational(const mpq_class& q, int order) {
    CycloNum r = zero(order);
    r.coeffs_[0] = q;
    r.coeffs_[0].canonicalize();
    return r;
}

CycloNum CycloNum::from_int(long v, int order) {
    return from_rational(mpq_class(v), order);
}

CycloNum CycloNum::root_of_unity(int order, long k) {
    check_order_range(order);
    long kk = k % order;
    if (kk < 0) kk += order;
    return CycloNum(order, root_table(order)[static_cast<int>(kk)]);
}

CycloNum CycloNum::from_coeffs(int order, std::vector<mpq_class> coeffs) {
    check_order_range(order);
    if (static_cast<int>(coeffs.size()) != euler_phi(order))
        raise(ErrorCode::InvalidArgument,
              "coefficient vector must have length phi(" + std::to_string(order) +
                  ") = " + std::to_string(euler_phi(order)));
    for (auto& c : coeffs) c.canonicalize();
    return CycloNum(order, std::move(coeffs));
}

bool CycloNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

bool CycloNum::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

bool CycloNum::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

mpq_class CycloNum::rational_value() const {
    if (!is_rational())
        raise(ErrorCode::DomainError, "value is not rational");
    return coeffs_[0];
}

void CycloNum::check_same_order(const CycloNum& rhs) const {
    if (order_ != rhs.order_)
        raise(ErrorCode::OrderMismatch,
              "root order mismatch: " + std::to_string(order_) + " vs " +
                  std::to_string(rhs.order_) + " (use embed)");
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
    check_same_order(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
    check_same_order(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
    check_same_order(rhs);
    const size_t n = coeffs_.size();
    std::vector<mpq_class> prod(2 * n - 1, mpq_class(0));
    for (size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = reduced(std::move(prod), order_);
    return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& rhs) {
    return *this *= rhs.inverse();
}

CycloNum CycloNum::conj() const {
    std::vector<mpq_class> p(order_, mpq_class(0));
    for (size_t k = 0; k < coeffs_.size(); ++k)
        p[(order_ - static_cast<int>(k)) % order_] += coeffs_[k];
    return CycloNum(order_, reduced(std::move(p), order_));
}

CycloNum CycloNum::embedded(int new_order) const {
    check_order_range(new_order);
    if (new_order % order_ != 0)
        raise(ErrorCode::OrderMismatch,
              "cannot embed order " + std::to_string(order_) + " into " +
                  std::to_string(new_order) + " (not a multiple)");
    if (new_order == order_) return *this;
    const int t = new_order / order_;
    std::vector<mpq_class> p(t * (coeffs_.size() - 1) + 1, mpq_class(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) p[t * k] = coeffs_[k];
    return CycloNum(new_order, reduced(std::move(p), new_order));
}

CycloNum CycloNum::inverse() const {
    if (is_zero())
        raise(ErrorCode::DomainError, "division by zero");
    // Product of all nontrivial Galois conjugates sigma_k(x), k coprime to M;
    // x times that product is the rational field norm.
    CycloNum prod = one(order_);
    for (int k = 2; k <= order_; ++k) {
        if (std::gcd(k, order_) != 1) continue;
        std::vector<mpq_class> p(order_, mpq_class(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            p[(static_cast<long>(i) * k) % order_] += coeffs_[i];
        prod *= CycloNum(order_, reduced(std::move(p), order_));
    }
    CycloNum norm = *this * prod;
    if (!norm.is_rational() || norm.coeffs_[0] == 0)
        raise(ErrorCode::DomainError, "field norm is not a nonzero rational");
    mpq_class inv_norm = 1 / norm.coeffs_[0];
    for (auto& c : prod.coeffs_) {
        c *= inv_norm;
        c.canonicalize();
    }
    return prod;
}

bool CycloNum::is_unimodular() const {
    return (*this * conj()).is_one();
}

std::optional<int> CycloNum::root_exponent() const {
    const auto& table = root_table(order_);
    for (int k = 0; k < order_; ++k)
        if (table[k] == coeffs_) return k;
    return std::nullopt;
}

std::complex<double> CycloNum::to_complex() const {
    long double re = 0.0L, im = 0.0L;
    const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        long double c = static_cast<long double>(coeffs_[k].get_num().get_d()) /
                        static_cast<long double>(coeffs_[k].get_den().get_d());
        long double ang = tau * static_cast<long double>(k) / order_;
        re += c * std::cos(ang);
        im += c * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

namespace {

int legendre_symbol(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long r = 1, base = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

// Quadratic Gauss sum in Q(zeta_p); squares to p for p = 1 mod 4,
// to -p for p = 3 mod 4.
CycloNum gauss_sum(int p, int order) {
    CycloNum g = CycloNum::zero(order);
    const int t = order / p;
    for (int k = 1; k < p; ++k) {
        CycloNum term = CycloNum::root_of_unity(order, static_cast<long>(t) * k);
        g += legendre_symbol(k, p) == 1 ? term : -term;
    }
    return g;
}

} // namespace

CycloNum sqrt_int(int n, int order) {
    check_order_range(order);
    int minimal;
    switch (n) {
        case 2: minimal = 8; break;
        case 3: minimal = 12; break;
        case 5: minimal = 5; break;
        default:
            raise(ErrorCode::InvalidArgument,
                  "sqrt_int supports n in {2, 3, 5}, got " + std::to_string(n));
    }
    if (order % minimal != 0)
        raise(ErrorCode::UnsupportedOrder,
              "sqrt(" + std::to_string(n) + ") needs order divisible by " +
                  std::to_string(minimal) + ", got " + std::to_string(order));
    CycloNum r = CycloNum::zero(order);
    switch (n) {
        case 2:
            r = CycloNum::root_of_unity(order, order / 8) +
                CycloNum::root_of_unity(order, 7L * (order / 8));
            break;
        case 3:
            r = CycloNum::root_of_unity(order, order / 12) +
                CycloNum::root_of_unity(order, 11L * (order / 12));
            break;
        case 5: {
            CycloNum two = CycloNum::from_int(2, order);
            r = CycloNum::one(order) +
                two * CycloNum::root_of_unity(order, order / 5) +
                two * CycloNum::root_of_unity(order, 4L * (order / 5));
            break;
        }
    }
    return r;
}

std::optional<CycloNum> sqrt_in_field(const CycloNum& x) {
    const int m = x.order();
    if (x.is_zero()) return CycloNum::zero(m);

    // Recognize x = q * zeta_m^e with q rational.
    std::optional<int> exp;
    mpq_class q;
    for (int e = 0; e < m; ++e) {
        CycloNum t = x * CycloNum::root_of_unity(m, m - e);
        if (t.is_rational()) {
            exp = e;
            q = t.rational_value();
            break;
        }
    }
    if (!exp) return std::nullopt;

    // q = sign * (a/b)^2 * s with s squarefree.
    mpz_class num = abs(q.get_num()), den = q.get_den();
    mpz_class a(1), b(1), s(1);
    auto split_square = [](mpz_class v, mpz_class& sq, mpz_class& sf) {
        sq = 1;
        sf = 1;
        for (mpz_class p(2); p * p <= v; ++p) {
            while (v % (p * p) == 0) {
                sq *= p;
                v /= p * p;
            }
            if (v % p == 0) {
                sf *= p;
                v /= p;
            }
        }
        sf *= v;
    };
    mpz_class sq_n, sf_n, sq_d, sf_d;
    split_square(num, sq_n, sf_n);
    split_square(den, sq_d, sf_d);
    // num/den = (sq_n/sq_d)^2 * sf_n/sf_d; rescale so the squarefree part
    // is the integer sf_n * sf_d.
    a = sq_n;
    b = sq_d * sf_d;
    s = sf_n * sf_d;

    // Build a field element squaring to +/- s from per-prime Gauss sums.
    CycloNum g = CycloNum::one(m);
    mpz_class rest = s;
    for (mpz_class p(2); p <= rest; ++p) {
        if (rest % p != 0) continue;
        rest /= p;
        int pi = static_cast<int>(p.get_si());
        if (pi == 2) {
            if (m % 8 != 0) return std::nullopt;
            g *= sqrt_int(2, m);
        } else {
            if (m % pi != 0) return std::nullopt;
            g *= gauss_sum(pi, m);
        }
    }
    g *= CycloNum::from_rational(mpq_class(a, b), m);

    // Candidates g * zeta^f; exact verification decides.
    std::vector<CycloNum> hits;
    for (int f = 0; f < m; ++f) {
        CycloNum y = g * CycloNum::root_of_unity(m, f);
        if (y * y == x) hits.push_back(std::move(y));
    }
    if (hits.empty()) return std::nullopt;

    // Pick the principal branch numerically.
    std::complex<double> target = std::sqrt(x.to_complex());
    size_t best = 0;
    double best_dist = std::abs(hits[0].to_complex() - target);
    for (size_t i = 1; i < hits.size(); ++i) {
        double d = std::abs(hits[i].to_complex() - target);
        if (d < best_dist - 1e-12) {
            best = i;
            best_dist = d;
        }
    }
    return hits[best];
}

} // namespace hadamat
