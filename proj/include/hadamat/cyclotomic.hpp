#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hadamat/error.hpp"

namespace hadamat {

/// Largest supported root order for Q(zeta_M).
inline constexpr int kMaxOrder = 360;

int euler_phi(int m);

/// Coefficients of the M-th cyclotomic polynomial Phi_M, ascending degree,
/// monic, integer. Computed once per order and cached (thread-safe).
const std::vector<mpz_class>& cyclotomic_polynomial(int m);

/// An exact element of the cyclotomic field Q(zeta_M).
///
/// Stored as a rational coefficient vector of length phi(M) over the power
/// basis {zeta_M^0, ..., zeta_M^(phi(M)-1)}, always fully reduced modulo
/// Phi_M. Reduction is canonical: two values of equal order are equal iff
/// their coefficient vectors are identical. The order is fixed per value;
/// mixing orders without an explicit embed() is an error, never a silent
/// coercion.
class CycloNum {
public:
    /// Zero in Q(zeta_1) = Q.
    CycloNum() : order_(1), coeffs_(1, mpq_class(0)) {}

    static CycloNum zero(int order);
    static CycloNum one(int order);
    static CycloNum from_rational(const mpq_class& q, int order);
    static CycloNum from_int(long v, int order);

    /// zeta_order^k (k taken mod order). Order must lie in [1, kMaxOrder].
    static CycloNum root_of_unity(int order, long k);

    /// Construct from a reduced coefficient vector of length phi(order).
    static CycloNum from_coeffs(int order, std::vector<mpq_class> coeffs);

    int order() const { return order_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Requires is_rational().
    mpq_class rational_value() const;

    /// Complex conjugate: zeta^k -> zeta^(M-k).
    CycloNum conj() const;

    /// Value-preserving re-representation in Q(zeta_new_order);
    /// new_order must be a multiple of order().
    CycloNum embedded(int new_order) const;

    /// Exact multiplicative inverse via the Galois norm. DomainError on zero.
    CycloNum inverse() const;

    /// True iff x * conj(x) == 1 exactly.
    bool is_unimodular() const;

    /// If the value equals zeta_order^k for some k, return k in [0, order).
    std::optional<int> root_exponent() const;

    std::complex<double> to_complex() const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& rhs);
    CycloNum& operator-=(const CycloNum& rhs);
    CycloNum& operator*=(const CycloNum& rhs);
    CycloNum& operator/=(const CycloNum& rhs);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

    /// Representation equality: same order and identical reduced coefficients.
    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

private:
    CycloNum(int order, std::vector<mpq_class> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    void check_same_order(const CycloNum& rhs) const;

    int order_;
    std::vector<mpq_class> coeffs_;
};

/// Exact square root of n in {2, 3, 5} inside Q(zeta_order).
/// Requires 8 | order for n = 2, 12 | order for n = 3, 5 | order for n = 5;
/// raises UnsupportedOrder naming the minimal valid order otherwise.
/// The result squares to n and evaluates to the positive real root.
CycloNum sqrt_int(int n, int order);

/// Principal square root of x within Q(zeta_M), when x is a rational
/// multiple of a root of unity and the root exists in the field.
/// Returns nullopt otherwise (exact layer, never a floating fallback);
/// any returned value is verified to square to x exactly.
std::optional<CycloNum> sqrt_in_field(const CycloNum& x);

} // namespace hadamat
