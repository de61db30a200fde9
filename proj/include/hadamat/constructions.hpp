#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hadamat/matrix.hpp"

namespace hadamat {

/// First-row description of a circulant matrix; the induced matrix has
/// entry (i, j) = first_row[(j - i) mod n].
struct CirculantSpec {
    int dim;
    std::vector<CycloNum> first_row;
};

struct NamedMatrix {
    std::string name;
    CycloMatrix matrix;
    std::string provenance;
};

/// Fourier matrix of size n at root order n: entry (j, k) = zeta_n^(j*k).
CycloMatrix fourier(int n);

CycloMatrix circulant(const CirculantSpec& spec);

/// The four 2x2 solutions of the inverse-orthogonality constraint
/// b*c + a*d = 0, selected by which in 1..4. The dependent corner is
/// computed from the constraint (which = 1 solves for the (0,0) entry,
/// 2 for (0,1), 3 for (1,0), 4 for (1,1)); the corresponding input
/// parameter is ignored. DomainError when the solved-for expression
/// divides by zero.
CycloMatrix c2_solution(const CycloNum& a, const CycloNum& b,
                        const CycloNum& c, const CycloNum& d, int which);

/// Exact residuals of the two order-3 circulant orthogonality constraints
/// (a^2 b + b^2 c + a c^2, a b^2 + a^2 c + b c^2).
std::pair<CycloNum, CycloNum> c3_constraints(const CycloNum& a, const CycloNum& b,
                                             const CycloNum& c);

/// Roots of the first order-3 constraint read as a quadratic in a.
/// When the discriminant has no square root in the working field the
/// roots are reported as not representable; no floating fallback.
struct QuadraticRoots {
    bool representable;
    CycloNum plus_root;
    CycloNum minus_root;
};
QuadraticRoots c3_quadratic_roots(const CycloNum& b, const CycloNum& c);

/// 1 + a + a^2 + a^3 + a^4, the common off-diagonal factor of the order-5
/// circulant orthogonality conditions.
CycloNum c5_factor(const CycloNum& a);

/// Normalized transfer product (1/sqrt(n)) * H1^* * H2 in Q(zeta_order).
/// Both inputs must have unimodular entries and orders dividing `order`;
/// sqrt(n) must be representable at `order`.
CycloMatrix transfer(const CycloMatrix& h1, const CycloMatrix& h2, int order);

/// Reading convention for the displayed symbols (-1)^(p/q).
enum class Branch { Principal, Conjugate };

/// The value of (-1)^(p/q), times -1 when negated, at root order `order`.
/// Principal branch reads the symbol as exp(i*pi*p/q).
CycloNum signed_power_root(int p, int q, bool negated, Branch branch, int order);

/// Every displayed matrix of the source families as an exact matrix at
/// root order 60, in a fixed, stable order. Names are part of the API.
const std::vector<NamedMatrix>& catalog();

/// Catalog rebuilt under a chosen branch convention (Principal equals
/// catalog()).
std::vector<NamedMatrix> build_catalog(Branch branch);

/// nullptr when the name is unknown.
const NamedMatrix* catalog_find(const std::string& name);

std::vector<std::string> catalog_names();

} // namespace hadamat
