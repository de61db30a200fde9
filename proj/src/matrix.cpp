#include "hadamat/matrix.hpp"

#include <string>

namespace hadamat {

namespace {

void check_perm(const std::vector<int>& perm, int n) {
    if (static_cast<int>(perm.size()) != n)
        raise(ErrorCode::DimensionMismatch, "permutation length != matrix dimension");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v])
            raise(ErrorCode::InvalidArgument, "not a permutation of 0..n-1");
        seen[v] = true;
    }
}

} // namespace

CycloMatrix CycloMatrix::identity(int dim, int order) {
    CycloMatrix m(dim, order);
    for (int i = 0; i < dim; ++i) m.at(i, i) = CycloNum::one(order);
    return m;
}

CycloMatrix CycloMatrix::embedded(int new_order) const {
    CycloMatrix r(dim_, new_order, scale_exp_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            r.at(i, j) = at(i, j).embedded(new_order);
    return r;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
    return a.dim_ == b.dim_ && a.order_ == b.order_ && a.entries_ == b.entries_;
}

CycloMatrix gram(const CycloMatrix& h) {
    const int n = h.dim();
    CycloMatrix g(n, h.order());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CycloNum s = CycloNum::zero(h.order());
            for (int k = 0; k < n; ++k) s += h.at(i, k) * h.at(j, k).conj();
            g.at(i, j) = std::move(s);
        }
    return g;
}

HadamardVerdict is_hadamard(const CycloMatrix& h) {
    const int n = h.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!h.at(i, j).is_unimodular())
                return {false,
                        FailingCell{FailingCell::Reason::NonUnimodularEntry, i, j, h.at(i, j)}};
    CycloMatrix g = gram(h);
    const CycloNum n_val = CycloNum::from_int(n, h.order());
    const CycloNum zero = CycloNum::zero(h.order());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const CycloNum& expected = (i == j) ? n_val : zero;
            if (g.at(i, j) != expected)
                return {false, FailingCell{FailingCell::Reason::GramCell, i, j, g.at(i, j)}};
        }
    return {true, std::nullopt};
}

bool is_inverse_orthogonal(const CycloMatrix& o) {
    const int n = o.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (o.at(i, j).is_zero())
                raise(ErrorCode::DomainError,
                      "inverse-orthogonality requires nonzero entries; zero at (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
    // (O * O^-1)_(i,k) with O^-1 = (1/o_ji): sum_j o_ij / o_kj.
    const CycloNum n_val = CycloNum::from_int(n, o.order());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            CycloNum s = CycloNum::zero(o.order());
            for (int j = 0; j < n; ++j) s += o.at(i, j) / o.at(k, j);
            if (i == k ? s != n_val : !s.is_zero()) return false;
        }
    return true;
}

CycloMatrix dephase(const CycloMatrix& h) {
    const int n = h.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!h.at(i, j).is_unimodular())
                raise(ErrorCode::DomainError, "dephase requires unimodular entries");
    // D1 = diag(conj(h_i0) * h_00), D2 = diag(conj(h_0j)).
    CycloMatrix r(n, h.order(), h.scale_exp());
    for (int i = 0; i < n; ++i) {
        CycloNum row_factor = h.at(i, 0).conj() * h.at(0, 0);
        for (int j = 0; j < n; ++j)
            r.at(i, j) = row_factor * h.at(i, j) * h.at(0, j).conj();
    }
    return r;
}

CycloMatrix matmul(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.dim() != b.dim())
        raise(ErrorCode::DimensionMismatch, "matmul dimension mismatch");
    if (a.order() != b.order())
        raise(ErrorCode::OrderMismatch, "matmul root order mismatch (use embed)");
    const int n = a.dim();
    CycloMatrix c(n, a.order());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CycloNum s = CycloNum::zero(a.order());
            for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
            c.at(i, j) = std::move(s);
        }
    return c;
}

CycloMatrix conj_transpose(const CycloMatrix& a) {
    const int n = a.dim();
    CycloMatrix c(n, a.order(), a.scale_exp());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.at(i, j) = a.at(j, i).conj();
    return c;
}

CycloMatrix permute_rows(const CycloMatrix& a, const std::vector<int>& perm) {
    check_perm(perm, a.dim());
    CycloMatrix r(a.dim(), a.order(), a.scale_exp());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(perm[i], j);
    return r;
}

CycloMatrix permute_cols(const CycloMatrix& a, const std::vector<int>& perm) {
    check_perm(perm, a.dim());
    CycloMatrix r(a.dim(), a.order(), a.scale_exp());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, perm[j]);
    return r;
}

CycloMatrix scale_diag(const CycloMatrix& a, const std::vector<CycloNum>& d, Side side) {
    if (static_cast<int>(d.size()) != a.dim())
        raise(ErrorCode::DimensionMismatch, "diagonal length != matrix dimension");
    CycloMatrix r(a.dim(), a.order(), a.scale_exp());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            r.at(i, j) = (side == Side::Left ? d[i] : d[j]) * a.at(i, j);
    return r;
}

bool is_unitary_diagonal(const CycloMatrix& a) {
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (i == j) {
                if (!a.at(i, j).is_unimodular()) return false;
            } else if (!a.at(i, j).is_zero()) {
                return false;
            }
        }
    return true;
}

} // namespace hadamat
