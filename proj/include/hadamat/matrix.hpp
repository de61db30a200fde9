#pragma once

#include <optional>
#include <vector>

#include "hadamat/cyclotomic.hpp"

namespace hadamat {

/// Exact n x n matrix over Q(zeta_M). All entries share one root order.
///
/// scale_exp is carried metadata meaning an implicit global factor
/// n^(-scale_exp/2); every exact predicate below is defined on the raw
/// entries, with the scale accounted for in the predicate's statement.
class CycloMatrix {
public:
    CycloMatrix(int dim, int order, int scale_exp = 0)
        : dim_(dim), order_(order), scale_exp_(scale_exp),
          entries_(checked_cells(dim), CycloNum::zero(order)) {}

    static CycloMatrix identity(int dim, int order);

    int dim() const { return dim_; }
    int order() const { return order_; }
    int scale_exp() const { return scale_exp_; }
    void set_scale_exp(int s) { scale_exp_ = s; }

    const CycloNum& at(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    CycloNum& at(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }

    CycloMatrix embedded(int new_order) const;

    /// Entrywise equality of raw entries (scale metadata not compared).
    friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);
    friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

private:
    static size_t checked_cells(int dim) {
        if (dim < 1)
            raise(ErrorCode::InvalidArgument, "matrix dimension must be positive");
        return static_cast<size_t>(dim) * static_cast<size_t>(dim);
    }

    int dim_;
    int order_;
    int scale_exp_;
    std::vector<CycloNum> entries_;
};

struct FailingCell {
    enum class Reason { NonUnimodularEntry, GramCell };
    Reason reason;
    int i;
    int j;
    CycloNum value;
};

/// Verdict of the exact Hadamard test; failing_cell is present iff
/// is_hadamard is false, and identifies either the first non-unimodular
/// entry or the first Gram cell that deviates from n * I (row-major scan).
struct HadamardVerdict {
    bool is_hadamard;
    std::optional<FailingCell> failing_cell;
};

/// H * H^* (conjugate transpose product), exact.
CycloMatrix gram(const CycloMatrix& h);

/// True iff every entry is unimodular and gram(H) == n * I exactly.
HadamardVerdict is_hadamard(const CycloMatrix& h);

/// True iff O * (1/o_ji) == n * I exactly. Entries must be nonzero
/// (DomainError otherwise). Agrees with is_hadamard on unimodular matrices.
bool is_inverse_orthogonal(const CycloMatrix& o);

/// Dephased form: the equivalent matrix D1 * H * D2 whose first row and
/// first column are all ones. Entries must be unimodular. Idempotent.
CycloMatrix dephase(const CycloMatrix& h);

CycloMatrix matmul(const CycloMatrix& a, const CycloMatrix& b);
CycloMatrix conj_transpose(const CycloMatrix& a);

/// Row i of the result is row perm[i] of the input.
CycloMatrix permute_rows(const CycloMatrix& a, const std::vector<int>& perm);
/// Column j of the result is column perm[j] of the input.
CycloMatrix permute_cols(const CycloMatrix& a, const std::vector<int>& perm);

/// diag(d) * A when side == Side::Left, A * diag(d) when side == Side::Right.
enum class Side { Left, Right };
CycloMatrix scale_diag(const CycloMatrix& a, const std::vector<CycloNum>& d, Side side);

/// True iff the matrix is diagonal with unimodular diagonal entries.
bool is_unitary_diagonal(const CycloMatrix& a);

} // namespace hadamat
