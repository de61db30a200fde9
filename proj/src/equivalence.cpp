#include "hadamat/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>

namespace hadamat {

namespace {

void require_hadamard(const CycloMatrix& h, const char* which) {
    if (!is_hadamard(h).is_hadamard)
        raise(ErrorCode::DomainError,
              std::string(which) + " input is not a complex Hadamard matrix");
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Exponent matrix when every entry is a pure root of unity.
std::optional<std::vector<int>> exponent_matrix(const CycloMatrix& h) {
    std::vector<int> e;
    e.reserve(static_cast<size_t>(h.dim()) * h.dim());
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j) {
            auto k = h.at(i, j).root_exponent();
            if (!k) return std::nullopt;
            e.push_back(*k);
        }
    return e;
}

std::vector<int> dephased_exponents(const std::vector<int>& e, int n, int m) {
    std::vector<int> d(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v = e[static_cast<size_t>(i) * n + j] - e[static_cast<size_t>(i) * n] -
                    e[j] + e[0];
            d[static_cast<size_t>(i) * n + j] = ((v % m) + m) % m;
        }
    return d;
}

EquivalenceWitness build_witness(const CycloMatrix& h1, const CycloMatrix& h2,
                                 const std::vector<int>& p1, const std::vector<int>& p2) {
    const int n = h1.dim();
    CycloMatrix m = permute_cols(permute_rows(h1, p1), p2);
    // dephase(M) = E1 M E2 and dephase(H2) = G1 H2 G2 with the factors
    // below; equality of dephased forms gives H2 = (G1* E1) M (E2 G2*).
    std::vector<CycloNum> d1(n, CycloNum::zero(h1.order()));
    std::vector<CycloNum> d2(n, CycloNum::zero(h1.order()));
    for (int i = 0; i < n; ++i) {
        CycloNum e1 = m.at(i, 0).conj() * m.at(0, 0);
        CycloNum g1 = h2.at(i, 0).conj() * h2.at(0, 0);
        d1[i] = g1.conj() * e1;
    }
    for (int j = 0; j < n; ++j) {
        CycloNum e2 = m.at(0, j).conj();
        CycloNum g2 = h2.at(0, j).conj();
        d2[j] = e2 * g2.conj();
    }
    return {p1, p2, std::move(d1), std::move(d2)};
}

} // namespace

Fingerprint canonical_fingerprint(const CycloMatrix& h) {
    require_hadamard(h, "fingerprint");
    const int n = h.dim();
    std::vector<std::complex<double>> z(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            z[static_cast<size_t>(i) * n + j] = h.at(i, j).to_complex();
    Fingerprint fp;
    fp.reserve(static_cast<size_t>(n) * n * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    std::complex<double> v = z[static_cast<size_t>(i) * n + j] *
                                             std::conj(z[static_cast<size_t>(i) * n + l]) *
                                             std::conj(z[static_cast<size_t>(k) * n + j]) *
                                             z[static_cast<size_t>(k) * n + l];
                    fp.emplace_back(std::llround(v.real() * 1e9),
                                    std::llround(v.imag() * 1e9));
                }
    std::sort(fp.begin(), fp.end());
    return fp;
}

EquivVerdict equiv(const CycloMatrix& h1, const CycloMatrix& h2, bool use_prefilter) {
    if (h1.dim() != h2.dim())
        raise(ErrorCode::DimensionMismatch, "equivalence inputs must have equal dimension");
    if (h1.order() != h2.order())
        raise(ErrorCode::OrderMismatch, "equivalence inputs must share one root order (use embed)");
    const int n = h1.dim();
    if (n > 5)
        raise(ErrorCode::ComplexityGuard,
              "exhaustive equivalence search is limited to n <= 5, got n = " +
                  std::to_string(n));
    require_hadamard(h1, "first");
    require_hadamard(h2, "second");

    if (use_prefilter && canonical_fingerprint(h1) != canonical_fingerprint(h2))
        return {false, std::nullopt, 0, true};

    const auto perms = all_permutations(n);
    long examined = 0;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> hit;

    auto e1 = exponent_matrix(h1);
    auto e2 = exponent_matrix(h2);
    if (e1 && e2) {
        // Root-of-unity fast path: dephasing is exact integer arithmetic
        // on exponents mod the root order.
        const int m = h1.order();
        const std::vector<int> target = dephased_exponents(*e2, n, m);
        std::vector<int> scratch(static_cast<size_t>(n) * n);
        for (const auto& p1 : perms)
            for (const auto& p2 : perms) {
                ++examined;
                if (hit) continue;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        scratch[static_cast<size_t>(i) * n + j] =
                            (*e1)[static_cast<size_t>(p1[i]) * n + p2[j]];
                if (dephased_exponents(scratch, n, m) == target) hit = {p1, p2};
            }
    } else {
        const CycloMatrix target = dephase(h2);
        for (const auto& p1 : perms)
            for (const auto& p2 : perms) {
                ++examined;
                if (hit) continue;
                if (dephase(permute_cols(permute_rows(h1, p1), p2)) == target)
                    hit = {p1, p2};
            }
    }

    if (!hit) return {false, std::nullopt, examined, false};
    EquivalenceWitness w = build_witness(h1, h2, hit->first, hit->second);
    if (!replay(w, h1, h2))
        raise(ErrorCode::DomainError, "internal: reconstructed witness failed replay");
    return {true, std::move(w), examined, false};
}

bool replay(const EquivalenceWitness& w, const CycloMatrix& h1, const CycloMatrix& h2) {
    if (h1.dim() != h2.dim()) return false;
    if (static_cast<int>(w.p1.size()) != h1.dim() ||
        static_cast<int>(w.p2.size()) != h1.dim())
        return false;
    CycloMatrix m = permute_cols(permute_rows(h1, w.p1), w.p2);
    m = scale_diag(m, w.d1, Side::Left);
    m = scale_diag(m, w.d2, Side::Right);
    return m == h2;
}

} // namespace hadamat
