#include "hopfgate/compounds.hpp"

#include <numeric>

namespace hopfgate {

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_rank(int n, int i, int j) {
    if (i < 0 || j <= i || j >= n) throw DimensionError("bad pair index");
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

PairIndex pair_unrank(int n, int rank) {
    if (rank < 0 || rank >= pair_count(n)) throw DimensionError("pair rank out of range");
    int i = 0, r = rank;
    while (r >= n - 1 - i) {
        r -= n - 1 - i;
        ++i;
    }
    return {i, i + 1 + r, rank};
}

RationalMatrix additive_compound_2(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("additive compound of non-square matrix");
    int n = m.rows();
    if (n < 2) throw DimensionError("additive compound needs n >= 2");
    int p = pair_count(n);
    RationalMatrix c(p, p);
    for (int col = 0; col < p; ++col) {
        PairIndex kl = pair_unrank(n, col);
        int k = kl.i, l = kl.j;
        // M e_k ^ e_l : contributions M_ak (e_a ^ e_l)
        for (int a = 0; a < n; ++a) {
            if (a == l || m(a, k) == 0) continue;
            if (a < l)
                c(pair_rank(n, a, l), col) += m(a, k);
            else
                c(pair_rank(n, l, a), col) -= m(a, k);
        }
        // e_k ^ M e_l : contributions M_bl (e_k ^ e_b)
        for (int b = 0; b < n; ++b) {
            if (b == k || m(b, l) == 0) continue;
            if (k < b)
                c(pair_rank(n, k, b), col) += m(b, l);
            else
                c(pair_rank(n, b, k), col) -= m(b, l);
        }
    }
    return c;
}

RationalMatrix multiplicative_compound(const RationalMatrix& m, int k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw DimensionError("exterior power order out of range");
    auto rows = index_subsets(m.rows(), k);
    auto cols = index_subsets(m.cols(), k);
    RationalMatrix c((int)rows.size(), (int)cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            c((int)i, (int)j) = det(m.submatrix(rows[i], cols[j]));
    return c;
}

CompoundFactorPair build_factors(const RationalMatrix& a, const RationalMatrix& b) {
    int n = a.rows(), m = a.cols();
    if (b.rows() != m || b.cols() != n) throw DimensionError("factor pair dimension mismatch");
    if (n < 2) throw DimensionError("factor pair needs n >= 2");
    int p = pair_count(n);
    RationalMatrix lbar(p, m * n), lunder(m * n, p);
    for (int row = 0; row < p; ++row) {
        PairIndex ij = pair_unrank(n, row);
        for (int k = 0; k < m; ++k) {
            // Column block k is the single-column pattern: row (i,j) carries
            // A_jk in slot (k,i) and -A_ik in slot (k,j).
            if (a(ij.j, k) != 0) lbar(row, k * n + ij.i) = a(ij.j, k);
            if (a(ij.i, k) != 0) lbar(row, k * n + ij.j) = -a(ij.i, k);
            if (b(k, ij.j) != 0) lunder(k * n + ij.i, row) = b(k, ij.j);
            if (b(k, ij.i) != 0) lunder(k * n + ij.j, row) = -b(k, ij.i);
        }
    }
    return {std::move(lbar), std::move(lunder), n, m};
}

Rational det_compound_via_cb(const RationalMatrix& a, const RationalMatrix& b) {
    int n = a.rows();
    if (n < 2) throw DimensionError("compound determinant needs n >= 2");
    int p = pair_count(n);
    if (p > 12) throw SizeLimitError("compound determinant expansion limited to C(n,2) <= 12");
    CompoundFactorPair f = build_factors(a, b);
    IndexSet all(p);
    std::iota(all.begin(), all.end(), 0);
    return cauchy_binet(f.lbar, f.lunder, all, all);
}

} // namespace hopfgate
