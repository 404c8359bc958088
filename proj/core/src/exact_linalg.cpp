#include "hopfgate/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hopfgate {

namespace {

Rational det_cofactor(const RationalMatrix& m) {
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Rational acc = 0;
    IndexSet rows(n - 1);
    std::iota(rows.begin(), rows.end(), 1);
    IndexSet cols;
    cols.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        cols.clear();
        for (int c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        Rational sub = det_cofactor(m.submatrix(rows, cols));
        if (j % 2 == 0)
            acc += m(0, j) * sub;
        else
            acc -= m(0, j) * sub;
    }
    return acc;
}

// Clear denominators row by row, then run integer Bareiss. Exact divisions
// keep intermediate entries the size of minors of the lifted matrix.
Rational det_bareiss(const RationalMatrix& m) {
    int n = m.rows();
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class d = 1;
        for (int j = 0; j < n; ++j) d = lcm(d, m(i, j).get_den());
        for (int j = 0; j < n; ++j) {
            mpq_class v = m(i, j) * Rational(d);
            a[i][j] = v.get_num(); // denominator is 1 after scaling
        }
        scale *= d;
    }
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational r(sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]), scale);
    r.canonicalize();
    return r;
}

} // namespace

Rational det(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
    return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

Rational minor_of(const RationalMatrix& m, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size() || rows.empty())
        throw DimensionError("minor needs equal-sized nonempty index sets");
    return det(m.submatrix(rows, cols));
}

std::vector<DetTerm> det_terms(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("det_terms of non-square matrix");
    int n = m.rows();
    if (n > 8) throw SizeLimitError("det_terms limited to n <= 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<DetTerm> terms;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational v = (inversions % 2 == 0) ? 1 : -1;
        for (int i = 0; i < n; ++i) v *= m(i, perm[i]);
        terms.push_back({perm, v});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return terms;
}

std::vector<IndexSet> index_subsets(int n, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > n) return out;
    IndexSet cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Rational cauchy_binet(const RationalMatrix& a, const RationalMatrix& b,
                      const IndexSet& rows, const IndexSet& cols) {
    if (a.cols() != b.rows()) throw DimensionError("cauchy_binet inner dimension mismatch");
    if (rows.size() != cols.size() || rows.empty())
        throw DimensionError("cauchy_binet needs equal-sized nonempty index sets");
    validate_index_set(rows, a.rows(), "row");
    validate_index_set(cols, b.cols(), "column");
    int k = (int)rows.size();
    Rational acc = 0;
    for (const IndexSet& g : index_subsets(a.cols(), k))
        acc += minor_of(a, rows, g) * minor_of(b, g, cols);
    return acc;
}

namespace {

PMinorVerdict principal_scan(const RationalMatrix& m, bool strict) {
    if (m.rows() != m.cols()) throw DimensionError("principal minors of non-square matrix");
    int n = m.rows();
    if (n > 14) throw SizeLimitError("principal minor enumeration limited to n <= 14");
    for (int k = 1; k <= n; ++k) {
        for (const IndexSet& s : index_subsets(n, k)) {
            Rational v = det(m.submatrix(s, s));
            if (strict ? v <= 0 : v < 0) return {false, s};
        }
    }
    return {true, std::nullopt};
}

} // namespace

PMinorVerdict is_p0(const RationalMatrix& m) { return principal_scan(m, false); }
PMinorVerdict is_p(const RationalMatrix& m) { return principal_scan(m, true); }

bool qclass_membership(const RationalMatrix& x, const SignPattern& p, bool closed) {
    if (x.rows() != p.rows() || x.cols() != p.cols())
        throw DimensionError("qualitative class dimension mismatch");
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            int s = sign_of(x(i, j));
            if (s == p(i, j)) continue;
            if (closed && s == 0) continue;
            return false;
        }
    return true;
}

SignClass sign_class(const SignPattern& p) {
    if (p.rows() != p.cols()) throw DimensionError("sign_class of non-square pattern");
    int n = p.rows();
    if (n > 8) throw SizeLimitError("sign_class limited to n <= 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool pos = false, neg = false;
    do {
        int sign = 1;
        for (int i = 0; i < n && sign != 0; ++i) {
            sign *= p(i, perm[i]);
        }
        if (sign == 0) continue;
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        if (inversions % 2 != 0) sign = -sign;
        (sign > 0 ? pos : neg) = true;
        if (pos && neg) return SignClass::Neither;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!pos && !neg) return SignClass::SignSingular;
    return SignClass::SignNonsingular;
}

C7C8Verdict check_c7_c8(const SignPattern& p) {
    if (p.rows() > 8 || p.cols() > 8)
        throw SizeLimitError("submatrix sign scan limited to 8x8 patterns");
    C7C8Verdict v;
    v.c7 = true;
    int kmax = std::min(p.rows(), p.cols());
    for (int k = 1; k <= kmax; ++k) {
        for (const IndexSet& r : index_subsets(p.rows(), k))
            for (const IndexSet& c : index_subsets(p.cols(), k)) {
                if (sign_class(p.submatrix(r, c)) == SignClass::Neither) {
                    v.c7 = false;
                    v.neither_submatrices.emplace_back(r, c);
                }
            }
    }
    v.c8 = v.c7 ? Tri::Holds : Tri::Undetermined;
    return v;
}

} // namespace hopfgate
