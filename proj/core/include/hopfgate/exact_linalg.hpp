#pragma once

#include "hopfgate/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hopfgate {

/// Exact determinant: cofactor expansion up to 4x4, fraction-free Bareiss
/// (on an integer lift of the rows) above that.
Rational det(const RationalMatrix& m);

/// Determinant of the submatrix selected by equal-sized row/column index sets.
Rational minor_of(const RationalMatrix& m, const IndexSet& rows, const IndexSet& cols);

struct DetTerm {
    std::vector<int> perm; // perm[i] = column matched to row i
    Rational value;        // includes the permutation sign
};

/// All n! signed determinant terms; their sum is det(m). Guarded at n <= 8.
std::vector<DetTerm> det_terms(const RationalMatrix& m);

/// Minor of A*B via sum over inner index subsets of A[rows|g]*B[g|cols].
Rational cauchy_binet(const RationalMatrix& a, const RationalMatrix& b,
                      const IndexSet& rows, const IndexSet& cols);

struct PMinorVerdict {
    bool holds = false;
    /// On failure: the first violating principal index set, searching by
    /// subset size ascending and lexicographically within each size.
    std::optional<IndexSet> witness;
};

/// All principal minors nonnegative. Guarded at n <= 14.
PMinorVerdict is_p0(const RationalMatrix& m);
/// All principal minors strictly positive. Guarded at n <= 14.
PMinorVerdict is_p(const RationalMatrix& m);

/// closed=false: exact entrywise sign match (Q); closed=true: zero entries
/// also admitted (Q0).
bool qclass_membership(const RationalMatrix& x, const SignPattern& p, bool closed);

enum class SignClass { SignNonsingular, SignSingular, Neither };

/// Classify a square pattern by determinant term signs. Guarded at n <= 8.
SignClass sign_class(const SignPattern& p);

enum class Tri { Holds, Fails, Undetermined };

struct C7C8Verdict {
    bool c7 = false;
    /// Term signs alone cannot refute singularity, so a pattern with a
    /// Neither submatrix leaves this undetermined.
    Tri c8 = Tri::Undetermined;
    std::vector<std::pair<IndexSet, IndexSet>> neither_submatrices;
};

/// Scan every square submatrix of the pattern. Guarded at rows, cols <= 8.
C7C8Verdict check_c7_c8(const SignPattern& p);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> index_subsets(int n, int k);

} // namespace hopfgate
