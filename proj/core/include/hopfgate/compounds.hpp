#pragma once

#include "hopfgate/exact_linalg.hpp"

namespace hopfgate {

/// Lexicographic rank of the 2-subsets of {0..n-1}: basis order of the
/// wedge products e_i ^ e_j with i < j.
struct PairIndex {
    int i = 0, j = 0; // i < j
    int rank = 0;
};

int pair_count(int n);
int pair_rank(int n, int i, int j);
PairIndex pair_unrank(int n, int rank);

/// Second additive compound: the action X |-> M e_i ^ e_j + e_i ^ M e_j in
/// the lexicographic pair basis. Eigenvalues are all pairwise sums of
/// eigenvalues of M. Requires n >= 2.
RationalMatrix additive_compound_2(const RationalMatrix& m);

/// kth exterior power: entry (alpha, beta) is the minor M[alpha|beta].
RationalMatrix multiplicative_compound(const RationalMatrix& m, int k);

struct CompoundFactorPair {
    RationalMatrix lbar;   // C(n,2) x (m*n)
    RationalMatrix lunder; // (m*n) x C(n,2)
    int n = 0, m = 0;
};

/// Factorization of the second additive compound of a product:
/// lbar(A) * lunder(B) = additive_compound_2(A*B), with lbar column block k
/// holding columns (k,0..n-1), so column k*n + l carries the (k,l) slot.
CompoundFactorPair build_factors(const RationalMatrix& a, const RationalMatrix& b);

/// det(additive_compound_2(A*B)) via the Cauchy-Binet expansion over the
/// factor pair. Guarded at C(n,2) <= 12.
Rational det_compound_via_cb(const RationalMatrix& a, const RationalMatrix& b);

} // namespace hopfgate
