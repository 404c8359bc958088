#pragma once

#include "hopfgate/compounds.hpp"
#include "hopfgate/dsr.hpp"

namespace hopfgate {

/// DSR graph of the factor pair (lbar(A), lunder(B)). S-vertices are the
/// C(n,2) index pairs "ij" in lexicographic order; R-vertices are the m*n
/// slots "k^l" at index k*n + l. An edge (ij, k^l) exists only if l is i or j.
struct Dsr2Graph {
    DsrGraph graph;
    DsrGraph base; // G_{A,B}
    int n = 0, m = 0;

    PairIndex s_pair(int rank) const { return pair_unrank(n, rank); }
    std::pair<int, int> r_slot(int idx) const { return {idx / n, idx % n}; }
    int r_index(int k, int l) const { return k * n + l; }
};

Dsr2Graph build_dsr2(const RationalMatrix& a, const RationalMatrix& b);

struct ProjectedEdge {
    int s = 0, r = 0; // base-graph endpoints
    int sign = 1;
    int base_edge = 0; // index into base.edges
};

/// (ij, k^j) maps to (S_i, R_k) with flipped sign; (ij, k^i) maps to
/// (S_j, R_k) with preserved sign. Direction and label are preserved.
ProjectedEdge project_edge(const Dsr2Graph& g2, const DsrEdge& e);

struct ProjectionResult {
    bool direct = false;
    /// Direct: two closed walks (one may be empty). Twisted: w1 is the single
    /// closed walk pi(C) and w2 is unused.
    Walk w1, w2;
    int inversions = 0;
};

/// Split a DSR2 cycle into its projected walk(s) by the inductive endpoint
/// assignment; direct iff the inversion count is even.
ProjectionResult project_cycle(const Dsr2Graph& g2, const CycleRecord& c);

/// Consecutive S-vertex pairs (ij, ij') with (i-j)(i-j') < 0, counted
/// cyclically.
int count_inversions(const Dsr2Graph& g2, const CycleRecord& c);

/// P(C) = P(W')P(W'') for direct cycles, P(C) = -P(pi(C)) for twisted ones.
bool parity_relation_check(const Dsr2Graph& g2, const CycleRecord& c);

/// Twisted: s-cycle(C) iff s-walk(pi(C)). Direct: s-walks of both halves
/// imply s-cycle(C). True when the applicable implication holds.
bool s_cycle_projection_check(const Dsr2Graph& g2, const CycleRecord& c);

/// For each p outside the S-indices of W, the candidate cycle
/// (i1 p, j1^p, ..., iN p, jN^p) when all its edges exist; each projects back
/// to W with the same parity.
std::vector<CycleRecord> external_liftings(const CycleRecord& w, const Dsr2Graph& g2);

struct Liftings {
    std::vector<CycleRecord> external; // direct with one empty side
    std::vector<CycleRecord> internal; // twisted
};

/// All DSR2 cycles projecting to the base cycle W, found by filtering the
/// full cycle set of the DSR2 graph through project_cycle.
Liftings liftings_of(const CycleRecord& w, const Dsr2Graph& g2);

/// Delete a column holding exactly one nonzero entry (a pendant R-vertex of
/// the SR graph); the odd/odd*/steady flags of the DSR2 graph of (A, At) are
/// unchanged by this reduction.
RationalMatrix remove_pendant_r(const RationalMatrix& a, int col);

} // namespace hopfgate
