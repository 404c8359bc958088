#pragma once

#include "hopfgate/dsr2.hpp"
#include "hopfgate/oracle.hpp"

#include <set>

namespace fixtures {

using namespace hopfgate;

inline RationalMatrix from_ints(int rows, int cols, std::initializer_list<int> vals) {
    RationalMatrix m(rows, cols);
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = *it++;
    return m;
}

// Symmetric tridiagonal-plus pattern whose product with its transpose class
// keeps the compound P0 (three coupled species in a chain).
inline RationalMatrix chain3() {
    return from_ints(3, 3, {1, 1, 0, 1, 1, 1, 0, 1, 1});
}

// 4x3 matrix whose interaction graph is odd and whose compound graph is odd*.
inline RationalMatrix tall4x3(int a = 1, int b = 1, int c = 1, int d = 1, int e = 1, int f = 1,
                              int g = 1) {
    return from_ints(4, 3, {a, b, 0, -c, d, 0, 0, e, f, 0, 0, g});
}

// 3x2 pair with one one-way influence (a zero in B blocks the return arc).
inline RationalMatrix pair3x2_a() { return from_ints(3, 2, {-1, 3, 0, 2, -6, 1}); }
inline RationalMatrix pair3x2_bt() { return from_ints(3, 2, {-6, 2, 0, 2, 8, 0}); }

// 4x4 with exactly two cycles in its self-paired graph, one odd and one even.
inline RationalMatrix two_cycle4(int a = 1, int b = 1, int c = 1, int d = 1, int e = 1, int f = 1,
                                 int g = 1, int h = 1, int j = 1) {
    return from_ints(4, 4, {a, b, 0, 0, -c, d, g, 0, 0, 0, e, h, j, 0, 0, f});
}

// 5x4 with positive entries at eight positions; its compound graph carries
// one twisted and one direct lifting used in the projection regressions.
inline RationalMatrix spread5x4() {
    RationalMatrix m(5, 4);
    for (auto [i, j] : {std::pair{1, 0}, {3, 0}, {3, 2}, {0, 2}, {0, 1}, {4, 1}, {4, 3}, {1, 3}})
        m(i, j) = 1;
    return m;
}

// Diagonal-times-sparse pair: the compound determinant stays positive on the
// class even though the compound fails to be P0 somewhere in it.
inline RationalMatrix diag3(int a = 1, int b = 1, int c = 1) {
    return from_ints(3, 3, {a, 0, 0, 0, b, 0, 0, 0, c});
}
inline RationalMatrix cross3(int d = 1, int e = 1, int f = 1, int g = 1, int h = 1) {
    return from_ints(3, 3, {0, -d, 0, -e, 0, f, g, 0, h});
}

// 5x4 incidence-like matrix: compound P0 across the class, yet both compound
// graphs fail the odd* test (the graph criterion is not necessary).
inline RationalMatrix incidence5x4() {
    return from_ints(5, 4, {1, 0, 0, 0, -1, 1, 0, 0, 0, -1, 1, 0, -1, 0, -1, 1, 0, 0, 0, -1});
}

// Middle three rows of incidence5x4.
inline RationalMatrix incidence3x4() {
    return from_ints(3, 4, {-1, 1, 0, 0, 0, -1, 1, 0, -1, 0, -1, 1});
}

// Deterministic xorshift for test-local randomness.
struct TestRng {
    uint64_t state;
    explicit TestRng(uint64_t seed) : state(seed * 2862933555777941757ULL + 3037000493ULL) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int uniform_int(int lo, int hi) { return lo + (int)(next() % (uint64_t)(hi - lo + 1)); }
    double uniform() { return (double)(next() >> 11) * 0x1p-53; }
};

inline RationalMatrix random_int_matrix(TestRng& rng, int rows, int cols, int max_abs = 5,
                                        double density = 0.8) {
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (rng.uniform() >= density) continue;
            int v = rng.uniform_int(1, max_abs);
            m(i, j) = (rng.next() & 1) ? v : -v;
        }
    return m;
}

inline RationalMatrix random_rational_matrix(TestRng& rng, int rows, int cols,
                                             double density = 0.8) {
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (rng.uniform() >= density) continue;
            int num = rng.uniform_int(1, 40);
            int den = rng.uniform_int(1, 12);
            Rational q(num, den);
            q.canonicalize();
            m(i, j) = (rng.next() & 1) ? q : -q;
        }
    return m;
}

// Exhaustive DFS cycle enumerator: independent oracle for the production
// enumerator. Walks every simple alternating cycle from every start and
// collapses duplicates by edge set.
std::vector<std::set<int>> dfs_cycle_edge_sets(const DsrGraph& g);

} // namespace fixtures
