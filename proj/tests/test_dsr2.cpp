#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hopfgate;
using fixtures::TestRng;

namespace {

// Set of S-pair {i,j} sets visited by a DSR2 cycle.
std::set<std::set<int>> pair_sets(const Dsr2Graph& g2, const CycleRecord& c) {
    std::set<std::set<int>> out;
    for (size_t t = 0; t < c.vertices.size(); t += 2) {
        PairIndex p = g2.s_pair(c.vertices[t]);
        out.insert({p.i, p.j});
    }
    return out;
}

CycleRecord fake_cycle(const std::vector<int>& pair_ranks) {
    CycleRecord c;
    for (int r : pair_ranks) {
        c.vertices.push_back(r);
        c.vertices.push_back(0); // R slots unused by the inversion count
    }
    c.steps.resize(2 * pair_ranks.size());
    return c;
}

} // namespace

TEST_CASE("compound graph of a vector of ones has ten vertices and twelve edges") {
    RationalMatrix s(4, 1);
    for (int i = 0; i < 4; ++i) s(i, 0) = 1;
    Dsr2Graph g2 = build_dsr2(s, s.transpose());
    CHECK(g2.graph.n_s == 6);
    CHECK(g2.graph.n_r == 4);
    CHECK(g2.graph.edges.size() == 12);
}

TEST_CASE("compound graph vertex names follow the pair and slot conventions") {
    Dsr2Graph g2 = build_dsr2(fixtures::chain3(), fixtures::chain3().transpose());
    CHECK(g2.graph.s_names == std::vector<std::string>{"12", "13", "23"});
    CHECK(g2.graph.r_names[g2.r_index(1, 2)] == "2^3");
}

TEST_CASE("every compound edge touches a slot of its own pair") {
    TestRng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        int n = rng.uniform_int(2, 5), m = rng.uniform_int(1, 4);
        RationalMatrix a = fixtures::random_int_matrix(rng, n, m, 3, 0.6);
        RationalMatrix b = fixtures::random_int_matrix(rng, m, n, 3, 0.6);
        Dsr2Graph g2 = build_dsr2(a, b);
        for (const DsrEdge& e : g2.graph.edges) {
            PairIndex p = g2.s_pair(e.s);
            auto [k, l] = g2.r_slot(e.r);
            CHECK((l == p.i || l == p.j));
            ProjectedEdge pe = project_edge(g2, e);
            CHECK(pe.r == k);
            CHECK((pe.s == p.i || pe.s == p.j));
        }
    }
}

TEST_CASE("frozen inversion counts on hand-worked pair sequences") {
    Dsr2Graph g4;
    g4.n = 4;
    // (13, 23, 24, 14): all consecutive pairs share an extreme element.
    CycleRecord direct = fake_cycle({pair_rank(4, 0, 2), pair_rank(4, 1, 2), pair_rank(4, 1, 3),
                                     pair_rank(4, 0, 3)});
    CHECK(count_inversions(g4, direct) == 0);

    Dsr2Graph g3;
    g3.n = 3;
    // (13, 23, 12): the shared element of 23 and 12 sits between the others.
    CycleRecord twisted =
        fake_cycle({pair_rank(3, 0, 2), pair_rank(3, 1, 2), pair_rank(3, 0, 1)});
    CHECK(count_inversions(g3, twisted) == 1);
}

TEST_CASE("direct exactly when the inversion count is even") {
    TestRng rng(59);
    int graphs = 0;
    while (graphs < 40) {
        int n = rng.uniform_int(2, 5), m = rng.uniform_int(1, 4);
        RationalMatrix a = fixtures::random_int_matrix(rng, n, m, 3, 0.5);
        RationalMatrix b = fixtures::random_int_matrix(rng, m, n, 3, 0.5);
        Dsr2Graph g2 = build_dsr2(a, b);
        auto cycles = enumerate_cycles(g2.graph, 12);
        if (cycles.empty()) continue;
        ++graphs;
        for (const auto& c : cycles) {
            ProjectionResult pr = project_cycle(g2, c);
            CHECK(pr.direct == (pr.inversions % 2 == 0));
            CHECK(parity_relation_check(g2, c));
            CHECK(s_cycle_projection_check(g2, c));
            if (pr.direct)
                CHECK(c.length() == pr.w1.length() + pr.w2.length());
            else
                CHECK(c.length() == pr.w1.length());
        }
    }
}

TEST_CASE("liftings of the eight-step cycle in the five-by-four spread") {
    RationalMatrix a = fixtures::spread5x4();
    Dsr2Graph g2 = build_dsr2(a, a.transpose());

    // Base cycle S2 R1 S4 R3 S1 R2 S5 R4 (one-based), an e-cycle.
    std::vector<int> want_s{1, 3, 0, 4}, want_r{0, 2, 1, 3};
    CycleRecord base;
    bool found = false;
    for (const auto& c : enumerate_cycles(g2.base)) {
        if (c.length() != 8) continue;
        std::set<int> s, r;
        for (int t = 0; t < 8; t += 2) {
            s.insert(c.vertices[t]);
            r.insert(c.vertices[t + 1]);
        }
        if (s == std::set<int>(want_s.begin(), want_s.end()) &&
            r == std::set<int>(want_r.begin(), want_r.end())) {
            base = c;
            found = true;
        }
    }
    REQUIRE(found);
    CHECK(base.is_e_cycle());

    Liftings lifts = liftings_of(base, g2);

    // Internal lifting through pairs 12, 14, 45, 15 (one-based), an o-cycle.
    std::set<std::set<int>> internal_pairs{{0, 1}, {0, 3}, {3, 4}, {0, 4}};
    bool internal_found = false;
    for (const auto& c : lifts.internal)
        if (pair_sets(g2, c) == internal_pairs) {
            internal_found = true;
            CHECK_FALSE(c.is_e_cycle());
            CHECK(count_inversions(g2, c) % 2 == 1);
        }
    CHECK(internal_found);

    // External lifting with companion index 3 (one-based) through pairs
    // 23, 34, 13, 35, an e-cycle.
    std::set<std::set<int>> external_pairs{{1, 2}, {2, 3}, {0, 2}, {2, 4}};
    bool external_found = false;
    for (const auto& c : lifts.external)
        if (pair_sets(g2, c) == external_pairs) {
            external_found = true;
            CHECK(c.is_e_cycle());
        }
    CHECK(external_found);

    // The direct constructor finds the same external lifting.
    bool constructed = false;
    for (const auto& c : external_liftings(base, g2))
        if (pair_sets(g2, c) == external_pairs) constructed = true;
    CHECK(constructed);
}

TEST_CASE("external liftings preserve parity and project back to their base") {
    TestRng rng(61);
    int done = 0;
    while (done < 25) {
        int n = rng.uniform_int(3, 5), m = rng.uniform_int(2, 4);
        RationalMatrix a = fixtures::random_int_matrix(rng, n, m, 3, 0.5);
        Dsr2Graph g2 = build_dsr2(a, a.transpose());
        auto base_cycles = enumerate_cycles(g2.base);
        if (base_cycles.empty()) continue;
        ++done;
        for (const auto& w : base_cycles) {
            for (const auto& lift : external_liftings(w, g2)) {
                CHECK(lift.parity == w.parity);
                ProjectionResult pr = project_cycle(g2, lift);
                CHECK(pr.direct);
                const Walk& nonempty = pr.w1.empty() ? pr.w2 : pr.w1;
                std::vector<int> edges;
                for (const auto& st : nonempty.steps) edges.push_back(st.edge);
                std::sort(edges.begin(), edges.end());
                CHECK(edges == w.edge_key());
            }
        }
    }
}

TEST_CASE("four-step compound cycles only arise as external liftings") {
    TestRng rng(67);
    int done = 0;
    while (done < 25) {
        int n = rng.uniform_int(2, 5), m = rng.uniform_int(1, 4);
        RationalMatrix a = fixtures::random_int_matrix(rng, n, m, 3, 0.5);
        RationalMatrix b = fixtures::random_int_matrix(rng, m, n, 3, 0.5);
        Dsr2Graph g2 = build_dsr2(a, b);
        auto cycles = enumerate_cycles(g2.graph, 4);
        if (cycles.empty()) continue;
        ++done;
        for (const auto& c : cycles)
            if (c.length() == 4) {
                ProjectionResult pr = project_cycle(g2, c);
                CHECK(pr.direct);
                CHECK((pr.w1.empty() || pr.w2.empty()));
            }
    }
}

TEST_CASE("pendant column removal keeps the compound flags") {
    TestRng rng(71);
    int done = 0;
    while (done < 30) {
        int n = rng.uniform_int(2, 4), m = rng.uniform_int(2, 4);
        RationalMatrix a = fixtures::random_int_matrix(rng, n, m, 3, 0.5);
        // Append a pendant column with a single nonzero.
        RationalMatrix ext(n, m + 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) ext(i, j) = a(i, j);
        ext(rng.uniform_int(0, n - 1), m) = rng.uniform_int(1, 3);
        ++done;

        RationalMatrix reduced = remove_pendant_r(ext, m);
        CHECK(reduced == a);
        GraphClassification before = classify_graph(build_dsr2(ext, ext.transpose()).graph);
        GraphClassification after = classify_graph(build_dsr2(a, a.transpose()).graph);
        CHECK(before.odd == after.odd);
        CHECK(before.odd_star == after.odd_star);
        CHECK(before.steady == after.steady);
    }
}

TEST_CASE("pendant removal demands exactly one nonzero") {
    RationalMatrix a = fixtures::chain3();
    CHECK_THROWS_AS(remove_pendant_r(a, 0), HypothesisError);
    CHECK_THROWS_AS(remove_pendant_r(a, 7), DimensionError);
}

TEST_CASE("acyclic base patterns give steady compound graphs") {
    TestRng rng(73);
    int done = 0;
    while (done < 20) {
        // Build a random forest-shaped pattern: column j gets at most one new
        // row below the diagonal, so the bipartite graph has no cycles.
        int n = rng.uniform_int(2, 5);
        RationalMatrix a(n, n - 1);
        for (int j = 0; j < n - 1; ++j) {
            a(j, j) = rng.uniform_int(1, 3);
            a(j + 1, j) = -rng.uniform_int(1, 3);
        }
        ++done;
        GraphClassification base = classify_graph(build_sr(a));
        CHECK(base.cycles.empty());
        GraphClassification comp = classify_graph(build_dsr2(a, a.transpose()).graph);
        CHECK(comp.steady);
    }
}
