#include "hopfgate/dsr2.hpp"

#include <algorithm>
#include <set>

namespace hopfgate {

namespace {

std::string pair_name(int i, int j) {
    if (j < 9) return std::to_string(i + 1) + std::to_string(j + 1);
    return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

std::string slot_name(int k, int l) {
    return std::to_string(k + 1) + "^" + std::to_string(l + 1);
}

} // namespace

Dsr2Graph build_dsr2(const RationalMatrix& a, const RationalMatrix& b) {
    CompoundFactorPair f = build_factors(a, b);
    Dsr2Graph g2;
    g2.n = f.n;
    g2.m = f.m;
    g2.graph = build_dsr(f.lbar, f.lunder);
    g2.base = build_dsr(a, b);
    g2.graph.s_names.clear();
    for (int r = 0; r < pair_count(f.n); ++r) {
        PairIndex p = pair_unrank(f.n, r);
        g2.graph.s_names.push_back(pair_name(p.i, p.j));
    }
    g2.graph.r_names.clear();
    for (int k = 0; k < f.m; ++k)
        for (int l = 0; l < f.n; ++l) g2.graph.r_names.push_back(slot_name(k, l));
    for (const DsrEdge& e : g2.graph.edges) {
        PairIndex p = g2.s_pair(e.s);
        auto [k, l] = g2.r_slot(e.r);
        if (l != p.i && l != p.j)
            throw std::logic_error("DSR2 edge violates the slot constraint l in {i,j}");
    }
    return g2;
}

ProjectedEdge project_edge(const Dsr2Graph& g2, const DsrEdge& e) {
    PairIndex p = g2.s_pair(e.s);
    auto [k, l] = g2.r_slot(e.r);
    bool flip = (l == p.j); // j = max(i,j): sign flips
    ProjectedEdge out;
    out.s = (l == p.i) ? p.j : p.i;
    out.r = k;
    out.sign = flip ? -e.sign : e.sign;
    out.base_edge = g2.base.find_edge(out.s, out.r, out.sign);
    if (out.base_edge < 0) throw std::logic_error("projected edge missing from the base graph");
    return out;
}

int count_inversions(const Dsr2Graph& g2, const CycleRecord& c) {
    int r = c.length() / 2;
    int inv = 0;
    for (int t = 0; t < r; ++t) {
        PairIndex p = g2.s_pair(c.vertices[2 * t]);
        PairIndex q = g2.s_pair(c.vertices[(2 * t + 2) % c.length()]);
        int common, j, j2;
        if (p.i == q.i || p.i == q.j) {
            common = p.i;
            j = p.j;
        } else {
            common = p.j;
            j = p.i;
        }
        j2 = (q.i == common) ? q.j : q.i;
        if ((common - j) * (common - j2) < 0) ++inv;
    }
    return inv;
}

ProjectionResult project_cycle(const Dsr2Graph& g2, const CycleRecord& c) {
    ProjectionResult out;
    out.inversions = count_inversions(g2, c);
    int r = c.length() / 2;
    PairIndex first = g2.s_pair(c.vertices[0]);
    Walk w1{true, first.i, {}}, w2{true, first.j, {}};
    int end1 = first.i, end2 = first.j;
    for (int t = 0; t < r; ++t) {
        ProjectedEdge pa = project_edge(g2, g2.graph.edges[c.steps[2 * t].edge]);
        ProjectedEdge pb = project_edge(g2, g2.graph.edges[c.steps[2 * t + 1].edge]);
        // pa leaves S_x (the element of the current pair other than l) and
        // pb arrives at S_y; extend the walk currently ending at S_x.
        int x = pa.s, y = pb.s;
        Walk& w = (end1 == x) ? w1 : w2;
        int& end = (end1 == x) ? end1 : end2;
        w.steps.push_back({pa.base_edge});
        w.steps.push_back({pb.base_edge});
        end = y;
    }
    out.direct = (end1 == first.i);
    if (out.direct) {
        out.w1 = std::move(w1);
        out.w2 = std::move(w2);
    } else {
        // pi(C) is the concatenation: w1 runs S_i -> S_j, w2 runs S_j -> S_i.
        Walk joined{true, first.i, {}};
        joined.steps = w1.steps;
        joined.steps.insert(joined.steps.end(), w2.steps.begin(), w2.steps.end());
        out.w1 = std::move(joined);
    }
    return out;
}

bool parity_relation_check(const Dsr2Graph& g2, const CycleRecord& c) {
    ProjectionResult pr = project_cycle(g2, c);
    if (pr.direct)
        return c.parity == walk_parity(g2.base, pr.w1) * walk_parity(g2.base, pr.w2);
    return c.parity == -walk_parity(g2.base, pr.w1);
}

bool s_cycle_projection_check(const Dsr2Graph& g2, const CycleRecord& c) {
    ProjectionResult pr = project_cycle(g2, c);
    if (!pr.direct) return c.is_s_cycle() == is_closed_s_walk(g2.base, pr.w1);
    if (is_closed_s_walk(g2.base, pr.w1) && is_closed_s_walk(g2.base, pr.w2))
        return c.is_s_cycle();
    return true;
}

std::vector<CycleRecord> external_liftings(const CycleRecord& w, const Dsr2Graph& g2) {
    int len = w.length();
    std::set<int> used;
    for (int t = 0; t < len; t += 2) used.insert(w.vertices[t]);
    std::vector<CycleRecord> out;
    for (int p = 0; p < g2.n; ++p) {
        if (used.count(p)) continue;
        std::vector<CycleStep> steps;
        bool ok = true;
        for (int t = 0; t < len / 2 && ok; ++t) {
            int i_t = w.vertices[2 * t];
            int j_t = w.vertices[2 * t + 1];
            int i_next = w.vertices[(2 * t + 2) % len];
            int s_cur = pair_rank(g2.n, std::min(i_t, p), std::max(i_t, p));
            int s_next = pair_rank(g2.n, std::min(i_next, p), std::max(i_next, p));
            int r_idx = g2.r_index(j_t, p);
            int e1 = g2.graph.find_traversable(s_cur, r_idx, true);
            int e2 = g2.graph.find_traversable(s_next, r_idx, false);
            if (e1 < 0 || e2 < 0) {
                ok = false;
                break;
            }
            steps.push_back({e1});
            steps.push_back({e2});
        }
        if (!ok) continue;
        int start = pair_rank(g2.n, std::min(w.vertices[0], p), std::max(w.vertices[0], p));
        out.push_back(canonicalize_cycle(g2.graph, steps, start));
    }
    return out;
}

namespace {

std::vector<int> sorted_walk_edges(const Walk& w) {
    std::vector<int> e;
    e.reserve(w.steps.size());
    for (const CycleStep& s : w.steps) e.push_back(s.edge);
    std::sort(e.begin(), e.end());
    return e;
}

} // namespace

Liftings liftings_of(const CycleRecord& w, const Dsr2Graph& g2) {
    // A projected walk equals the simple cycle W exactly when it traverses
    // each of W's edges once and nothing else.
    std::vector<int> target = w.edge_key();
    Liftings out;
    for (const CycleRecord& c : enumerate_cycles(g2.graph)) {
        ProjectionResult pr = project_cycle(g2, c);
        if (pr.direct) {
            if (pr.w1.empty() == pr.w2.empty()) continue;
            const Walk& nonempty = pr.w1.empty() ? pr.w2 : pr.w1;
            if (sorted_walk_edges(nonempty) == target) out.external.push_back(c);
        } else {
            if (sorted_walk_edges(pr.w1) == target) out.internal.push_back(c);
        }
    }
    return out;
}

RationalMatrix remove_pendant_r(const RationalMatrix& a, int col) {
    if (col < 0 || col >= a.cols()) throw DimensionError("column index out of range");
    int nonzeros = 0;
    for (int i = 0; i < a.rows(); ++i)
        if (a(i, col) != 0) ++nonzeros;
    if (nonzeros != 1)
        throw HypothesisError("pendant column removal needs exactly one nonzero entry");
    return a.without_column(col);
}

} // namespace hopfgate
