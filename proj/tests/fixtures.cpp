#include "fixtures.hpp"

namespace fixtures {

namespace {

struct DfsState {
    const DsrGraph* g;
    std::vector<std::set<int>> found;
    std::set<std::set<int>> seen;
    std::vector<bool> s_used, r_used;
    std::vector<int> edge_trail;
};

// at_s: current vertex is an S-vertex (next hop uses an S-to-R traversable
// edge). start is always an S-vertex.
void dfs(DfsState& st, int start, int cur, bool at_s) {
    const DsrGraph& g = *st.g;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const DsrEdge& ed = g.edges[e];
        if (at_s) {
            if (ed.s != cur) continue;
            if (ed.dir == EdgeDir::RtoS) continue;
            if (!st.edge_trail.empty() && (int)e == st.edge_trail.back()) continue;
            if (st.r_used[ed.r]) continue;
            st.r_used[ed.r] = true;
            st.edge_trail.push_back((int)e);
            dfs(st, start, ed.r, false);
            st.edge_trail.pop_back();
            st.r_used[ed.r] = false;
        } else {
            if (ed.r != cur) continue;
            if (ed.dir == EdgeDir::StoR) continue;
            if ((int)e == st.edge_trail.back()) continue;
            if (ed.s == start) {
                std::set<int> key(st.edge_trail.begin(), st.edge_trail.end());
                key.insert((int)e);
                if (st.seen.insert(key).second) st.found.push_back(key);
                continue;
            }
            if (st.s_used[ed.s]) continue;
            st.s_used[ed.s] = true;
            st.edge_trail.push_back((int)e);
            dfs(st, start, ed.s, true);
            st.edge_trail.pop_back();
            st.s_used[ed.s] = false;
        }
    }
}

} // namespace

std::vector<std::set<int>> dfs_cycle_edge_sets(const DsrGraph& g) {
    DfsState st;
    st.g = &g;
    st.s_used.assign(g.n_s, false);
    st.r_used.assign(g.n_r, false);
    for (int s = 0; s < g.n_s; ++s) {
        st.s_used[s] = true;
        dfs(st, s, s, true);
        st.s_used[s] = false;
    }
    return st.found;
}

} // namespace fixtures
