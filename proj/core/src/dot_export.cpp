#include "hopfgate/dot_export.hpp"

#include <sstream>

namespace hopfgate {

namespace {

std::string s_id(const DsrGraph& g, int i) {
    return i < (int)g.s_names.size() ? g.s_names[i] : "S" + std::to_string(i + 1);
}

std::string r_id(const DsrGraph& g, int j) {
    return j < (int)g.r_names.size() ? g.r_names[j] : "R" + std::to_string(j + 1);
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_dot(const DsrGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (int i = 0; i < g.n_s; ++i)
        os << "  " << quoted(s_id(g, i)) << " [shape=ellipse];\n";
    for (int j = 0; j < g.n_r; ++j)
        os << "  " << quoted(r_id(g, j)) << " [shape=box];\n";
    for (const DsrEdge& e : g.edges) {
        std::string from = s_id(g, e.s), to = r_id(g, e.r);
        if (e.dir == EdgeDir::RtoS) std::swap(from, to);
        std::string label = e.label.is_finite ? rational_to_string(e.label.value) : "inf";
        os << "  " << quoted(from) << " -> " << quoted(to) << " [label=" << quoted(label);
        if (e.sign < 0) os << ", style=dashed";
        if (e.dir == EdgeDir::Both) os << ", dir=none";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

DsrGraph prune_acyclic_parts(const DsrGraph& g) {
    std::vector<bool> keep_edge(g.edges.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> deg_s(g.n_s, 0), deg_r(g.n_r, 0);
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (keep_edge[e]) {
                ++deg_s[g.edges[e].s];
                ++deg_r[g.edges[e].r];
            }
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (keep_edge[e] && (deg_s[g.edges[e].s] <= 1 || deg_r[g.edges[e].r] <= 1)) {
                keep_edge[e] = false;
                changed = true;
            }
    }
    std::vector<int> sdeg(g.n_s, 0), rdeg(g.n_r, 0);
    for (size_t e = 0; e < g.edges.size(); ++e)
        if (keep_edge[e]) {
            ++sdeg[g.edges[e].s];
            ++rdeg[g.edges[e].r];
        }
    std::vector<int> smap(g.n_s, -1), rmap(g.n_r, -1);
    DsrGraph out;
    for (int i = 0; i < g.n_s; ++i)
        if (sdeg[i] > 0) {
            smap[i] = out.n_s++;
            out.s_names.push_back(i < (int)g.s_names.size() ? g.s_names[i] : std::to_string(i + 1));
        }
    for (int j = 0; j < g.n_r; ++j)
        if (rdeg[j] > 0) {
            rmap[j] = out.n_r++;
            out.r_names.push_back(j < (int)g.r_names.size() ? g.r_names[j] : std::to_string(j + 1));
        }
    for (size_t e = 0; e < g.edges.size(); ++e)
        if (keep_edge[e]) {
            DsrEdge ne = g.edges[e];
            ne.s = smap[ne.s];
            ne.r = rmap[ne.r];
            out.edges.push_back(ne);
        }
    return out;
}

} // namespace hopfgate
