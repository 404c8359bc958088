#include "hopfgate/report.hpp"

#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <sstream>

namespace hopfgate {

using ordered_json = nlohmann::ordered_json;

std::string content_digest(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

GraphStats stats_of(const std::string& name, const DsrGraph& g) {
    GraphStats st;
    st.name = name;
    st.s_vertices = g.n_s;
    st.r_vertices = g.n_r;
    st.edges = (int)g.edges.size();
    st.s_names = g.s_names;
    st.r_names = g.r_names;
    st.classification = classify_graph(g);
    return st;
}

namespace {

std::string tri_name(Tri t) {
    switch (t) {
        case Tri::Holds: return "holds";
        case Tri::Fails: return "fails";
        case Tri::Undetermined: return "undetermined";
    }
    return "?";
}

ordered_json matrix_json(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json cycle_json(const CycleRecord& c, const GraphStats& g) {
    ordered_json j;
    ordered_json names = ordered_json::array();
    for (size_t t = 0; t < c.vertices.size(); ++t) {
        int v = c.vertices[t];
        bool is_s = (t % 2 == 0);
        const auto& pool = is_s ? g.s_names : g.r_names;
        names.push_back(v < (int)pool.size() ? pool[v]
                                             : (is_s ? "S" : "R") + std::to_string(v + 1));
    }
    j["vertices"] = std::move(names);
    j["length"] = c.length();
    j["sign"] = c.sign;
    j["parity"] = c.parity;
    j["e_cycle"] = c.is_e_cycle();
    j["s_cycle"] = c.s_status == SCycleStatus::Yes
                       ? "yes"
                       : (c.s_status == SCycleStatus::No ? "no" : "not-applicable");
    return j;
}

ordered_json classification_json(const GraphStats& g) {
    const GraphClassification& cl = g.classification;
    ordered_json j;
    j["odd"] = cl.odd;
    j["odd_star"] = cl.odd_star;
    j["steady"] = cl.steady;
    j["cycle_count"] = cl.cycles.size();
    j["degree_shortcut"] = cl.degree_shortcut;
    if (cl.e_cycle_witness) j["e_cycle_witness"] = cycle_json(*cl.e_cycle_witness, g);
    if (cl.non_s_cycle_witness) j["non_s_cycle_witness"] = cycle_json(*cl.non_s_cycle_witness, g);
    if (cl.non_s_e_cycle_witness)
        j["non_s_e_cycle_witness"] = cycle_json(*cl.non_s_e_cycle_witness, g);
    if (cl.odd_intersection_witness) {
        j["odd_intersection_witness"] = ordered_json::array(
            {cycle_json(cl.odd_intersection_witness->first, g),
             cycle_json(cl.odd_intersection_witness->second, g)});
    }
    return j;
}

ordered_json oracle_json(const OracleVerdict& v, bool deterministic) {
    ordered_json j;
    j["claim"] = claim_name(v.claim);
    switch (v.status) {
        case OracleStatus::AllPassed: j["status"] = "all-passed"; break;
        case OracleStatus::Counterexample: j["status"] = "counterexample"; break;
        case OracleStatus::Error: j["status"] = "error"; break;
    }
    j["trials_run"] = v.trials_run;
    if (v.status == OracleStatus::Counterexample) {
        j["counterexample_index"] = v.counterexample_index;
        j["violated"] = v.violated;
        if (v.a_sample) j["a_sample"] = matrix_json(*v.a_sample);
        if (v.b_sample) j["b_sample"] = matrix_json(*v.b_sample);
    }
    if (v.status == OracleStatus::Error) j["error"] = v.violated;
    if (!deterministic) j["wall_time_s"] = v.wall_time_s;
    return j;
}

} // namespace

std::string serialize_report(const AnalysisReport& r) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool_version"] = kToolVersion;
    if (!r.deterministic) {
        auto now = std::chrono::system_clock::now();
        j["timestamp_unix"] =
            std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    }
    ordered_json digests = ordered_json::object();
    for (const auto& [role, d] : r.input_digests) digests[role] = d;
    j["input_digests"] = std::move(digests);
    j["b_source"] = r.b_source;
    j["seed"] = r.seed;

    ordered_json cond;
    for (int k = 1; k <= 10; ++k) cond["C" + std::to_string(k)] = tri_name(r.conditions.condition(k));
    if (!r.conditions.notes.empty()) cond["notes"] = r.conditions.notes;
    j["conditions"] = std::move(cond);

    ordered_json concl;
    concl["product_p0"] = certainty_name(r.conclusions.product_p0);
    concl["compound_p0"] = certainty_name(r.conclusions.compound_p0);
    concl["compound_nonsingular"] = certainty_name(r.conclusions.compound_nonsingular);
    concl["positive_semistable"] = certainty_name(r.conclusions.positive_semistable);
    concl["positive_stable"] = certainty_name(r.conclusions.positive_stable);
    concl["hopf_excluded"] = certainty_name(r.conclusions.hopf_excluded);
    concl["provenance"] = r.conclusions.provenance;
    j["conclusions"] = std::move(concl);

    ordered_json graphs = ordered_json::array();
    for (const GraphStats& g : r.graphs) {
        ordered_json gj;
        gj["name"] = g.name;
        gj["s_vertices"] = g.s_vertices;
        gj["r_vertices"] = g.r_vertices;
        gj["edges"] = g.edges;
        gj["classification"] = classification_json(g);
        graphs.push_back(std::move(gj));
    }
    j["graphs"] = std::move(graphs);

    ordered_json thms = ordered_json::object();
    for (const auto& [name, v] : r.theorem_verdicts) {
        ordered_json tj;
        tj["applicable"] = v.applicable;
        tj["certified"] = v.certified;
        tj["detail"] = v.detail;
        thms[name] = std::move(tj);
    }
    j["theorems"] = std::move(thms);

    ordered_json oracles = ordered_json::array();
    for (const OracleVerdict& v : r.oracle_verdicts) oracles.push_back(oracle_json(v, r.deterministic));
    j["oracle"] = std::move(oracles);

    return j.dump(2) + "\n";
}

} // namespace hopfgate
