#pragma once

#include "hopfgate/theorems.hpp"

#include <string>
#include <vector>

namespace hopfgate {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

/// FNV-1a 64-bit digest, hex-encoded; used to fingerprint inputs in reports.
std::string content_digest(const std::string& bytes);

struct GraphStats {
    std::string name;
    int s_vertices = 0, r_vertices = 0, edges = 0;
    std::vector<std::string> s_names, r_names; // display names for witnesses
    GraphClassification classification;
};

GraphStats stats_of(const std::string& name, const DsrGraph& g);

struct AnalysisReport {
    std::vector<std::pair<std::string, std::string>> input_digests; // (role, digest)
    std::string b_source; // "fixed" | "q-transpose" | "q0-transpose"
    ConditionReport conditions;
    SpectralConclusion conclusions;
    std::vector<GraphStats> graphs;
    std::vector<OracleVerdict> oracle_verdicts;
    std::vector<std::pair<std::string, TheoremVerdict>> theorem_verdicts;
    uint64_t seed = 0;
    bool deterministic = false; // suppresses timestamp and wall times
};

/// Stable-key-order JSON with schema_version and tool version; byte-identical
/// for identical inputs and seed when deterministic is set.
std::string serialize_report(const AnalysisReport& r);

} // namespace hopfgate
