#pragma once

#include "hopfgate/exact_linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfgate {

struct EdgeLabel {
    bool is_finite = true;
    Rational value = 0; // > 0 when finite

    static EdgeLabel finite(const Rational& v);
    static EdgeLabel infinity() { return {false, 0}; }
    bool operator==(const EdgeLabel&) const = default;
};

enum class EdgeDir { StoR, RtoS, Both };

struct DsrEdge {
    int s = 0, r = 0;
    int sign = 1;
    EdgeDir dir = EdgeDir::Both;
    EdgeLabel label;
    /// Formal-label id for class-level steadiness checks; -1 when unused.
    int symbol = -1;
};

struct DsrGraph {
    int n_s = 0, n_r = 0;
    std::vector<DsrEdge> edges;
    std::vector<std::string> s_names, r_names;

    int s_degree(int s) const;
    int r_degree(int r) const;
    /// Edge between S s and R r with the given sign, or -1. At most one
    /// exists: parallel same-sign arcs are merged into an undirected edge.
    int find_edge(int s, int r, int sign) const;
    /// Edge between S s and R r traversable in the given direction, or -1.
    int find_traversable(int s, int r, bool s_to_r) const;
};

/// Arc R_j -> S_i iff A_ij != 0 (sign A_ij, label |A_ij|); arc S_i -> R_j iff
/// B_ji != 0 (sign B_ji, label infinity); same-signed antiparallel arcs merge
/// into one undirected edge keeping the finite label.
DsrGraph build_dsr(const RationalMatrix& a, const RationalMatrix& b);

/// The SR graph G_{A,At}: all edges undirected.
DsrGraph build_sr(const RationalMatrix& a);

/// SR graph of a sign pattern with unit labels and one formal symbol per
/// matrix position, for class-level steadiness checks.
DsrGraph build_sr_pattern(const SignPattern& p);

enum class SCycleStatus { Yes, No, NotApplicable };

struct CycleStep {
    int edge = 0;
    bool operator==(const CycleStep&) const = default;
};

/// A simple cycle. Traversal starts at an S-vertex: vertices[2t] is an
/// S index, vertices[2t+1] an R index, and step t walks vertices[t] to
/// vertices[(t+1) % len] (S-to-R at even t).
struct CycleRecord {
    std::vector<int> vertices;
    std::vector<CycleStep> steps;
    int sign = 1;
    int parity = 1;                              // (-1)^(len/2) * sign
    SCycleStatus s_status = SCycleStatus::Yes;   // NotApplicable when an infinity label occurs
    int orientations = 1;

    int length() const { return (int)steps.size(); }
    bool is_e_cycle() const { return parity == 1; }
    bool is_s_cycle() const { return s_status == SCycleStatus::Yes; }
    bool reversible() const { return orientations == 2; }
    /// Sorted edge indices; two simple cycles coincide iff these coincide.
    std::vector<int> edge_key() const;
};

/// All simple cycles (including sign-opposed 2-cycles), each reported once
/// regardless of starting vertex or direction, in deterministic order:
/// by sorted vertex set, then by canonical vertex sequence. Cycles longer
/// than max_len steps are dropped when the cap is given.
std::vector<CycleRecord> enumerate_cycles(const DsrGraph& g,
                                          std::optional<int> max_len = std::nullopt);

/// Fill in sign, parity, s-status and orientation count for a traversal.
CycleRecord classify_cycle(const DsrGraph& g, std::vector<CycleStep> steps, int start_s);

/// Rotate to the minimal S-vertex and, for reversible cycles, pick the
/// direction with the lexicographically smaller vertex sequence.
CycleRecord canonicalize_cycle(const DsrGraph& g, const std::vector<CycleStep>& steps, int start_s);

/// Compatibly orientable with every shared-edge component of odd edge count
/// (and at least one shared edge).
bool odd_intersection(const CycleRecord& c1, const CycleRecord& c2, const DsrGraph& g);

struct GraphClassification {
    bool odd = false;      // no e-cycles
    bool odd_star = false; // e-cycles all s-cycles, no odd intersection of e-cycles
    bool steady = false;   // all cycles s-cycles
    std::vector<CycleRecord> cycles;
    std::optional<CycleRecord> e_cycle_witness;        // against odd
    std::optional<CycleRecord> non_s_cycle_witness;    // against steady
    std::optional<CycleRecord> non_s_e_cycle_witness;  // against odd_star
    std::optional<std::pair<CycleRecord, CycleRecord>> odd_intersection_witness;
    /// True when the pairwise intersection scan was skipped because no
    /// S-vertex or no R-vertex has degree >= 3.
    bool degree_shortcut = false;
};

GraphClassification classify_graph(const DsrGraph& g);

/// Walk in a DSR graph; may be empty (a single vertex). Step t traverses
/// S-to-R at even t when the walk starts at an S-vertex, and R-to-S
/// otherwise.
struct Walk {
    bool starts_at_s = true;
    int start = 0;
    std::vector<CycleStep> steps;

    bool empty() const { return steps.empty(); }
    int length() const { return (int)steps.size(); }
};

int walk_sign(const DsrGraph& g, const Walk& w);
int walk_parity(const DsrGraph& g, const Walk& w);
/// Alternating label products equal, all labels finite. A walk must be
/// closed (even length) for this to be meaningful.
bool is_closed_s_walk(const DsrGraph& g, const Walk& w);

struct SteadyQclassCertificate {
    bool class_steady = false; // symbolic steadiness of the pattern's SR graph
    PMinorVerdict p0;          // exact cross-check on A*B
};

/// Lemma-style class certificate: if the SR graph of the pattern is steady
/// with formal labels, A*B is a P0-matrix for all A, Bt in the closed class.
/// Throws HypothesisError when steadiness cannot be certified symbolically,
/// DimensionError when A or Bt is not a member.
SteadyQclassCertificate steady_qclass_p0(const SignPattern& pattern,
                                         const RationalMatrix& a,
                                         const RationalMatrix& b);

} // namespace hopfgate
