#pragma once

#include "hopfgate/dsr2.hpp"
#include "hopfgate/oracle.hpp"

namespace hopfgate {

/// How the qualitative family of the right factor is specified.
enum class BClassMode { Fixed, QTranspose, Q0Transpose };

/// C1:  G_{A,B} odd                 C2:  G_{A,B} odd*
/// C3:  A'B' P0 on Q0(A) x Q0(B)    C4:  AB' P0 on Q0(B)
/// C5:  G_{A,At} odd                C6:  G_{A,At} odd*
/// C7:  submatrices sign nonsingular or sign singular
/// C8:  submatrices sign nonsingular or singular
/// C9:  A'C P0 on Q0(A) x Q0(At)    C10: AC P0 on Q0(At)
/// with C1<=>C3 => C2=>C4 and C5<=>C7<=>C9 => C6=>C8<=>C10.
struct ConditionReport {
    Tri c[10] = {Tri::Undetermined, Tri::Undetermined, Tri::Undetermined, Tri::Undetermined,
                 Tri::Undetermined, Tri::Undetermined, Tri::Undetermined, Tri::Undetermined,
                 Tri::Undetermined, Tri::Undetermined};
    GraphClassification dsr; // G_{A,B} (B defaults to At)
    GraphClassification sr;  // G_{A,At}
    bool c7_scan_ran = false;
    std::vector<std::pair<IndexSet, IndexSet>> c7_neither;
    std::vector<std::string> notes;

    Tri condition(int k) const { return c[k - 1]; } // 1-based C1..C10
};

/// Structural evaluation. C8 is additionally decided by exact singularity of
/// the Neither-classified submatrices, which needs concrete entries.
ConditionReport evaluate_conditions(const RationalMatrix& a, const RationalMatrix* b = nullptr);

enum class Certainty { Unknown, SampledOnly, Structural };
std::string certainty_name(Certainty c);

struct SpectralConclusion {
    Certainty product_p0 = Certainty::Unknown;
    Certainty compound_p0 = Certainty::Unknown;
    Certainty compound_nonsingular = Certainty::Unknown;
    Certainty positive_semistable = Certainty::Unknown;
    Certainty positive_stable = Certainty::Unknown;
    Certainty hopf_excluded = Certainty::Unknown;
    std::vector<std::string> provenance;
};

/// Assemble structural flags from the DSR and DSR2 classifications of
/// (A, B) or (A, At). Oracle evidence can later raise Unknown flags to
/// SampledOnly via merge_oracle_evidence, never to Structural.
SpectralConclusion spectral_conclusions(const RationalMatrix& a, BClassMode mode,
                                        const RationalMatrix* b = nullptr);

void merge_oracle_evidence(SpectralConclusion& sc, const OracleVerdict& v);

struct TheoremVerdict {
    bool applicable = false;
    bool certified = false;
    std::string detail;
};

/// 3-row (or, via transposition, 3-column) case: all length-4 e-cycles and
/// all length-6 o-cycles of the DSR graph are s-cycles implies the compound
/// is P0 over the class, without building the DSR2 graph.
TheoremVerdict check_3species(const RationalMatrix& a, BClassMode mode,
                              const RationalMatrix* b = nullptr);

/// Steady SR graph with at most two nonzeros per column (or per row, via
/// transposition) implies product and compound P0, hence semistability.
struct LowDegreeVerdict {
    bool applicable = false;
    bool certified = false;
    bool column_case = false, row_case = false;
    bool hypothesis_ok = false; // G_{A,At} steady
    std::string detail;
};
LowDegreeVerdict check_low_degree(const RationalMatrix& a);

/// Acyclic underlying undirected SR graph of the pattern implies both P0
/// certificates and semistability for all members. Throws DimensionError on
/// class-membership violations.
TheoremVerdict check_acyclic(const SignPattern& c, const RationalMatrix& a,
                             const RationalMatrix& b);

struct StabilityVerdict {
    bool witness_in_class = false;
    bool witness_stable = false;      // numeric: all real parts > tolerance
    bool nonsingular_on_samples = false; // det(AB) and det((AB)^[2]) nonzero, exact
    int64_t trials = 0;
    Certainty verdict = Certainty::Unknown;
    std::string detail;
};

/// Path-connected family argument: a positive stable witness plus
/// nonsingularity of the product and its compound over the class upgrades
/// semistability to stability. Nonsingularity is sampled here, so the
/// verdict is at most SampledOnly unless structural evidence is supplied.
StabilityVerdict connected_family_stability(const RationalMatrix& a, BClassMode mode,
                                            const RationalMatrix& witness_b,
                                            int64_t trials = 200, uint64_t seed = 0,
                                            Certainty nonsingularity_evidence = Certainty::Unknown);

/// Every eigenvalue r e^{i theta} satisfies r ~ 0 or |theta - pi| >= pi/n,
/// within tolerance: the spectral wedge every P0 matrix obeys.
bool p0_spectrum_wedge(const RationalMatrix& m, double tol = 1e-9);

} // namespace hopfgate
