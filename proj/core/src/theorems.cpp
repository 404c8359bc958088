#include "hopfgate/theorems.hpp"

#include "hopfgate/compounds.hpp"
#include "hopfgate/exact_linalg.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace hopfgate {

namespace {

Tri tri_of(bool b) { return b ? Tri::Holds : Tri::Fails; }

} // namespace

ConditionReport evaluate_conditions(const RationalMatrix& a, const RationalMatrix* b) {
    ConditionReport r;
    RationalMatrix at = a.transpose();
    const RationalMatrix& bm = b ? *b : at;
    r.dsr = classify_graph(build_dsr(a, bm));
    r.sr = b ? classify_graph(build_sr(a)) : r.dsr;

    r.c[0] = tri_of(r.dsr.odd);
    r.c[1] = tri_of(r.dsr.odd_star);
    r.c[2] = r.c[0]; // C1 <=> C3
    r.c[3] = (r.c[1] == Tri::Holds) ? Tri::Holds : Tri::Undetermined;

    r.c[4] = tri_of(r.sr.odd);
    r.c[5] = tri_of(r.sr.odd_star);
    r.c[8] = r.c[4]; // C5 <=> C9

    if (a.rows() <= 8 && a.cols() <= 8) {
        C7C8Verdict scan = check_c7_c8(SignPattern::of(a));
        r.c7_scan_ran = true;
        r.c7_neither = scan.neither_submatrices;
        r.c[6] = tri_of(scan.c7);
        if (r.c[6] != r.c[4])
            throw std::logic_error("submatrix sign scan disagrees with the SR graph oddness test");
    } else {
        r.c[6] = r.c[4]; // C5 <=> C7
        r.notes.push_back("submatrix sign scan skipped (pattern larger than 8x8); C7 derived from C5");
    }

    // C8: implied by C6 or C7; otherwise decided by exact singularity of the
    // submatrices the sign scan could not classify.
    if (r.c[5] == Tri::Holds || r.c[6] == Tri::Holds) {
        r.c[7] = Tri::Holds;
    } else if (r.c7_scan_ran) {
        bool all_singular = true;
        for (const auto& [rows, cols] : r.c7_neither)
            if (det(a.submatrix(rows, cols)) != 0) {
                all_singular = false;
                break;
            }
        r.c[7] = tri_of(all_singular);
        r.notes.push_back("C8 decided by exact singularity of sign-ambiguous submatrices");
    } else {
        r.c[7] = Tri::Undetermined;
    }
    r.c[9] = r.c[7]; // C8 <=> C10
    return r;
}

std::string certainty_name(Certainty c) {
    switch (c) {
        case Certainty::Unknown: return "unknown";
        case Certainty::SampledOnly: return "sampled-only";
        case Certainty::Structural: return "structural";
    }
    return "?";
}

SpectralConclusion spectral_conclusions(const RationalMatrix& a, BClassMode mode,
                                        const RationalMatrix* b) {
    if (mode == BClassMode::Fixed && !b)
        throw std::invalid_argument("fixed mode needs a concrete B");
    RationalMatrix at = a.transpose();
    const RationalMatrix& bm = (mode == BClassMode::Fixed) ? *b : at;

    SpectralConclusion sc;
    GraphClassification dsr = classify_graph(build_dsr(a, bm));
    if (dsr.odd_star) {
        sc.product_p0 = Certainty::Structural;
        sc.provenance.push_back(dsr.odd ? "product P0: DSR graph odd"
                                        : "product P0: DSR graph odd*");
    }
    if (a.rows() >= 2) {
        GraphClassification dsr2 = classify_graph(build_dsr2(a, bm).graph);
        if (dsr2.odd_star) {
            sc.compound_p0 = Certainty::Structural;
            sc.provenance.push_back(dsr2.odd ? "compound P0: DSR2 graph odd"
                                             : "compound P0: DSR2 graph odd*");
        }
        if (sc.product_p0 == Certainty::Structural && sc.compound_p0 == Certainty::Structural) {
            sc.positive_semistable = Certainty::Structural;
            sc.provenance.push_back("positive semistable: product and compound both P0");
        }
    } else {
        sc.positive_semistable = sc.product_p0;
        sc.provenance.push_back("1x1 product: compound undefined, semistability from product P0 alone");
    }
    if (sc.compound_p0 == Certainty::Structural) {
        sc.hopf_excluded = Certainty::Structural;
        sc.provenance.push_back("Hopf excluded: nonreal spectrum avoids the open left half-plane");
    }
    return sc;
}

namespace {

void raise_to_sampled(Certainty& c, bool passed) {
    if (passed && c == Certainty::Unknown) c = Certainty::SampledOnly;
}

} // namespace

void merge_oracle_evidence(SpectralConclusion& sc, const OracleVerdict& v) {
    bool passed = (v.status == OracleStatus::AllPassed);
    if (v.status == OracleStatus::Error) return;
    switch (v.claim) {
        case Claim::ProductP0: raise_to_sampled(sc.product_p0, passed); break;
        case Claim::CompoundP0: raise_to_sampled(sc.compound_p0, passed); break;
        case Claim::CompoundNonsingular:
        case Claim::DetCompoundPositive:
            raise_to_sampled(sc.compound_nonsingular, passed);
            break;
        case Claim::NonrealAvoidsLeft: raise_to_sampled(sc.hopf_excluded, passed); break;
        case Claim::Semistable: raise_to_sampled(sc.positive_semistable, passed); break;
    }
    if (!passed) {
        bool structural =
            (v.claim == Claim::ProductP0 && sc.product_p0 == Certainty::Structural) ||
            (v.claim == Claim::CompoundP0 && sc.compound_p0 == Certainty::Structural);
        if (structural)
            throw std::logic_error("oracle counterexample refutes a structural certificate");
    }
    if (sc.positive_semistable == Certainty::Unknown &&
        sc.product_p0 != Certainty::Unknown && sc.compound_p0 != Certainty::Unknown)
        sc.positive_semistable = Certainty::SampledOnly;
    if (sc.hopf_excluded == Certainty::Unknown &&
        (sc.compound_p0 != Certainty::Unknown || sc.compound_nonsingular != Certainty::Unknown))
        sc.hopf_excluded = Certainty::SampledOnly;
}

TheoremVerdict check_3species(const RationalMatrix& a, BClassMode mode, const RationalMatrix* b) {
    if (mode == BClassMode::Fixed && !b)
        throw std::invalid_argument("fixed mode needs a concrete B");
    TheoremVerdict v;
    RationalMatrix lhs, rhs;
    if (a.rows() == 3) {
        lhs = a;
        rhs = (mode == BClassMode::Fixed) ? *b : a.transpose();
        v.detail = "three-row case";
    } else if (a.cols() == 3) {
        // The nonzero spectrum of AB equals that of AtBt, so the three-row
        // argument applies to the transposed pair.
        lhs = a.transpose();
        rhs = (mode == BClassMode::Fixed) ? b->transpose() : a;
        v.detail = "three-column case via transposition";
    } else {
        v.detail = "matrix has neither three rows nor three columns";
        return v;
    }
    v.applicable = true;
    v.certified = true;
    for (const CycleRecord& c : enumerate_cycles(build_dsr(lhs, rhs))) {
        bool bad4 = (c.length() == 4 && c.is_e_cycle() && !c.is_s_cycle());
        bool bad6 = (c.length() == 6 && !c.is_e_cycle() && !c.is_s_cycle());
        if (bad4 || bad6) {
            v.certified = false;
            v.detail += bad4 ? "; length-4 e-cycle is not an s-cycle"
                             : "; length-6 o-cycle is not an s-cycle";
            break;
        }
    }
    return v;
}

LowDegreeVerdict check_low_degree(const RationalMatrix& a) {
    LowDegreeVerdict v;
    GraphClassification sr = classify_graph(build_sr(a));
    v.hypothesis_ok = sr.steady;
    if (!v.hypothesis_ok) {
        v.detail = "SR graph is not steady; hypothesis fails";
        return v;
    }
    auto max_nonzeros = [&](bool per_column) {
        int worst = 0;
        int outer = per_column ? a.cols() : a.rows();
        int inner = per_column ? a.rows() : a.cols();
        for (int o = 0; o < outer; ++o) {
            int nz = 0;
            for (int i = 0; i < inner; ++i)
                if ((per_column ? a(i, o) : a(o, i)) != 0) ++nz;
            worst = std::max(worst, nz);
        }
        return worst;
    };
    v.column_case = max_nonzeros(true) <= 2;
    v.row_case = max_nonzeros(false) <= 2;
    v.applicable = v.column_case || v.row_case;
    v.certified = v.applicable;
    if (v.column_case)
        v.detail = "at most two nonzeros per column: product and compound P0, positive semistable";
    else if (v.row_case)
        v.detail = "at most two nonzeros per row: positive semistable via the transposed pair";
    else
        v.detail = "some row and some column have three or more nonzeros";
    return v;
}

TheoremVerdict check_acyclic(const SignPattern& c, const RationalMatrix& a,
                             const RationalMatrix& b) {
    if (!qclass_membership(a, c, true))
        throw DimensionError("A is not in the closed qualitative class of the pattern");
    if (!qclass_membership(b, c.transpose(), true))
        throw DimensionError("B is not in the closed qualitative class of the transposed pattern");
    TheoremVerdict v;
    v.applicable = true;
    // Underlying undirected graph: one edge per nonzero pattern entry.
    std::vector<int> parent(c.rows() + c.cols());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = (int)i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    bool acyclic = true;
    for (int i = 0; i < c.rows() && acyclic; ++i)
        for (int j = 0; j < c.cols() && acyclic; ++j) {
            if (c(i, j) == 0) continue;
            int u = find(i), w = find(c.rows() + j);
            if (u == w)
                acyclic = false;
            else
                parent[u] = w;
        }
    v.certified = acyclic;
    v.detail = acyclic ? "SR graph of the pattern is acyclic: product and compound P0, positive semistable"
                       : "pattern SR graph contains a semicycle";
    return v;
}

StabilityVerdict connected_family_stability(const RationalMatrix& a, BClassMode mode,
                                            const RationalMatrix& witness_b, int64_t trials,
                                            uint64_t seed, Certainty nonsingularity_evidence) {
    StabilityVerdict v;
    v.trials = trials;
    SignPattern bpat = SignPattern::of(a.transpose());
    switch (mode) {
        case BClassMode::Fixed: v.witness_in_class = true; break;
        case BClassMode::QTranspose: v.witness_in_class = qclass_membership(witness_b, bpat, false); break;
        case BClassMode::Q0Transpose: v.witness_in_class = qclass_membership(witness_b, bpat, true); break;
    }
    if (!v.witness_in_class) {
        v.detail = "witness is not a member of the B class";
        return v;
    }
    constexpr double tol = 1e-9;
    v.witness_stable = true;
    for (const auto& ev : numeric_spectrum(a * witness_b))
        if (ev.real() <= tol) v.witness_stable = false;
    if (!v.witness_stable) {
        v.detail = "witness product has an eigenvalue off the open right half-plane";
        return v;
    }
    // Sampled nonsingularity of det(AB) and det((AB)^[2]) over the class.
    SampleSpec bspec = (mode == BClassMode::Fixed)
                           ? SampleSpec::of_matrix(witness_b)
                           : SampleSpec::of_class(bpat, mode == BClassMode::QTranspose
                                                            ? ClassMode::Q
                                                            : ClassMode::Q0,
                                                  seed);
    v.nonsingular_on_samples = true;
    for (int64_t i = 0; i < trials && v.nonsingular_on_samples; ++i) {
        RationalMatrix prod = a * sample_member(bspec, (uint64_t)i);
        if (det(prod) == 0 || (a.rows() >= 2 && det(additive_compound_2(prod)) == 0))
            v.nonsingular_on_samples = false;
    }
    if (!v.nonsingular_on_samples) {
        v.detail = "a sampled member has a singular product or compound";
        return v;
    }
    v.verdict = (nonsingularity_evidence == Certainty::Structural) ? Certainty::Structural
                                                                   : Certainty::SampledOnly;
    v.detail = "positive stable over the path-connected family";
    return v;
}

bool p0_spectrum_wedge(const RationalMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw DimensionError("spectrum wedge of non-square matrix");
    int n = m.rows();
    if (n == 0) return true;
    double wedge = std::numbers::pi / n;
    for (const auto& ev : numeric_spectrum(m)) {
        double r = std::abs(ev);
        if (r <= tol) continue;
        double theta = std::atan2(ev.imag(), ev.real());
        if (std::abs(std::abs(theta) - std::numbers::pi) >= wedge - 1e-8) continue;
        return false;
    }
    return true;
}

} // namespace hopfgate
