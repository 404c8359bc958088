#include "hopfgate/dot_export.hpp"
#include "hopfgate/matrix_io.hpp"
#include "hopfgate/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

using namespace hopfgate;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInputError = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot open output file: " + out_path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

struct AnalyzeOpts {
    std::string matrix_path, b_matrix_path, b_class, out_path, assert_claim;
    int64_t oracle_trials = 0;
    uint64_t seed = 0;
    bool deterministic = false;
};

int run_analyze(const AnalyzeOpts& o) {
    std::string a_text = slurp(o.matrix_path);
    RationalMatrix a = parse_matrix_json(a_text).as_matrix();

    BClassMode mode;
    std::optional<RationalMatrix> b;
    std::string b_digest_role, b_digest;
    if (!o.b_matrix_path.empty()) {
        mode = BClassMode::Fixed;
        std::string b_text = slurp(o.b_matrix_path);
        b = parse_matrix_json(b_text).as_matrix();
        if (b->rows() != a.cols() || b->cols() != a.rows())
            throw DimensionError("B must be conformable with A and square the product");
        b_digest = content_digest(b_text);
    } else {
        mode = (o.b_class == "qt") ? BClassMode::QTranspose : BClassMode::Q0Transpose;
    }
    const RationalMatrix* bp = b ? &*b : nullptr;

    AnalysisReport rep;
    rep.deterministic = o.deterministic;
    rep.seed = o.seed;
    rep.input_digests.push_back({"matrix", content_digest(a_text)});
    if (!b_digest.empty()) rep.input_digests.push_back({"b_matrix", b_digest});
    rep.b_source = b ? "fixed" : (mode == BClassMode::QTranspose ? "q-transpose" : "q0-transpose");

    rep.conditions = evaluate_conditions(a, bp);
    rep.conclusions = spectral_conclusions(a, mode, bp);

    RationalMatrix at = a.transpose();
    const RationalMatrix& bm = b ? *b : at;
    rep.graphs.push_back(stats_of("dsr", build_dsr(a, bm)));
    if (a.rows() >= 2) rep.graphs.push_back(stats_of("dsr2", build_dsr2(a, bm).graph));

    rep.theorem_verdicts.push_back({"three-species", check_3species(a, mode, bp)});
    LowDegreeVerdict ld = check_low_degree(a);
    TheoremVerdict ldv{ld.applicable, ld.certified, ld.detail};
    rep.theorem_verdicts.push_back({"low-degree", ldv});
    try {
        rep.theorem_verdicts.push_back(
            {"acyclic", check_acyclic(SignPattern::of(a), a, bm)});
    } catch (const DimensionError&) {
        // Fixed B outside the closed transpose class: theorem not applicable.
        TheoremVerdict na;
        na.detail = "B is outside the closed transpose class of A";
        rep.theorem_verdicts.push_back({"acyclic", na});
    }

    if (o.oracle_trials > 0) {
        SampleSpec aspec = SampleSpec::of_matrix(a);
        SampleSpec bspec =
            b ? SampleSpec::of_matrix(*b)
              : SampleSpec::of_class(SignPattern::of(at),
                                     mode == BClassMode::QTranspose ? ClassMode::Q : ClassMode::Q0,
                                     o.seed);
        std::vector<Claim> claims{Claim::ProductP0, Claim::CompoundP0};
        if (!o.assert_claim.empty()) {
            auto c = claim_from_name(o.assert_claim);
            if (!c) throw ParseError("unknown claim: " + o.assert_claim);
            if (std::find(claims.begin(), claims.end(), *c) == claims.end()) claims.push_back(*c);
        }
        for (Claim c : claims) {
            OracleVerdict v = verify_claim(c, aspec, bspec, o.oracle_trials);
            merge_oracle_evidence(rep.conclusions, v);
            rep.oracle_verdicts.push_back(std::move(v));
        }
    }

    int exit_code = kExitOk;
    if (!o.assert_claim.empty()) {
        auto c = claim_from_name(o.assert_claim);
        if (!c) throw ParseError("unknown claim: " + o.assert_claim);
        Certainty flag = Certainty::Unknown;
        switch (*c) {
            case Claim::ProductP0: flag = rep.conclusions.product_p0; break;
            case Claim::CompoundP0: flag = rep.conclusions.compound_p0; break;
            case Claim::CompoundNonsingular:
            case Claim::DetCompoundPositive:
                flag = rep.conclusions.compound_nonsingular;
                break;
            case Claim::NonrealAvoidsLeft: flag = rep.conclusions.hopf_excluded; break;
            case Claim::Semistable: flag = rep.conclusions.positive_semistable; break;
        }
        bool refuted = false;
        for (const OracleVerdict& v : rep.oracle_verdicts)
            if (v.claim == *c && v.status == OracleStatus::Counterexample) refuted = true;
        if (refuted || flag == Certainty::Unknown) exit_code = kExitRefuted;
    }

    emit(serialize_report(rep), o.out_path);
    return exit_code;
}

struct GraphOpts {
    std::string matrix_path, b_matrix_path, level = "dsr", out_path;
    bool prune = false;
};

int run_graph(const GraphOpts& o) {
    RationalMatrix a = parse_matrix_json(slurp(o.matrix_path)).as_matrix();
    RationalMatrix bm = o.b_matrix_path.empty()
                            ? a.transpose()
                            : parse_matrix_json(slurp(o.b_matrix_path)).as_matrix();
    if (bm.rows() != a.cols() || bm.cols() != a.rows())
        throw DimensionError("B must be conformable with A and square the product");
    DsrGraph g;
    if (o.level == "dsr")
        g = build_dsr(a, bm);
    else if (o.level == "dsr2")
        g = build_dsr2(a, bm).graph;
    else
        throw ParseError("level must be dsr or dsr2");
    if (o.prune) g = prune_acyclic_parts(g);
    emit(to_dot(g, o.level), o.out_path);
    return kExitOk;
}

struct CompoundOpts {
    std::string matrix_path, mode = "additive", out_path;
    int k = 2;
};

int run_compound(const CompoundOpts& o) {
    RationalMatrix m = parse_matrix_json(slurp(o.matrix_path)).as_matrix();
    RationalMatrix out;
    if (o.mode == "additive") {
        if (o.k != 2) throw DimensionError("additive compound implemented for k = 2 only");
        if (m.rows() != m.cols() || m.rows() < 2)
            throw DimensionError("additive compound needs a square matrix of order >= 2");
        out = additive_compound_2(m);
    } else if (o.mode == "multiplicative") {
        if (o.k < 1 || o.k > std::min(m.rows(), m.cols()))
            throw DimensionError("compound order k out of range");
        out = multiplicative_compound(m, o.k);
    } else {
        throw ParseError("mode must be additive or multiplicative");
    }
    emit(matrix_to_json(out), o.out_path);
    return kExitOk;
}

struct OracleOpts {
    std::string matrix_path, b_matrix_path, b_class = "qt", claim = "product-p0", out_path;
    std::vector<std::string> grid;
    int64_t trials = 100;
    uint64_t seed = 0;
    bool deterministic = false;
};

int run_oracle(const OracleOpts& o) {
    auto claim = claim_from_name(o.claim);
    if (!claim) throw ParseError("unknown claim: " + o.claim);
    MatrixFile af = parse_matrix_json(slurp(o.matrix_path));

    OracleVerdict v;
    if (!o.grid.empty()) {
        // Exhaustive grid sweep over the sign classes of A and B.
        std::vector<Rational> grid;
        for (const std::string& s : o.grid) grid.push_back(rational_from_string(s));
        SignPattern apat = af.is_numeric() ? SignPattern::of(af.matrix()) : af.pattern();
        SignPattern bpat = o.b_matrix_path.empty()
                               ? apat.transpose()
                               : [&] {
                                     MatrixFile bf = parse_matrix_json(slurp(o.b_matrix_path));
                                     return bf.is_numeric() ? SignPattern::of(bf.matrix())
                                                            : bf.pattern();
                                 }();
        v = exhaustive_small(*claim, apat, bpat, grid);
    } else {
        RationalMatrix a = af.as_matrix();
        SampleSpec aspec = SampleSpec::of_matrix(a);
        SampleSpec bspec;
        if (!o.b_matrix_path.empty()) {
            bspec = SampleSpec::of_matrix(parse_matrix_json(slurp(o.b_matrix_path)).as_matrix());
        } else {
            bspec = SampleSpec::of_class(SignPattern::of(a.transpose()),
                                         o.b_class == "qt" ? ClassMode::Q : ClassMode::Q0, o.seed);
        }
        v = verify_claim(*claim, aspec, bspec, o.trials);
    }

    AnalysisReport rep;
    rep.deterministic = o.deterministic;
    rep.seed = o.seed;
    rep.b_source = !o.b_matrix_path.empty() ? "fixed"
                                            : (o.b_class == "qt" ? "q-transpose" : "q0-transpose");
    rep.oracle_verdicts.push_back(v);
    emit(serialize_report(rep), o.out_path);
    if (v.status == OracleStatus::Error) return kExitInputError;
    return v.status == OracleStatus::Counterexample ? kExitRefuted : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural Hopf-bifurcation exclusion for products A*B over qualitative classes"};
    app.require_subcommand(1);

    AnalyzeOpts ao;
    CLI::App* analyze = app.add_subcommand("analyze", "Full structural analysis with report");
    analyze->add_option("--matrix", ao.matrix_path, "Matrix JSON file for A")->required();
    auto* bmat = analyze->add_option("--b-matrix", ao.b_matrix_path, "Matrix JSON file for B");
    auto* bcls = analyze->add_option("--b-class", ao.b_class, "Class of B: qt (Q(At)) or q0t (Q0(At))")
                     ->check(CLI::IsMember({"qt", "q0t"}));
    bmat->excludes(bcls);
    analyze->add_option("--oracle-trials", ao.oracle_trials, "Sampled oracle trials (0 = skip)");
    analyze->add_option("--seed", ao.seed, "Oracle RNG seed");
    analyze->add_option("--assert", ao.assert_claim,
                        "Fail (exit 1) unless this claim is supported and unrefuted");
    analyze->add_option("--out", ao.out_path, "Report output path (default stdout)");
    analyze->add_flag("--deterministic", ao.deterministic, "Suppress timestamps and wall times");

    GraphOpts go;
    CLI::App* graph = app.add_subcommand("graph", "Emit the interaction graph as DOT");
    graph->add_option("--matrix", go.matrix_path, "Matrix JSON file for A")->required();
    graph->add_option("--b-matrix", go.b_matrix_path, "Matrix JSON file for B (default At)");
    graph->add_option("--level", go.level, "dsr or dsr2")->check(CLI::IsMember({"dsr", "dsr2"}));
    graph->add_flag("--prune-acyclic", go.prune, "Strip acyclic parts (display only)");
    graph->add_option("--out", go.out_path, "DOT output path (default stdout)");

    CompoundOpts co;
    CLI::App* compound = app.add_subcommand("compound", "Print a compound matrix");
    compound->add_option("--matrix", co.matrix_path, "Matrix JSON file")->required();
    compound->add_option("--k", co.k, "Compound order");
    compound->add_option("--mode", co.mode, "additive or multiplicative")
        ->check(CLI::IsMember({"additive", "multiplicative"}));
    compound->add_option("--out", co.out_path, "Output path (default stdout)");

    OracleOpts oo;
    CLI::App* oracle = app.add_subcommand("oracle", "Sampled or exhaustive claim checking");
    oracle->add_option("--matrix", oo.matrix_path, "Matrix JSON file for A")->required();
    oracle->add_option("--b-matrix", oo.b_matrix_path, "Matrix JSON file for B (default: class of At)");
    oracle->add_option("--b-class", oo.b_class, "qt or q0t")->check(CLI::IsMember({"qt", "q0t"}));
    oracle->add_option("--claim", oo.claim, "Claim name, e.g. product-p0, compound-p0");
    oracle->add_option("--trials", oo.trials, "Number of sampled trials");
    oracle->add_option("--seed", oo.seed, "RNG seed");
    oracle->add_option("--grid", oo.grid, "Magnitude grid: exhaustive sweep instead of sampling");
    oracle->add_option("--out", oo.out_path, "Report output path (default stdout)");
    oracle->add_flag("--deterministic", oo.deterministic, "Suppress timestamps and wall times");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            if (ao.b_matrix_path.empty() && ao.b_class.empty()) {
                std::cerr << "error: exactly one of --b-matrix or --b-class is required\n";
                return kExitInputError;
            }
            return run_analyze(ao);
        }
        if (graph->parsed()) return run_graph(go);
        if (compound->parsed()) return run_compound(co);
        if (oracle->parsed()) return run_oracle(oo);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
