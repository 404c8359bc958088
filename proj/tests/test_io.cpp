#include "fixtures.hpp"
#include "hopfgate/dot_export.hpp"
#include "hopfgate/matrix_io.hpp"
#include "hopfgate/report.hpp"

#include <doctest.h>

using namespace hopfgate;

TEST_CASE("numeric matrix files round-trip losslessly") {
    RationalMatrix m(2, 3);
    m(0, 0) = Rational(3, 4);
    m(0, 2) = -7;
    m(1, 1) = Rational(22, 7);
    std::string text = matrix_to_json(m);
    MatrixFile f = parse_matrix_json(text);
    REQUIRE(f.is_numeric());
    CHECK(f.matrix() == m);
    CHECK(matrix_to_json(f.matrix()) == text);
}

TEST_CASE("sign pattern files round-trip") {
    SignPattern p(2, 2);
    p.set(0, 0, 1);
    p.set(1, 0, -1);
    std::string text = pattern_to_json(p);
    MatrixFile f = parse_matrix_json(text);
    REQUIRE_FALSE(f.is_numeric());
    CHECK(f.pattern() == p);
    CHECK(pattern_to_json(f.pattern()) == text);
}

TEST_CASE("sign files accept the unicode minus") {
    MatrixFile f = parse_matrix_json(
        R"({"rows":1,"cols":2,"entries":[["−","+"]]})");
    REQUIRE_FALSE(f.is_numeric());
    CHECK(f.pattern()(0, 0) == -1);
    CHECK(f.pattern()(0, 1) == 1);
}

TEST_CASE("numeric entries may arrive as JSON numbers or strings") {
    MatrixFile f = parse_matrix_json(
        R"({"rows":2,"cols":2,"entries":[[1,"1/2"],["-0.25",0]]})");
    REQUIRE(f.is_numeric());
    CHECK(f.matrix()(0, 1) == Rational(1, 2));
    CHECK(f.matrix()(1, 0) == Rational(-1, 4));
}

TEST_CASE("malformed matrix files are rejected") {
    CHECK_THROWS_AS(parse_matrix_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json(R"({"rows":1,"cols":1})"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json(R"({"rows":2,"cols":1,"entries":[["1"]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json(R"({"rows":1,"cols":2,"entries":[["1","x"]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json(R"({"rows":1,"cols":2,"entries":[["+","2"]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json(R"({"rows":0,"cols":2,"entries":[]})"), ParseError);
}

TEST_CASE("pattern files degrade to unit members on demand") {
    MatrixFile f = parse_matrix_json(R"({"rows":1,"cols":2,"entries":[["+","-"]]})");
    RationalMatrix m = f.as_matrix();
    CHECK(m(0, 0) == 1);
    CHECK(m(0, 1) == -1);
}

TEST_CASE("DOT export follows the drawing conventions") {
    RationalMatrix a = fixtures::pair3x2_a();
    RationalMatrix b = fixtures::pair3x2_bt().transpose();
    std::string dot = to_dot(build_dsr(a, b));
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("\"S1\" [shape=ellipse]") != std::string::npos);
    CHECK(dot.find("\"R1\" [shape=box]") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);   // negative edges
    CHECK(dot.find("dir=none") != std::string::npos);       // undirected edges
    CHECK(dot.find("label=\"inf\"") != std::string::npos);  // one-way S-to-R arc
    // The one-way R2-to-S3 arc keeps its arrowhead.
    CHECK(dot.find("\"R2\" -> \"S3\" [label=\"1\"]") != std::string::npos);
    CHECK(to_dot(build_dsr(a, b)) == dot); // stable output
}

TEST_CASE("DOT export counts for the 3x2 pair") {
    RationalMatrix a = fixtures::pair3x2_a();
    RationalMatrix b = fixtures::pair3x2_bt().transpose();
    std::string dot = to_dot(build_dsr(a, b));
    size_t nodes = 0, arcs = 0;
    for (size_t pos = 0; (pos = dot.find("shape=", pos)) != std::string::npos; ++pos) ++nodes;
    for (size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++arcs;
    CHECK(nodes == 5);
    CHECK(arcs == 6);
}

TEST_CASE("pruning strips pendant branches and keeps cycles") {
    // Chain with an extra pendant column.
    RationalMatrix a(3, 4);
    RationalMatrix base = fixtures::chain3();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = base(i, j);
    a(0, 3) = 5; // pendant R4
    DsrGraph g = build_sr(a);
    DsrGraph pruned = prune_acyclic_parts(g);
    CHECK(pruned.n_r == 3); // pendant reaction removed
    CHECK(pruned.n_s == 3);
    CHECK(enumerate_cycles(pruned).size() == enumerate_cycles(g).size());
}

TEST_CASE("pruning an acyclic graph leaves nothing") {
    RationalMatrix c = fixtures::from_ints(3, 2, {1, 0, -1, 1, 0, -1});
    DsrGraph pruned = prune_acyclic_parts(build_sr(c));
    CHECK(pruned.edges.empty());
    CHECK(pruned.n_s == 0);
    CHECK(pruned.n_r == 0);
}

TEST_CASE("digests are stable and content-sensitive") {
    CHECK(content_digest("abc") == content_digest("abc"));
    CHECK(content_digest("abc") != content_digest("abd"));
    CHECK(content_digest("").size() == 16);
}

TEST_CASE("deterministic reports are byte-identical") {
    AnalysisReport r;
    r.deterministic = true;
    r.b_source = "q0-transpose";
    r.seed = 9;
    r.input_digests.push_back({"matrix", content_digest("x")});
    RationalMatrix a = fixtures::chain3();
    r.conditions = evaluate_conditions(a);
    r.conclusions = spectral_conclusions(a, BClassMode::Q0Transpose);
    r.graphs.push_back(stats_of("dsr", build_sr(a)));
    std::string one = serialize_report(r);
    std::string two = serialize_report(r);
    CHECK(one == two);
    CHECK(one.find("\"schema_version\": 1") != std::string::npos);
    CHECK(one.find("timestamp") == std::string::npos);
    CHECK(one.find("wall_time") == std::string::npos);
}

TEST_CASE("non-deterministic reports carry a timestamp") {
    AnalysisReport r;
    r.b_source = "fixed";
    std::string text = serialize_report(r);
    CHECK(text.find("timestamp_unix") != std::string::npos);
}
