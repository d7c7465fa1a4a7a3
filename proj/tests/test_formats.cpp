#include <doctest.h>

#include <string>

#include "corpus.hpp"
#include "wlcs/errors.hpp"
#include "wlcs/formats.hpp"
#include "wlcs/model.hpp"
#include "wlcs/prng.hpp"
#include "wlcs/transforms.hpp"

using wlcs::Instance;
using wlcs::ParseError;
using wlcs::Rational;
using wlcs::ValidationError;

TEST_SUITE("formats") {

TEST_CASE("instance round-trip preserves representations") {
    const Instance fixture = wlcs::appendix_counterexample(Rational(81, 100));
    const auto text = wlcs::serialize_instance(fixture);
    const Instance back = wlcs::parse_instance(text);
    CHECK(wlcs::structurally_equal(fixture, back));
    // Unreduced rationals must survive the trip byte-for-byte.
    CHECK(wlcs::serialize_instance(back) == text);
}

TEST_CASE("random instances round-trip") {
    wlcs::SplitMix64 rng(0xf0f0);
    for (int round = 0; round < 200; ++round) {
        auto inst = corpus::random_instance(rng);
        if (rng.below(2)) inst.k = rng.below(6);
        const auto back = wlcs::parse_instance(wlcs::serialize_instance(inst));
        CHECK(wlcs::structurally_equal(inst, back));
        CHECK(back.k == inst.k);
    }
}

TEST_CASE("instance parser accepts comments, blank lines, and CRLF") {
    const std::string text =
        "# planted: OPT 1\r\n"
        "\r\n"
        "WLCS 1\n"
        "alphabet: A B\n"
        "# a mid-file comment line\n"
        "a1: 1/2\n"
        "a2: 1/2\n"
        "\n"
        "X 1\n"
        "1/2 1/2\n"
        "Y 1\n"
        "2/4 2/4\n";
    const Instance inst = wlcs::parse_instance(text);
    CHECK(inst.X.length() == 1);
    CHECK(inst.Y.rows[0][0] == Rational(1, 2));
    CHECK(wlcs::planted_answer(text) == std::string("OPT 1"));
}

TEST_CASE("instance parser reports line and column on syntax errors") {
    const std::string text =
        "WLCS 1\n"
        "alphabet: A B\n"
        "a1: 1/2\n"
        "a2: nope\n"
        "X 1\n"
        "1/2 1/2\n"
        "Y 1\n"
        "1/2 1/2\n";
    try {
        wlcs::parse_instance(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 5);
    }
}

TEST_CASE("instance parser separates syntax from validation") {
    // Syntactically fine, semantically broken: row sums to 9/10.
    const std::string text =
        "WLCS 1\n"
        "alphabet: A B\n"
        "a1: 1/2\n"
        "a2: 1/2\n"
        "X 1\n"
        "1/2 2/5\n"
        "Y 1\n"
        "1/2 1/2\n";
    try {
        wlcs::parse_instance(text);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        REQUIRE(e.violations().size() == 1);
        CHECK(e.violations()[0].find("row 1") != std::string::npos);
    }
}

TEST_CASE("instance parser syntax rejections") {
    CHECK_THROWS_AS(wlcs::parse_instance(""), ParseError);
    CHECK_THROWS_AS(wlcs::parse_instance("WLCS 2\n"), ParseError);
    CHECK_THROWS_AS(wlcs::parse_instance("GRAPH 1\n"), ParseError);
    const std::string base =
        "WLCS 1\nalphabet: A B\na1: 1/2\na2: 1/2\nX 1\n1/2 1/2\nY 1\n1/2 1/2\n";
    CHECK_NOTHROW(wlcs::parse_instance(base));
    // Row with the wrong arity.
    CHECK_THROWS_AS(
        wlcs::parse_instance("WLCS 1\nalphabet: A B\na1: 1/2\na2: 1/2\nX 1\n1/2\nY 1\n1/2 1/2\n"),
        ParseError);
    // Trailing content after the last row.
    CHECK_THROWS_AS(wlcs::parse_instance(base + "extra\n"), ParseError);
    // Duplicate letters surface as a syntax-level alphabet error.
    CHECK_THROWS_AS(
        wlcs::parse_instance("WLCS 1\nalphabet: A A\na1: 1/2\na2: 1/2\nX 1\n1/2 1/2\nY 1\n1/2 1/2\n"),
        ParseError);
}

TEST_CASE("witness round-trip and rejections") {
    const wlcs::Witness w{{"a", "b"}, {1, 3}, {2, 5}};
    const auto back = wlcs::parse_witness(wlcs::serialize_witness(w));
    CHECK(back.s == w.s);
    CHECK(back.pi == w.pi);
    CHECK(back.rho == w.rho);

    const wlcs::Witness empty{};
    const auto back_empty = wlcs::parse_witness(wlcs::serialize_witness(empty));
    CHECK(back_empty.length() == 0);

    CHECK_THROWS_AS(wlcs::parse_witness("s: a\npi: 1 2\nrho: 1\n"), ParseError);
    CHECK_THROWS_AS(wlcs::parse_witness("pi: 1\nrho: 1\n"), ParseError);
}

TEST_CASE("subset-product files round-trip with and without k") {
    wlcs::SubsetProductInstance sp;
    sp.L = {wlcs::BigInt(2), wlcs::BigInt(3), wlcs::BigInt(50)};
    sp.P = wlcs::BigInt(6);
    auto back = wlcs::parse_subset_product(wlcs::serialize_subset_product(sp));
    CHECK(back.L == sp.L);
    CHECK(back.P == sp.P);
    CHECK(!back.k.has_value());

    sp.k = 2;
    back = wlcs::parse_subset_product(wlcs::serialize_subset_product(sp));
    CHECK(back.k == 2);

    CHECK_THROWS_AS(wlcs::parse_subset_product("SUBSETPROD 1\nnumbers: 2 3\n"), ParseError);
    CHECK_THROWS_AS(wlcs::parse_subset_product("SUBSETPROD 1\nnumbers: 0\ntarget: 1\n"),
                    ValidationError);
}

TEST_CASE("graph files round-trip and validate") {
    wlcs::Graph g{4, {{1, 2}, {2, 3}, {1, 4}}};
    const auto back = wlcs::parse_graph(wlcs::serialize_graph(g));
    CHECK(back.n == 4);
    CHECK(back.edges == g.edges);

    CHECK_THROWS_AS(wlcs::parse_graph("GRAPH 1\nn: 2\n1 1\n"), ValidationError);
    CHECK_THROWS_AS(wlcs::parse_graph("GRAPH 1\nn: 2\n1 2\n2 1\n"), ValidationError);
    CHECK_THROWS_AS(wlcs::parse_graph("GRAPH 1\nn: 2\n1 3\n"), ValidationError);
    CHECK_THROWS_AS(wlcs::parse_graph("GRAPH 1\n1 2\n"), ParseError);

    const wlcs::Graph empty = wlcs::parse_graph("GRAPH 1\nn: 3\n");
    CHECK(empty.n == 3);
    CHECK(empty.edges.empty());
}

TEST_CASE("cnf files round-trip and validate") {
    wlcs::Sat13Formula f{2, {{1, 2, -2}}};
    const auto text = wlcs::serialize_cnf(f);
    const auto back = wlcs::parse_cnf(text);
    CHECK(back.num_vars == 2);
    REQUIRE(back.clauses.size() == 1);
    CHECK(back.clauses[0] == std::array<int, 3>{1, 2, -2});

    // 'c' comments carry planted answers in CNF files.
    const auto with_comment = wlcs::planted_comment("YES", true) + text;
    CHECK(wlcs::planted_answer(with_comment) == std::string("YES"));
    CHECK(wlcs::parse_cnf(with_comment).num_vars == 2);

    CHECK_THROWS_AS(wlcs::parse_cnf("p cnf 2 1\n1 2 0\n"), ParseError);      // 2 literals
    CHECK_THROWS_AS(wlcs::parse_cnf("p cnf 2 2\n1 2 -2 0\n"), ParseError);   // count mismatch
    CHECK_THROWS_AS(wlcs::parse_cnf("p cnf 2 1\n1 2 3 0\n"), ValidationError);  // var out of range
    CHECK_THROWS_AS(wlcs::parse_cnf("p cnf 1 4\n1 1 1 0\n1 1 1 0\n1 1 1 0\n1 1 1 0\n"),
                    ValidationError);  // occurrence cap
}

TEST_CASE("planted answers") {
    CHECK(!wlcs::planted_answer("WLCS 1\n").has_value());
    CHECK(wlcs::planted_answer("# planted: NO\nSUBSETPROD 1\n") == std::string("NO"));
    CHECK(wlcs::planted_comment("YES") == "# planted: YES\n");
    CHECK(wlcs::planted_comment("YES", true) == "c planted: YES\n");
}

}  // TEST_SUITE
