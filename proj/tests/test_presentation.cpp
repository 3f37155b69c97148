#include <doctest.h>

#include <random>

#include "cpg/abelian.hpp"
#include "cpg/errors.hpp"
#include "cpg/presentation.hpp"
#include "cpg/report.hpp"

using namespace cpg;

TEST_CASE("word parsing") {
    DefiningWord w = parse_word("x0 x2 x1^-1");
    REQUIRE(w.letters.size() == 3);
    CHECK(w.letters[0] == Letter{0, 1});
    CHECK(w.letters[1] == Letter{2, 1});
    CHECK(w.letters[2] == Letter{1, -1});
    CHECK(w.to_string() == "x0 x2 x1^-1");

    CHECK(parse_word("x0^2").letters == std::vector<Letter>{{0, 2}});
    DefiningWord repeated = parse_word("x0 x3 x3 x1^-1");
    CHECK(repeated.letters == std::vector<Letter>{{0, 1}, {3, 1}, {3, 1}, {1, -1}});

    CHECK_THROWS_AS(parse_word(""), EmptyWord);
    CHECK_THROWS_AS(parse_word("  "), EmptyWord);
    CHECK_THROWS_AS(parse_word("y0"), SyntaxError);
    CHECK_THROWS_AS(parse_word("x"), SyntaxError);
    CHECK_THROWS_AS(parse_word("x1^0"), SyntaxError);
    CHECK_THROWS_AS(parse_word("x1^"), SyntaxError);
}

TEST_CASE("exponent sums") {
    const DefiningWord sieradski = parse_word("x0 x2 x1^-1");
    CHECK(exponent_sums(sieradski, 6) == std::vector<long long>{1, -1, 1, 0, 0, 0});
    CHECK(exponent_sums(sieradski, 2) == std::vector<long long>{2, -1});

    SUBCASE("invariant under free reduction") {
        std::mt19937 rng(37);
        std::uniform_int_distribution<unsigned long> off(0, 7);
        std::uniform_int_distribution<int> exp(-3, 3), pos(0, 3);
        for (int i = 0; i < 100; ++i) {
            DefiningWord w;
            for (int j = 0; j < 4; ++j) {
                int e = exp(rng);
                if (e == 0) e = 1;
                w.letters.push_back({off(rng), e});
            }
            DefiningWord padded = w;
            const unsigned long j = off(rng);
            padded.letters.insert(padded.letters.begin() + pos(rng), {{j, 1}, {j, -1}});
            for (unsigned long n = 1; n <= 9; ++n)
                CHECK(exponent_sums(w, n) == exponent_sums(padded, n));
        }
    }
}

TEST_CASE("representer polynomial") {
    CHECK(representer_polynomial(parse_word("x0 x2 x1^-1"), 6) == parse_poly("t^2-t+1"));
    CHECK(representer_polynomial(parse_word("x0 x1 x2^-1 x3^-1"), 4) ==
          parse_poly("1+t-t^2-t^3"));
    CHECK(representer_polynomial(parse_word("x0"), 5) == IntPolynomial{1});

    SUBCASE("value at 1 is the total exponent sum") {
        std::mt19937 rng(41);
        std::uniform_int_distribution<unsigned long> off(0, 9), n_dist(1, 12);
        std::uniform_int_distribution<int> exp(-4, 4);
        for (int i = 0; i < 100; ++i) {
            DefiningWord w;
            long total = 0;
            for (int j = 0; j < 5; ++j) {
                int e = exp(rng);
                if (e == 0) e = 1;
                w.letters.push_back({off(rng), e});
                total += e;
            }
            CHECK(evaluate(representer_polynomial(w, n_dist(rng)), 1) == total);
        }
    }
}

TEST_CASE("relation matrices") {
    CHECK(relation_matrix({6, parse_word("x0 x2 x1^-1")}) ==
          circulant(std::vector<long long>{1, -1, 1, 0, 0, 0}));
    CHECK(relation_matrix({2, parse_word("x0 x1")}) ==
          circulant(std::vector<long long>{1, 1}));
    CHECK(relation_matrix({3, parse_word("x0^2")}) ==
          circulant(std::vector<long long>{2, 0, 0}));
}

TEST_CASE("LOG presentations") {
    SUBCASE("single loop") {
        Log g{{"v"}, {{"v", "v", "v"}}};
        GenericPresentation p = log_to_presentation(g);
        REQUIRE(p.generators == std::vector<std::string>{"v"});
        REQUIRE(p.relators.size() == 1);
        CHECK(p.relators[0] == std::vector<RelatorLetter>{{0, -1}, {0, -1}, {0, 1}, {0, 1}});
        CHECK(relator_to_string(p, 0) == "v^-1 v^-1 v v");
        AbelianStructure a = abelian_structure_of(relation_matrix(p));
        CHECK(a.betti == 1);
        CHECK(a.torsion.empty());
        CHECK(log_components(g) == 1);
    }

    SUBCASE("two isolated vertices give a free rank-2 presentation") {
        Log g{{"u", "v"}, {}};
        GenericPresentation p = log_to_presentation(g);
        CHECK(p.generators.size() == 2);
        CHECK(p.relators.empty());
        AbelianStructure a = abelian_structure_of(relation_matrix(p));
        CHECK(a.betti == 2);
        CHECK(log_components(g) == 2);
    }

    SUBCASE("dangling edge reference") {
        Log g{{"u"}, {{"u", "w", "u"}}};
        CHECK_THROWS_AS(log_to_presentation(g), DanglingReference);
        CHECK_THROWS_AS(log_components(g), DanglingReference);
    }

    SUBCASE("labels do not connect components") {
        Log g{{"u", "v"}, {{"u", "u", "v"}}};
        CHECK(log_components(g) == 2);
    }
}

TEST_CASE("DOT export") {
    Log g{{"a0", "a1"}, {{"a0", "a1", "b0"}}};
    CHECK(log_to_dot(g) ==
          "digraph log {\n"
          "  \"a0\";\n"
          "  \"a1\";\n"
          "  \"a0\" -> \"a1\" [label=\"b0\"];\n"
          "}\n");
}

TEST_CASE("LOG JSON format") {
    Log g{{"a0", "a1", "b0"}, {{"a0", "a1", "b0"}, {"a1", "a1", "a0"}}};
    json j = log_json(g);
    CHECK(j["vertices"] == json({"a0", "a1", "b0"}));
    CHECK(j["edges"][0]["init"] == "a0");
    CHECK(j["edges"][0]["term"] == "a1");
    CHECK(j["edges"][0]["label"] == "b0");
    CHECK(log_from_json(j) == g);
    CHECK(log_from_json(json::parse(j.dump())) == g);
}
