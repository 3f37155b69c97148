#include <doctest.h>

#include <cmath>

#include "cpg/errors.hpp"
#include "cpg/presentation.hpp"
#include "cpg/search.hpp"

using namespace cpg;

TEST_CASE("perfect scans") {
    ScanReport sier = scan_perfect(parse_word("x0 x2 x1^-1"), 12);
    CHECK(sier.hits == std::vector<unsigned long>{1, 5, 7, 11});

    ScanReport trivial = scan_perfect(parse_word("x0"), 10);
    CHECK(trivial.hits == std::vector<unsigned long>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});

    ScanReport fib = scan_perfect(parse_word("x0 x1 x2^-1"), 6);
    CHECK(fib.hits == std::vector<unsigned long>{1, 2});
    // |det| walks 1, 1, 4, 5, 11, 16
    REQUIRE(fib.rows.size() == 6);
    CHECK(*fib.rows[2].gamma == 4);
    CHECK(*fib.rows[3].gamma == 5);
    CHECK(*fib.rows[4].gamma == 11);
    CHECK(*fib.rows[5].gamma == 16);
}

TEST_CASE("free abelian scans") {
    ScanReport sier = scan_free_abelian(parse_word("x0 x2 x1^-1"), 12);
    CHECK(sier.hits == std::vector<unsigned long>{1, 5, 6, 7, 11, 12});
    CHECK(sier.rows[5].betti == 2);
    CHECK(sier.rows[11].betti == 2);
    CHECK(sier.rows[0].betti == 0);

    ScanReport x01 = scan_free_abelian(parse_word("x0 x1"), 6);
    CHECK(x01.hits == std::vector<unsigned long>{2, 4, 6});
    for (unsigned long n : x01.hits) CHECK(x01.rows[n - 1].betti == 1);

    ScanReport sq = scan_free_abelian(parse_word("x0^2"), 5);
    CHECK(sq.hits.empty());
    CHECK(*sq.rows[4].gamma == 32);  // gamma = 2^n
}

TEST_CASE("scans are schedule independent") {
    const DefiningWord w = parse_word("x0 x3 x1^-1 x1^-1");
    ScanReport seq = scan_free_abelian(w, 25, {.threads = 1});
    ScanReport par = scan_free_abelian(w, 25, {.threads = 4});
    CHECK(seq.hits == par.hits);
    REQUIRE(seq.rows.size() == par.rows.size());
    for (std::size_t i = 0; i < seq.rows.size(); ++i) {
        CHECK(seq.rows[i].betti == par.rows[i].betti);
        CHECK(seq.rows[i].gamma == par.rows[i].gamma);
        CHECK(seq.rows[i].hit == par.rows[i].hit);
    }
}

TEST_CASE("free-abelian hits at betti 0 are exactly the perfect hits") {
    for (const char* word : {"x0 x2 x1^-1", "x0 x1 x2^-1", "x0 x1", "x0 x4 x2^-2"}) {
        ScanReport perfect = scan_perfect(parse_word(word), 20);
        ScanReport free_ab = scan_free_abelian(parse_word(word), 20);
        std::vector<unsigned long> rank0;
        for (const ScanRow& row : free_ab.rows)
            if (row.hit && row.betti == 0) rank0.push_back(row.n);
        CHECK(rank0 == perfect.hits);
    }
}

TEST_CASE("gamma digit cap") {
    ScanOptions opt;
    opt.gamma_digit_cap = 1;
    ScanReport fib = scan_perfect(parse_word("x0 x1 x2^-1"), 6, opt);
    CHECK_FALSE(fib.rows[4].gamma.has_value());  // 11 needs two digits
    CHECK(fib.rows[4].gamma_digits == 2);
    CHECK(fib.rows[0].gamma.has_value());
}

TEST_CASE("conjecture sweep") {
    ConjectureScanReport rep = scan_conjecture_53(36);
    CHECK(rep.hits.empty());
    CHECK(rep.stats.rejected_gcd > 0);
    CHECK(rep.stats.candidates ==
          rep.stats.rejected_gcd + rep.stats.rejected_congruence + rep.stats.survivors);
    CHECK(rep.stats.survivors == rep.stats.eliminated_by_gamma);

    // at n = 12 the only candidate m = 8 falls to the gcd condition
    ConjectureScanReport small = scan_conjecture_53(12);
    CHECK(small.stats.candidates == 1);
    CHECK(small.stats.rejected_gcd == 1);

    ConjectureScanReport par = scan_conjecture_53(36, {.threads = 4});
    CHECK(par.hits.size() == rep.hits.size());
    CHECK(par.stats.candidates == rep.stats.candidates);
    CHECK(par.stats.rejected_gcd == rep.stats.rejected_gcd);
    CHECK(par.stats.rejected_congruence == rep.stats.rejected_congruence);
    CHECK(par.stats.survivors == rep.stats.survivors);

    CHECK_THROWS_AS(scan_conjecture_53(5), std::invalid_argument);
}

TEST_CASE("growth reports") {
    GrowthReport plastic = growth_report(parse_poly("t^3-t-1"), {50, 100});
    REQUIRE(plastic.samples.size() == 2);
    for (const GrowthSample& s : plastic.samples) {
        CHECK_FALSE(s.skipped);
        CHECK(s.ratio > 0.9);
        CHECK(s.ratio < 1.1);
    }

    GrowthReport golden = growth_report(parse_poly("t^2-t-1"), {5});
    CHECK(golden.samples[0].resultant == "11");
    CHECK(golden.samples[0].log_resultant == doctest::Approx(std::log(11.0)));
    CHECK(golden.samples[0].ratio == doctest::Approx(0.9966).epsilon(1e-3));

    GrowthReport phi6 = growth_report(parse_poly("t^2-t+1"), {1, 2, 3, 6, 12});
    CHECK(phi6.measure == doctest::Approx(1.0));
    CHECK(phi6.samples[3].skipped);  // 6 | n shares the root
    CHECK(phi6.samples[4].skipped);
    CHECK(phi6.samples[0].resultant == "1");
    CHECK(phi6.samples[1].resultant == "3");
    CHECK(phi6.samples[2].resultant == "4");
    CHECK(std::isnan(phi6.samples[0].ratio));  // mu = 1 leaves the ratio undefined

    CHECK_THROWS_AS(growth_report(IntPolynomial{3}, {5}), ConstantPolynomial);
}
