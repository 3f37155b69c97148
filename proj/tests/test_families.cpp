#include <doctest.h>

#include "cpg/abelian.hpp"
#include "cpg/errors.hpp"
#include "cpg/families.hpp"

using namespace cpg;

TEST_CASE("H(r,n,s) representer") {
    CHECK(hrns_representer(2, 3) == parse_poly("1+t-t^2-t^3-t^4"));
    CHECK(hrns_representer(1, 1) == parse_poly("1-t"));
    CHECK(hrns_representer(1, 2) == parse_poly("1-t-t^2"));
    // the word route folds the same polynomial
    CHECK(representer_polynomial(hrns_word(2, 3), 10) == hrns_representer(2, 3));
}

TEST_CASE("H(r,n,s) abelianisation closed forms") {
    HrnsParams h264 = HrnsParams::make(2, 6, 4);
    CHECK(h264.d == 2);
    CHECK(h264.R == 1);
    CHECK(h264.N == 3);
    CHECK(h264.S == 2);
    HrnsAbelianisation a = hrns_abelianisation(h264);
    CHECK(a.rho == 5);
    CHECK(a.gamma == 16);
    CHECK(a.betti == 1);
    CHECK(a.order_formula_check);

    HrnsAbelianisation b = hrns_abelianisation(HrnsParams::make(2, 6, 2));
    CHECK(b.rho == 4);
    CHECK(b.gamma == 3);  // N^{d-1} with N = 3, d = 2

    HrnsAbelianisation c = hrns_abelianisation(HrnsParams::make(3, 3, 4));
    CHECK(c.gamma == resultant(hrns_representer(3, 4), IntPolynomial::cyclic(3)));
    CHECK(c.gamma == 1);
    CHECK(is_perfect(hrns_presentation(HrnsParams::make(3, 3, 4))));

    SUBCASE("s < r normalizes through the r <-> s symmetry") {
        HrnsAbelianisation swapped = hrns_abelianisation(HrnsParams::make(4, 6, 2));
        CHECK(swapped.normalized);
        CHECK(swapped.rho == a.rho);
        CHECK(swapped.gamma == a.gamma);
    }
}

TEST_CASE("H(r,n,s) LOG classification") {
    LogClassification free2 = hrns_log_classification(HrnsParams::make(6, 3, 9));
    CHECK(free2.verdict == LogVerdict::log_free_of_rank);
    CHECK(free2.rank_or_params == std::vector<unsigned long>{2});

    LogClassification torus = hrns_log_classification(HrnsParams::make(2, 5, 2));
    CHECK(torus.verdict == LogVerdict::log_torus_knot);
    CHECK(torus.rank_or_params == std::vector<unsigned long>{2, 5});

    CHECK(hrns_log_classification(HrnsParams::make(2, 6, 4)).verdict == LogVerdict::not_log);

    LogClassification free_rank_n = hrns_log_classification(HrnsParams::make(6, 3, 6));
    CHECK(free_rank_n.verdict == LogVerdict::log_free_of_rank);
    CHECK(free_rank_n.rank_or_params == std::vector<unsigned long>{3});
}

TEST_CASE("G_n(m,k) resultant classes") {
    CHECK(gnmk_resultant_class({6, 2, 1}).cls == ResultantClass::zero);
    CHECK(gnmk_resultant_class({5, 2, 1}).cls == ResultantClass::one);
    GnmkResultant other = gnmk_resultant_class({7, 3, 1});
    CHECK(other.cls == ResultantClass::other);
    CHECK(other.value == 8);
    CHECK_THROWS_AS(gnmk_resultant_class({6, 4, 2}), HypothesisViolated);

    // m = k and k = 0 collapse the trinomial; both give resultant 1
    CHECK(gnmk_resultant_class({6, 1, 1}).cls == ResultantClass::one);
    CHECK(gnmk_resultant_class({6, 1, 0}).cls == ResultantClass::one);
}

TEST_CASE("strong irreducibility") {
    CHECK(strongly_irreducible({10, 9, 4}));
    CHECK_FALSE(strongly_irreducible({10, 2, 1}));
    CHECK_FALSE(strongly_irreducible({6, 4, 2}));
}

TEST_CASE("G_n(m,k) rank-2 check") {
    GnmkRank2 s26 = gnmk_rank2_check({6, 2, 1});
    CHECK(s26.betti == 2);
    CHECK(s26.gamma == 1);
    CHECK(s26.is_z2);

    CHECK_FALSE(gnmk_rank2_check({10, 9, 4}).is_z2);

    GnmkRank2 perfect = gnmk_rank2_check({5, 2, 1});
    CHECK(perfect.betti == 0);
    CHECK_FALSE(perfect.is_z2);
}

TEST_CASE("Gilbert-Howie filter") {
    GilbertHowieFilter reject_gcd = gilbert_howie_filter(12, 8);
    CHECK_FALSE(reject_gcd.passes);
    CHECK(*reject_gcd.failed_condition == "m-n-gcd");

    GilbertHowieFilter reject_cong = gilbert_howie_filter(30, 26);
    CHECK_FALSE(reject_cong.passes);
    CHECK(*reject_cong.failed_condition == "congruence-mod-6b");

    CHECK(gilbert_howie_filter(6, 2).passes);
    CHECK_THROWS_AS(gilbert_howie_filter(7, 2), BadCongruence);
    CHECK_THROWS_AS(gilbert_howie_filter(12, 3), BadCongruence);
}

TEST_CASE("gh_gamma") {
    GhGamma a = gh_gamma(6, 2);
    CHECK(a.rho == 4);
    CHECK(a.gamma == 1);

    CHECK(gh_gamma(12, 8).gamma > 1);

    GhGamma c = gh_gamma(12, 2);
    CHECK(c.rho == 10);
    CHECK(c.gamma == 1);

    CHECK_THROWS_AS(gh_gamma(6, 6), std::invalid_argument);
}

TEST_CASE("Sieradski LOG") {
    SieradskiLog one = sieradski_log(1);
    CHECK(one.log.vertices.size() == 4);
    CHECK(one.log.edges.size() == 4);
    CHECK(log_components(one.log) == 2);

    SieradskiLog two = sieradski_log(2);
    CHECK(two.log.vertices.size() == 8);
    CHECK(two.log.edges.size() == 8);
    CHECK(log_components(two.log) == 2);
    CHECK(two.presentation == log_to_presentation(two.log));
    // first relator: a1 = b0^-1 a0 b0 rewritten as a1^-1 b0^-1 a0 b0
    CHECK(relator_to_string(two.presentation, 0) == "a1^-1 b0^-1 a0 b0");

    for (unsigned long l = 1; l <= 8; ++l) {
        AbelianStructure ab =
            abelian_structure_of(relation_matrix(sieradski_log(l).presentation));
        CHECK(ab.betti == 2);
        CHECK(ab.torsion.empty());
    }
}

TEST_CASE("Prishchepov representers") {
    CHECK(prishchepov_representer({4, 10, 3, 2, 7}) == parse_poly("1+t-t^2+t^4+t^7-t^9"));
    CHECK(prishchepov_representer({4, 8, 4, 2, 3}) == parse_poly("1+t"));
    CHECK(prishchepov_representer({1, 5, 0, 1, 2}) == parse_poly("1-t^4"));

    CHECK(exponent_sums(prishchepov_word({4, 10, 3, 2, 7}), 10) ==
          std::vector<long long>{1, 1, -1, 0, 1, 0, 0, 1, 0, -1});
}

TEST_CASE("Prishchepov necessary conditions") {
    PrishchepovCheck ok = prishchepov_z_check({4, 10, 3, 2, 7});
    CHECK(ok.passes);
    CHECK(ok.odd_part_order == 2);

    PrishchepovCheck bad_diff = prishchepov_z_check({5, 10, 3, 2, 7});
    CHECK_FALSE(bad_diff.passes);
    CHECK(*bad_diff.failed == "r-s-difference");

    PrishchepovCheck bad_n = prishchepov_z_check({4, 9, 3, 2, 7});
    CHECK_FALSE(bad_n.passes);
    CHECK(*bad_n.failed == "n-even");

    CHECK_THROWS_AS(prishchepov_z_check({3, 10, 3, 3, 7}), EqualRS);
}

TEST_CASE("worked example P(4,10,3,2,7) abelianizes to Z") {
    const CyclicPresentation p = prishchepov_presentation({4, 10, 3, 2, 7});
    AbelianStructure direct = abelianisation_direct(p);
    CHECK(direct.betti == 1);
    CHECK(direct.torsion.empty());
    InfiniteCyclicResult icr = is_infinite_cyclic_ab(p);
    CHECK(icr.result);
    CHECK(icr.which == CyclicAbCase::c);
}
