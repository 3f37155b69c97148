#include <doctest.h>

#include <random>

#include "cpg/errors.hpp"
#include "cpg/exactmat.hpp"
#include "cpg/intpoly.hpp"

using namespace cpg;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, int bound) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(dim(rng), dim(rng));
    for (auto& e : m.entries) e = entry(rng);
    return m;
}

// Unimodular matrix built from random elementary row operations.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
    IntMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) u.at(i, i) = 1;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> factor(-3, 3);
    for (int ops = 0; ops < 12; ++ops) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        const int f = factor(rng);
        for (std::size_t c = 0; c < n; ++c) u.at(i, c) += f * u.at(j, c);
    }
    return u;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    REQUIRE(a.cols == b.rows);
    IntMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k)
            for (std::size_t j = 0; j < b.cols; ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
    return r;
}

std::vector<mpz_class> row(std::initializer_list<long> xs) {
    std::vector<mpz_class> r;
    for (long x : xs) r.emplace_back(x);
    return r;
}

}  // namespace

TEST_CASE("circulant construction") {
    IntMatrix c = circulant(row({1, -1, 1, 0, 0, 0}));
    CHECK(c.rows == 6);
    CHECK(c.at(1, 0) == 0);
    CHECK(c.at(1, 1) == 1);
    CHECK(c.at(1, 2) == -1);
    CHECK(c.at(1, 3) == 1);
    CHECK(c.at(1, 4) == 0);
    CHECK(c.at(1, 5) == 0);

    IntMatrix one = circulant(row({2}));
    CHECK(one.rows == 1);
    CHECK(one.at(0, 0) == 2);

    IntMatrix two = circulant(row({1, 1}));
    CHECK(two.at(0, 0) == 1);
    CHECK(two.at(0, 1) == 1);
    CHECK(two.at(1, 0) == 1);
    CHECK(two.at(1, 1) == 1);

    CHECK_THROWS_AS(circulant(std::vector<mpz_class>{}), EmptyRow);
}

TEST_CASE("Smith normal form") {
    SmithForm s = smith_normal_form(circulant(row({1, -1, 1, 0, 0, 0})));
    CHECK(s.invariant_factors == std::vector<mpz_class>{1, 1, 1, 1});
    CHECK(s.rank == 4);
    CHECK(s.gamma == 1);

    SmithForm s2 = smith_normal_form(circulant(row({1, 1})));
    CHECK(s2.invariant_factors == std::vector<mpz_class>{1});
    CHECK(s2.rank == 1);
    CHECK(s2.gamma == 1);

    SmithForm s3 = smith_normal_form(circulant(row({2, 0, 0})));
    CHECK(s3.invariant_factors == std::vector<mpz_class>{2, 2, 2});
    CHECK(s3.gamma == 8);

    SmithForm zero = smith_normal_form(IntMatrix(3, 4));
    CHECK(zero.invariant_factors.empty());
    CHECK(zero.rank == 0);
    CHECK(zero.gamma == 1);

    SUBCASE("divisibility fixups across the diagonal") {
        IntMatrix d23(2, 2);
        d23.at(0, 0) = 2;
        d23.at(1, 1) = 3;
        CHECK(smith_normal_form(d23).invariant_factors == std::vector<mpz_class>{1, 6});

        IntMatrix d46(2, 2);
        d46.at(0, 0) = 4;
        d46.at(1, 1) = 6;
        CHECK(smith_normal_form(d46).invariant_factors == std::vector<mpz_class>{2, 12});

        IntMatrix rect(2, 3);
        rect.at(0, 0) = 6;
        rect.at(0, 1) = 4;
        rect.at(1, 2) = 10;
        CHECK(smith_normal_form(rect).invariant_factors == std::vector<mpz_class>{2, 10});
    }
}

TEST_CASE("abelian structure") {
    AbelianStructure a = abelian_structure_of(circulant(row({1, -1, 1, 0, 0, 0})));
    CHECK(a.torsion.empty());
    CHECK(a.betti == 2);

    AbelianStructure fib = abelian_structure_of(circulant(row({1, 1, -1, 0, 0})));
    CHECK(fib.torsion == std::vector<mpz_class>{11});
    CHECK(fib.betti == 0);

    AbelianStructure sq = abelian_structure_of(circulant(row({2, 0, 0})));
    CHECK(sq.torsion == std::vector<mpz_class>{2, 2, 2});
    CHECK(sq.betti == 0);
}

TEST_CASE("divisibility chain and unimodular invariance on random matrices") {
    std::mt19937 rng(23);
    for (int i = 0; i < 500; ++i) {
        IntMatrix m = random_matrix(rng, 8, 9);
        SmithForm s = smith_normal_form(m);
        for (std::size_t j = 0; j + 1 < s.invariant_factors.size(); ++j) {
            CHECK(s.invariant_factors[j] > 0);
            CHECK(s.invariant_factors[j + 1] % s.invariant_factors[j] == 0);
        }
        if (i % 5 == 0) {
            IntMatrix u = random_unimodular(rng, m.rows);
            IntMatrix v = random_unimodular(rng, m.cols);
            SmithForm s2 = smith_normal_form(multiply(multiply(u, m), v));
            CHECK(s.invariant_factors == s2.invariant_factors);
        }
    }
}

TEST_CASE("circulant determinant equals the resultant with t^n - 1") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<std::size_t> dim(1, 20);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = dim(rng);
        std::vector<mpz_class> first(n);
        for (auto& e : first) e = entry(rng);
        IntPolynomial f((std::vector<mpz_class>(first)));
        IntMatrix c = circulant(first);
        const mpz_class det = determinant(c);
        if (f.is_zero()) {
            CHECK(det == 0);
            continue;
        }
        const mpz_class res = resultant(f, IntPolynomial::cyclic(n));
        CHECK(abs(det) == res);
        CHECK((det == 0) == (res == 0));
        SmithForm s = smith_normal_form(c);
        if (s.rank == n) CHECK(s.gamma == abs(det));
    }
}

TEST_CASE("circulant rank matches n - deg gcd(f, t^n - 1)") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<std::size_t> dim(1, 30);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = dim(rng);
        std::vector<mpz_class> first(n);
        for (auto& e : first) e = entry(rng);
        IntPolynomial f((std::vector<mpz_class>(first)));
        if (f.is_zero()) continue;
        SmithForm s = smith_normal_form(circulant(first));
        CHECK(s.rank == n - gcd_with_cyclic(f, n).degree());
    }
}
