#include "cpg/families.hpp"

#include <numeric>
#include <stdexcept>

#include "cpg/errors.hpp"

namespace cpg {

namespace {

mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace

HrnsParams HrnsParams::make(unsigned long r, unsigned long n, unsigned long s) {
    if (r == 0 || n == 0 || s == 0) throw std::invalid_argument("H(r,n,s) needs r, n, s >= 1");
    HrnsParams p;
    p.r = r;
    p.n = n;
    p.s = s;
    p.d = std::gcd(r, std::gcd(n, s));
    p.R = r / p.d;
    p.N = n / p.d;
    p.S = s / p.d;
    return p;
}

IntPolynomial hrns_representer(unsigned long r, unsigned long s) {
    std::vector<mpz_class> coeffs(r + s, mpz_class(0));
    for (unsigned long i = 0; i < r; ++i) coeffs[i] = 1;
    for (unsigned long i = r; i < r + s; ++i) coeffs[i] = -1;
    return IntPolynomial(std::move(coeffs));
}

DefiningWord hrns_word(unsigned long r, unsigned long s) {
    DefiningWord w;
    for (unsigned long j = 0; j < r; ++j) w.letters.push_back({j, 1});
    for (unsigned long j = 0; j < s; ++j) w.letters.push_back({r + s - 1 - j, -1});
    return w;
}

CyclicPresentation hrns_presentation(const HrnsParams& p) {
    return {p.n, hrns_word(p.r, p.s)};
}

HrnsAbelianisation hrns_abelianisation(const HrnsParams& p) {
    // H(r, n, s) ~= H(s, n, r), so compute with s >= r.
    HrnsParams q = p;
    HrnsAbelianisation out;
    if (q.s < q.r) {
        std::swap(q.r, q.s);
        std::swap(q.R, q.S);
        out.normalized = true;
    }

    if (q.s > q.r) {
        out.rho = q.n - q.d + 1;
        mpz_class base = resultant(hrns_representer(q.R, q.S), IntPolynomial::cyclic(q.N));
        mpz_class denom = pow_mpz(mpz_class(q.S - q.R), q.d - 1);
        mpz_class num = pow_mpz(base, q.d);
        if (!mpz_divisible_p(num.get_mpz_t(), denom.get_mpz_t()))
            throw std::logic_error("H(r,n,s) closed form: non-integral gamma");
        mpz_divexact(out.gamma.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());

        // |H(R,N,S)^ab| from the reduced-level Smith form must reproduce gamma.
        AbelianStructure reduced = abelianisation_direct(
            {q.N, hrns_word(q.R, q.S)});
        out.order_formula_check =
            reduced.betti == 0 && pow_mpz(reduced.gamma, q.d) == out.gamma * denom;
    } else {
        out.rho = q.n - q.d;
        out.gamma = pow_mpz(mpz_class(q.N), q.d - 1);
        out.order_formula_check = true;
    }
    out.betti = q.n - out.rho;

    // s = r with n | r folds the representer to zero (the relators are
    // trivial); only the direct route applies there.
    const CyclicPresentation pres = hrns_presentation(q);
    if (representer_polynomial(pres.word, pres.n).is_zero()) {
        AbelianStructure direct = abelianisation_direct(pres);
        if (direct.betti != out.betti || direct.gamma != out.gamma)
            throw std::logic_error("H(r,n,s) closed form disagrees with the direct route");
        return out;
    }
    PolyPathResult generic = abelianisation_poly(pres);
    if (generic.rho != out.rho || generic.gamma != out.gamma)
        throw std::logic_error("H(r,n,s) closed form disagrees with the polynomial route");
    return out;
}

LogClassification hrns_log_classification(const HrnsParams& p) {
    LogClassification c;
    if (p.s != p.r) {
        const unsigned long diff = p.s > p.r ? p.s - p.r : p.r - p.s;
        if (diff == p.d && (p.r % p.n == 0 || p.s % p.n == 0)) {
            c.verdict = LogVerdict::log_free_of_rank;
            c.rank_or_params = {p.d - 1};
            c.reason = "difference-equals-gcd-and-endpoint-multiple-of-n";
        } else {
            c.verdict = LogVerdict::not_log;
            c.reason = "abelianisation-not-free";
        }
        return c;
    }
    if (p.r % p.n == 0) {
        c.verdict = LogVerdict::log_free_of_rank;
        c.rank_or_params = {p.n};
        c.reason = "n-divides-r";
    } else if (p.d == 1) {
        c.verdict = LogVerdict::log_torus_knot;
        c.rank_or_params = {p.r, p.n};
        c.reason = "r-coprime-to-n";
    } else {
        c.verdict = LogVerdict::not_log;
        c.reason = "abelianisation-not-free";
    }
    return c;
}

DefiningWord gnmk_word(const GnmkParams& p) {
    return {{{0, 1}, {p.m, 1}, {p.k, -1}}};
}

CyclicPresentation gnmk_presentation(const GnmkParams& p) {
    return {p.n, gnmk_word(p)};
}

namespace {

unsigned long gcd3(unsigned long a, unsigned long b, unsigned long c) {
    return std::gcd(a, std::gcd(b, c));
}

}  // namespace

GnmkResultant gnmk_resultant_class(const GnmkParams& p) {
    if (gcd3(p.n, p.m, p.k) != 1)
        throw HypothesisViolated("G_n(m,k) classification needs (n, m, k) = 1");
    GnmkResultant out;
    out.value = resultant(representer_polynomial(gnmk_word(p), p.n), IntPolynomial::cyclic(p.n));

    const long m = static_cast<long>(p.m), k = static_cast<long>(p.k);
    const long n = static_cast<long>(p.n);
    const bool zero_case = (n % 6 == 0) && ((m - 2 * k) % 6 + 6) % 6 == 0;
    const bool one_case = (std::gcd(p.n, 6ul) == 1 && ((m - 2 * k) % n + n) % n == 0) ||
                          ((m - k) % n + n) % n == 0 || p.k % p.n == 0;
    out.cls = zero_case ? ResultantClass::zero
                        : (one_case ? ResultantClass::one : ResultantClass::other);

    const bool value_zero = out.value == 0, value_one = out.value == 1;
    if ((out.cls == ResultantClass::zero) != value_zero ||
        (out.cls == ResultantClass::one) != value_one)
        throw std::logic_error("G_n(m,k) congruence classification contradicts the resultant");
    return out;
}

bool strongly_irreducible(const GnmkParams& p) {
    if (gcd3(p.n, p.m, p.k) != 1) return false;
    const unsigned long diff = p.m >= p.k ? p.m - p.k : p.k - p.m;
    return std::gcd(p.n, p.k) > 1 && std::gcd(p.n, diff) > 1;
}

GnmkRank2 gnmk_rank2_check(const GnmkParams& p) {
    if (gcd3(p.n, p.m, p.k) != 1)
        throw HypothesisViolated("G_n(m,k) rank check needs (n, m, k) = 1");
    PolyPathResult path = abelianisation_poly(gnmk_presentation(p));
    GnmkRank2 out;
    out.betti = p.n - path.rho;
    out.gamma = path.gamma;
    out.is_z2 = out.betti == 2 && out.gamma == 1;
    return out;
}

DefiningWord gilbert_howie_word(unsigned long m) {
    return {{{0, 1}, {m, 1}, {1, -1}}};
}

CyclicPresentation gilbert_howie_presentation(unsigned long n, unsigned long m) {
    return {n, gilbert_howie_word(m)};
}

GilbertHowieFilter gilbert_howie_filter(unsigned long n, unsigned long m) {
    if (n % 6 != 0 || m % 6 != 2 || m < 2 || m >= n)
        throw BadCongruence("filter needs 6 | n and m = 2 (mod 6) with 2 <= m < n");
    GilbertHowieFilter f;
    if (std::gcd(m, n) != 2) {
        f.failed_condition = "m-n-gcd";
        return f;
    }
    unsigned long rest = n, r = 0, s = 0;
    while (rest % 2 == 0) rest /= 2, ++r;
    while (rest % 3 == 0) rest /= 3, ++s;
    const unsigned long b = rest;
    const unsigned long modulus = (r == 1 ? 6 : 12) * b;
    if (m % modulus != 2 % modulus) {
        f.failed_condition = r == 1 ? "congruence-mod-6b" : "congruence-mod-12b";
        return f;
    }
    f.passes = true;
    return f;
}

GhGamma gh_gamma(unsigned long n, unsigned long m) {
    if (m < 2 || m >= n) throw std::invalid_argument("gh_gamma needs 2 <= m < n");
    PolyPathResult path = abelianisation_poly(gilbert_howie_presentation(n, m));
    return {path.rho, path.gamma};
}

SieradskiLog sieradski_log(unsigned long l) {
    if (l == 0) throw std::invalid_argument("sieradski_log needs l >= 1");
    Log g;
    const unsigned long period = 2 * l;
    auto a = [](unsigned long i) { return "a" + std::to_string(i); };
    auto b = [](unsigned long i) { return "b" + std::to_string(i); };
    for (unsigned long i = 0; i < period; ++i) g.vertices.push_back(a(i));
    for (unsigned long i = 0; i < period; ++i) g.vertices.push_back(b(i));

    // a_{2j+1} = b_{2j}^{-1}   a_{2j}   b_{2j}
    // a_{2j+1} = b_{2j+1}^{-1} a_{2j+2} b_{2j+1}
    // b_{2j}   = a_{2j+1}^{-1} b_{2j+1} a_{2j+1}
    // b_{2j+2} = a_{2j+2}^{-1} b_{2j+1} a_{2j+2}      (indices mod 2l)
    for (unsigned long j = 0; j < l; ++j)
        g.edges.push_back({a(2 * j), a(2 * j + 1), b(2 * j)});
    for (unsigned long j = 0; j < l; ++j)
        g.edges.push_back({a((2 * j + 2) % period), a(2 * j + 1), b((2 * j + 1) % period)});
    for (unsigned long j = 0; j < l; ++j)
        g.edges.push_back({b((2 * j + 1) % period), b(2 * j), a(2 * j + 1)});
    for (unsigned long j = 0; j < l; ++j)
        g.edges.push_back(
            {b((2 * j + 1) % period), b((2 * j + 2) % period), a((2 * j + 2) % period)});

    return {g, log_to_presentation(g)};
}

IntPolynomial prishchepov_representer(const PrishchepovParams& p) {
    return representer_polynomial(prishchepov_word(p), p.n);
}

DefiningWord prishchepov_word(const PrishchepovParams& p) {
    if (p.r == 0 || p.s == 0 || p.n == 0)
        throw std::invalid_argument("P(r,n,k,s,q) needs r, s, n >= 1");
    const long long n = static_cast<long long>(p.n);
    auto reduce = [n](long long e) { return static_cast<unsigned long>(((e % n) + n) % n); };
    DefiningWord w;
    for (unsigned long j = 0; j < p.r; ++j)
        w.letters.push_back({reduce(static_cast<long long>(p.q) * j), 1});
    for (unsigned long j = 0; j < p.s; ++j) {
        const unsigned long jj = p.s - 1 - j;  // inverse of the product reverses order
        w.letters.push_back(
            {reduce(static_cast<long long>(p.q) * jj + static_cast<long long>(p.k) - 1), -1});
    }
    return w;
}

CyclicPresentation prishchepov_presentation(const PrishchepovParams& p) {
    return {p.n, prishchepov_word(p)};
}

PrishchepovCheck prishchepov_z_check(const PrishchepovParams& p) {
    if (p.r == p.s) throw EqualRS();
    PrishchepovCheck out;

    unsigned long c = p.n;
    while (c % 2 == 0) c /= 2;
    PrishchepovParams reduced{p.r, c, p.k % c, p.s, p.q % c};
    out.odd_part_order = resultant(prishchepov_representer(reduced), IntPolynomial::cyclic(c));

    auto fail = [&](const char* tag) {
        out.failed = tag;
        return out;
    };
    if (p.n % 2 != 0) return fail("n-even");
    const unsigned long km1_abs = p.k > 0 ? p.k - 1 : 1;  // |k - 1|
    if (std::gcd(p.n, std::gcd(km1_abs, p.q)) != 1) return fail("gcd-n-km1-q");
    const unsigned long diff = p.r > p.s ? p.r - p.s : p.s - p.r;
    if (diff != 2) return fail("r-s-difference");
    if (p.q % 2 == 0) return fail("q-odd");
    if (!(p.s % 2 == 0 || (p.s % 2 == 1 && p.k % 2 == 1))) return fail("parity-s-k");
    if (out.odd_part_order != 2) return fail("odd-part-order");
    out.passes = true;
    return out;
}

}  // namespace cpg
