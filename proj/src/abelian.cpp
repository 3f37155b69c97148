#include "cpg/abelian.hpp"

#include <numeric>

#include "cpg/errors.hpp"

namespace cpg {

AbelianStructure abelianisation_direct(const CyclicPresentation& p) {
    return abelian_structure_of(relation_matrix(p));
}

PolyPathResult abelianisation_poly(const CyclicPresentation& p) {
    IntPolynomial f = representer_polynomial(p.word, p.n);
    if (f.is_zero()) throw ZeroRepresenter();
    PolyPathResult r;
    r.z = gcd_with_cyclic(f, p.n);
    r.F = divexact(f, r.z);
    r.G = divexact(IntPolynomial::cyclic(p.n), r.z);
    r.rho = p.n - static_cast<std::size_t>(r.z.degree());
    r.gamma = resultant(r.F, r.G);
    return r;
}

bool is_perfect(const CyclicPresentation& p) {
    IntPolynomial f = representer_polynomial(p.word, p.n);
    if (f.is_zero()) return false;  // zero relation matrix, G^ab = Z^n
    return resultant(f, IntPolynomial::cyclic(p.n)) == 1;
}

bool is_free_abelianisation(const CyclicPresentation& p) {
    return abelianisation_poly(p).gamma == 1;
}

BettiParity betti_parity(const CyclicPresentation& p) {
    IntPolynomial f = representer_polynomial(p.word, p.n);
    if (f.is_zero()) throw ZeroRepresenter();
    BettiParity bp;
    bp.betti = static_cast<std::size_t>(gcd_with_cyclic(f, p.n).degree());
    const bool root1 = evaluate(f, 1) == 0;
    const bool rootm1 = evaluate(f, -1) == 0;
    if (p.n % 2 == 1) {
        bp.odd = root1;
        bp.parity_case = root1 ? ParityCase::odd_n_root1 : ParityCase::even_parity;
    } else if (root1 && !rootm1) {
        bp.odd = true;
        bp.parity_case = ParityCase::even_n_root1_only;
    } else if (rootm1 && !root1) {
        bp.odd = true;
        bp.parity_case = ParityCase::even_n_rootm1_only;
    } else {
        bp.odd = false;
        bp.parity_case = ParityCase::even_parity;
    }
    return bp;
}

InfiniteCyclicResult is_infinite_cyclic_ab(const CyclicPresentation& p) {
    IntPolynomial f = representer_polynomial(p.word, p.n);
    if (f.is_zero()) throw ZeroRepresenter();

    InfiniteCyclicResult res;
    if (f.is_constant()) {
        // Every d satisfies f in Z[t^d]; deg (f, g) = 0 settles the answer.
        res.witness.constant_representer = true;
        res.witness.f_at_1 = f.coeff(0);
        res.witness.f_at_m1 = f.coeff(0);
        return res;
    }

    InfiniteCyclicWitness& w = res.witness;
    w.nu = exponent_gcd(f);
    w.f_at_1 = evaluate(f, 1);
    w.f_at_m1 = evaluate(f, -1);
    w.z = gcd_with_cyclic(f, p.n);
    if (std::gcd(p.n, w.nu) != 1) return res;

    const IntPolynomial t_minus_1{-1, 1}, t_plus_1{1, 1};
    const bool even = p.n % 2 == 0;

    if (!even && w.f_at_1 == 0 && w.z == t_minus_1) {
        w.cofactor_resultant =
            resultant(divexact(f, t_minus_1), IntPolynomial::geometric_sum(p.n));
        if (*w.cofactor_resultant == 1) {
            res.result = true;
            res.which = CyclicAbCase::a;
        }
        return res;
    }
    if (even && w.f_at_1 == 0 && abs(w.f_at_m1) == 2 && w.z == t_minus_1) {
        w.cofactor_resultant =
            resultant(divexact(f, t_minus_1), IntPolynomial::geometric_sum(p.n));
        if (*w.cofactor_resultant == 1) {
            res.result = true;
            res.which = CyclicAbCase::b;
        }
        return res;
    }
    if (even && w.f_at_m1 == 0 && abs(w.f_at_1) == 2 && w.z == t_plus_1) {
        w.cofactor_resultant = resultant(divexact(f, t_plus_1),
                                         IntPolynomial::geometric_sum(p.n, /*alternating=*/true));
        unsigned long c = p.n;
        while (c % 2 == 0) c /= 2;
        w.odd_part_resultant = resultant(f, IntPolynomial::cyclic(c));
        if (*w.cofactor_resultant == 1 && *w.odd_part_resultant == 2) {
            res.result = true;
            res.which = CyclicAbCase::c;
        }
        return res;
    }
    return res;
}

PositiveWordReport positive_word_class(const CyclicPresentation& p) {
    PositiveWordReport rep;
    if (!p.word.positive()) {
        rep.cls = PositiveClass::not_positive;
        return rep;
    }
    const unsigned long len = p.word.length();
    if (len == 1) {
        rep.cls = PositiveClass::trivial_len1;
        return rep;
    }
    if (len >= 3) {
        rep.cls = PositiveClass::long_positive_not_z;
        return rep;
    }

    // Length 2: the word is x_a x_b up to splitting squares; shifting
    // subscripts turns it into x_0 x_k with k = (b - a) mod n.
    rep.cls = PositiveClass::len2_free_or_z2_product;
    unsigned long a = 0, b = 0;
    if (p.word.letters.size() == 1) {
        a = b = p.word.letters[0].offset % p.n;  // x_a^2
    } else {
        a = p.word.letters[0].offset % p.n;
        b = p.word.letters[1].offset % p.n;
    }
    rep.k = (b + p.n - a) % p.n;
    if (rep.k == 0) {
        rep.squared = true;  // G = Z_2^n
        return rep;
    }
    rep.gcd_nk = std::gcd(p.n, rep.k);
    rep.quotient_even = (p.n / rep.gcd_nk) % 2 == 0;
    rep.ab_is_z = (p.n % 2 == 0) && rep.gcd_nk == 1;
    return rep;
}

}  // namespace cpg
