#pragma once

#include <optional>

#include "cpg/exactmat.hpp"
#include "cpg/intpoly.hpp"
#include "cpg/presentation.hpp"

namespace cpg {

/// Full structure of G_n(w)^ab from the Smith form of the relation matrix.
AbelianStructure abelianisation_direct(const CyclicPresentation& p);

/// The polynomial route: z = (f, t^n - 1), F = f/z, G = (t^n - 1)/z,
/// rho = n - deg z, gamma = |Res(F, G)|. Agrees with the direct route on
/// rank and torsion order. Throws ZeroRepresenter when f = 0.
struct PolyPathResult {
    IntPolynomial z, F, G;
    std::size_t rho = 0;
    mpz_class gamma = 1;
};
PolyPathResult abelianisation_poly(const CyclicPresentation& p);

/// G_n(w)^ab trivial, i.e. |Res(f, t^n - 1)| = 1.
bool is_perfect(const CyclicPresentation& p);

/// G_n(w)^ab free abelian, i.e. gamma of the polynomial route is 1.
/// Throws ZeroRepresenter.
bool is_free_abelianisation(const CyclicPresentation& p);

enum class ParityCase { odd_n_root1, even_n_root1_only, even_n_rootm1_only, even_parity };

struct BettiParity {
    std::size_t betti = 0;  // deg (f, t^n - 1)
    bool odd = false;
    ParityCase parity_case = ParityCase::even_parity;
};

/// Betti number parity from the real roots of t^n - 1: odd n needs f(1) = 0;
/// even n needs exactly one of f(1), f(-1) to vanish. Throws ZeroRepresenter.
BettiParity betti_parity(const CyclicPresentation& p);

enum class CyclicAbCase { a, b, c };

struct InfiniteCyclicWitness {
    unsigned long nu = 0;  // largest d with f in Z[t^d]
    mpz_class f_at_1, f_at_m1;
    IntPolynomial z;
    std::optional<mpz_class> cofactor_resultant;  // Res(f/(t -+ 1), sum (+-t)^i)
    std::optional<mpz_class> odd_part_resultant;  // case (c): Res(f, t^c - 1)
    bool constant_representer = false;
};

struct InfiniteCyclicResult {
    bool result = false;
    std::optional<CyclicAbCase> which;
    InfiniteCyclicWitness witness;
};

/// Decides G_n(w)^ab ~= Z from the representer polynomial alone: (n, nu) = 1
/// plus one of
///   (a) n odd,  f(1) = 0,   z = t-1, Res(f/(t-1), 1+t+...+t^{n-1}) = 1
///   (b) n even, f(1) = 0,   |f(-1)| = 2, z = t-1, same cofactor resultant
///   (c) n even, f(-1) = 0,  |f(1)| = 2, z = t+1,
///       Res(f/(t+1), 1-t+t^2-...) = 1 and Res(f, t^c - 1) = 2 for the
///       largest odd divisor c of n.
/// A constant representer yields false with the constant_representer flag;
/// a zero representer throws ZeroRepresenter.
InfiniteCyclicResult is_infinite_cyclic_ab(const CyclicPresentation& p);

enum class PositiveClass {
    trivial_len1,             // positive length 1: the trivial group
    len2_free_or_z2_product,  // positive length 2: see the flags below
    long_positive_not_z,      // positive length >= 3: abelianisation is never Z
    not_positive
};

struct PositiveWordReport {
    PositiveClass cls = PositiveClass::not_positive;
    // Flags populated for length-2 words, which all shift to x_0 x_k:
    bool squared = false;  // k = 0: G = Z_2^n
    unsigned long k = 0;
    unsigned long gcd_nk = 0;
    bool quotient_even = false;  // n/(n,k) even: free of rank (n,k);
                                 // odd: free product of (n,k) copies of Z_2
    bool ab_is_z = false;        // n even and (n,k) = 1
};

/// Classification available for positive defining words.
PositiveWordReport positive_word_class(const CyclicPresentation& p);

}  // namespace cpg
