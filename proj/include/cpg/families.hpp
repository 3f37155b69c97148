#pragma once

#include <optional>
#include <string>

#include "cpg/abelian.hpp"
#include "cpg/intpoly.hpp"
#include "cpg/presentation.hpp"

namespace cpg {

/// H(r, n, s): relators x_i ... x_{i+r-1} = x_{i+r} ... x_{i+r+s-1}.
struct HrnsParams {
    unsigned long r = 1, n = 1, s = 1;
    unsigned long d = 1, R = 1, N = 1, S = 1;  // d = (r, n, s); capitals divided by d

    static HrnsParams make(unsigned long r, unsigned long n, unsigned long s);
};

/// 1 + t + ... + t^{r-1} - t^r (1 + t + ... + t^{s-1}), degree r + s - 1.
IntPolynomial hrns_representer(unsigned long r, unsigned long s);
DefiningWord hrns_word(unsigned long r, unsigned long s);
CyclicPresentation hrns_presentation(const HrnsParams& p);

struct HrnsAbelianisation {
    std::size_t rho = 0;
    mpz_class gamma = 1;
    std::size_t betti = 0;
    bool order_formula_check = false;  // closed form vs direct order of H(R,N,S)^ab
    bool normalized = false;           // (r, s) swapped to make s >= r
};

/// Closed forms: for s > r, rho = n-d+1 and
/// gamma = Res(f^{R,S}, t^N - 1)^d / (S-R)^{d-1}; for s = r, rho = n-d and
/// gamma = N^{d-1}. Cross-checked against the generic polynomial route on the
/// instantiated presentation (throws std::logic_error on disagreement).
HrnsAbelianisation hrns_abelianisation(const HrnsParams& p);

enum class LogVerdict {
    log_free_of_rank,
    log_torus_knot,
    log_sieradski,
    not_log,
    unknown_conjectural
};

struct LogClassification {
    LogVerdict verdict = LogVerdict::not_log;
    std::vector<unsigned long> rank_or_params;
    std::string reason;
};

/// s != r: free abelianisation iff |r-s| = d and r or s is a multiple of n
/// (then the group is free of rank d-1). s = r: free for n | r (rank n),
/// torus-knot group for d = 1, otherwise not free abelian.
LogClassification hrns_log_classification(const HrnsParams& p);

/// G_n(m, k) = G_n(x_0 x_m x_k^{-1}) with 0 <= m, k < n.
struct GnmkParams {
    unsigned long n = 1, m = 0, k = 0;
};

DefiningWord gnmk_word(const GnmkParams& p);
CyclicPresentation gnmk_presentation(const GnmkParams& p);

enum class ResultantClass { zero, one, other };

struct GnmkResultant {
    ResultantClass cls = ResultantClass::other;
    mpz_class value;  // |Res(t^m - t^k + 1, t^n - 1)|, always computed
};

/// Congruence classification of |Res(t^m - t^k + 1, t^n - 1)|:
///   zero  iff 6 | n and m = 2k (mod 6)
///   one   iff ((n,6) = 1 and m = 2k (mod n)) or m = k (mod n) or k = 0 (mod n)
/// verified against the directly computed resultant. Requires (n, m, k) = 1;
/// throws HypothesisViolated otherwise.
GnmkResultant gnmk_resultant_class(const GnmkParams& p);

/// (n, m, k) = 1 with (n, k) > 1 and (n, m-k) > 1.
bool strongly_irreducible(const GnmkParams& p);

struct GnmkRank2 {
    std::size_t betti = 0;
    mpz_class gamma = 1;
    bool is_z2 = false;
};

/// Polynomial-route betti and gamma; is_z2 = (betti, gamma) = (2, 1).
/// Throws HypothesisViolated unless (n, m, k) = 1.
GnmkRank2 gnmk_rank2_check(const GnmkParams& p);

DefiningWord gilbert_howie_word(unsigned long m);
CyclicPresentation gilbert_howie_presentation(unsigned long n, unsigned long m);

struct GilbertHowieFilter {
    bool passes = false;
    std::optional<std::string> failed_condition;
};

/// Fast rejection for H(n, m) with 6 | n, m = 2 (mod 6), 2 <= m < n:
/// (m, n) = 2, and with n = 2^r 3^s b, (b, 6) = 1: m = 2 (mod 6b) when r = 1,
/// m = 2 (mod 12b) when r >= 2. passes means "not excluded", nothing more.
/// Throws BadCongruence when the preconditions fail.
GilbertHowieFilter gilbert_howie_filter(unsigned long n, unsigned long m);

struct GhGamma {
    std::size_t rho = 0;
    mpz_class gamma = 1;
};

/// rho and gamma of the polynomial route for f = t^m - t + 1 (2 <= m < n).
GhGamma gh_gamma(unsigned long n, unsigned long m);

struct SieradskiLog {
    Log log;
    GenericPresentation presentation;
};

/// The two-component LOG carrying S(2, 6l): vertices a_0..a_{2l-1},
/// b_0..b_{2l-1} and 4l conjugation edges (indices mod 2l).
SieradskiLog sieradski_log(unsigned long l);

/// P(r, n, k, s, q): relators prod_j x_{i+qj} = prod_j x_{i+qj+(k-1)}.
struct PrishchepovParams {
    unsigned long r = 1, n = 1, k = 0, s = 1, q = 0;
};

/// sum_{j<r} t^{qj mod n} - sum_{j<s} t^{(qj+k-1) mod n}.
IntPolynomial prishchepov_representer(const PrishchepovParams& p);
DefiningWord prishchepov_word(const PrishchepovParams& p);
CyclicPresentation prishchepov_presentation(const PrishchepovParams& p);

struct PrishchepovCheck {
    bool passes = false;
    std::optional<std::string> failed;  // first failing condition
    mpz_class odd_part_order;           // |P(r, c, k, s, q)^ab| for the largest odd divisor c
};

/// Necessary conditions for P(r,n,k,s,q)^ab ~= Z when r != s: n even,
/// (n, k-1, q) = 1, |r-s| = 2, q odd, s even or s and k both odd, and the
/// odd-part order equals 2. Throws EqualRS when r = s.
PrishchepovCheck prishchepov_z_check(const PrishchepovParams& p);

}  // namespace cpg
