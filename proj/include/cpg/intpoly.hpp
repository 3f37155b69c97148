#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cpg {

/// Dense polynomial over the integers. coeffs()[i] is the coefficient of t^i.
/// Nonzero polynomials keep their highest stored coefficient nonzero; the zero
/// polynomial stores no coefficients and has degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial constant(mpz_class c);
    static IntPolynomial monomial(std::size_t degree, mpz_class coeff = 1);
    /// t^n - 1
    static IntPolynomial cyclic(unsigned long n);
    /// 1 + t + ... + t^{n-1}, or 1 - t + t^2 - ... for the alternating variant
    static IntPolynomial geometric_sum(unsigned long n, bool alternating = false);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Coefficient of t^i; zero beyond the degree.
    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& leading() const;  // pre: nonzero

    bool operator==(const IntPolynomial&) const = default;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    /// Human-readable form, highest degree first, e.g. "t^2 - t + 1".
    std::string to_string() const;

private:
    std::vector<mpz_class> coeffs_;
    void normalize();
};

/// Exact quotient p / d. Throws NotDivisible when d does not divide p over Z,
/// ZeroPolynomial when d = 0.
IntPolynomial divexact(const IntPolynomial& p, const IntPolynomial& d);

/// Exact evaluation p(x) by Horner's rule.
mpz_class evaluate(const IntPolynomial& p, const mpz_class& x);

/// The d-th cyclotomic polynomial, monic of degree phi(d). Exact, computed
/// from the Moebius product of (t^e - 1) factors over divisors e of d.
IntPolynomial cyclotomic(unsigned long d);

/// |Res(p, q)| by the subresultant polynomial remainder sequence. Zero iff
/// p and q share a nonconstant factor (or one is zero and the other
/// nonconstant). Throws BothZero when p = q = 0.
mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q);

/// |Res(p, q)| as a fraction-free (Bareiss) determinant of the Sylvester
/// matrix. Independent of the remainder-sequence path; used to cross-check it.
mpz_class resultant_sylvester(const IntPolynomial& p, const IntPolynomial& q);

/// Monic gcd of f and t^n - 1, as the product of the cyclotomic polynomials
/// Phi_d (d | n) dividing f. t^n - 1 is squarefree so trial division over its
/// cyclotomic factors is exact and complete. Throws ZeroPolynomial for f = 0.
IntPolynomial gcd_with_cyclic(const IntPolynomial& f, unsigned long n);

/// Closed form for |Res(Phi_m, Phi_n)|, m != n: with a > b the value is
/// p^{phi(b)} when a/b is a power of the prime p, and 1 otherwise.
/// Throws EqualIndices when m = n.
mpz_class cyclotomic_resultant_formula(unsigned long m, unsigned long n);

/// k-th Lucas number: L_0 = 2, L_1 = 1, L_k = L_{k-1} + L_{k-2}.
mpz_class lucas(unsigned long k);

/// Parses the polynomial grammar
///   poly := term (('+'|'-') term)*
///   term := INT | INT? 't' ('^' UINT)?
/// with insignificant whitespace, e.g. "t^8 - t + 1" or "1 + t - t^2".
IntPolynomial parse_poly(std::string_view text);

/// gcd of all exponents carrying a nonzero coefficient (0 for constants).
unsigned long exponent_gcd(const IntPolynomial& p);

mpz_class content(const IntPolynomial& p);

}  // namespace cpg
