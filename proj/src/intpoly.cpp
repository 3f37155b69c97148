#include "cpg/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

#include "cpg/errors.hpp"

namespace cpg {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(mpz_class c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, mpz_class coeff) {
    IntPolynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, mpz_class(0));
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

IntPolynomial IntPolynomial::cyclic(unsigned long n) {
    if (n == 0) return {};  // t^0 - 1
    IntPolynomial p;
    p.coeffs_.assign(n + 1, mpz_class(0));
    p.coeffs_.front() = -1;
    p.coeffs_.back() = 1;
    return p;
}

IntPolynomial IntPolynomial::geometric_sum(unsigned long n, bool alternating) {
    IntPolynomial p;
    p.coeffs_.reserve(n);
    for (unsigned long i = 0; i < n; ++i)
        p.coeffs_.emplace_back(alternating && (i % 2 == 1) ? -1 : 1);
    p.normalize();
    return p;
}

const mpz_class& IntPolynomial::coeff(std::size_t i) const {
    static const mpz_class zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const mpz_class& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r(a);
    r += b;
    return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r(a);
    r -= b;
    return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPolynomial r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[j].get_mpz_t());
    }
    r.normalize();
    return r;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) out << a.get_str();
        if (k >= 1) {
            out << "t";
            if (k >= 2) out << "^" << k;
        }
    }
    return out.str();
}

IntPolynomial divexact(const IntPolynomial& p, const IntPolynomial& d) {
    if (d.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (p.is_zero()) return {};
    if (p.degree() < d.degree()) throw NotDivisible("degree of divisor exceeds dividend");

    std::vector<mpz_class> rem = p.coeffs();
    const auto& dc = d.coeffs();
    const mpz_class& lead = dc.back();
    const std::size_t dd = dc.size() - 1;
    std::vector<mpz_class> quot(rem.size() - dd, mpz_class(0));

    mpz_class q, r;
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (rem[k] == 0) continue;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[k].get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw NotDivisible("leading coefficient does not divide");
        quot[k - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j)
            mpz_submul(rem[k - dd + j].get_mpz_t(), q.get_mpz_t(), dc[j].get_mpz_t());
    }
    for (const auto& c : rem)
        if (c != 0) throw NotDivisible("nonzero remainder");
    return IntPolynomial(std::move(quot));
}

mpz_class evaluate(const IntPolynomial& p, const mpz_class& x) {
    mpz_class acc(0);
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        acc *= x;
        acc += p.coeffs()[k];
    }
    return acc;
}

namespace {

// Moebius function on small arguments via trial factorization.
int moebius(unsigned long n) {
    int mu = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> divs;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

IntPolynomial cyclotomic(unsigned long d) {
    if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
    if (d == 1) return IntPolynomial{-1, 1};
    // Phi_d = prod_{e | d} (t^e - 1)^{mu(d/e)}
    IntPolynomial num = IntPolynomial::constant(1);
    std::vector<unsigned long> den_exps;
    for (unsigned long e : divisors(d)) {
        int mu = moebius(d / e);
        if (mu == 1) num = num * IntPolynomial::cyclic(e);
        else if (mu == -1) den_exps.push_back(e);
    }
    for (unsigned long e : den_exps) num = divexact(num, IntPolynomial::cyclic(e));
    return num;
}

mpz_class content(const IntPolynomial& p) {
    mpz_class g(0);
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

namespace {

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B, computed in Z.
std::vector<mpz_class> prem(std::vector<mpz_class> r, const std::vector<mpz_class>& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    long e = static_cast<long>(r.size() - 1) - static_cast<long>(db) + 1;
    while (r.size() > db) {
        if (r.back() == 0) {
            r.pop_back();
            continue;
        }
        mpz_class top = r.back();
        // r <- lb * r - top * t^(deg r - deg b) * b
        for (auto& c : r) c *= lb;
        const std::size_t shift = r.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(r[shift + j].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
        r.pop_back();
        --e;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : r) c *= f;
    }
    return r;
}

mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace

mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() && q.is_zero()) throw BothZero();
    if (p.is_zero()) return q.is_constant() ? 1 : 0;
    if (q.is_zero()) return p.is_constant() ? 1 : 0;
    if (p.is_constant() && q.is_constant()) return 1;
    if (p.is_constant()) return abs(pow_mpz(p.coeff(0), q.degree()));
    if (q.is_constant()) return abs(pow_mpz(q.coeff(0), p.degree()));

    std::vector<mpz_class> A = p.coeffs(), B = q.coeffs();
    if (A.size() < B.size()) std::swap(A, B);

    // Res(aA, bB) = a^{deg B} b^{deg A} Res(A, B); pull out contents to keep
    // the remainder sequence small.
    mpz_class scale(1);
    {
        mpz_class ca(0), cb(0);
        for (const auto& c : A) mpz_gcd(ca.get_mpz_t(), ca.get_mpz_t(), c.get_mpz_t());
        for (const auto& c : B) mpz_gcd(cb.get_mpz_t(), cb.get_mpz_t(), c.get_mpz_t());
        if (ca > 1)
            for (auto& c : A) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
        if (cb > 1)
            for (auto& c : B) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
        scale = pow_mpz(ca, B.size() - 1) * pow_mpz(cb, A.size() - 1);
    }

    // Subresultant remainder sequence.
    mpz_class g(1), h(1), tmp;
    while (B.size() > 1) {
        const unsigned long delta = static_cast<unsigned long>(A.size() - B.size());
        std::vector<mpz_class> R = prem(std::move(A), B);
        if (R.empty()) return 0;  // common nonconstant factor
        A = std::move(B);
        // B <- R / (g h^delta), exact by the subresultant theorem
        tmp = g * pow_mpz(h, delta);
        B = std::move(R);
        for (auto& c : B) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), tmp.get_mpz_t());
        g = A.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            // h <- g^delta / h^(delta-1)
            tmp = pow_mpz(g, delta);
            mpz_class hd = pow_mpz(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), tmp.get_mpz_t(), hd.get_mpz_t());
        }
    }
    // B is a nonzero constant, A has positive degree e: res = B^e / h^(e-1).
    const unsigned long e = static_cast<unsigned long>(A.size() - 1);
    mpz_class res = pow_mpz(B[0], e);
    if (e > 1) {
        mpz_class he = pow_mpz(h, e - 1);
        mpz_divexact(res.get_mpz_t(), res.get_mpz_t(), he.get_mpz_t());
    }
    return abs(scale * res);
}

mpz_class resultant_sylvester(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() && q.is_zero()) throw BothZero();
    if (p.is_zero()) return q.is_constant() ? 1 : 0;
    if (q.is_zero()) return p.is_constant() ? 1 : 0;
    const std::size_t m = static_cast<std::size_t>(p.degree());
    const std::size_t n = static_cast<std::size_t>(q.degree());
    const std::size_t dim = m + n;
    if (dim == 0) return 1;

    // Sylvester matrix: n rows of p's coefficients, m rows of q's, highest first.
    std::vector<mpz_class> a(dim * dim, mpz_class(0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) a[r * dim + r + j] = p.coeffs()[m - j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) a[(n + r) * dim + r + j] = q.coeffs()[n - j];

    // Bareiss fraction-free elimination.
    mpz_class prev(1), t1, t2;
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        if (a[k * dim + k] == 0) {
            std::size_t r = k + 1;
            while (r < dim && a[r * dim + k] == 0) ++r;
            if (r == dim) return 0;
            for (std::size_t j = k; j < dim; ++j) std::swap(a[k * dim + j], a[r * dim + j]);
        }
        for (std::size_t i = k + 1; i < dim; ++i) {
            for (std::size_t j = k + 1; j < dim; ++j) {
                t1 = a[k * dim + k] * a[i * dim + j];
                t2 = a[i * dim + k] * a[k * dim + j];
                t1 -= t2;
                mpz_divexact(a[i * dim + j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * dim + k] = 0;
        }
        prev = a[k * dim + k];
    }
    return abs(a[dim * dim - 1]);
}

IntPolynomial gcd_with_cyclic(const IntPolynomial& f, unsigned long n) {
    if (f.is_zero()) throw ZeroPolynomial("gcd with the zero polynomial");
    if (n == 0) throw std::invalid_argument("n must be positive");
    IntPolynomial z = IntPolynomial::constant(1);
    for (unsigned long d : divisors(n)) {
        IntPolynomial phi = cyclotomic(d);
        if (phi.degree() > f.degree()) continue;
        try {
            divexact(f, phi);
        } catch (const NotDivisible&) {
            continue;
        }
        z = z * phi;
    }
    return z;
}

mpz_class cyclotomic_resultant_formula(unsigned long m, unsigned long n) {
    if (m == 0 || n == 0) throw std::invalid_argument("cyclotomic indices must be positive");
    if (m == n) throw EqualIndices();
    const unsigned long hi = std::max(m, n), lo = std::min(m, n);
    if (hi % lo != 0) return 1;
    unsigned long quot = hi / lo;
    // prime-power test on hi/lo
    unsigned long p = 0;
    for (unsigned long f = 2; f * f <= quot; ++f) {
        if (quot % f == 0) {
            p = f;
            while (quot % f == 0) quot /= f;
            break;
        }
    }
    if (p == 0) p = quot, quot = 1;
    if (quot != 1) return 1;  // at least two prime factors
    // phi(lo)
    unsigned long phi = 1, rest = lo;
    for (unsigned long f = 2; f * f <= rest; ++f) {
        if (rest % f == 0) {
            phi *= f - 1;
            rest /= f;
            while (rest % f == 0) {
                phi *= f;
                rest /= f;
            }
        }
    }
    if (rest > 1) phi *= rest - 1;
    return pow_mpz(mpz_class(p), phi);
}

mpz_class lucas(unsigned long k) {
    mpz_class a(2), b(1);
    if (k == 0) return a;
    for (unsigned long i = 1; i < k; ++i) {
        mpz_class c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

unsigned long exponent_gcd(const IntPolynomial& p) {
    unsigned long g = 0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i] != 0) g = std::gcd(g, static_cast<unsigned long>(i));
    return g;
}

namespace {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos == text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    mpz_class parse_uint(const char* what) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw SyntaxError(std::string("expected ") + what, start);
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    // term := INT | INT? 't' ('^' UINT)?
    void parse_term(int sign, std::vector<std::pair<mpz_class, unsigned long>>& terms) {
        skip_ws();
        mpz_class coeff(1);
        bool have_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = parse_uint("coefficient");
            have_coeff = true;
        }
        unsigned long exp = 0;
        if (peek() == 't') {
            ++pos;
            exp = 1;
            if (peek() == '^') {
                ++pos;
                mpz_class e = parse_uint("exponent");
                if (!e.fits_ulong_p()) throw SyntaxError("exponent too large", pos);
                exp = e.get_ui();
            }
        } else if (!have_coeff) {
            throw SyntaxError("expected term", pos);
        }
        if (sign < 0) coeff = -coeff;
        terms.emplace_back(std::move(coeff), exp);
    }
};

}  // namespace

IntPolynomial parse_poly(std::string_view text) {
    PolyParser p{text};
    std::vector<std::pair<mpz_class, unsigned long>> terms;
    int sign = 1;
    if (p.peek() == '-') {
        sign = -1;
        ++p.pos;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    p.parse_term(sign, terms);
    while (!p.at_end()) {
        char op = p.peek();
        if (op != '+' && op != '-') throw SyntaxError("expected '+' or '-'", p.pos);
        ++p.pos;
        p.parse_term(op == '-' ? -1 : 1, terms);
    }
    std::size_t max_exp = 0;
    for (const auto& [c, e] : terms) max_exp = std::max(max_exp, static_cast<std::size_t>(e));
    std::vector<mpz_class> coeffs(max_exp + 1, mpz_class(0));
    for (const auto& [c, e] : terms) coeffs[e] += c;
    return IntPolynomial(std::move(coeffs));
}

}  // namespace cpg
