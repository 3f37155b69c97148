#include "cpg/exactmat.hpp"

#include <algorithm>
#include <stdexcept>

#include "cpg/errors.hpp"

namespace cpg {

IntMatrix circulant(const std::vector<mpz_class>& first_row) {
    if (first_row.empty()) throw EmptyRow();
    const std::size_t n = first_row.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = first_row[(j + n - i % n) % n];
    return m;
}

IntMatrix circulant(const std::vector<long long>& first_row) {
    std::vector<mpz_class> row;
    row.reserve(first_row.size());
    for (long long v : first_row) row.emplace_back(static_cast<long>(v));
    return circulant(row);
}

namespace {

// a[i] -= q * a[k], one row/column stripe at a time.
inline void submul_row(std::vector<mpz_class>& a, std::size_t cols, std::size_t i, std::size_t k,
                       const mpz_class& q, std::size_t from) {
    mpz_class* ri = a.data() + i * cols;
    const mpz_class* rk = a.data() + k * cols;
    for (std::size_t j = from; j < cols; ++j)
        mpz_submul(ri[j].get_mpz_t(), q.get_mpz_t(), rk[j].get_mpz_t());
}

inline void submul_col(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols,
                       std::size_t j, std::size_t k, const mpz_class& q, std::size_t from) {
    for (std::size_t i = from; i < rows; ++i)
        mpz_submul(a[i * cols + j].get_mpz_t(), q.get_mpz_t(), a[i * cols + k].get_mpz_t());
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    std::vector<mpz_class> a = m.entries;
    const std::size_t R = m.rows, C = m.cols;
    const std::size_t steps = std::min(R, C);

    SmithForm out;
    mpz_class q, r;
    for (std::size_t k = 0; k < steps; ++k) {
        for (;;) {
            // Minimal nonzero |entry| in the trailing submatrix, ties by (row, col).
            std::size_t pi = R, pj = C;
            for (std::size_t i = k; i < R; ++i) {
                const mpz_class* row = a.data() + i * C;
                for (std::size_t j = k; j < C; ++j) {
                    if (row[j] == 0) continue;
                    if (pi == R || mpz_cmpabs(row[j].get_mpz_t(), a[pi * C + pj].get_mpz_t()) < 0)
                        pi = i, pj = j;
                }
            }
            if (pi == R) goto done;  // trailing submatrix is zero
            if (pi != k)
                for (std::size_t j = k; j < C; ++j) std::swap(a[k * C + j], a[pi * C + j]);
            if (pj != k)
                for (std::size_t i = k; i < R; ++i) std::swap(a[i * C + k], a[i * C + pj]);

            const mpz_class& pivot = a[k * C + k];
            bool dirty = false;
            for (std::size_t i = k + 1; i < R; ++i) {
                mpz_class& e = a[i * C + k];
                if (e == 0) continue;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), pivot.get_mpz_t());
                if (q != 0) submul_row(a, C, i, k, q, k);
                if (r != 0) dirty = true;
            }
            for (std::size_t j = k + 1; j < C; ++j) {
                mpz_class& e = a[k * C + j];
                if (e == 0) continue;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), pivot.get_mpz_t());
                if (q != 0) submul_col(a, R, C, j, k, q, k);
                if (r != 0) dirty = true;
            }
            if (dirty) continue;  // smaller remainders appeared; re-pick the pivot

            // Row and column k cleared. Fold in any row whose entries the pivot
            // does not divide, so the next rounds shrink the pivot to their gcd.
            bool fixed = true;
            for (std::size_t i = k + 1; i < R && fixed; ++i) {
                for (std::size_t j = k + 1; j < C; ++j) {
                    if (mpz_divisible_p(a[i * C + j].get_mpz_t(), pivot.get_mpz_t())) continue;
                    for (std::size_t jj = k; jj < C; ++jj) a[k * C + jj] += a[i * C + jj];
                    fixed = false;
                    break;
                }
            }
            if (fixed) break;
        }
        out.invariant_factors.emplace_back(abs(a[k * C + k]));
    }
done:
    out.rank = out.invariant_factors.size();
    out.gamma = 1;
    for (const auto& s : out.invariant_factors) out.gamma *= s;
    return out;
}

AbelianStructure abelian_structure_of(const IntMatrix& relation_matrix) {
    SmithForm snf = smith_normal_form(relation_matrix);
    AbelianStructure s;
    s.betti = relation_matrix.rows - snf.rank;
    s.gamma = snf.gamma;
    for (auto& f : snf.invariant_factors)
        if (f > 1) s.torsion.push_back(std::move(f));
    return s;
}

mpz_class determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    std::vector<mpz_class> a = m.entries;

    int sign = 1;
    mpz_class prev(1), t1, t2;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r * n + k] == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t1 = a[k * n + k] * a[i * n + j];
                t2 = a[i * n + k] * a[k * n + j];
                t1 -= t2;
                mpz_divexact(a[i * n + j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    return sign < 0 ? mpz_class(-a[n * n - 1]) : a[n * n - 1];
}

}  // namespace cpg
