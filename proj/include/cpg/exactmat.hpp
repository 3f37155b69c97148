#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace cpg {

/// Dense matrix over the integers, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<mpz_class> entries;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, mpz_class(0)) {}

    mpz_class& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    bool operator==(const IntMatrix&) const = default;
};

/// n x n matrix whose row i is the first row cyclically right-shifted by i,
/// i.e. at(i, j) = first_row[(j - i) mod n]. Throws EmptyRow.
IntMatrix circulant(const std::vector<mpz_class>& first_row);
IntMatrix circulant(const std::vector<long long>& first_row);

/// Invariant factors s_1 | s_2 | ... | s_rho of an integer matrix, with
/// rank = rho and gamma = prod s_i (1 when the rank is 0).
struct SmithForm {
    std::vector<mpz_class> invariant_factors;
    std::size_t rank = 0;
    mpz_class gamma = 1;
};

/// Exact Smith form by integer elimination: pivot on the minimal nonzero
/// absolute value (ties by lowest row, then column), clear the pivot row and
/// column, then repair the divisibility chain by folding offending rows in.
SmithForm smith_normal_form(const IntMatrix& m);

/// Structure of Z^rows / column-span: torsion coefficients > 1 in divisibility
/// order plus the free rank.
struct AbelianStructure {
    std::vector<mpz_class> torsion;
    std::size_t betti = 0;
    mpz_class gamma = 1;

    bool operator==(const AbelianStructure&) const = default;
};

/// Reads the presentation's relation matrix (generators indexed by rows):
/// betti = rows - rank, torsion = invariant factors exceeding 1.
AbelianStructure abelian_structure_of(const IntMatrix& relation_matrix);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
mpz_class determinant(const IntMatrix& m);

}  // namespace cpg
