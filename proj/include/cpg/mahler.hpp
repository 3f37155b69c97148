#pragma once

#include <vector>

#include "cpg/intpoly.hpp"

namespace cpg {

struct MahlerEstimate {
    double measure = 1.0;              // |lc| * prod of root moduli exceeding 1
    std::vector<double> root_moduli;   // all root absolute values, descending
    double tolerance = 0.0;
};

/// Numeric Mahler measure: roots from companion-matrix eigenvalues, each
/// polished by Newton iteration until successive estimates differ by less
/// than tol. Diagnostics only; exact decisions never depend on this.
/// Throws ConstantPolynomial for degree <= 0.
MahlerEstimate mahler_measure(const IntPolynomial& p, double tol = 1e-10);

}  // namespace cpg
