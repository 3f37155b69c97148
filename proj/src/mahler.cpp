#include "cpg/mahler.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>

#include "cpg/errors.hpp"

namespace cpg {

namespace {

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

}  // namespace

MahlerEstimate mahler_measure(const IntPolynomial& p, double tol) {
    if (p.degree() <= 0) throw ConstantPolynomial("Mahler measure needs a nonconstant polynomial");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

    const int n = p.degree();
    std::vector<double> c(n + 1), dc(n);
    for (int i = 0; i <= n; ++i) c[i] = p.coeff(i).get_d();
    for (int i = 1; i <= n; ++i) dc[i - 1] = i * c[i];

    // Companion matrix of p / lc.
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);

    MahlerEstimate est;
    est.tolerance = tol;
    est.root_moduli.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::complex<double> z = solver.eigenvalues()[i];
        // Newton polish; companion eigenvalues are already close.
        for (int it = 0; it < 64; ++it) {
            std::complex<double> d = horner(dc, z);
            if (std::abs(d) == 0.0) break;
            std::complex<double> step = horner(c, z) / d;
            z -= step;
            if (std::abs(step) < tol * std::max(1.0, std::abs(z))) break;
        }
        est.root_moduli.push_back(std::abs(z));
    }
    std::sort(est.root_moduli.begin(), est.root_moduli.end(), std::greater<>());

    double m = std::abs(p.leading().get_d());
    for (double r : est.root_moduli)
        if (r > 1.0) m *= r;
    est.measure = m;
    return est;
}

}  // namespace cpg
