#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cpg {

struct CheckResult {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<std::string> failures;  // sorted; empty means the property held everywhere

    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    bool ok() const { return failures.empty(); }
};

/// Polynomial route vs direct Smith form (plus the derived predicates) over
/// the exhaustive word grid: up to 5 letters, offsets < 6, letter exponents
/// in {-2,-1,1,2}, all n <= 16, and 200 seeded random (word, n <= 40) pairs.
std::vector<CheckResult> verify_oracle(unsigned threads = 1);

/// H(r,n,s) closed forms vs the generic route for r <= s <= 8, n <= 24,
/// gcd shapes of z, and LOG-verdict consistency.
std::vector<CheckResult> verify_hrns();

/// Trinomial congruence table (n <= 36), the no-Z^2 sweep over strongly
/// irreducible parameters (n <= 48), and the gamma = 1 necessary conditions.
std::vector<CheckResult> verify_gnmk(unsigned threads = 1);

/// Gilbert-Howie sweeps: the m = 2 conjecture scan to 36, the 6b/12b/24b
/// grids, and the Lucas-number identity.
std::vector<CheckResult> verify_gilbert_howie(unsigned threads = 1);

/// Sieradski LOGs: two components, Z^2 abelianisation, figure shape at l = 2,
/// gamma behaviour off multiples of 6, and the random-LOG rank property.
std::vector<CheckResult> verify_sieradski();

/// Prishchepov representers, the worked example, and the exhaustive
/// necessary-condition sweep r,s <= 5, n <= 12.
std::vector<CheckResult> verify_prishchepov();

/// Cyclotomic resultant closed form vs direct values (m, n <= 60), the
/// divisor-product identity, gcd_with_cyclic contracts, the Phi_d(2) lower
/// bound, and remainder-sequence vs Sylvester-determinant agreement.
std::vector<CheckResult> verify_cyclotomic();

/// Numeric diagnostics: pinned Mahler measures, unimodular-root detection,
/// and growth ratios of exact resultants against n log mu.
std::vector<CheckResult> verify_growth();

/// Dispatch by suite name ("all" concatenates every suite in order).
/// Throws UnknownSuite.
std::vector<CheckResult> run_verify_suite(const std::string& name, unsigned threads = 1);

const std::vector<std::string>& verify_suite_names();

}  // namespace cpg
