#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpg/intpoly.hpp"
#include "cpg/presentation.hpp"

namespace cpg {

struct ScanOptions {
    unsigned threads = 1;
    std::size_t gamma_digit_cap = 10000;  // store gamma only below this many digits
};

struct ScanRow {
    unsigned long n = 0;
    std::size_t betti = 0;
    std::optional<mpz_class> gamma;  // absent when the digit cap is exceeded
    std::size_t gamma_digits = 1;
    bool hit = false;
};

/// Deterministic for a fixed range regardless of the thread count.
struct ScanReport {
    std::string subject;
    unsigned long n_min = 1, n_max = 1;
    std::vector<unsigned long> hits;  // ascending
    std::vector<ScanRow> rows;        // one per scanned n
    double elapsed_seconds = 0.0;
};

/// All 1 <= n <= n_max with G_n(w) perfect, i.e. |Res(f, t^n - 1)| = 1.
ScanReport scan_perfect(const DefiningWord& w, unsigned long n_max, const ScanOptions& = {});

/// All 1 <= n <= n_max with G_n(w)^ab free abelian; hits annotated with betti.
ScanReport scan_free_abelian(const DefiningWord& w, unsigned long n_max, const ScanOptions& = {});

struct ConjectureStats {
    std::uint64_t candidates = 0;
    std::uint64_t rejected_gcd = 0;         // (m, n) != 2
    std::uint64_t rejected_congruence = 0;  // m != 2 (mod 6b or 12b)
    std::uint64_t survivors = 0;            // reached the gamma computation
    std::uint64_t eliminated_by_gamma = 0;  // gamma != 1
};

struct ConjectureHit {
    unsigned long n = 0, m = 0;
};

struct ConjectureScanReport {
    unsigned long n_max = 6;
    std::vector<ConjectureHit> hits;  // H(n, m) with m > 2 and gamma = 1 (expected none)
    ConjectureStats stats;
    double elapsed_seconds = 0.0;
};

/// Sweeps 6 | n <= n_max, m = 2 (mod 6), 2 < m < n; congruence filters first,
/// the exact gamma on survivors. Hits would disprove the m = 2 conjecture.
ConjectureScanReport scan_conjecture_53(unsigned long n_max, const ScanOptions& = {});

struct GrowthSample {
    unsigned long n = 0;
    std::string resultant;      // exact decimal value (empty when skipped)
    double log_resultant = 0.0;
    double ratio = 0.0;  // log Res / (n log mu); NaN when mu = 1 or Res = 0
    bool skipped = false;
    std::string note;
};

struct GrowthReport {
    IntPolynomial h;
    double measure = 1.0;  // numeric Mahler measure of h
    std::vector<GrowthSample> samples;
};

/// Exact log-resultants of h against t^n - 1 over n_list, compared with
/// n log mu. Entries with a zero resultant are skipped with a note.
/// Throws ConstantPolynomial.
GrowthReport growth_report(const IntPolynomial& h, const std::vector<unsigned long>& n_list,
                           double tol = 1e-10);

}  // namespace cpg
