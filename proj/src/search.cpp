#include "cpg/search.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "cpg/abelian.hpp"
#include "cpg/errors.hpp"
#include "cpg/families.hpp"
#include "cpg/mahler.hpp"

namespace cpg {

namespace {

void fill_gamma(ScanRow& row, const mpz_class& gamma, std::size_t digit_cap) {
    row.gamma_digits = mpz_sizeinbase(gamma.get_mpz_t(), 10);
    if (row.gamma_digits <= digit_cap) row.gamma = gamma;
}

// Runs fn(n) for n in [1, n_max] across the requested threads; each worker
// only writes its own slots, so the merged report is schedule-independent.
template <typename Fn>
void parallel_over_n(unsigned long n_max, unsigned threads, Fn fn) {
    if (threads <= 1 || n_max < 2) {
        for (unsigned long n = 1; n <= n_max; ++n) fn(n);
        return;
    }
    const unsigned workers = std::min<unsigned long>(threads, n_max);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&fn, t, workers, n_max] {
            for (unsigned long n = 1 + t; n <= n_max; n += workers) fn(n);
        });
    for (auto& th : pool) th.join();
}

enum class ScanKind { perfect, free_abelian };

ScanReport scan_words(const DefiningWord& w, unsigned long n_max, ScanKind kind,
                      const ScanOptions& opt) {
    if (n_max == 0) throw std::invalid_argument("n_max must be positive");
    const auto start = std::chrono::steady_clock::now();

    ScanReport report;
    report.subject = w.to_string();
    report.n_min = 1;
    report.n_max = n_max;
    report.rows.resize(n_max);

    parallel_over_n(n_max, opt.threads, [&](unsigned long n) {
        ScanRow row;
        row.n = n;
        const CyclicPresentation p{n, w};
        IntPolynomial f = representer_polynomial(w, n);
        if (f.is_zero()) {
            // Zero relation matrix: G^ab = Z^n, free abelian, never perfect.
            row.betti = n;
            fill_gamma(row, 1, opt.gamma_digit_cap);
            row.hit = kind == ScanKind::free_abelian;
        } else {
            PolyPathResult path = abelianisation_poly(p);
            row.betti = n - path.rho;
            fill_gamma(row, path.gamma, opt.gamma_digit_cap);
            row.hit = kind == ScanKind::perfect ? (row.betti == 0 && path.gamma == 1)
                                                : path.gamma == 1;
        }
        report.rows[n - 1] = std::move(row);
    });

    for (const ScanRow& row : report.rows)
        if (row.hit) report.hits.push_back(row.n);
    report.elapsed_seconds = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
    return report;
}

}  // namespace

ScanReport scan_perfect(const DefiningWord& w, unsigned long n_max, const ScanOptions& opt) {
    return scan_words(w, n_max, ScanKind::perfect, opt);
}

ScanReport scan_free_abelian(const DefiningWord& w, unsigned long n_max, const ScanOptions& opt) {
    return scan_words(w, n_max, ScanKind::free_abelian, opt);
}

ConjectureScanReport scan_conjecture_53(unsigned long n_max, const ScanOptions& opt) {
    if (n_max < 6) throw std::invalid_argument("conjecture scan needs n_max >= 6");
    const auto start = std::chrono::steady_clock::now();

    ConjectureScanReport report;
    report.n_max = n_max;

    struct PerN {
        ConjectureStats stats;
        std::vector<unsigned long> hits;
    };
    const unsigned long rounds = n_max / 6;
    std::vector<PerN> shards(rounds);

    parallel_over_n(rounds, opt.threads, [&](unsigned long i) {
        const unsigned long n = 6 * i;
        PerN& shard = shards[i - 1];
        for (unsigned long m = 8; m < n; m += 6) {
            ++shard.stats.candidates;
            GilbertHowieFilter filter = gilbert_howie_filter(n, m);
            if (!filter.passes) {
                if (*filter.failed_condition == "m-n-gcd")
                    ++shard.stats.rejected_gcd;
                else
                    ++shard.stats.rejected_congruence;
                continue;
            }
            ++shard.stats.survivors;
            if (gh_gamma(n, m).gamma != 1)
                ++shard.stats.eliminated_by_gamma;
            else
                shard.hits.push_back(m);
        }
    });

    for (unsigned long i = 0; i < rounds; ++i) {
        const PerN& shard = shards[i];
        report.stats.candidates += shard.stats.candidates;
        report.stats.rejected_gcd += shard.stats.rejected_gcd;
        report.stats.rejected_congruence += shard.stats.rejected_congruence;
        report.stats.survivors += shard.stats.survivors;
        report.stats.eliminated_by_gamma += shard.stats.eliminated_by_gamma;
        for (unsigned long m : shard.hits) report.hits.push_back({6 * (i + 1), m});
    }
    report.elapsed_seconds = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
    return report;
}

GrowthReport growth_report(const IntPolynomial& h, const std::vector<unsigned long>& n_list,
                           double tol) {
    if (h.degree() <= 0) throw ConstantPolynomial("growth report needs a nonconstant polynomial");
    GrowthReport report;
    report.h = h;
    report.measure = mahler_measure(h, tol).measure;
    const double log_mu = std::log(report.measure);

    for (unsigned long n : n_list) {
        GrowthSample sample;
        sample.n = n;
        mpz_class res = resultant(h, IntPolynomial::cyclic(n));
        if (res == 0) {
            sample.skipped = true;
            sample.note = "resultant is zero (common root with t^n - 1)";
            sample.ratio = std::numeric_limits<double>::quiet_NaN();
        } else {
            sample.resultant = res.get_str();
            signed long exp = 0;
            const double d = mpz_get_d_2exp(&exp, res.get_mpz_t());
            sample.log_resultant = std::log(d) + static_cast<double>(exp) * std::log(2.0);
            sample.ratio = log_mu > 1e-12 && n > 0
                               ? sample.log_resultant / (static_cast<double>(n) * log_mu)
                               : std::numeric_limits<double>::quiet_NaN();
        }
        report.samples.push_back(std::move(sample));
    }
    return report;
}

}  // namespace cpg
