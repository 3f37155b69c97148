// Command-line front end: parse inputs, dispatch to the library, and emit
// text / JSON / CSV / DOT reports.
//
// Exit codes: 0 success, 1 usage or input error, 2 a scan or verify run found
// a counterexample or a failed property.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "cpg/abelian.hpp"
#include "cpg/errors.hpp"
#include "cpg/families.hpp"
#include "cpg/mahler.hpp"
#include "cpg/report.hpp"
#include "cpg/search.hpp"
#include "cpg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFinding = 2;

std::string structure_name(const cpg::AbelianStructure& a) {
    std::string s;
    if (a.torsion.empty() && a.betti == 0) return "1 (trivial)";
    for (const auto& t : a.torsion) {
        if (!s.empty()) s += " + ";
        s += "Z_" + t.get_str();
    }
    if (a.betti > 0) {
        if (!s.empty()) s += " + ";
        s += a.betti == 1 ? "Z" : "Z^" + std::to_string(a.betti);
    }
    return s;
}

void print_analysis_text(const cpg::CyclicPresentation& p, bool dump_matrix, std::ostream& out) {
    const cpg::json j = cpg::analyze_report(p, dump_matrix);
    cpg::AbelianStructure direct = cpg::abelianisation_direct(p);
    out << "word:            " << j["word"].get<std::string>() << "\n";
    out << "n:               " << p.n << "\n";
    out << "representer:     " << cpg::representer_polynomial(p.word, p.n).to_string() << "\n";
    if (!j["z"].is_null())
        out << "z = (f, t^n-1):  " << cpg::abelianisation_poly(p).z.to_string() << "\n";
    out << "G^ab:            " << structure_name(direct) << "\n";
    out << "betti:           " << direct.betti << "\n";
    out << "gamma:           " << direct.gamma.get_str() << "\n";
    out << "perfect:         " << (j["perfect"].get<bool>() ? "yes" : "no") << "\n";
    out << "free abelian:    " << (j["free_abelian"].get<bool>() ? "yes" : "no") << "\n";
    out << "infinite cyclic: " << (j["infinite_cyclic_ab"].get<bool>() ? "yes" : "no");
    if (!j["case"].is_null()) out << " (case " << j["case"].get<std::string>() << ")";
    out << "\n";
    if (dump_matrix) out << "matrix:          " << j["matrix"].dump() << "\n";
}

void print_scan_text(const cpg::ScanReport& r, std::ostream& out) {
    out << "word:  " << r.subject << "\n";
    out << "range: 1.." << r.n_max << "\n";
    out << "hits:  ";
    for (std::size_t i = 0; i < r.hits.size(); ++i) out << (i ? " " : "") << r.hits[i];
    out << "\n";
    for (const cpg::ScanRow& row : r.rows) {
        out << "n=" << row.n << " betti=" << row.betti << " gamma=";
        if (row.gamma)
            out << row.gamma->get_str();
        else
            out << "(" << row.gamma_digits << " digits)";
        out << (row.hit ? "  <- hit" : "") << "\n";
    }
}

int run_verify(const std::string& suite, unsigned threads) {
    std::vector<cpg::CheckResult> results = cpg::run_verify_suite(suite, threads);
    bool all_ok = true;
    for (const cpg::CheckResult& r : results) {
        if (r.ok()) {
            std::cout << "ok   " << r.name << " (" << r.checked << " checked)\n";
        } else {
            all_ok = false;
            std::cout << "FAIL " << r.name << " (" << r.failures.size() << " of " << r.checked
                      << "), first: " << r.failures.front() << "\n";
        }
    }
    return all_ok ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of cyclically presented group abelianisations"};
    app.require_subcommand(1);

    std::string word_text, poly_text, format = "text", suite;
    unsigned long n = 1, max_n = 1, r = 1, s = 1, m = 2, k = 0, q = 0, l = 1;
    unsigned threads = 1;
    std::size_t digit_cap = 10000;
    double tol = 1e-10;
    bool dump_matrix = false;

    auto* analyze = app.add_subcommand("analyze", "classify G_n(w) for one word and one n");
    analyze->add_option("--word", word_text, "defining word, e.g. \"x0 x2 x1^-1\"")->required();
    analyze->add_option("--n", n, "number of generators")->required()->check(CLI::Range(1ul, 2048ul));
    analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    analyze->add_flag("--dump-matrix", dump_matrix, "include the relation matrix");

    auto* family = app.add_subcommand("family", "closed-form family engines");
    family->require_subcommand(1);
    auto* hrns = family->add_subcommand("hrns", "generalized Fibonacci H(r,n,s)");
    hrns->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    hrns->add_option("--n", n)->required()->check(CLI::Range(1ul, 2048ul));
    hrns->add_option("--s", s)->required()->check(CLI::PositiveNumber);
    hrns->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    auto* gnmk = family->add_subcommand("gnmk", "Fibonacci type G_n(m,k)");
    gnmk->add_option("--n", n)->required()->check(CLI::Range(1ul, 2048ul));
    gnmk->add_option("--m", m)->required();
    gnmk->add_option("--k", k)->required();
    gnmk->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    auto* gh = family->add_subcommand("gilbert-howie", "Gilbert-Howie H(n,m)");
    gh->add_option("--n", n)->required()->check(CLI::Range(1ul, 2048ul));
    gh->add_option("--m", m)->required();
    gh->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    auto* pri = family->add_subcommand("prishchepov", "Prishchepov P(r,n,k,s,q)");
    pri->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    pri->add_option("--n", n)->required()->check(CLI::Range(1ul, 2048ul));
    pri->add_option("--k", k)->required();
    pri->add_option("--s", s)->required()->check(CLI::PositiveNumber);
    pri->add_option("--q", q)->required();
    pri->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* scan = app.add_subcommand("scan", "sweep n (or n, m) ranges");
    scan->require_subcommand(1);
    auto* scan_perfect_cmd = scan->add_subcommand("perfect", "all n with G_n(w) perfect");
    auto* scan_free_cmd =
        scan->add_subcommand("free-abelian", "all n with G_n(w)^ab free abelian");
    for (CLI::App* sc : {scan_perfect_cmd, scan_free_cmd}) {
        sc->add_option("--word", word_text)->required();
        sc->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
        sc->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
        sc->add_option("--threads", threads)->check(CLI::PositiveNumber);
        sc->add_option("--digit-cap", digit_cap, "store gamma only below this many digits");
    }
    auto* scan_conj = scan->add_subcommand(
        "conjecture53", "hunt Gilbert-Howie counterexamples (gamma = 1 with m > 2)");
    scan_conj->add_option("--max-n", max_n)->required()->check(CLI::Range(6ul, 100000ul));
    scan_conj->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    scan_conj->add_option("--threads", threads)->check(CLI::PositiveNumber);

    auto* slog = app.add_subcommand("sieradski-log", "emit the two-component LOG for S(2,6l)");
    slog->add_option("--l", l)->required()->check(CLI::PositiveNumber);
    std::string log_format = "dot";
    slog->add_option("--format", log_format)->check(CLI::IsMember({"dot", "json"}));

    auto* mahler_cmd = app.add_subcommand("mahler", "numeric Mahler measure of a polynomial");
    mahler_cmd->add_option("--poly", poly_text, "e.g. \"t^3 - t - 1\"")->required();
    mahler_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
    mahler_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "run a built-in property battery");
    verify->add_option("suite", suite, "oracle|hrns|gnmk|gilbert-howie|sieradski|prishchepov|cyclotomic|growth|all")
        ->required();
    verify->add_option("--threads", threads)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze) {
            const cpg::CyclicPresentation p{n, cpg::parse_word(word_text)};
            if (format == "json")
                std::cout << cpg::analyze_report(p, dump_matrix).dump(2) << "\n";
            else
                print_analysis_text(p, dump_matrix, std::cout);
            return kExitOk;
        }

        if (*family) {
            cpg::json j;
            if (*hrns) j = cpg::hrns_report(cpg::HrnsParams::make(r, n, s));
            else if (*gnmk) j = cpg::gnmk_report({n, m % n, k % n});
            else if (*gh) j = cpg::gilbert_howie_report(n, m);
            else j = cpg::prishchepov_report({r, n, k % n, s, q % n});
            if (format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& [key, value] : j.items())
                    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                              << "\n";
            }
            return kExitOk;
        }

        if (*scan) {
            const cpg::ScanOptions opt{threads, digit_cap};
            if (*scan_conj) {
                cpg::ConjectureScanReport rep = cpg::scan_conjecture_53(max_n, opt);
                if (format == "json") {
                    std::cout << cpg::conjecture_report_json(rep).dump(2) << "\n";
                } else {
                    std::cout << "candidates:           " << rep.stats.candidates << "\n"
                              << "rejected ((m,n)!=2):  " << rep.stats.rejected_gcd << "\n"
                              << "rejected (congruence):" << rep.stats.rejected_congruence << "\n"
                              << "survivors:            " << rep.stats.survivors << "\n"
                              << "eliminated by gamma:  " << rep.stats.eliminated_by_gamma << "\n"
                              << "counterexamples:      " << rep.hits.size() << "\n";
                    for (const cpg::ConjectureHit& h : rep.hits)
                        std::cout << "  H(" << h.n << "," << h.m << ")\n";
                }
                return rep.hits.empty() ? kExitOk : kExitFinding;
            }
            const cpg::DefiningWord w = cpg::parse_word(word_text);
            cpg::ScanReport rep = *scan_perfect_cmd ? cpg::scan_perfect(w, max_n, opt)
                                                    : cpg::scan_free_abelian(w, max_n, opt);
            if (format == "json")
                std::cout << cpg::scan_report_json(rep).dump(2) << "\n";
            else if (format == "csv")
                std::cout << cpg::scan_report_csv(rep);
            else
                print_scan_text(rep, std::cout);
            return kExitOk;
        }

        if (*slog) {
            cpg::SieradskiLog sl = cpg::sieradski_log(l);
            if (log_format == "dot") {
                std::cout << cpg::log_to_dot(sl.log);
            } else {
                cpg::json j;
                j["log"] = cpg::log_json(sl.log);
                j["components"] = cpg::log_components(sl.log);
                j["generators"] = sl.presentation.generators;
                cpg::json relators = cpg::json::array();
                for (std::size_t i = 0; i < sl.presentation.relators.size(); ++i)
                    relators.push_back(cpg::relator_to_string(sl.presentation, i));
                j["relators"] = std::move(relators);
                std::cout << j.dump(2) << "\n";
            }
            return kExitOk;
        }

        if (*mahler_cmd) {
            cpg::MahlerEstimate est = cpg::mahler_measure(cpg::parse_poly(poly_text), tol);
            if (format == "json") {
                std::cout << cpg::mahler_json(est).dump(2) << "\n";
            } else {
                std::cout << "measure: " << est.measure << "\nroot moduli:";
                for (double x : est.root_moduli) std::cout << " " << x;
                std::cout << "\n";
            }
            return kExitOk;
        }

        if (*verify) return run_verify(suite, threads);
    } catch (const cpg::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
