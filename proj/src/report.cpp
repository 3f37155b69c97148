#include "cpg/report.hpp"

#include <cmath>
#include <sstream>

#include "cpg/errors.hpp"

namespace cpg {

json poly_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json analyze_report(const CyclicPresentation& p, bool dump_matrix) {
    IntPolynomial f = representer_polynomial(p.word, p.n);
    AbelianStructure direct = abelianisation_direct(p);

    json j;
    j["n"] = p.n;
    j["word"] = p.word.to_string();
    j["representer"] = poly_json(f);
    j["betti"] = direct.betti;
    json torsion = json::array();
    for (const auto& t : direct.torsion) torsion.push_back(t.get_str());
    j["torsion"] = std::move(torsion);
    j["gamma"] = direct.gamma.get_str();
    j["perfect"] = is_perfect(p);
    j["case"] = nullptr;

    if (f.is_zero()) {
        j["z"] = nullptr;
        j["free_abelian"] = true;  // zero relation matrix: G^ab = Z^n
        j["infinite_cyclic_ab"] = p.n == 1;
    } else {
        PolyPathResult path = abelianisation_poly(p);
        j["z"] = poly_json(path.z);
        j["free_abelian"] = path.gamma == 1;
        InfiniteCyclicResult icr = is_infinite_cyclic_ab(p);
        j["infinite_cyclic_ab"] = icr.result;
        if (icr.which) {
            switch (*icr.which) {
                case CyclicAbCase::a: j["case"] = "a"; break;
                case CyclicAbCase::b: j["case"] = "b"; break;
                case CyclicAbCase::c: j["case"] = "c"; break;
            }
        }
    }
    if (dump_matrix) j["matrix"] = matrix_json(relation_matrix(p));
    return j;
}

json log_json(const Log& g) {
    json j;
    j["vertices"] = g.vertices;
    json edges = json::array();
    for (const LogEdge& e : g.edges)
        edges.push_back({{"init", e.init}, {"term", e.term}, {"label", e.label}});
    j["edges"] = std::move(edges);
    return j;
}

Log log_from_json(const json& j) {
    Log g;
    g.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const json& e : j.at("edges"))
        g.edges.push_back({e.at("init").get<std::string>(), e.at("term").get<std::string>(),
                           e.at("label").get<std::string>()});
    return g;
}

std::string verdict_name(LogVerdict v) {
    switch (v) {
        case LogVerdict::log_free_of_rank: return "log_free_of_rank";
        case LogVerdict::log_torus_knot: return "log_torus_knot";
        case LogVerdict::log_sieradski: return "log_sieradski";
        case LogVerdict::not_log: return "not_log";
        case LogVerdict::unknown_conjectural: return "unknown_conjectural";
    }
    return "?";
}

json hrns_report(const HrnsParams& p) {
    json j = analyze_report(hrns_presentation(p));
    j["family"] = "hrns";
    j["r"] = p.r;
    j["s"] = p.s;
    j["d"] = p.d;
    j["reduced"] = {{"R", p.R}, {"N", p.N}, {"S", p.S}};
    HrnsAbelianisation ab = hrns_abelianisation(p);
    j["rho"] = ab.rho;
    j["order_formula_check"] = ab.order_formula_check;
    j["normalized"] = ab.normalized;
    LogClassification cls = hrns_log_classification(p);
    j["verdict"] = verdict_name(cls.verdict);
    j["rank_or_params"] = cls.rank_or_params;
    j["reason"] = cls.reason;
    return j;
}

json gnmk_report(const GnmkParams& p) {
    json j = analyze_report(gnmk_presentation(p));
    j["family"] = "gnmk";
    j["m"] = p.m;
    j["k"] = p.k;
    j["strongly_irreducible"] = strongly_irreducible(p);
    GnmkResultant rc = gnmk_resultant_class(p);
    j["resultant"] = rc.value.get_str();
    j["resultant_class"] = rc.cls == ResultantClass::zero
                               ? "zero"
                               : (rc.cls == ResultantClass::one ? "one" : "other");
    GnmkRank2 r2 = gnmk_rank2_check(p);
    j["is_z2"] = r2.is_z2;
    return j;
}

json gilbert_howie_report(unsigned long n, unsigned long m) {
    json j = analyze_report(gilbert_howie_presentation(n, m));
    j["family"] = "gilbert-howie";
    j["m"] = m;
    GhGamma g = gh_gamma(n, m);
    j["rho"] = g.rho;
    const std::size_t betti = n - g.rho;
    if (n % 6 == 0 && m % 6 == 2) {
        GilbertHowieFilter f = gilbert_howie_filter(n, m);
        j["filter_passes"] = f.passes;
        j["filter_failed_condition"] = f.failed_condition ? json(*f.failed_condition) : json();
    } else {
        j["filter_passes"] = nullptr;
        j["filter_failed_condition"] = nullptr;
    }
    if (m == 2)
        j["verdict"] = verdict_name(n % 6 == 0 ? LogVerdict::log_sieradski : LogVerdict::not_log);
    else if (g.gamma != 1 || betti != 2)
        j["verdict"] = verdict_name(LogVerdict::not_log);
    else
        j["verdict"] = verdict_name(LogVerdict::unknown_conjectural);
    return j;
}

json prishchepov_report(const PrishchepovParams& p) {
    json j = analyze_report(prishchepov_presentation(p));
    j["family"] = "prishchepov";
    j["r"] = p.r;
    j["k"] = p.k;
    j["s"] = p.s;
    j["q"] = p.q;
    if (p.r != p.s) {
        PrishchepovCheck check = prishchepov_z_check(p);
        j["z_check_passes"] = check.passes;
        j["z_check_failed"] = check.failed ? json(*check.failed) : json();
        j["odd_part_order"] = check.odd_part_order.get_str();
    } else {
        j["z_check_passes"] = nullptr;
        j["z_check_failed"] = nullptr;
    }
    return j;
}

namespace {

json scan_row_json(const ScanRow& row) {
    json j;
    j["n"] = row.n;
    j["betti"] = row.betti;
    j["hit"] = row.hit;
    if (row.gamma)
        j["gamma"] = row.gamma->get_str();
    else
        j["gamma_digits"] = row.gamma_digits;
    return j;
}

}  // namespace

json scan_report_json(const ScanReport& r) {
    json j;
    j["subject"] = r.subject;
    j["range"] = {r.n_min, r.n_max};
    j["hits"] = r.hits;
    json rows = json::array();
    for (const ScanRow& row : r.rows) rows.push_back(scan_row_json(row));
    j["rows"] = std::move(rows);
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

std::string scan_report_csv(const ScanReport& r) {
    std::ostringstream out;
    out << "n,betti,gamma_or_digits,hit\n";
    for (const ScanRow& row : r.rows) {
        out << row.n << ',' << row.betti << ',';
        if (row.gamma)
            out << row.gamma->get_str();
        else
            out << "digits:" << row.gamma_digits;
        out << ',' << (row.hit ? 1 : 0) << '\n';
    }
    return out.str();
}

json conjecture_report_json(const ConjectureScanReport& r) {
    json j;
    j["subject"] = "gilbert-howie gamma=1 sweep, m > 2";
    j["n_max"] = r.n_max;
    json hits = json::array();
    for (const ConjectureHit& h : r.hits) hits.push_back({{"n", h.n}, {"m", h.m}});
    j["hits"] = std::move(hits);
    j["stats"] = {{"candidates", r.stats.candidates},
                  {"rejected_gcd", r.stats.rejected_gcd},
                  {"rejected_congruence", r.stats.rejected_congruence},
                  {"survivors", r.stats.survivors},
                  {"eliminated_by_gamma", r.stats.eliminated_by_gamma}};
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

json growth_report_json(const GrowthReport& r) {
    json j;
    j["polynomial"] = poly_json(r.h);
    j["measure"] = r.measure;
    json samples = json::array();
    for (const GrowthSample& s : r.samples) {
        json row;
        row["n"] = s.n;
        if (s.skipped) {
            row["skipped"] = true;
            row["note"] = s.note;
        } else {
            row["resultant"] = s.resultant;
            row["log_resultant"] = s.log_resultant;
            row["ratio"] = std::isnan(s.ratio) ? json() : json(s.ratio);
        }
        samples.push_back(std::move(row));
    }
    j["samples"] = std::move(samples);
    return j;
}

json mahler_json(const MahlerEstimate& e) {
    json j;
    j["measure"] = e.measure;
    j["root_moduli"] = e.root_moduli;
    j["tolerance"] = e.tolerance;
    return j;
}

}  // namespace cpg
