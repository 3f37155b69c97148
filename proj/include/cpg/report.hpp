#pragma once

#include <json.hpp>

#include "cpg/abelian.hpp"
#include "cpg/families.hpp"
#include "cpg/mahler.hpp"
#include "cpg/presentation.hpp"
#include "cpg/search.hpp"

namespace cpg {

using json = nlohmann::json;

/// Coefficients as decimal strings, lowest degree first.
json poly_json(const IntPolynomial& p);

/// Nested arrays of decimal strings.
json matrix_json(const IntMatrix& m);

/// The per-presentation report: n, word, representer, z, betti, torsion,
/// gamma, perfect, free_abelian, infinite_cyclic_ab, case.
json analyze_report(const CyclicPresentation& p, bool dump_matrix = false);

json log_json(const Log& g);
Log log_from_json(const json& j);

json hrns_report(const HrnsParams& p);
json gnmk_report(const GnmkParams& p);
json gilbert_howie_report(unsigned long n, unsigned long m);
json prishchepov_report(const PrishchepovParams& p);

json scan_report_json(const ScanReport& r);
std::string scan_report_csv(const ScanReport& r);
json conjecture_report_json(const ConjectureScanReport& r);
json growth_report_json(const GrowthReport& r);
json mahler_json(const MahlerEstimate& e);

std::string verdict_name(LogVerdict v);

}  // namespace cpg
