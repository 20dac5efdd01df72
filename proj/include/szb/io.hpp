#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "szb/bounds.hpp"
#include "szb/detrep.hpp"
#include "szb/poly.hpp"
#include "szb/verify.hpp"

namespace szb {

using Json = nlohmann::ordered_json;

// printf-style %.17g, the diffable report float format
std::string fmt17(double v);
std::string format_point(std::span<const Complex> z);  // "re+imi;re+imi;..."

// polynomial file: {"nvars": n, "terms": [{"exp": [...], "re": x, "im": y}, ...]}
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

// matrix file: {"rows": r, "cols": c, "data": [[re, im], ...]} row-major
Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

Json detrep_to_json(const DetRep& rep);
DetRep detrep_from_json(const Json& j);

Json bidisk_to_json(const BidiskRep& rep);
BidiskRep bidisk_from_json(const Json& j);

Json bound_to_json(const ExpBound& b);
ExpBound bound_from_json(const Json& j);

/// One report row of the CSV/JSON verification output.
struct ReportRow {
  std::string case_id;
  std::string theorem;
  int n = 0;
  VerifyReport report;
};

std::string report_csv(const std::vector<ReportRow>& rows, const Json& config);
Json report_json(const std::vector<ReportRow>& rows, const Json& config);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace szb
