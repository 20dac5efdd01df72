#include "szb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace szb {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_point(std::span<const Complex> z) {
  std::string out;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j) out += ';';
    out += fmt17(z[j].real());
    if (z[j].imag() >= 0.0) out += '+';
    out += fmt17(z[j].imag());
    out += 'i';
  }
  return out;
}

Json poly_to_json(const MultiPoly& p) {
  Json j;
  j["nvars"] = p.nvars();
  j["terms"] = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["exp"] = e;
    term["re"] = c.real();
    term["im"] = c.imag();
    j["terms"].push_back(term);
  }
  return j;
}

MultiPoly poly_from_json(const Json& j) {
  MultiPoly p(j.at("nvars").get<int>());
  for (const auto& term : j.at("terms")) {
    Exponent e = term.at("exp").get<Exponent>();
    p.add_term(e, Complex(term.at("re").get<double>(), term.at("im").get<double>()));
  }
  return p;
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      j["data"].push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
  return j;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw std::invalid_argument("matrix data length does not match rows*cols");
  Eigen::MatrixXcd m(rows, cols);
  Eigen::Index idx = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = Complex(data[idx][0].get<double>(), data[idx][1].get<double>());
      ++idx;
    }
  return m;
}

Json detrep_to_json(const DetRep& rep) {
  Json j;
  j["c"] = Json::array({rep.c.real(), rep.c.imag()});
  j["A"] = matrix_to_json(rep.A);
  j["B"] = Json::array();
  for (const auto& b : rep.B) j["B"].push_back(matrix_to_json(b));
  return j;
}

DetRep detrep_from_json(const Json& j) {
  DetRep rep;
  rep.c = Complex(j.at("c")[0].get<double>(), j.at("c")[1].get<double>());
  rep.A = matrix_from_json(j.at("A"));
  for (const auto& b : j.at("B")) rep.B.push_back(matrix_from_json(b));
  return rep;
}

Json bidisk_to_json(const BidiskRep& rep) {
  Json j;
  j["c"] = Json::array({rep.c.real(), rep.c.imag()});
  j["D"] = matrix_to_json(rep.D);
  j["n"] = rep.n;
  j["m"] = rep.m;
  return j;
}

BidiskRep bidisk_from_json(const Json& j) {
  BidiskRep rep;
  rep.c = Complex(j.at("c")[0].get<double>(), j.at("c")[1].get<double>());
  rep.D = matrix_from_json(j.at("D"));
  rep.n = j.at("n").get<int>();
  rep.m = j.at("m").get<int>();
  return rep;
}

Json bound_to_json(const ExpBound& b) {
  Json j;
  j["lead_degree"] = b.lead_degree;
  j["log_prefactor"] = b.log_prefactor;
  j["linear_complex"] = Json::array();
  for (const Complex& c : b.linear_complex)
    j["linear_complex"].push_back(Json::array({c.real(), c.imag()}));
  j["linear_abs"] = b.linear_abs;
  j["quad"] = b.quad;
  j["norm"] = b.norm == NormKind::SupNorm ? "sup" : "euclid";
  j["domain"] = b.domain == BoundDomain::AllComplex ? "all" : "real";
  return j;
}

ExpBound bound_from_json(const Json& j) {
  ExpBound b;
  b.lead_degree = j.at("lead_degree").get<int>();
  b.log_prefactor = j.at("log_prefactor").get<double>();
  for (const auto& c : j.at("linear_complex"))
    b.linear_complex.emplace_back(c[0].get<double>(), c[1].get<double>());
  b.linear_abs = j.at("linear_abs").get<double>();
  b.quad = j.at("quad").get<double>();
  const std::string norm = j.at("norm").get<std::string>();
  if (norm == "sup")
    b.norm = NormKind::SupNorm;
  else if (norm == "euclid")
    b.norm = NormKind::EuclidNorm;
  else
    throw std::invalid_argument("unknown norm kind: " + norm);
  const std::string domain = j.at("domain").get<std::string>();
  if (domain == "all")
    b.domain = BoundDomain::AllComplex;
  else if (domain == "real")
    b.domain = BoundDomain::RealPointsOnly;
  else
    throw std::invalid_argument("unknown domain: " + domain);
  return b;
}

std::string report_csv(const std::vector<ReportRow>& rows, const Json& config) {
  std::ostringstream out;
  out << "# config " << config.dump() << "\n";
  out << "case_id,theorem,n,trials,violations,worst_margin,witness_z,seed\n";
  for (const auto& row : rows) {
    out << row.case_id << ',' << row.theorem << ',' << row.n << ',' << row.report.trials
        << ',' << row.report.violations << ',' << fmt17(row.report.worst_log_margin) << ',';
    if (row.report.witness) out << format_point(row.report.witness->z);
    out << ',' << row.report.seed << "\n";
  }
  return out.str();
}

Json report_json(const std::vector<ReportRow>& rows, const Json& config) {
  Json j;
  j["config"] = config;
  j["rows"] = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["case_id"] = row.case_id;
    r["theorem"] = row.theorem;
    r["n"] = row.n;
    r["trials"] = row.report.trials;
    r["violations"] = row.report.violations;
    r["worst_margin"] = row.report.worst_log_margin;
    r["witness_z"] = row.report.witness ? format_point(row.report.witness->z) : "";
    r["seed"] = row.report.seed;
    j["rows"].push_back(r);
  }
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

}  // namespace szb
