// szb: certificates, verification sweeps, representation conversion, corpus
// generation, and lemma trials for stable-polynomial exponential bounds.
//
// Exit codes: 0 success / no violations, 1 violations found,
//             2 usage or parse error, 3 hypothesis / precondition failure.

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "szb/bounds.hpp"
#include "szb/detrep.hpp"
#include "szb/errors.hpp"
#include "szb/io.hpp"
#include "szb/matrix_utils.hpp"
#include "szb/poly.hpp"
#include "szb/rng.hpp"
#include "szb/stability.hpp"
#include "szb/verify.hpp"

namespace {

using szb::Complex;
using szb::ExpBound;
using szb::Json;
using szb::MultiPoly;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;

struct Options {
  std::string thm;
  std::string input;
  std::string output;
  std::string suite = "all";
  std::string kind = "product";
  std::string thms;  // comma list for compare
  std::string case_id = "case0";
  double radius = 2.0;
  long samples = 10000;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  double zero_tol = 1e-9;
  double eps = 1e-8;
  bool real_only = false;
  bool upper_half = false;
  int order = -1;  // vanishing order override
  int count = 10;
  int nvars = 2;
  int nfactors = 4;
  int size = 3;
  int dim_max = 8;
  long trials = 10000;
  bool inject_bad = false;
  bool normalize = false;
};

Json config_json(const std::string& subcommand, const Options& o) {
  Json j;
  j["subcommand"] = subcommand;
  if (!o.thm.empty()) j["thm"] = o.thm;
  if (!o.thms.empty()) j["thms"] = o.thms;
  if (!o.input.empty()) j["input"] = o.input;
  if (!o.output.empty()) j["output"] = o.output;
  j["radius"] = o.radius;
  j["samples"] = o.samples;
  j["seed"] = o.seed;
  j["tol"] = o.tol;
  j["real_only"] = o.real_only;
  j["upper_half"] = o.upper_half;
  return j;
}

ExpBound make_bound(const std::string& thm, const MultiPoly& p, const Options& o) {
  if (thm == "original") return szb::szasz_original(p);
  if (thm == "improved") return szb::szasz_improved(p);
  if (thm == "vanishing1d") {
    int k = o.order;
    if (k < 0) k = szb::homogeneous_parts(p, o.zero_tol).vanishing_order;
    return szb::szasz_1d_vanishing(p, k);
  }
  if (thm == "bb") return szb::bb_bound(p);
  if (thm == "det") return szb::det_bound(p);
  if (thm == "coeff2") return szb::two_var_coeff_bound(p);
  if (thm == "coeffn") return szb::nvar_coeff_bound(p);
  if (thm == "msz") return szb::msz_bound(p);
  if (thm == "real") return szb::real_axis_bound(p);
  if (thm == "bisz2") return szb::bisz2_bound(p, szb::homogeneous_parts(p, o.zero_tol));
  if (thm == "msz2") return szb::msz2_bound(p, szb::homogeneous_parts(p, o.zero_tol));
  throw CLI::ValidationError("--thm", "unknown theorem selector: " + thm);
}

void print_bound(const ExpBound& b) {
  std::printf("lead_degree %d\n", b.lead_degree);
  std::printf("log_prefactor %s\n", szb::fmt17(b.log_prefactor).c_str());
  for (std::size_t j = 0; j < b.linear_complex.size(); ++j)
    std::printf("linear_complex[%zu] %s %s\n", j,
                szb::fmt17(b.linear_complex[j].real()).c_str(),
                szb::fmt17(b.linear_complex[j].imag()).c_str());
  std::printf("linear_abs %s\n", szb::fmt17(b.linear_abs).c_str());
  std::printf("quad %s\n", szb::fmt17(b.quad).c_str());
  std::printf("norm %s\n", b.norm == szb::NormKind::SupNorm ? "sup" : "euclid");
  std::printf("domain %s\n", b.domain == szb::BoundDomain::AllComplex ? "all" : "real");
}

int cmd_bound(const Options& o) {
  Json cfg = config_json("bound", o);
  std::printf("# config %s\n", cfg.dump().c_str());
  MultiPoly p = szb::poly_from_json(szb::load_json_file(o.input));
  ExpBound b = make_bound(o.thm, p, o);
  print_bound(b);
  if (!o.output.empty()) szb::save_json_file(o.output, szb::bound_to_json(b));
  return kExitOk;
}

int cmd_verify(const Options& o, const std::string& bound_path) {
  Json cfg = config_json("verify", o);
  MultiPoly p = szb::poly_from_json(szb::load_json_file(o.input));
  ExpBound b = bound_path.empty() ? make_bound(o.thm, p, o)
                                  : szb::bound_from_json(szb::load_json_file(bound_path));
  szb::Region region{o.radius, o.upper_half, o.real_only};
  if (b.domain == szb::BoundDomain::RealPointsOnly) region.real_only = true;
  auto report = szb::verify_bound(p, b, region, o.samples, o.seed, o.tol);

  std::vector<szb::ReportRow> rows{
      {o.case_id, o.thm.empty() ? "file" : o.thm, p.nvars(), report}};
  std::string csv = szb::report_csv(rows, cfg);
  std::fputs(csv.c_str(), stdout);
  if (!o.output.empty()) {
    szb::save_text_file(o.output, csv);
    std::filesystem::path mirror(o.output);
    mirror.replace_extension(".json");
    szb::save_json_file(mirror.string(), szb::report_json(rows, cfg));
  }
  return report.violations == 0 ? kExitOk : kExitViolations;
}

int cmd_convert(const Options& o) {
  Json cfg = config_json("convert", o);
  std::printf("# config %s\n", cfg.dump().c_str());
  szb::BidiskRep brep = szb::bidisk_from_json(szb::load_json_file(o.input));
  szb::DetRep rep = szb::bidisk_to_halfplane(brep, o.eps);
  auto chk = szb::check_detrep(rep, o.eps);
  std::printf("im_a_min_eig %s\n", szb::fmt17(chk.im_a_min_eig).c_str());
  for (std::size_t j = 0; j < chk.b_min_eig.size(); ++j)
    std::printf("b_min_eig[%zu] %s\n", j, szb::fmt17(chk.b_min_eig[j]).c_str());
  std::printf("sum_b_deviation %s\n", szb::fmt17(chk.sum_b_deviation).c_str());
  std::printf("check %s\n", chk.pass ? "pass" : "fail");

  // round-trip residual at a few upper-half probe points
  szb::Rng rng(o.seed);
  const Complex i(0.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 32; ++t) {
    Complex z1(rng.uniform(-2.0, 2.0), rng.open_closed(0.0, 2.0));
    Complex z2(rng.uniform(-2.0, 2.0), rng.open_closed(0.0, 2.0));
    Complex got = szb::eval_detrep(rep, std::vector<Complex>{z1, z2});
    const int d = brep.dim();
    Eigen::MatrixXcd delta = Eigen::MatrixXcd::Zero(d, d);
    for (int r = 0; r < brep.n; ++r) delta(r, r) = (z1 - i) / (z1 + i);
    for (int r = brep.n; r < d; ++r) delta(r, r) = (z2 - i) / (z2 + i);
    Complex q = brep.c * (Eigen::MatrixXcd::Identity(d, d) - brep.D * delta).determinant();
    Complex want = q;
    for (int r = 0; r < brep.n; ++r) want *= z1 + i;
    for (int r = 0; r < brep.m; ++r) want *= z2 + i;
    worst = std::max(worst, std::abs(got - want) / (1.0 + std::abs(want)));
  }
  std::printf("roundtrip_residual %s\n", szb::fmt17(worst).c_str());

  MultiPoly p = szb::detrep_to_poly(rep);
  if (p.total_degree() != rep.dim())
    std::printf("warning: represented degree %d differs from matrix size %d\n",
                p.total_degree(), rep.dim());

  if (!o.output.empty()) szb::save_json_file(o.output, szb::detrep_to_json(rep));
  return chk.pass ? kExitOk : kExitViolations;
}

int cmd_generate(const Options& o) {
  Json cfg = config_json("generate", o);
  cfg["kind"] = o.kind;
  cfg["count"] = o.count;
  cfg["nvars"] = o.nvars;
  std::filesystem::create_directories(o.output);
  Json manifest;
  manifest["config"] = cfg;
  manifest["entries"] = Json::array();
  for (int k = 0; k < o.count; ++k) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
    MultiPoly p = MultiPoly::constant(o.nvars, 1.0);
    if (o.kind == "product") {
      p = szb::generate_stable_product(o.nvars, o.nfactors, seed);
    } else if (o.kind == "detrep") {
      p = szb::generate_stable_detrep(o.nvars, o.size, seed).second;
    } else if (o.kind == "factored1d") {
      p = szb::generate_stable_factored_1d(o.nfactors, seed);
    } else {
      throw CLI::ValidationError("--kind", "unknown generator kind: " + o.kind);
    }
    if (o.normalize) {
      szb::Exponent zero(p.nvars(), 0);
      Complex p0 = p.coeff(zero);
      if (std::abs(p0) < 1e-9)
        throw szb::hypothesis_error("generate: cannot normalize, p(0) ~ 0");
      p *= 1.0 / p0;
      p.add_term(zero, 1.0 - p.coeff(zero));
    }
    if (o.order > 0) {
      szb::Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
      for (int t = 0; t < o.order; ++t) {
        MultiPoly form(o.nvars);
        for (int j = 0; j < o.nvars; ++j) {
          szb::Exponent e(o.nvars, 0);
          e[j] = 1;
          form.add_term(e, Complex(rng.uniform(0.1, 2.0), 0.0));
        }
        p = p * form;
      }
    }
    char name[32];
    std::snprintf(name, sizeof(name), "p_%03d.json", k);
    std::filesystem::path path = std::filesystem::path(o.output) / name;
    szb::save_json_file(path.string(), szb::poly_to_json(p));
    Json entry;
    entry["file"] = name;
    entry["seed"] = seed;
    manifest["entries"].push_back(entry);
  }
  std::filesystem::path mpath = std::filesystem::path(o.output) / "manifest.json";
  szb::save_json_file(mpath.string(), manifest);
  std::printf("# config %s\n", cfg.dump().c_str());
  std::printf("wrote %d polynomials to %s\n", o.count, o.output.c_str());
  return kExitOk;
}

int cmd_lemmas(const Options& o) {
  Json cfg = config_json("lemmas", o);
  cfg["suite"] = o.suite;
  cfg["trials"] = o.trials;
  cfg["dim_max"] = o.dim_max;
  std::printf("# config %s\n", cfg.dump().c_str());
  std::vector<szb::LemmaSuite> suites;
  if (o.suite == "all") {
    suites = {szb::LemmaSuite::Squares, szb::LemmaSuite::Log, szb::LemmaSuite::TracePM,
              szb::LemmaSuite::SumB, szb::LemmaSuite::ImTrace, szb::LemmaSuite::BBsz};
  } else {
    auto s = szb::lemma_suite_from_name(o.suite);
    if (!s) throw CLI::ValidationError("--suite", "unknown lemma suite: " + o.suite);
    suites = {*s};
  }
  long total_violations = 0;
  std::vector<szb::ReportRow> rows;
  for (auto s : suites) {
    auto report = szb::lemma_trials(s, o.trials, o.seed, o.dim_max, o.inject_bad);
    total_violations += report.violations;
    std::printf("%s trials %ld violations %ld worst_margin %s\n", szb::lemma_suite_name(s),
                report.trials, report.violations,
                szb::fmt17(report.worst_log_margin).c_str());
    rows.push_back({o.case_id, szb::lemma_suite_name(s), o.dim_max, report});
  }
  if (!o.output.empty()) {
    szb::save_text_file(o.output, szb::report_csv(rows, cfg));
    std::filesystem::path mirror(o.output);
    mirror.replace_extension(".json");
    szb::save_json_file(mirror.string(), szb::report_json(rows, cfg));
  }
  return total_violations == 0 ? kExitOk : kExitViolations;
}

int cmd_compare(const Options& o) {
  Json cfg = config_json("compare", o);
  std::printf("# config %s\n", cfg.dump().c_str());
  MultiPoly p = szb::poly_from_json(szb::load_json_file(o.input));

  std::vector<std::pair<std::string, ExpBound>> bounds;
  std::string rest = o.thms;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string name = rest.substr(0, comma);
    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    if (!name.empty()) bounds.emplace_back(name, make_bound(name, p, o));
  }
  if (bounds.empty()) throw CLI::ValidationError("--thms", "no theorem selectors given");

  szb::Rng rng(o.seed);
  std::vector<std::vector<Complex>> samples;
  for (long s = 0; s < o.samples; ++s) {
    std::vector<Complex> z(p.nvars());
    for (int j = 0; j < p.nvars(); ++j)
      z[j] = o.real_only ? Complex(rng.uniform(-o.radius, o.radius), 0.0)
                         : rng.complex_in_box(o.radius);
    samples.push_back(std::move(z));
  }
  auto table = szb::compare_bounds(p, bounds, samples);

  std::string csv = "# config " + cfg.dump() + "\nz,log_abs_p";
  for (const auto& label : table.labels) csv += "," + label;
  csv += "\n";
  for (const auto& row : table.rows) {
    csv += szb::format_point(row.z) + "," + szb::fmt17(row.log_abs_p);
    for (double e : row.exponents) csv += "," + szb::fmt17(e);
    csv += "\n";
  }
  std::fputs(csv.c_str(), stdout);
  for (std::size_t j = 0; j < table.labels.size(); ++j)
    std::printf("# tightest %s %ld/%zu\n", table.labels[j].c_str(),
                table.tightest_counts[j], table.rows.size());
  if (!o.output.empty()) szb::save_text_file(o.output, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Szasz-type exponential bounds for stable polynomials"};
  app.require_subcommand(1);
  // config-file values act as defaults; explicit flags override them
  app.set_config("--config", "", "read options from a TOML/INI file");
  Options o;
  std::string bound_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--radius", o.radius, "sampling box radius");
    cmd->add_option("--samples", o.samples, "number of samples");
    cmd->add_option("--seed", o.seed, "rng seed");
    cmd->add_option("--tol", o.tol, "violation tolerance on log margins");
    cmd->add_flag("--real-only", o.real_only, "sample real points only");
    cmd->add_flag("--upper-half", o.upper_half, "sample the open upper polydisk");
  };

  CLI::App* bound = app.add_subcommand("bound", "compute a certificate for a polynomial");
  bound->fallthrough();
  bound->add_option("--thm", o.thm, "theorem selector")->required();
  bound->add_option("-i,--input", o.input, "polynomial json")->required();
  bound->add_option("-o,--output", o.output, "certificate json");
  bound->add_option("--order", o.order, "vanishing order override (vanishing1d)");
  bound->add_option("--zero-tol", o.zero_tol, "vanishing-order coefficient tolerance");
  add_common(bound);

  CLI::App* verify = app.add_subcommand("verify", "sample a certificate against |p|");
  verify->fallthrough();
  verify->add_option("--thm", o.thm, "theorem selector");
  verify->add_option("--bound", bound_path, "pre-computed certificate json");
  verify->add_option("-i,--input", o.input, "polynomial json")->required();
  verify->add_option("-o,--output", o.output, "report csv path (json mirror alongside)");
  verify->add_option("--case-id", o.case_id, "report row identifier");
  verify->add_option("--zero-tol", o.zero_tol, "vanishing-order coefficient tolerance");
  add_common(verify);

  CLI::App* convert = app.add_subcommand("convert", "bidisk contraction data to half-plane data");
  convert->fallthrough();
  convert->add_option("-i,--input", o.input, "bidisk representation json")->required();
  convert->add_option("-o,--output", o.output, "determinantal representation json");
  convert->add_option("--eps", o.eps, "invariant tolerance");
  convert->add_option("--seed", o.seed, "probe point seed");

  CLI::App* generate = app.add_subcommand("generate", "write a corpus of stable polynomials");
  generate->fallthrough();
  generate->add_option("--kind", o.kind, "product | detrep | factored1d");
  generate->add_option("--count", o.count, "number of polynomials")
      ->check(CLI::NonNegativeNumber);
  generate->add_option("--nvars", o.nvars, "number of variables");
  generate->add_option("--nfactors", o.nfactors, "factors (product / factored1d degree)");
  generate->add_option("--size", o.size, "matrix size (detrep)");
  generate->add_option("--order", o.order, "multiply by this many stable linear forms");
  generate->add_flag("--normalize", o.normalize, "rescale to p(0) = 1");
  generate->add_option("--seed", o.seed, "base seed; entry k uses seed + k");
  generate->add_option("-o,--output", o.output, "corpus directory")->required();

  CLI::App* lemmas = app.add_subcommand("lemmas", "randomized trials for the supporting lemmas");
  lemmas->fallthrough();
  lemmas->add_option("--suite", o.suite,
                     "all | squares | log | tracepm | sumb | imtrace | bbsz");
  lemmas->add_option("--trials", o.trials, "trials per suite");
  lemmas->add_option("--dim-max", o.dim_max, "max matrix / tuple dimension");
  lemmas->add_option("--seed", o.seed, "rng seed");
  lemmas->add_option("-o,--output", o.output, "report csv path");
  lemmas->add_flag("--inject-bad", o.inject_bad,
                   "test hook: drop the half-plane constraint on sampled data");

  CLI::App* compare = app.add_subcommand("compare", "tabulate several certificates pointwise");
  compare->fallthrough();
  compare->add_option("--thms", o.thms, "comma-separated theorem selectors")->required();
  compare->add_option("-i,--input", o.input, "polynomial json")->required();
  compare->add_option("-o,--output", o.output, "table csv path");
  add_common(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bound->parsed()) return cmd_bound(o);
    if (verify->parsed()) {
      if (o.thm.empty() && bound_path.empty())
        throw CLI::ValidationError("verify", "need --thm or --bound");
      return cmd_verify(o, bound_path);
    }
    if (convert->parsed()) return cmd_convert(o);
    if (generate->parsed()) return cmd_generate(o);
    if (lemmas->parsed()) return cmd_lemmas(o);
    if (compare->parsed()) return cmd_compare(o);
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const szb::hypothesis_error& e) {
    std::fprintf(stderr, "hypothesis failure: %s\n", e.what());
    return kExitHypothesis;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
