#include <doctest.h>

#include <complex>
#include <vector>

#include "szb/io.hpp"
#include "szb/rng.hpp"
#include "szb/stability.hpp"

using szb::Complex;
using szb::MultiPoly;

TEST_CASE("polynomial json: terms parse in any order, serialize sorted") {
  szb::Json j = szb::Json::parse(R"({
    "nvars": 2,
    "terms": [
      {"exp": [1, 1], "re": 1.0, "im": 0.0},
      {"exp": [0, 0], "re": 1.0, "im": -2.0}
    ]
  })");
  MultiPoly p = szb::poly_from_json(j);
  CHECK(p.nvars() == 2);
  CHECK(p.coeff({0, 0}) == Complex(1.0, -2.0));
  CHECK(p.coeff({1, 1}) == Complex(1.0, 0.0));

  szb::Json out = szb::poly_to_json(p);
  CHECK(out["terms"][0]["exp"] == szb::Json::array({0, 0}));  // lexicographic
  CHECK(out["terms"][1]["exp"] == szb::Json::array({1, 1}));
}

TEST_CASE("serialization round trips are exact") {
  szb::Rng rng(61);

  for (int t = 0; t < 20; ++t) {
    MultiPoly p = szb::generate_stable_product(2, 3, 700 + t);
    p *= rng.complex_in_box(2.0);
    if (p.is_zero()) continue;
    MultiPoly back = szb::poly_from_json(szb::poly_to_json(p));
    CHECK(back == p);
  }

  for (int t = 0; t < 10; ++t) {
    Eigen::MatrixXcd m(2 + rng.index(3), 1 + rng.index(4));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = rng.complex_in_box(5.0);
    Eigen::MatrixXcd back = szb::matrix_from_json(szb::matrix_to_json(m));
    CHECK(back == m);
  }
}

TEST_CASE("detrep and bidisk json round trips") {
  auto [rep, poly] = szb::generate_stable_detrep(2, 3, 808);
  szb::DetRep back = szb::detrep_from_json(szb::detrep_to_json(rep));
  CHECK(back.c == rep.c);
  CHECK(back.A == rep.A);
  REQUIRE(back.B.size() == rep.B.size());
  for (std::size_t j = 0; j < rep.B.size(); ++j) CHECK(back.B[j] == rep.B[j]);

  szb::BidiskRep brep;
  brep.c = Complex(0.5, -0.25);
  brep.n = 2;
  brep.m = 1;
  szb::Rng rng(62);
  brep.D = Eigen::MatrixXcd::Zero(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) brep.D(r, c) = rng.complex_in_box(0.3);
  szb::BidiskRep bback = szb::bidisk_from_json(szb::bidisk_to_json(brep));
  CHECK(bback.c == brep.c);
  CHECK(bback.D == brep.D);
  CHECK(bback.n == 2);
  CHECK(bback.m == 1);
}

TEST_CASE("bound json round trip matches the schema") {
  szb::ExpBound b;
  b.lead_degree = 2;
  b.log_prefactor = -0.125;
  b.linear_complex = {Complex(1.0, -3.0), Complex(0.5, 0.0)};
  b.linear_abs = 1.75;
  b.quad = -0.5;
  b.norm = szb::NormKind::EuclidNorm;
  b.domain = szb::BoundDomain::RealPointsOnly;

  szb::Json j = szb::bound_to_json(b);
  CHECK(j["lead_degree"] == 2);
  CHECK(j["norm"] == "euclid");
  CHECK(j["domain"] == "real");
  CHECK(szb::bound_from_json(j) == b);

  CHECK_THROWS_AS(
      szb::bound_from_json(szb::Json::parse(
          R"({"lead_degree":0,"log_prefactor":0,"linear_complex":[],"linear_abs":0,"quad":0,"norm":"l7","domain":"all"})")),
      std::invalid_argument);
}

TEST_CASE("report csv shape") {
  szb::VerifyReport rep;
  rep.trials = 10;
  rep.violations = 0;
  rep.worst_log_margin = 0.0625;
  rep.seed = 4;
  szb::Json cfg;
  cfg["subcommand"] = "verify";
  cfg["seed"] = 4;
  std::vector<szb::ReportRow> rows{{"case0", "improved", 1, rep}};
  std::string csv = szb::report_csv(rows, cfg);
  CHECK(csv.find("# config") == 0);
  CHECK(csv.find("case_id,theorem,n,trials,violations,worst_margin,witness_z,seed") !=
        std::string::npos);
  CHECK(csv.find("case0,improved,1,10,0,0.0625,,4") != std::string::npos);

  szb::Json jr = szb::report_json(rows, cfg);
  CHECK(jr["rows"][0]["worst_margin"] == 0.0625);
  CHECK(jr["config"]["seed"] == 4);
}

TEST_CASE("fmt17 prints diffable doubles") {
  CHECK(szb::fmt17(0.5) == "0.5");
  CHECK(szb::fmt17(1.0 / 3.0) == "0.33333333333333331");
}
