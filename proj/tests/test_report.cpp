#include "doctest.h"

#include "tercyc/report.hpp"

using namespace tercyc;

TEST_CASE("analyze (3,5,7) with full verification") {
  AnalysisOptions opt;
  opt.run_oracle = true;
  opt.verify = true;
  const AnalysisReport rep = analyze(validate_triple(3, 5, 7, true), opt);
  CHECK(rep.triple.n == 105);
  CHECK(rep.triple.phi == 48);
  CHECK(rep.triple.strict_primes);
  CHECK(rep.components.J == 13);
  CHECK(rep.components.T == 1);
  CHECK(rep.components.main == 12);
  CHECK(rep.oracle.ran);
  CHECK(rep.oracle.J_up == 13);
  CHECK(rep.oracle.J_down == 13);
  CHECK(rep.oracle.theta == 33);
  CHECK(rep.oracle.height == 2);
  CHECK(rep.bounds.J_cubed_gt_n);
  CHECK(rep.bounds.theta_cubed_gt_n);
  CHECK(rep.bounds.cbrt_n == 4);
  CHECK(rep.checks.flat);
  CHECK(rep.checks.palindromic);
  CHECK(rep.checks.verified);
  CHECK(rep.checks.table_agree);
  CHECK(rep.checks.lemma_r_count == 1);
  CHECK(rep.ok());
  CHECK(to_text(rep).find("PASS") != std::string::npos);
}

TEST_CASE("analyze without the oracle") {
  AnalysisOptions opt;
  opt.run_oracle = false;
  const AnalysisReport rep = analyze(validate_triple(3, 11, 23, true), opt);
  CHECK_FALSE(rep.oracle.ran);
  CHECK(rep.components.J == 51);
  CHECK(rep.components.R == 6);
  CHECK(rep.components.S == 0);
  CHECK(rep.components.T == 6);
  CHECK(rep.components.main == 39);
  CHECK(rep.ok());
}

TEST_CASE("JSON round trip") {
  AnalysisOptions opt;
  opt.verify = true;
  const AnalysisReport rep = analyze(validate_triple(5, 7, 11, true), opt);
  nlohmann::json j = rep;
  const AnalysisReport back = j.get<AnalysisReport>();
  CHECK(back == rep);

  const nlohmann::json reparsed = nlohmann::json::parse(j.dump());
  CHECK(reparsed.get<AnalysisReport>() == rep);
}

TEST_CASE("classify_index drill-down") {
  const Triple t = validate_triple(3, 5, 7, true);
  const IndexDetail d7 = classify_index(t, 7);
  CHECK(d7.rep.F == 1);
  CHECK(d7.cell == std::array<int, 3>{3, 2, 0});
  CHECK(d7.row == "023");
  CHECK(d7.table_V == -1);
  CHECK(d7.octuple_V == -1);
  CHECK(d7.oracle_ran);
  CHECK(d7.oracle_V == -1);
  CHECK(d7.octuple_match);
  CHECK(d7.agree());

  const IndexDetail d104 = classify_index(t, 104);
  CHECK(d104.oracle_V == 0);  // beyond phi+1, coefficients identically zero
  CHECK(d104.agree());

  CHECK_THROWS_AS(classify_index(t, -1), out_of_range_error);
  CHECK_THROWS_AS(classify_index(t, 105), out_of_range_error);

  nlohmann::json j = d7;
  CHECK(j.at("row").get<std::string>() == "023");
  CHECK(j.at("agree").get<bool>());
}
