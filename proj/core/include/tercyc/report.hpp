#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "tercyc/count.hpp"
#include "tercyc/poly.hpp"

namespace tercyc {

struct AnalysisOptions {
  bool run_oracle = true;
  bool verify = false;  // full per-index three-way agreement
  std::int64_t max_entries = 0;
};

struct AnalysisReport {
  struct TripleInfo {
    std::int64_t p = 0, q = 0, r = 0, n = 0, phi = 0;
    bool strict_primes = false;
    bool operator==(const TripleInfo&) const = default;
  } triple;

  struct Components {
    std::int64_t R = 0, S = 0, T = 0, main = 0, as_printed_main = 0, J = 0;
    bool operator==(const Components&) const = default;
  } components;

  struct Oracle {
    bool ran = false;
    std::int64_t J_up = 0, J_down = 0, theta = 0, height = 0;
    bool operator==(const Oracle&) const = default;
  } oracle;

  struct Bounds {
    bool J_cubed_gt_n = false, theta_cubed_gt_n = false;
    std::int64_t cbrt_n = 0;
    bool operator==(const Bounds&) const = default;
  } bounds;

  struct Checks {
    bool flat = false, palindromic = false, table_agree = false;
    bool empty_cells_absent = false;
    int lemma_r_count = 0;
    bool verified = false;  // whether table_agree was actually evaluated
    bool operator==(const Checks&) const = default;
  } checks;

  bool operator==(const AnalysisReport&) const = default;

  /// Every evaluated check passed (unevaluated ones do not count against).
  bool ok() const;
};

AnalysisReport analyze(const Triple& t, const AnalysisOptions& opt = {});

void to_json(nlohmann::json& j, const AnalysisReport& rep);
void from_json(const nlohmann::json& j, AnalysisReport& rep);

std::string to_text(const AnalysisReport& rep);

/// Drill-down for one index: representation, cell, normalized row, and the
/// jump value by table, octuple and (optionally) oracle routes.
struct IndexDetail {
  std::int64_t k = 0;
  Representation rep{};
  std::array<int, 3> cell{};
  std::string row;
  std::array<int, 3> perm{};
  Octuple predicted{}, actual{};
  bool octuple_match = false;
  int table_V = 0, octuple_V = 0, oracle_V = 0;
  bool oracle_ran = false;

  bool agree() const {
    return octuple_match && table_V == octuple_V &&
           (!oracle_ran || oracle_V == table_V);
  }
};

IndexDetail classify_index(const Triple& t, std::int64_t k, bool run_oracle = true,
                           std::int64_t max_entries = 0);

void to_json(nlohmann::json& j, const IndexDetail& d);
std::string to_text(const IndexDetail& d);

}  // namespace tercyc
