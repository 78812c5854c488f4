#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tercyc/zones.hpp"

namespace tercyc {

/// Closed-form jump count J = R + S + T + main together with the per-row
/// cell-count route (both must agree with the coefficient oracle).
struct JumpComponents {
  std::int64_t R = 0, S = 0, T = 0, main = 0;
  /// Main term evaluated with the (r - alpha_r - beta_r) factor as displayed;
  /// diagnostic only, known not to match the oracle.
  std::int64_t as_printed_main = 0;
  std::int64_t J = 0;

  /// jump-up count per contributing row pattern, from interval cardinalities
  std::map<std::string, std::int64_t> cell_counts;
  std::int64_t cell_route_total() const;
};

JumpComponents closed_J(const ZoneProfile& zp);
JumpComponents closed_J(const Triple& t);

struct BoundReport {
  std::int64_t n = 0, J = 0, theta = 0;
  std::int64_t cbrt_n = 0;        // floor(n^{1/3})
  std::int64_t J_cubed = 0;       // saturated at INT64_MAX
  std::int64_t theta_cubed = 0;   // saturated at INT64_MAX
  bool J_bound_ok = false;        // J^3 > n, exact integer comparison
  bool theta_bound_ok = false;    // theta^3 > n
};

/// Never throws; a violated bound is report data that callers must surface.
BoundReport bound_report(const Triple& t, std::int64_t J, std::int64_t theta);

}  // namespace tercyc
