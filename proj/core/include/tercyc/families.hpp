#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tercyc/count.hpp"
#include "tercyc/poly.hpp"

namespace tercyc {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool operator==(const Rational&) const = default;
};

/// a^ea > b^eb in exact integer arithmetic (a, b >= 2, exponents >= 0).
bool pow_greater(std::int64_t a, std::int64_t ea, std::int64_t b, std::int64_t eb);

enum class FamilyKind { germain, six_m };

struct FamilyInstance {
  FamilyKind kind = FamilyKind::germain;
  Triple t;

  // germain parameters: q = tp - 1, r = 2q + 1
  std::int64_t q = 0, p = 0, r = 0, tt = 0;
  Rational epsilon;
  bool small_t_warning = false;  // proof assumes t >= 3

  // six-m parameter
  std::int64_t m = 0;

  /// For germain: 10q. For six-m: 10(6m-1), the integer step of the
  /// J < 10(6m-1) < 15 n^{1/3} chain; the cube form J^3 < 3375 n is what
  /// tests compare.
  std::int64_t predicted_bound = 0;
};

/// All (p, q, 2q+1) with q <= q_max, q and 2q+1 prime, p an odd prime
/// divisor of q+1 with p > q^{1-eps}; ascending by (q, p).
std::vector<FamilyInstance> germain_triples(std::int64_t q_max, Rational eps);

/// Checks the germain construction's closed-form zone profile and J < 10q.
struct SmallJProfile {
  FamilyInstance inst;
  bool inverses_ok = false;   // the six pairwise inverses
  bool alpha_ok = false;      // (1, 1, 2)
  bool beta_ok = false;       // (1, t, 2tp-2t-1)
  bool empty_zones_ok = false;  // A^p_4, A^q_0, A^r_4 empty
  bool delta_ok = false;      // delta_rp = delta_pq = 1, others 0
  std::int64_t R = 0, S = 0, T = 0, J = 0;
  bool R_formula_ok = false;  // R = (p-2)(2t-2)
  bool S_zero_ok = false;
  bool T_formula_ok = false;  // T = (t-1) * 2 * (p-2)
  bool bound_ok = false;      // J < 10q
  bool oracle_ran = false;
  bool oracle_ok = false;

  bool all_ok() const {
    return inverses_ok && alpha_ok && beta_ok && empty_zones_ok && delta_ok &&
           R_formula_ok && S_zero_ok && T_formula_ok && bound_ok &&
           (!oracle_ran || oracle_ok);
  }
};

SmallJProfile verify_small_j_profile(const FamilyInstance& inst,
                                     bool run_oracle = true);

/// Instances (m, 6m-1, 12m-1) for m in [m_from, m_to]; requires m_from >= 3.
std::vector<FamilyInstance> six_m_family(std::int64_t m_from, std::int64_t m_to);

/// Sorted triples (p < q < r <= p_max) passing validate_triple, in
/// lexicographic order.
std::vector<Triple> enumerate_triples(std::int64_t p_max, bool require_primes);

struct ScanOptions {
  std::int64_t p_max = 13;
  bool require_primes = true;
  int jobs = 1;
  std::int64_t sample_k = 0;  // 0 means check every k in [0, pqr)
  std::uint64_t seed = 1;
  std::int64_t max_entries = 0;  // 0 means memory_bound()
};

struct ScanRow {
  std::int64_t p = 0, q = 0, r = 0, n = 0;
  std::int64_t J_formula = 0, J_oracle = 0;
  std::int64_t R = 0, S = 0, T = 0, main = 0;
  std::int64_t theta = 0, height = 0;
  bool cbrtJ_pass = false, cbrtTheta_pass = false, table_agree = false;
  int lemma_r_count = 0;
  std::string status = "ok";

  bool pass() const { return status == "ok"; }
};

/// One row per triple; row order is the enumeration order regardless of jobs.
std::vector<ScanRow> scan(const ScanOptions& opt);

std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace tercyc
