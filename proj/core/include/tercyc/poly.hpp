#pragma once

#include <cstdint>
#include <vector>

#include "tercyc/zones.hpp"

namespace tercyc {

/// Maximum number of coefficient entries a table may allocate.
/// Defaults to 1e8; the TERCYC_MEMORY_BOUND environment variable overrides.
std::int64_t memory_bound();

/// Dense coefficients of Phi_pqr (or Q_{p,q,r}); a(k) = 0 outside [0, phi].
class CoefficientTable {
 public:
  CoefficientTable(Triple t, std::vector<std::int32_t> coeffs);

  const Triple& triple() const { return t_; }
  std::int64_t degree() const { return t_.phi; }
  std::int64_t a(std::int64_t k) const {
    return (k < 0 || k > t_.phi) ? 0 : c_[static_cast<std::size_t>(k)];
  }
  const std::vector<std::int32_t>& raw() const { return c_; }

 private:
  Triple t_;
  std::vector<std::int32_t> c_;
};

/// Expands the 16-term numerator and divides exactly by each (1 - x^d),
/// d in {qr, rp, pq, 1}, via the stride-d prefix recurrence. Throws
/// too_large_error past the memory bound and inexact_division_error if a
/// nonzero tail survives the divisions.
CoefficientTable coefficients(const Triple& t, std::int64_t max_entries = 0);

struct CoefficientStats {
  std::int64_t theta = 0;   // nonzero coefficients
  std::int64_t height = 0;  // max |a(k)|
  std::vector<std::int64_t> jump_ups, jump_downs;  // sorted, k in [0, pqr)
};

/// Throws flatness_violation_error on any |a(k) - a(k-1)| > 1.
CoefficientStats jump_scan(const CoefficientTable& ct);

/// Multiplies the table back by all four denominator factors and compares
/// against the numerator at every position.
bool reconstruct_check(const CoefficientTable& ct);

struct Mismatch {
  std::int64_t k = -1;
  int oracle_V = 0, table_V = 0, octuple_V = 0;
  bool octuple_match = false;
};

struct VerifyReport {
  std::int64_t checked = 0;
  std::int64_t agreements = 0;
  std::vector<Mismatch> mismatches;  // capped at 16

  bool ok() const { return checked > 0 && checked == agreements; }
};

/// Per-index three-way agreement: oracle V(k) vs Table-1 V vs octuple N_0
/// difference, plus shift-equivalence of the actual and predicted octuples.
/// With sample_ks null, every k in [0, pqr) is checked.
VerifyReport verify_against_table(const Triple& t, const CoefficientTable& ct,
                                  const std::vector<std::int64_t>* sample_ks = nullptr);
VerifyReport verify_against_table(const Triple& t);

}  // namespace tercyc
