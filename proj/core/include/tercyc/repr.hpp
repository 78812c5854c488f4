#pragma once

#include <array>
#include <cstdint>

#include "tercyc/modular.hpp"

namespace tercyc {

/// The unique solution of k + F*pqr = a*qr + b*rp + c*pq with
/// a in [0,p), b in [0,q), c in [0,r).
struct Representation {
  std::int64_t k;
  std::int64_t F;
  std::int64_t a, b, c;
};

/// Defined for every integer k.
Representation decompose(const Triple& t, std::int64_t k);

/// F-values at k shifted by the subset sums of {p, q, r}, in the fixed
/// positional order
/// (F_k, F_{k-p}, F_{k-q}, F_{k-r}, F_{k-q-r}, F_{k-r-p}, F_{k-p-q}, F_{k-p-q-r}).
using Octuple = std::array<int, 8>;

/// Requires 0 <= k < pqr so that every entry lands in {0, 1, 2}.
Octuple octuple(const Triple& t, std::int64_t k);

/// Equal up to a common additive shift.
bool shift_equivalent(const Octuple& a, const Octuple& b);

/// a(k) - a(k-1) read off the octuple: the N_0 difference between the
/// even-shift group (positions 0,4,5,6) and the odd-shift group
/// (positions 1,2,3,7). The N_2 difference and half the reversed N_1
/// difference are evaluated too and must agree; disagreement throws
/// inconsistent_error.
int jump_from_octuple(const Octuple& o);

struct PropositionChecks {
  bool single_shift_ok;  // three-case rule for F_k - F_{k-x}, all three shifts
  bool four_term_ok;     // zone-driven rule for the three 4-term differences
  bool eight_term_ok;    // alternating 8-term sum vanishes

  bool all() const { return single_shift_ok && four_term_ok && eight_term_ok; }
};

/// Evaluates the structural identities at k (and their symmetric versions).
/// Failures are data, not exceptions.
PropositionChecks proposition_residuals(const Triple& t, std::int64_t k);

}  // namespace tercyc
