#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tercyc/repr.hpp"

namespace tercyc {

/// Five-interval partition of [0, modulus) for one of the three moduli,
/// cut by the inverses of the other two and their sum.
struct ZoneAxis {
  std::int64_t modulus = 0;
  std::int64_t inv_y = 0, inv_z = 0;  // inverses of the other two moduli, cyclic order
  std::array<std::int64_t, 6> cut{};  // A_j = [cut[j], cut[j+1])
  std::array<std::int64_t, 5> size{};
  std::int64_t alpha = 0, beta = 0;
};

struct ZoneProfile {
  Triple t;
  std::array<ZoneAxis, 3> axis;               // p, q, r
  std::array<std::array<int, 3>, 3> delta{};  // delta[x][y], x != y
  std::array<int, 3> delta_agg{};             // delta_p, delta_q, delta_r

  int zone_of(int ax, std::int64_t v) const;
  /// inverse of modulus w modulo modulus z (w != z)
  std::int64_t inverse_of_mod(int w, int z) const;
};

/// Computes intervals, alpha/beta and the six delta flags; every internal
/// identity (partition, cardinalities, both beta characterizations) is
/// re-checked and a failure throws internal_inconsistency_error.
ZoneProfile zone_profile(const Triple& t);

/// role index (0,1,2 for the table's p,q,r) -> axis index of the triple
using Perm = std::array<int, 3>;

struct JumpClass {
  std::array<int, 3> cell;  // zones of (a, b, c)
  std::string row;          // nondecreasing Table-1 pattern, e.g. "023"
  Perm perm;
};

/// Interval membership of (a, b, c) plus normalization onto a Table-1 row.
/// Cells (0,0,0) and (4,4,4) are provably empty; seeing one throws
/// empty_cell_error.
JumpClass classify(const ZoneProfile& zp, const Representation& rep);

/// every role permutation sorting the cell nondecreasingly; front() is the
/// canonical one (ties broken by modulus order)
std::vector<Perm> sorting_perms(const std::array<int, 3>& cell);

int table_V(const ZoneProfile& zp, const JumpClass& cls);
int table_V(const ZoneProfile& zp, const std::string& row, const Perm& perm);

/// The table's octuple with delta flags substituted and entries permuted
/// back to the actual positional order (canonical up to shift).
Octuple table_octuple(const ZoneProfile& zp, const JumpClass& cls);
Octuple table_octuple(const ZoneProfile& zp, const std::string& row, const Perm& perm);

/// Full 33-row dump: row pattern, octuple template, V expression.
/// Byte-stable across runs.
std::string table_csv();

struct LemmaRStatus {
  int count;               // how many of the three inverse-sum inequalities hold
  int distinguished_axis;  // the only-true (count 1) or only-false (count 2) one
  std::array<bool, 3> holds;
};

/// Throws lemma_violation_error when the count is 0 or 3.
LemmaRStatus lemma_r_status(const Triple& t);

}  // namespace tercyc
