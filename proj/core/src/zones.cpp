#include "tercyc/zones.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace tercyc {

namespace {

struct RowSpec {
  const char* pattern;
  const char* oct[8];
  const char* v;
};

// Row pattern -> octuple template and V(k), with delta flags written in the
// role letters p, q, r. dxy reads "inverse of x is smaller than inverse of y,
// both taken modulo the third modulus".
const RowSpec kTable[33] = {
    {"001", {"0", "1", "1", "1", "2", "2", "1", "2"}, "1"},
    {"002", {"0", "dpq", "dqp", "1", "1+dqp", "1+dpq", "1", "2"}, "0"},
    {"003", {"0", "0", "0", "1", "1", "1", "1", "2"}, "-1"},
    {"004", {"0", "0", "0", "1", "1", "1", "0", "1"}, "0"},
    {"011", {"0", "1", "1", "1", "2", "1", "1", "1"}, "1"},
    {"012", {"0", "dpq", "dqp", "1", "1+dqp", "dpq", "1", "1"}, "dqp"},
    {"013", {"0", "0", "0", "1", "1", "0", "1", "1"}, "0"},
    {"014", {"0", "0", "0", "1", "1", "0", "0", "0"}, "0"},
    {"022", {"0", "dpq+dpr-1", "dqp", "drp", "dqp+drp", "dpq", "dpr", "1"}, "0"},
    {"023", {"1", "dpr", "1", "1+drp", "1+drp", "1", "1+dpr", "2"}, "-drp"},
    {"024", {"1", "dpr", "1", "1+drp", "1+drp", "1", "dpr", "1"}, "0"},
    {"033", {"1", "0", "1", "1", "1", "1", "1", "2"}, "-1"},
    {"034", {"1", "0", "1", "1", "1", "1", "0", "1"}, "0"},
    {"044", {"1", "0", "1", "1", "1", "0", "0", "0"}, "0"},
    {"111", {"0", "1", "1", "1", "1", "1", "1", "0"}, "0"},
    {"112", {"0", "dpq", "dqp", "1", "dqp", "dpq", "1", "0"}, "0"},
    {"113", {"0", "0", "0", "1", "0", "0", "1", "0"}, "0"},
    {"114", {"1", "1", "1", "2", "1", "1", "1", "0"}, "-1"},
    {"122", {"1", "dpq+dpr", "1+dqp", "1+drp", "dqp+drp", "1+dpq", "1+dpr", "1"},
     "dpq*dpr-dqp*drp"},
    {"123", {"1", "dpr", "1", "1+drp", "drp", "1", "1+dpr", "1"}, "dpr-drp"},
    {"124", {"1", "dpr", "1", "1+drp", "drp", "1", "dpr", "0"}, "-drp"},
    {"133", {"1", "0", "1", "1", "0", "1", "1", "1"}, "0"},
    {"134", {"1", "0", "1", "1", "0", "1", "0", "0"}, "0"},
    {"144", {"2", "1", "2", "2", "1", "1", "1", "0"}, "-1"},
    {"222",
     {"1", "dpq+dpr", "dqr+dqp", "drp+drq", "dqp+drp", "drq+dpq", "dpr+dqr", "1"},
     "0"},
    {"223", {"1", "dpr", "dqr", "drp+drq", "drp", "drq", "dpr+dqr", "1"},
     "dpr*dqr-drp*drq"},
    {"224", {"1", "dpr", "dqr", "drp+drq", "drp", "drq", "dpr+dqr-1", "0"}, "0"},
    {"233", {"1", "0", "dqr", "drq", "0", "drq", "dqr", "1"}, "0"},
    {"234", {"2", "1", "1+dqr", "1+drq", "1", "1+drq", "dqr", "1"}, "drq"},
    {"244", {"2", "1", "1+dqr", "1+drq", "1", "drq", "dqr", "0"}, "0"},
    {"333", {"1", "0", "0", "0", "0", "0", "0", "1"}, "0"},
    {"334", {"2", "1", "1", "1", "1", "1", "0", "1"}, "1"},
    {"344", {"2", "1", "1", "1", "1", "0", "0", "0"}, "1"},
};

struct Term {
  int coeff = 1;
  int ndelta = 0;
  int d[2][2];  // role letter indices of up to two delta factors
};

struct Expr {
  std::vector<Term> terms;
};

int role_index(char c) {
  switch (c) {
    case 'p': return 0;
    case 'q': return 1;
    case 'r': return 2;
  }
  throw internal_inconsistency_error("table: bad role letter");
}

Expr parse_expr(const char* s) {
  Expr e;
  const char* it = s;
  while (*it) {
    Term t;
    if (*it == '+') ++it;
    else if (*it == '-') { t.coeff = -1; ++it; }
    bool have_factor = false;
    for (;;) {
      if (*it == 'd') {
        t.d[t.ndelta][0] = role_index(it[1]);
        t.d[t.ndelta][1] = role_index(it[2]);
        ++t.ndelta;
        it += 3;
      } else if (std::isdigit(static_cast<unsigned char>(*it))) {
        int v = 0;
        while (std::isdigit(static_cast<unsigned char>(*it))) v = v * 10 + (*it++ - '0');
        t.coeff *= v;
      } else {
        throw internal_inconsistency_error("table: parse error in '" +
                                           std::string(s) + "'");
      }
      have_factor = true;
      if (*it == '*') { ++it; continue; }
      break;
    }
    if (!have_factor)
      throw internal_inconsistency_error("table: empty term in '" + std::string(s) + "'");
    e.terms.push_back(t);
  }
  return e;
}

struct ParsedRow {
  std::string pattern;
  Expr oct[8];
  Expr v;
};

const std::map<std::string, ParsedRow>& parsed_table() {
  static const std::map<std::string, ParsedRow> tbl = [] {
    std::map<std::string, ParsedRow> m;
    for (const RowSpec& rs : kTable) {
      ParsedRow pr;
      pr.pattern = rs.pattern;
      for (int i = 0; i < 8; ++i) pr.oct[i] = parse_expr(rs.oct[i]);
      pr.v = parse_expr(rs.v);
      m.emplace(pr.pattern, std::move(pr));
    }
    return m;
  }();
  return tbl;
}

int eval_expr(const Expr& e, const ZoneProfile& zp, const Perm& perm) {
  int total = 0;
  for (const Term& t : e.terms) {
    int v = t.coeff;
    for (int i = 0; i < t.ndelta && v != 0; ++i)
      v *= zp.delta[perm[t.d[i][0]]][perm[t.d[i][1]]];
    total += v;
  }
  return total;
}

}  // namespace

int ZoneProfile::zone_of(int ax, std::int64_t v) const {
  const ZoneAxis& a = axis[ax];
  for (int j = 0; j < 5; ++j)
    if (v >= a.cut[j] && v < a.cut[j + 1]) return j;
  throw internal_inconsistency_error("zone_of: value outside [0, modulus)");
}

std::int64_t ZoneProfile::inverse_of_mod(int w, int z) const {
  const ZoneAxis& a = axis[z];
  return w == (z + 1) % 3 ? a.inv_y : a.inv_z;
}

ZoneProfile zone_profile(const Triple& t) {
  ZoneProfile zp;
  zp.t = t;
  for (int x = 0; x < 3; ++x) {
    int y = (x + 1) % 3, z = (x + 2) % 3;
    ZoneAxis& ax = zp.axis[x];
    ax.modulus = t.modulus(x);
    ax.inv_y = mod_inverse(t.modulus(y) % ax.modulus, ax.modulus);
    ax.inv_z = mod_inverse(t.modulus(z) % ax.modulus, ax.modulus);
    const std::int64_t i1 = ax.inv_y, i2 = ax.inv_z, m = ax.modulus;
    std::int64_t raw[6] = {0, i1 + i2 - m, std::min(i1, i2),
                           std::max(i1, i2), i1 + i2, m};
    for (int j = 0; j < 6; ++j) ax.cut[j] = std::clamp(raw[j], INT64_C(0), m);
    for (int j = 0; j < 5; ++j) ax.size[j] = ax.cut[j + 1] - ax.cut[j];
    ax.alpha = std::min(std::min(i1, i2), std::min(m - i1, m - i2));
    ax.beta = ax.alpha + ax.size[2];

    if (std::accumulate(ax.size.begin(), ax.size.end(), INT64_C(0)) != m ||
        ax.size[1] != ax.alpha || ax.size[3] != ax.alpha ||
        ax.size[0] + ax.size[4] != m - ax.alpha - ax.beta)
      throw internal_inconsistency_error("zone_profile: cardinality identity failed");
    if (ax.size[0] > 0 && ax.size[4] > 0)
      throw internal_inconsistency_error("zone_profile: A_0 and A_4 both nonempty");
    // the modular characterization of beta must agree with the interval one
    std::int64_t other = mul_mod(t.modulus(y) % m, t.modulus(z) % m, m);
    std::int64_t prod = mul_mod(ax.alpha % m, other, m);
    if (gcd64(prod, m) != 1 || mod_inverse(prod, m) != ax.beta)
      throw internal_inconsistency_error("zone_profile: beta characterizations disagree");
  }
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == y) continue;
      int z = 3 - x - y;
      zp.delta[x][y] = zp.inverse_of_mod(x, z) < zp.inverse_of_mod(y, z) ? 1 : 0;
    }
  for (int x = 0; x < 3; ++x) {
    int y = (x + 1) % 3, z = (x + 2) % 3;
    if (zp.delta[x][y] + zp.delta[y][x] > 1 || zp.delta[x][z] + zp.delta[z][x] > 1)
      throw internal_inconsistency_error("zone_profile: delta flags not antisymmetric");
    zp.delta_agg[x] =
        zp.delta[x][y] * zp.delta[x][z] + zp.delta[z][x] * zp.delta[y][x];
  }
  return zp;
}

std::vector<Perm> sorting_perms(const std::array<int, 3>& cell) {
  std::vector<Perm> out;
  Perm perm = {0, 1, 2};
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return cell[a] < cell[b]; });
  out.push_back(perm);
  Perm other = {0, 1, 2};
  std::sort(other.begin(), other.end());
  do {
    if (other != perm && cell[other[0]] <= cell[other[1]] &&
        cell[other[1]] <= cell[other[2]])
      out.push_back(other);
  } while (std::next_permutation(other.begin(), other.end()));
  return out;
}

JumpClass classify(const ZoneProfile& zp, const Representation& rep) {
  JumpClass cls;
  cls.cell = {zp.zone_of(0, rep.a), zp.zone_of(1, rep.b), zp.zone_of(2, rep.c)};
  if (cls.cell == std::array<int, 3>{0, 0, 0} ||
      cls.cell == std::array<int, 3>{4, 4, 4})
    throw empty_cell_error("classify: provably empty cell (" +
                           std::to_string(cls.cell[0]) + "," +
                           std::to_string(cls.cell[1]) + "," +
                           std::to_string(cls.cell[2]) + ") reached at k = " +
                           std::to_string(rep.k));
  cls.perm = sorting_perms(cls.cell).front();
  cls.row.resize(3);
  for (int i = 0; i < 3; ++i) cls.row[i] = static_cast<char>('0' + cls.cell[cls.perm[i]]);
  return cls;
}

int table_V(const ZoneProfile& zp, const std::string& row, const Perm& perm) {
  return eval_expr(parsed_table().at(row).v, zp, perm);
}

int table_V(const ZoneProfile& zp, const JumpClass& cls) {
  return table_V(zp, cls.row, cls.perm);
}

Octuple table_octuple(const ZoneProfile& zp, const std::string& row, const Perm& perm) {
  const ParsedRow& pr = parsed_table().at(row);
  Octuple out;
  out[0] = eval_expr(pr.oct[0], zp, perm);
  out[7] = eval_expr(pr.oct[7], zp, perm);
  // single shift by role x lands at actual position 1 + perm[x];
  // the pair omitting role x lands at 4 + perm[x]
  for (int role = 0; role < 3; ++role) {
    out[1 + perm[role]] = eval_expr(pr.oct[1 + role], zp, perm);
    out[4 + perm[role]] = eval_expr(pr.oct[4 + role], zp, perm);
  }
  return out;
}

Octuple table_octuple(const ZoneProfile& zp, const JumpClass& cls) {
  return table_octuple(zp, cls.row, cls.perm);
}

std::string table_csv() {
  std::ostringstream os;
  os << "row,octuple,V\n";
  for (const RowSpec& rs : kTable) {
    os << rs.pattern << ",\"(";
    for (int i = 0; i < 8; ++i) os << (i ? "," : "") << rs.oct[i];
    os << ")\",\"" << rs.v << "\"\n";
  }
  return os.str();
}

LemmaRStatus lemma_r_status(const Triple& t) {
  ZoneProfile zp = zone_profile(t);
  LemmaRStatus st{};
  int trues = 0;
  for (int x = 0; x < 3; ++x) {
    st.holds[x] = zp.axis[x].inv_y + zp.axis[x].inv_z > zp.axis[x].modulus;
    trues += st.holds[x] ? 1 : 0;
  }
  st.count = trues;
  if (trues == 0 || trues == 3)
    throw lemma_violation_error("lemma_r_status: " + std::to_string(trues) +
                                " inequalities hold for (" + std::to_string(t.p) +
                                "," + std::to_string(t.q) + "," + std::to_string(t.r) +
                                ")");
  for (int x = 0; x < 3; ++x)
    if (st.holds[x] == (trues == 1)) st.distinguished_axis = x;
  return st;
}

}  // namespace tercyc
