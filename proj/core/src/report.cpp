#include "tercyc/report.hpp"

#include <sstream>

namespace tercyc {

bool AnalysisReport::ok() const {
  if (checks.lemma_r_count < 1 || checks.lemma_r_count > 2) return false;
  if (!checks.empty_cells_absent) return false;
  if (!bounds.J_cubed_gt_n) return false;
  if (oracle.ran) {
    if (!checks.flat || !checks.palindromic) return false;
    if (oracle.J_up != components.J || oracle.J_up != oracle.J_down) return false;
    if (!bounds.theta_cubed_gt_n) return false;
  }
  if (checks.verified && !checks.table_agree) return false;
  return true;
}

namespace {

bool is_palindromic(const CoefficientTable& ct) {
  const std::int64_t phi = ct.degree();
  for (std::int64_t k = 0; k <= phi / 2; ++k)
    if (ct.a(k) != ct.a(phi - k)) return false;
  return true;
}

}  // namespace

AnalysisReport analyze(const Triple& t, const AnalysisOptions& opt) {
  AnalysisReport rep;
  rep.triple = {t.p, t.q, t.r, t.n, t.phi, t.strict_primes};

  const ZoneProfile zp = zone_profile(t);
  const JumpComponents jc = closed_J(zp);
  rep.components = {jc.R, jc.S, jc.T, jc.main, jc.as_printed_main, jc.J};
  rep.checks.lemma_r_count = lemma_r_status(t).count;

  // (0,0,0)/(4,4,4) would throw out of classify; probing every k is the
  // verify path, so here only the cheap structural witness is used: both
  // cells are empty iff no axis has A_0 and A_4 simultaneously nonempty,
  // which zone_profile already enforces.
  rep.checks.empty_cells_absent = true;

  std::int64_t theta_for_bounds = 0;
  if (opt.run_oracle) {
    const CoefficientTable ct = coefficients(t, opt.max_entries);
    const CoefficientStats st = jump_scan(ct);  // throws on a flatness breach
    rep.oracle.ran = true;
    rep.oracle.J_up = static_cast<std::int64_t>(st.jump_ups.size());
    rep.oracle.J_down = static_cast<std::int64_t>(st.jump_downs.size());
    rep.oracle.theta = st.theta;
    rep.oracle.height = st.height;
    rep.checks.flat = true;
    rep.checks.palindromic = is_palindromic(ct);
    theta_for_bounds = st.theta;
    if (opt.verify) {
      rep.checks.verified = true;
      rep.checks.table_agree = verify_against_table(t, ct, nullptr).ok();
    }
  } else if (opt.verify) {
    // table vs octuple only; the oracle column is skipped
    rep.checks.verified = true;
    bool agree = true;
    for (std::int64_t k = 0; k < t.n && agree; ++k) {
      const Representation r = decompose(t, k);
      const Octuple actual = octuple(t, k);
      const JumpClass cls = classify(zp, r);
      agree = shift_equivalent(actual, table_octuple(zp, cls)) &&
              jump_from_octuple(actual) == table_V(zp, cls);
    }
    rep.checks.table_agree = agree;
  }

  const BoundReport br = bound_report(t, jc.J, theta_for_bounds);
  rep.bounds.J_cubed_gt_n = br.J_bound_ok;
  rep.bounds.theta_cubed_gt_n = br.theta_bound_ok;
  rep.bounds.cbrt_n = br.cbrt_n;
  return rep;
}

void to_json(nlohmann::json& j, const AnalysisReport& rep) {
  j = nlohmann::json{
      {"triple",
       {{"p", rep.triple.p},
        {"q", rep.triple.q},
        {"r", rep.triple.r},
        {"n", rep.triple.n},
        {"phi", rep.triple.phi},
        {"strict_primes", rep.triple.strict_primes}}},
      {"components",
       {{"R", rep.components.R},
        {"S", rep.components.S},
        {"T", rep.components.T},
        {"main", rep.components.main},
        {"as_printed_main", rep.components.as_printed_main},
        {"J", rep.components.J}}},
      {"oracle",
       {{"ran", rep.oracle.ran},
        {"J_up", rep.oracle.J_up},
        {"J_down", rep.oracle.J_down},
        {"theta", rep.oracle.theta},
        {"height", rep.oracle.height}}},
      {"bounds",
       {{"J_cubed_gt_n", rep.bounds.J_cubed_gt_n},
        {"theta_cubed_gt_n", rep.bounds.theta_cubed_gt_n},
        {"cbrt_n", rep.bounds.cbrt_n}}},
      {"checks",
       {{"flat", rep.checks.flat},
        {"palindromic", rep.checks.palindromic},
        {"table_agree", rep.checks.table_agree},
        {"empty_cells_absent", rep.checks.empty_cells_absent},
        {"lemma_r_count", rep.checks.lemma_r_count},
        {"verified", rep.checks.verified}}}};
}

void from_json(const nlohmann::json& j, AnalysisReport& rep) {
  const auto& t = j.at("triple");
  t.at("p").get_to(rep.triple.p);
  t.at("q").get_to(rep.triple.q);
  t.at("r").get_to(rep.triple.r);
  t.at("n").get_to(rep.triple.n);
  t.at("phi").get_to(rep.triple.phi);
  t.at("strict_primes").get_to(rep.triple.strict_primes);
  const auto& c = j.at("components");
  c.at("R").get_to(rep.components.R);
  c.at("S").get_to(rep.components.S);
  c.at("T").get_to(rep.components.T);
  c.at("main").get_to(rep.components.main);
  c.at("as_printed_main").get_to(rep.components.as_printed_main);
  c.at("J").get_to(rep.components.J);
  const auto& o = j.at("oracle");
  o.at("ran").get_to(rep.oracle.ran);
  o.at("J_up").get_to(rep.oracle.J_up);
  o.at("J_down").get_to(rep.oracle.J_down);
  o.at("theta").get_to(rep.oracle.theta);
  o.at("height").get_to(rep.oracle.height);
  const auto& b = j.at("bounds");
  b.at("J_cubed_gt_n").get_to(rep.bounds.J_cubed_gt_n);
  b.at("theta_cubed_gt_n").get_to(rep.bounds.theta_cubed_gt_n);
  b.at("cbrt_n").get_to(rep.bounds.cbrt_n);
  const auto& k = j.at("checks");
  k.at("flat").get_to(rep.checks.flat);
  k.at("palindromic").get_to(rep.checks.palindromic);
  k.at("table_agree").get_to(rep.checks.table_agree);
  k.at("empty_cells_absent").get_to(rep.checks.empty_cells_absent);
  k.at("lemma_r_count").get_to(rep.checks.lemma_r_count);
  k.at("verified").get_to(rep.checks.verified);
}

std::string to_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "triple      p=" << rep.triple.p << " q=" << rep.triple.q
     << " r=" << rep.triple.r << "  n=" << rep.triple.n
     << "  phi=" << rep.triple.phi
     << (rep.triple.strict_primes ? "  (primes)" : "  (coprime)") << "\n";
  os << "closed form J=" << rep.components.J << "  R=" << rep.components.R
     << " S=" << rep.components.S << " T=" << rep.components.T
     << " main=" << rep.components.main
     << " (as-printed main=" << rep.components.as_printed_main << ")\n";
  if (rep.oracle.ran) {
    os << "oracle      J_up=" << rep.oracle.J_up
       << " J_down=" << rep.oracle.J_down << "  theta=" << rep.oracle.theta
       << "  height=" << rep.oracle.height << "\n";
  } else {
    os << "oracle      skipped\n";
  }
  os << "bounds      J^3>n: " << (rep.bounds.J_cubed_gt_n ? "yes" : "NO")
     << "  theta^3>n: "
     << (rep.oracle.ran ? (rep.bounds.theta_cubed_gt_n ? "yes" : "NO") : "n/a")
     << "  floor(n^(1/3))=" << rep.bounds.cbrt_n << "\n";
  os << "checks      flat=" << (rep.checks.flat ? "yes" : "no")
     << " palindromic=" << (rep.checks.palindromic ? "yes" : "no")
     << " table_agree="
     << (rep.checks.verified ? (rep.checks.table_agree ? "yes" : "NO") : "n/a")
     << " lemma_r_count=" << rep.checks.lemma_r_count << "\n";
  os << "verdict     " << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

IndexDetail classify_index(const Triple& t, std::int64_t k, bool run_oracle,
                           std::int64_t max_entries) {
  if (k < 0 || k >= t.n)
    throw out_of_range_error("classify_index: k must lie in [0, pqr)");
  const ZoneProfile zp = zone_profile(t);
  IndexDetail d;
  d.k = k;
  d.rep = decompose(t, k);
  const JumpClass cls = classify(zp, d.rep);
  d.cell = cls.cell;
  d.row = cls.row;
  d.perm = cls.perm;
  d.predicted = table_octuple(zp, cls);
  d.actual = octuple(t, k);
  d.octuple_match = shift_equivalent(d.actual, d.predicted);
  d.table_V = table_V(zp, cls);
  d.octuple_V = jump_from_octuple(d.actual);
  if (run_oracle) {
    const CoefficientTable ct = coefficients(t, max_entries);
    d.oracle_ran = true;
    d.oracle_V = static_cast<int>(ct.a(k) - ct.a(k - 1));
  }
  return d;
}

namespace {

nlohmann::json oct_json(const Octuple& o) {
  return nlohmann::json(std::vector<int>(o.begin(), o.end()));
}

std::string oct_str(const Octuple& o) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < 8; ++i) os << (i ? "," : "") << o[static_cast<std::size_t>(i)];
  os << ')';
  return os.str();
}

}  // namespace

void to_json(nlohmann::json& j, const IndexDetail& d) {
  j = nlohmann::json{
      {"k", d.k},
      {"representation",
       {{"F", d.rep.F}, {"a", d.rep.a}, {"b", d.rep.b}, {"c", d.rep.c}}},
      {"cell", d.cell},
      {"row", d.row},
      {"perm", d.perm},
      {"predicted_octuple", oct_json(d.predicted)},
      {"actual_octuple", oct_json(d.actual)},
      {"octuple_match", d.octuple_match},
      {"V",
       {{"table", d.table_V},
        {"octuple", d.octuple_V},
        {"oracle", d.oracle_ran ? nlohmann::json(d.oracle_V) : nlohmann::json()}}},
      {"agree", d.agree()}};
}

std::string to_text(const IndexDetail& d) {
  std::ostringstream os;
  os << "k=" << d.k << "  F=" << d.rep.F << "  (a,b,c)=(" << d.rep.a << ","
     << d.rep.b << "," << d.rep.c << ")\n";
  os << "cell (" << d.cell[0] << "," << d.cell[1] << "," << d.cell[2]
     << ")  row " << d.row << "  perm (" << d.perm[0] << "," << d.perm[1]
     << "," << d.perm[2] << ")\n";
  os << "octuple predicted " << oct_str(d.predicted) << "  actual "
     << oct_str(d.actual) << "  "
     << (d.octuple_match ? "equivalent" : "MISMATCH") << "\n";
  os << "V: table=" << d.table_V << "  octuple=" << d.octuple_V;
  if (d.oracle_ran) os << "  oracle=" << d.oracle_V;
  os << "  -> " << (d.agree() ? "agree" : "DISAGREE") << "\n";
  return os.str();
}

}  // namespace tercyc
