// Command-line front end: one subcommand per check, JSON in and out.

#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fillings/buildings.hpp"
#include "fillings/chaincore.hpp"
#include "fillings/curves.hpp"
#include "fillings/diagonal.hpp"
#include "fillings/io.hpp"
#include "fillings/kahler.hpp"
#include "fillings/smallness.hpp"
#include "fillings/suite.hpp"

using namespace fillings;

namespace {

struct Outcome {
  Report report;
  std::vector<std::string> lines;  // human-readable rendering
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  std::string in;
};

Json load_input(const Globals& g, const char* what) {
  if (g.in.empty()) throw InputError(std::string("--in <file> is required (") + what + ")");
  return read_json_file(g.in);
}

Status from_small(SmallStatus s) {
  switch (s) {
    case SmallStatus::small: return Status::verified;
    case SmallStatus::violation: return Status::counterexample;
    default: return Status::inconclusive;
  }
}

/// A computed verdict is the requested answer (exit 0) unless it is
/// INCONCLUSIVE, or --expect names a different one.
Status from_verdict(Verdict v, const std::string& expect) {
  if (!expect.empty()) return expect == to_string(v) ? Status::verified : Status::counterexample;
  return v == Verdict::inconclusive ? Status::inconclusive : Status::verified;
}

std::string upper_case(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

void check_expect(const std::string& expect) {
  if (!expect.empty() && expect != "OBSTRUCTED" && expect != "SATISFIABLE" && expect != "INCONCLUSIVE")
    throw InputError("--expect must be OBSTRUCTED, SATISFIABLE or INCONCLUSIVE");
}

std::string homology_line(const HomologyTable& h) {
  std::ostringstream os;
  for (const auto& g : h.groups()) {
    os << "  H" << g.degree << " = ";
    if (g.is_zero()) {
      os << "0";
    } else {
      bool first = true;
      if (g.rank) {
        os << h.ring().name();
        if (g.rank > 1) os << "^" << g.rank;
        first = false;
      }
      for (const auto& t : g.torsion) {
        os << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
      }
    }
    os << "\n";
  }
  auto s = os.str();
  if (!s.empty()) s.pop_back();
  return s;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

// ---------------------------------------------------------------------------

Outcome cmd_homology(const Globals& g, const std::string& ring_name, bool reduced) {
  Outcome o;
  auto inputs = load_input(g, "complex JSON");
  auto k = complex_from_json(inputs);
  auto ring = Coefficients::parse(ring_name);
  auto h = reduced ? reduced_homology(k, ring) : homology(k, ring);
  o.report.inputs = {{"complex", inputs}, {"ring", ring_name}, {"reduced", reduced}};
  o.report.details = {{"ring", ring.name()}, {"reduced", reduced}, {"dimension", k.dimension()},
                      {"f_vector", Json::array()}, {"homology", homology_to_json(h)}};
  for (int d = 0; d <= k.dimension(); ++d) o.report.details["f_vector"].push_back(k.count(d));
  o.lines.push_back(std::string(reduced ? "reduced " : "") + "homology over " + ring.name() + ", dim " + std::to_string(k.dimension()));
  o.lines.push_back(homology_line(h));
  return o;
}

Outcome cmd_diagonal(const Globals& g, const std::string& ring_name, std::optional<int> n) {
  Outcome o;
  auto inputs = load_input(g, "complex JSON");
  auto c = complex_from_json(inputs);
  auto ring = Coefficients::parse(ring_name);
  o.report.inputs = {{"complex", inputs}, {"ring", ring_name}};
  if (n) o.report.inputs["n"] = *n;

  auto delta = build_diagonal(c);
  auto ret = check_retraction(c, ring);
  auto dec = decomposition_check(c);
  std::size_t simplices = 0;
  Json star_fail = Json::array(), nbhd_fail = Json::array();
  for (const auto& s : c.all_simplices()) {
    ++simplices;
    if (!is_acyclic(delta_sigma(c, s), ring)) star_fail.push_back(c.describe(s));
    auto nb = neighborhood(c, s);
    if (!is_acyclic(nb, ring))
      nbhd_fail.push_back({{"sigma", c.describe(s)}, {"reduced_homology", homology_to_json(reduced_homology(nb, ring))}});
  }
  const bool flag = delta.flag_input();
  Json dec_rows = Json::array();
  for (const auto& r : dec.rows) dec_rows.push_back({{"i", r.i}, {"j", r.j}, {"diagonal_cells", r.diagonal_cells}, {"star_cells", r.star_cells}});
  Json& d = o.report.details;
  d["flag_input"] = flag;
  if (!flag) d["warning"] = "input is not a flag complex; acyclicity of N(sigma) is not expected";
  d["diagonal_closed"] = delta.closed();
  d["retraction"] = {{"pass", ret.pass}, {"complex", homology_to_json(ret.complex)}, {"diagonal", homology_to_json(ret.diagonal)}};
  d["decomposition"] = {{"pass", dec.pass}, {"rows", dec_rows}};
  d["stars"] = {{"simplices", simplices}, {"non_acyclic", star_fail}};
  d["neighborhoods"] = {{"simplices", simplices}, {"non_acyclic", nbhd_fail}};
  bool pass = delta.closed() && ret.pass && dec.pass && star_fail.empty() && (!flag || nbhd_fail.empty());
  o.lines.push_back(pad("diagonal closed under boundary", 34) + (delta.closed() ? "yes" : "NO"));
  o.lines.push_back(pad("H(diagonal) = H(C)", 34) + (ret.pass ? "pass" : "FAIL"));
  o.lines.push_back(pad("decomposition cell counts", 34) + (dec.pass ? "pass" : "FAIL"));
  o.lines.push_back(pad("stars acyclic", 34) + std::to_string(simplices - star_fail.size()) + "/" + std::to_string(simplices));
  o.lines.push_back(pad("N(sigma) acyclic", 34) + std::to_string(simplices - nbhd_fail.size()) + "/" + std::to_string(simplices) +
                    (flag ? "" : "  (non-flag input)"));
  if (n) {
    auto q = quotient_vanishing(c, ring, *n);
    Json e1 = Json::array();
    for (const auto& e : q.e1)
      e1.push_back({{"i", e.i}, {"j", e.j}, {"column_rank", e.column_homology.rank}, {"summed_rank", e.summed.rank}});
    d["quotient"] = {{"n", *n},
                     {"relative", homology_to_json(q.relative)},
                     {"nonvanishing_at_or_above", q.nonvanishing_at_or_above},
                     {"differentials_consistent", q.differentials_consistent},
                     {"bookkeeping_exact", q.bookkeeping_exact},
                     {"euler_consistent", q.euler_consistent},
                     {"e1_matches_decomposition", q.e1_matches_decomposition},
                     {"e1", e1},
                     {"vanishes", q.pass}};
    const bool scaffolding = q.differentials_consistent && q.bookkeeping_exact && q.euler_consistent && q.e1_matches_decomposition;
    pass = pass && scaffolding;
    o.lines.push_back(pad("double complex bookkeeping", 34) + (scaffolding ? "pass" : "FAIL"));
    std::string nv;
    for (int k : q.nonvanishing_at_or_above) nv += (nv.empty() ? "" : ",") + std::to_string(k);
    o.lines.push_back(pad("H_k(CxC, diagonal) = 0, k >= " + std::to_string(*n - 1), 34) +
                      (q.pass ? "yes" : "no, nonzero in degrees " + nv));
    o.lines.push_back("relative homology:");
    o.lines.push_back(homology_line(q.relative));
  }
  o.report.status = pass ? Status::verified : Status::counterexample;
  return o;
}

OrbitComplex orbit_input(const Globals& g, std::optional<int> join_d, std::optional<int> cc_g, Json& inputs) {
  if (join_d) {
    inputs = {{"join", *join_d}};
    return generate_join_model(*join_d);
  }
  if (cc_g) {
    inputs = {{"curve_complex", *cc_g}};
    return curve_complex_certificate(*cc_g);
  }
  inputs = load_input(g, "orbit complex JSON, or --join / --cc");
  return orbit_complex_from_json(inputs);
}

Outcome cmd_check_small(const Globals& g, std::optional<int> join_d, std::optional<int> cc_g, bool tables) {
  Outcome o;
  auto x = orbit_input(g, join_d, cc_g, o.report.inputs);
  auto r = check_small(x);
  o.report.status = from_small(r.status);
  o.report.details = small_report_json(r, tables);
  o.lines.push_back("boundary dim " + std::to_string(x.boundary_dim) + ", " + std::to_string(x.orbits.size()) + " orbits, " +
                    std::to_string(x.pairs.size()) + " pair entries");
  o.lines.push_back(pad("status", 22) + to_string(r.status) + (r.reason.empty() ? "" : " (" + r.reason + ")"));
  o.lines.push_back(pad("min slack (single)", 22) + std::to_string(r.min_slack_single));
  o.lines.push_back(pad("min slack (pairs)", 22) + std::to_string(r.min_slack_pairs));
  o.lines.push_back(pad("equality attained", 22) + (r.equality_in_single ? "yes" : "no"));
  if (r.first_violation) {
    const auto& v = *r.first_violation;
    o.lines.push_back("violation: " + v.sigma + (v.tau.empty() ? "" : " / " + v.tau) + "  lhs " + std::to_string(v.lhs) +
                      (v.strict ? " >= " : " > ") + std::to_string(v.rhs));
  }
  if (tables) {
    o.lines.push_back(pad("sigma", 28) + pad("tau", 28) + pad("hdim", 6) + "lhs  rhs  ok");
    for (const auto* rows : {&r.single, &r.pairs})
      for (const auto& row : *rows)
        o.lines.push_back(pad(row.sigma, 28) + pad(row.tau, 28) + pad(row.hdim.str(), 6) + pad(std::to_string(row.lhs), 5) +
                          pad(std::to_string(row.rhs), 5) + (row.holds ? "yes" : "NO"));
  }
  return o;
}

Outcome cmd_certificate(const Globals& g, std::optional<int> join_d, std::optional<int> cc_g) {
  Outcome o;
  auto x = orbit_input(g, join_d, cc_g, o.report.inputs);
  auto c = vanishing_certificate(x);
  o.report.status = from_small(c.status);
  o.report.details = certificate_json(c);
  o.lines.push_back("n = " + std::to_string(c.n) + ", status " + to_string(c.status) + (c.reason.empty() ? "" : " (" + c.reason + ")"));
  o.lines.push_back(pad("i", 5) + pad("j >=", 7) + "certified");
  for (const auto& b : c.bidegrees) {
    std::string blk;
    for (const auto& s : b.blocking) blk += (blk.empty() ? "  blocked by " : ", ") + s;
    o.lines.push_back(pad(std::to_string(b.i), 5) + pad(std::to_string(b.j_min), 7) + (b.certified ? "yes" : "NO") + blk);
  }
  return o;
}

Outcome cmd_sc_obstruction(const Globals& g, std::optional<int> n, std::optional<int> q, bool parity, bool chi_zero,
                           const std::string& expect) {
  Outcome o;
  check_expect(expect);
  if (parity) {
    if (!n || !q) throw InputError("--parity needs --n and --q");
    auto r = parity_obstruction(*n, *q, chi_zero);
    o.report.inputs = {{"n", *n}, {"q", *q}, {"chi_zero", chi_zero}};
    o.report.status = from_verdict(r.verdict, expect);
    o.report.details = {{"verdict", to_string(r.verdict)}, {"d", r.d}, {"all_even", r.all_even}};
    o.lines.push_back("d = n - q = " + std::to_string(r.d) + ", q-1, d, d+q-1 all even: " + (r.all_even ? "yes" : "no"));
    o.lines.push_back(std::string("verdict: ") + to_string(r.verdict));
    return o;
  }
  auto in = load_input(g, "{n, q, boundary_homology | boundary}");
  o.report.inputs = in;
  HomologySupportProblem p;
  p.n = n ? *n : detail::as_int(detail::field(in, "n"), "n");
  p.q = q ? *q : detail::as_int(detail::field(in, "q"), "q");
  if (in.contains("boundary_homology")) {
    p.boundary_homology = homology_from_json(in.at("boundary_homology"));
  } else if (in.contains("boundary")) {
    p.boundary_homology = homology(complex_from_json(in.at("boundary")), Coefficients::integers());
  } else {
    throw InputError("need 'boundary_homology' or 'boundary'");
  }
  auto r = simply_connected_obstruction(p);
  o.report.status = from_verdict(r.verdict, expect);
  o.report.details = {{"verdict", to_string(r.verdict)}, {"allowed_degrees", r.allowed}, {"offending_degrees", r.offending_degrees},
                      {"torsion_degrees", r.torsion_degrees}, {"boundary_homology", homology_to_json(p.boundary_homology)}};
  o.lines.push_back("n = " + std::to_string(p.n) + ", q = " + std::to_string(p.q));
  o.lines.push_back(homology_line(p.boundary_homology));
  std::string allowed, off;
  for (int k : r.allowed) allowed += (allowed.empty() ? "" : ",") + std::to_string(k);
  for (int k : r.offending_degrees) off += (off.empty() ? "" : ",") + std::to_string(k);
  o.lines.push_back("allowed degrees {" + allowed + "}" + (off.empty() ? "" : ", offending {" + off + "}") +
                    (r.torsion_degrees.empty() ? "" : ", torsion present"));
  o.lines.push_back(std::string("verdict: ") + to_string(r.verdict));
  return o;
}

Json spec_json(const CoordinateFlagSpec& s) { return {{"m", s.m}, {"dims", s.dims}, {"w", s.w}}; }

Outcome cmd_lemma_upper(const Globals& g, std::size_t m, bool exhaustive, std::size_t samples) {
  Outcome o;
  std::mt19937_64 rng(g.seed);
  const bool oracle = m <= 4;
  auto r = exhaustive ? lemma_upper_exhaustive(m, oracle) : lemma_upper_random(m, samples, rng, oracle);
  o.report.inputs = {{"m", m}, {"exhaustive", exhaustive}};
  if (!exhaustive) o.report.inputs["samples"] = samples;
  o.report.seed = g.seed;
  o.report.status = r.pass() ? Status::verified : Status::counterexample;
  o.report.details = {{"cases", r.cases}, {"skipped_preserving", r.skipped}, {"violations", r.violations},
                      {"min_slack", r.cases ? Json(r.min_slack) : Json()}, {"oracle_checked", r.oracle_checked},
                      {"oracle_mismatch", r.oracle_mismatch}};
  if (r.first_violation) o.report.details["first_violation"] = spec_json(*r.first_violation);
  o.lines.push_back("m = " + std::to_string(m) + (exhaustive ? ", exhaustive" : ", " + std::to_string(samples) + " samples"));
  o.lines.push_back(pad("cases", 24) + std::to_string(r.cases) + " (" + std::to_string(r.skipped) + " skipped: w preserves a member)");
  o.lines.push_back(pad("violations", 24) + std::to_string(r.violations));
  if (r.cases) o.lines.push_back(pad("min slack", 24) + std::to_string(r.min_slack));
  if (oracle) o.lines.push_back(pad("oracle agreement", 24) + std::to_string(r.oracle_checked - r.oracle_mismatch) + "/" +
                                std::to_string(r.oracle_checked));
  return o;
}

std::pair<RationalFlag, RationalFlag> flag_pair(const Json& in) {
  return {flag_from_json(detail::field(in, "E")), flag_from_json(detail::field(in, "F"))};
}

Outcome cmd_orbit_codim(const Globals& g, std::optional<std::size_t> m, std::size_t samples) {
  Outcome o;
  o.report.seed = g.seed;
  if (!m) {
    auto in = load_input(g, "{E, F} flags, or --m for a sweep");
    auto [e, f] = flag_pair(in);
    o.report.inputs = in;
    const auto se = stab_dim(e), sp = stab_pair_dim(e, f);
    const bool dj = disjoint(e, f);
    const auto codim = se - sp;
    o.report.details = {{"disjoint", dj}, {"stab_E", se}, {"stab_E_cap_stab_F", sp}, {"codim", codim}, {"length_F", f.length()}};
    if (!dj) {
      o.report.status = Status::inconclusive;
      o.report.details["note"] = "flags share a subspace; the bound applies to disjoint flags";
    } else {
      o.report.status = codim >= f.length() ? Status::verified : Status::counterexample;
    }
    o.lines.push_back("dim Stab(E) = " + std::to_string(se) + ", dim Stab(E) cap Stab(F) = " + std::to_string(sp));
    o.lines.push_back("codim = " + std::to_string(codim) + ", length(F) = " + std::to_string(f.length()) + (dj ? "" : " (not disjoint)"));
    return o;
  }
  std::mt19937_64 rng(g.seed);
  std::size_t pairs = 0, violations = 0;
  Json first;
  for (const auto& e : standard_flags(*m))
    for (const auto& f : coordinate_flags(*m))
      if (disjoint(e, f)) {
        ++pairs;
        if (orbit_codim(e, f) < f.length() && violations++ == 0) first = {{"E", flag_to_json(e)}, {"F", flag_to_json(f)}};
      }
  const std::size_t coordinate = pairs;
  for (std::size_t i = 0; i < samples; ++i) {
    auto [e, f] = random_disjoint_pair(*m, rng);
    ++pairs;
    if (orbit_codim(e, f) < f.length() && violations++ == 0) first = {{"E", flag_to_json(e)}, {"F", flag_to_json(f)}};
  }
  o.report.inputs = {{"m", *m}, {"samples", samples}};
  o.report.status = violations ? Status::counterexample : Status::verified;
  o.report.details = {{"coordinate_pairs", coordinate}, {"random_pairs", samples}, {"violations", violations}};
  if (violations) o.report.details["first_violation"] = first;
  o.lines.push_back("m = " + std::to_string(*m) + ": " + std::to_string(coordinate) + " coordinate pairs, " + std::to_string(samples) +
                    " random pairs, " + std::to_string(violations) + " violations");
  return o;
}

std::vector<std::string> slm_lines(const SlmReport& r) {
  std::string ls;
  for (auto l : r.induced_lengths) ls += (ls.empty() ? "" : ",") + std::to_string(l);
  return {pad("dim n, dim n cap Stab F", 28) + std::to_string(r.dim_n) + ", " + std::to_string(r.dim_n_cap_stab_f),
          pad("nilpotent codim", 28) + std::to_string(r.nilpotent_codim) + (r.step_nilpotent ? "" : "  (< length F0)"),
          pad("length F0", 28) + std::to_string(r.len_f0),
          pad("induced lengths L(i)", 28) + "(" + ls + ")" + (r.step_partition ? "" : "  (F0 + sum L < length F)"),
          pad("codim", 28) + std::to_string(r.codim) + (r.codim_ok ? " >= " : " < ") + "length E + length F + 1 = " +
              std::to_string(r.len_e + r.len_f + 1),
          pad("dim G/K + |s| + |t|", 28) + std::to_string(r.lhs) + (r.holds ? " < " : " >= ") + std::to_string(r.rhs)};
}

Outcome cmd_slm_check(const Globals& g, std::optional<std::size_t> m, std::size_t samples) {
  Outcome o;
  o.report.seed = g.seed;
  if (!m) {
    auto in = load_input(g, "{E, F} flags, or --m for a sweep");
    auto [e, f] = flag_pair(in);
    o.report.inputs = in;
    auto r = slm_inequality(e, f);
    o.report.status = r.pass() ? Status::verified : Status::counterexample;
    o.report.details = slm_report_json(r);
    o.lines = slm_lines(r);
    return o;
  }
  std::mt19937_64 rng(g.seed);
  std::size_t pairs = 0, violations = 0, partition_short = 0;
  Json first;
  auto run = [&](const RationalFlag& e, const RationalFlag& f) {
    auto r = slm_inequality(e, f);
    ++pairs;
    if (!r.step_partition) ++partition_short;
    if (!r.pass() && violations++ == 0) first = {{"E", flag_to_json(e)}, {"F", flag_to_json(f)}, {"report", slm_report_json(r)}};
  };
  for (const auto& e : standard_flags(*m))
    for (const auto& f : coordinate_flags(*m))
      if (disjoint(e, f)) run(e, f);
  for (std::size_t i = 0; i < samples; ++i) {
    auto [e, f] = random_disjoint_pair(*m, rng);
    run(e, f);
  }
  o.report.inputs = {{"m", *m}, {"samples", samples}};
  o.report.status = violations ? Status::counterexample : Status::verified;
  o.report.details = {{"pairs", pairs}, {"violations", violations}, {"partition_step_short", partition_short}};
  if (violations) o.report.details["first_violation"] = first;
  o.lines.push_back("m = " + std::to_string(*m) + ": " + std::to_string(pairs) + " pairs, " + std::to_string(violations) +
                    " violations, F0 + sum L short of length F on " + std::to_string(partition_short));
  return o;
}

Outcome cmd_building(std::size_t m, std::size_t q, bool emit) {
  Outcome o;
  auto b = finite_building(m, q);
  auto h = reduced_homology(b, Coefficients::integers());
  std::size_t expect = 1;
  for (std::size_t i = 0; i < m * (m - 1) / 2; ++i) expect *= q;
  bool concentrated = !h.has_torsion();
  for (const auto& gr : h.groups())
    if (gr.degree != static_cast<int>(m - 2) && !gr.is_zero()) concentrated = false;
  const auto top = h.rank(static_cast<int>(m - 2));
  o.report.inputs = {{"m", m}, {"q", q}};
  o.report.status = concentrated && top == expect ? Status::verified : Status::counterexample;
  o.report.details = {{"vertices", b.count(0)}, {"chambers", b.facets().size()}, {"expected_chambers", complete_flag_count(m, q)},
                      {"flag_complex", is_flag(b)}, {"reduced_homology", homology_to_json(h)}, {"expected_rank", expect},
                      {"concentrated", concentrated}};
  if (emit) o.report.details["complex"] = complex_to_json(b);
  o.lines.push_back("building of F_" + std::to_string(q) + "^" + std::to_string(m) + ": " + std::to_string(b.count(0)) + " subspaces, " +
                    std::to_string(b.facets().size()) + " chambers");
  o.lines.push_back("reduced homology:");
  o.lines.push_back(homology_line(h));
  o.lines.push_back("expected rank q^(m(m-1)/2) = " + std::to_string(expect) + " in degree " + std::to_string(m - 2));
  return o;
}

Outcome cmd_harer(int g, int r, int s) {
  Outcome o;
  SurfaceType t{g, r, s};
  const int d = harer_dim(t);
  o.report.inputs = {{"g", g}, {"r", r}, {"s", s}};
  o.report.details = {{"surface", t.str()}, {"hdim", d}};
  o.lines.push_back(std::to_string(d));
  return o;
}

Outcome cmd_multicurves(int g, std::optional<int> k, bool verbose) {
  Outcome o;
  if (k && (*k < 1 || *k > 3 * g - 3)) throw InputError("k must lie in 1..3g-3");
  auto by = multicurve_types_by_size(g);
  o.report.inputs = {{"g", g}};
  if (k) o.report.inputs["k"] = *k;
  Json counts = Json::array();
  o.lines.push_back(pad("k", 5) + "types");
  for (std::size_t size = 1; size < by.size(); ++size) {
    if (k && static_cast<int>(size) != *k) continue;
    Json entry{{"k", size}, {"types", by[size].size()}};
    o.lines.push_back(pad(std::to_string(size), 5) + std::to_string(by[size].size()));
    if (verbose || k) {
      Json list = Json::array();
      for (const auto& sg : by[size]) {
        list.push_back({{"type", sg.describe()}, {"hdim", multicurve_stab_hdim(sg)}, {"cut_surface", cut_surface_to_json(to_cut_surface(sg))}});
        o.lines.push_back("     " + pad(sg.describe(), 40) + "hdim " + std::to_string(multicurve_stab_hdim(sg)));
      }
      entry["list"] = list;
    }
    counts.push_back(entry);
  }
  o.report.details = {{"by_size", counts}};
  return o;
}

Outcome cmd_lemma_sweep(int g) {
  Outcome o;
  auto s = lemma_smallstabilizers_sweep(g);
  o.report.inputs = {{"g", g}};
  o.report.status = s.pass() ? Status::verified : Status::counterexample;
  auto wj = [](const SweepWitness& w) {
    return Json{{"type", w.type}, {"a_mask", w.a_mask}, {"hdim", w.hdim}, {"a", w.a}, {"b", w.b}, {"lhs", w.lhs}};
  };
  Json viol = Json::array();
  for (const auto& v : s.violations) viol.push_back(wj(v));
  o.report.details = {{"types", s.types}, {"exact_rows", s.exact_rows}, {"bound_rows", s.bound_rows}, {"rhs", s.rhs},
                      {"max_exact_lhs", s.max_exact_lhs}, {"exact_witness", wj(s.exact_witness)},
                      {"max_bound_lhs", s.max_bound_lhs}, {"bound_witness", wj(s.bound_witness)},
                      {"max_removal_increase", s.max_removal_increase}, {"removal_checks", s.removal_checks},
                      {"pants_hdims", s.pants_hdims}, {"violations", viol}};
  o.lines.push_back("genus " + std::to_string(g) + ": " + std::to_string(s.types) + " multicurve types, rhs 6g-7 = " + std::to_string(s.rhs));
  o.lines.push_back(pad("exact branch", 16) + std::to_string(s.exact_rows) + " rows, max lhs " + std::to_string(s.max_exact_lhs) +
                    " at " + s.exact_witness.type);
  o.lines.push_back(pad("bound branch", 16) + std::to_string(s.bound_rows) + " rows, max lhs " + std::to_string(s.max_bound_lhs));
  o.lines.push_back(pad("curve removal", 16) + "hdim rises by at most " + std::to_string(s.max_removal_increase));
  o.lines.push_back(pad("violations", 16) + std::to_string(s.violations.size()));
  return o;
}

Outcome cmd_cc_certificate(int g) {
  Outcome o;
  auto x = curve_complex_certificate(g);
  auto s = check_small(x);
  auto c = vanishing_certificate(x);
  o.report.inputs = {{"g", g}};
  o.report.status = s.status == SmallStatus::small && c.status == SmallStatus::small ? Status::verified : from_small(s.status);
  o.report.details = {{"orbit_complex", orbit_complex_to_json(x)}, {"check_small", small_report_json(s, false)},
                      {"certificate", certificate_json(c)}};
  o.lines.push_back("genus " + std::to_string(g) + ": " + std::to_string(x.orbits.size()) + " orbits, " + std::to_string(x.pairs.size()) +
                    " pair entries, boundary dim " + std::to_string(x.boundary_dim));
  o.lines.push_back(pad("check-small", 14) + to_string(s.status) + (s.equality_in_single ? ", equality attained" : ""));
  o.lines.push_back(pad("certificate", 14) + to_string(c.status));
  return o;
}

Outcome cmd_rank_one(int k, int m, const std::string& top, const std::string& expect) {
  Outcome o;
  check_expect(expect);
  RankOneRing r{k, m, parse_rational(top)};
  auto v = rank_one_obstruction(r);
  o.report.inputs = {{"k", k}, {"m", m}, {"top", top}};
  o.report.status = from_verdict(v, expect);
  o.report.details = {{"verdict", to_string(v)}};
  o.lines.push_back(std::string("verdict: ") + to_string(v));
  return o;
}

Outcome cmd_b2(const Globals& g, const std::string& form, const std::string& expect) {
  Outcome o;
  check_expect(expect);
  Json in = form.empty() ? load_input(g, "triple form JSON or --form") : parse_json_text(form);
  auto t = triple_form_from_json(in);
  auto r = compression_criterion_b2(t);
  o.report.inputs = in;
  o.report.status = from_verdict(r.verdict, expect);
  o.report.details = b2_report_json(r);
  for (const auto& c : r.candidates) {
    std::string line = "beta = (" + c.candidate.beta[0].get_str() + ", " + c.candidate.beta[1].get_str() + ")";
    if (c.discriminant) line += "  1-4xy = " + c.discriminant->get_str();
    if (!c.note.empty()) line += "  " + c.note;
    o.lines.push_back(line);
  }
  if (r.candidates.empty()) o.lines.push_back("no beta with beta^3 = 0 and beta^2 != 0");
  if (r.witness) o.lines.push_back("witness s = " + r.witness->s.get_str());
  o.lines.push_back(std::string("verdict: ") + to_string(r.verdict));
  return o;
}

Outcome cmd_suite(const Globals& g) {
  Outcome o;
  o.report.seed = g.seed;
  o.report.inputs = {{"seed", g.seed}};
  bool all = true;
  Json rows = Json::array();
  for (const auto& c : run_suite(g.seed)) {
    all = all && c.pass;
    rows.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"summary", c.summary}, {"details", c.details},
                    {"runtime_ms", c.runtime_ms}});
    o.lines.push_back(format_line(c));
  }
  o.report.status = all ? Status::verified : Status::counterexample;
  o.report.details = {{"criteria", rows}};
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fillings: verification toolkit for finite complexes, flag stabilizers, multicurves and cup products"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "emit the report as JSON");
  app.add_option("--seed", g.seed, "seed for randomized sweeps")->default_val(0);
  app.add_option("--in", g.in, "input JSON file");
  for (auto* opt : {"--json", "--seed", "--in"}) app.get_option(opt)->configurable(false);

  std::function<Outcome()> run;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string ring = "Z";
  bool reduced = false;
  auto* s_hom = sub("homology", "homology of a simplicial complex (--in complex.json)");
  s_hom->add_option("--ring", ring, "Z or F<p>")->default_val("Z");
  s_hom->add_flag("--reduced", reduced, "reduced homology");
  s_hom->callback([&] { run = [&] { return cmd_homology(g, ring, reduced); }; });

  std::optional<int> diag_n;
  auto* s_diag = sub("diagonal", "diagonal subcomplex checks (--in complex.json)");
  s_diag->add_option("--ring", ring, "Z or F<p>")->default_val("Z");
  s_diag->add_option("--n", diag_n, "also test H_k(CxC, diagonal) = 0 for k >= n-1");
  s_diag->callback([&] { run = [&] { return cmd_diagonal(g, ring, diag_n); }; });

  std::optional<int> join_d, cc_g;
  bool tables = false;
  auto* s_small = sub("check-small", "stabilizer inequalities for an orbit complex");
  s_small->add_option("--join", join_d, "use the d-fold join model");
  s_small->add_option("--cc", cc_g, "use the curve complex certificate of genus g");
  s_small->add_flag("--tables", tables, "print every inequality row");
  s_small->callback([&] { run = [&] { return cmd_check_small(g, join_d, cc_g, tables); }; });

  auto* s_cert = sub("certificate", "E1 vanishing certificate for an orbit complex");
  s_cert->add_option("--join", join_d, "use the d-fold join model");
  s_cert->add_option("--cc", cc_g, "use the curve complex certificate of genus g");
  s_cert->callback([&] { run = [&] { return cmd_certificate(g, join_d, cc_g); }; });

  std::optional<int> sc_n, sc_q;
  bool parity = false, chi_zero = false;
  std::string expect;
  auto* s_sc = sub("sc-obstruction", "homology-support test for a simply connected filling");
  s_sc->add_option("--n", sc_n, "dimension of the filling");
  s_sc->add_option("--q", sc_q, "connectivity parameter q");
  s_sc->add_flag("--parity", parity, "use the Euler-characteristic parity test instead");
  s_sc->add_flag("--chi-zero", chi_zero, "the boundary has Euler characteristic 0");
  s_sc->add_option("--expect", expect, "required verdict")->transform(upper_case);
  s_sc->callback([&] { run = [&] { return cmd_sc_obstruction(g, sc_n, sc_q, parity, chi_zero, expect); }; });

  std::size_t lm = 4, samples = 1000;
  bool exhaustive = false;
  auto* s_lu = sub("lemma-upper", "forced zero entries of permuted standard flags");
  s_lu->add_option("--m", lm, "ambient dimension")->check(CLI::Range(2, 12))->default_val(4);
  s_lu->add_flag("--exhaustive", exhaustive, "all dimension sets and permutations");
  s_lu->add_option("--samples", samples, "random cases when not exhaustive")->default_val(1000);
  s_lu->callback([&] {
    if (exhaustive && lm > 8) throw CLI::ValidationError("--m", "exhaustive mode supports m <= 8");
    run = [&] { return cmd_lemma_upper(g, lm, exhaustive, samples); };
  });

  std::optional<std::size_t> fm;
  std::size_t fsamples = 200;
  auto* s_oc = sub("orbit-codim", "codimension of Stab(E) cap Stab(F) in Stab(E) (--in {E,F} or --m)");
  s_oc->add_option("--m", fm, "sweep coordinate and random pairs in Q^m")->check(CLI::Range(2, 6));
  s_oc->add_option("--samples", fsamples, "random pairs in a sweep")->default_val(200);
  s_oc->callback([&] { run = [&] { return cmd_orbit_codim(g, fm, fsamples); }; });

  auto* s_slm = sub("slm-check", "codimension chain and dimension bound (--in {E,F} or --m)");
  s_slm->add_option("--m", fm, "sweep coordinate and random pairs in Q^m")->check(CLI::Range(2, 6));
  s_slm->add_option("--samples", fsamples, "random pairs in a sweep")->default_val(200);
  s_slm->callback([&] { run = [&] { return cmd_slm_check(g, fm, fsamples); }; });

  std::size_t bm = 3, bq = 2;
  bool emit = false;
  auto* s_b = sub("building", "finite building of F_q^m and its homology");
  s_b->add_option("--m", bm, "dimension")->default_val(3);
  s_b->add_option("--q", bq, "prime field size")->default_val(2);
  s_b->add_flag("--emit", emit, "include the complex in the JSON report");
  s_b->callback([&] { run = [&] { return cmd_building(bm, bq, emit); }; });

  int hg = 2, hr = 0, hs = 0;
  auto* s_h = sub("harer", "virtual cohomological dimension of Mod(S_{g,r,s})");
  s_h->add_option("--g", hg, "genus")->required();
  s_h->add_option("--r", hr, "punctures")->default_val(0);
  s_h->add_option("--s", hs, "boundary components")->default_val(0);
  s_h->callback([&] { run = [&] { return cmd_harer(hg, hr, hs); }; });

  int mg = 2;
  std::optional<int> mk;
  bool verbose = false;
  auto* s_mc = sub("multicurves", "topological types of multicurves on a closed surface");
  s_mc->add_option("--g", mg, "genus, 2..6")->required()->check(CLI::Range(2, 6));
  s_mc->add_option("--k", mk, "only k-component multicurves (listed)");
  s_mc->add_flag("--list", verbose, "list every type");
  s_mc->callback([&] { run = [&] { return cmd_multicurves(mg, mk, verbose); }; });

  int sg = 2;
  auto* s_sw = sub("lemma-sweep", "stabilizer dimension sweep over multicurve splits");
  s_sw->add_option("--g", sg, "genus, 2..6")->required()->check(CLI::Range(2, 6));
  s_sw->callback([&] { run = [&] { return cmd_lemma_sweep(sg); }; });

  int cg = 2;
  auto* s_cc = sub("cc-certificate", "orbit certificate for the curve complex");
  s_cc->add_option("--g", cg, "genus, 2 or 3")->required()->check(CLI::Range(2, 3));
  s_cc->callback([&] { run = [&] { return cmd_cc_certificate(cg); }; });

  int rk = 2, rm = 3;
  std::string rtop = "1";
  auto* s_r1 = sub("rank-one", "rank-one cup-power test");
  s_r1->add_option("--k", rk, "degree of the class")->default_val(2);
  s_r1->add_option("--m", rm, "power")->default_val(3);
  s_r1->add_option("--top", rtop, "value of the top power on the fundamental class")->default_val("1");
  s_r1->add_option("--expect", expect, "required verdict")->transform(upper_case);
  s_r1->callback([&] { run = [&] { return cmd_rank_one(rk, rm, rtop, expect); }; });

  std::string form;
  auto* s_b2 = sub("b2-criterion", "b2 = 2 surjection criterion for a triple form");
  s_b2->add_option("--form", form, R"(triple form, e.g. {"c111":"1","c112":"2","c122":"1","c222":"0"})");
  s_b2->add_option("--expect", expect, "required verdict")->transform(upper_case);
  s_b2->callback([&] { run = [&] { return cmd_b2(g, form, expect); }; });

  auto* s_suite = sub("suite", "run the acceptance battery");
  s_suite->callback([&] { run = [&] { return cmd_suite(g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code(Status::error);
  }

  std::string command;
  for (auto* s : app.get_subcommands()) command = s->get_name();
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    out = run();
  } catch (const std::exception& e) {
    // Input, precondition, JSON type and arithmetic-limit errors all end here.
    out.report.status = Status::error;
    out.report.details = {{"error", e.what()}};
    out.lines = {std::string("error: ") + e.what()};
  }
  out.report.command = command;
  out.report.seed = g.seed;
  out.report.runtime_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());

  if (g.json) {
    std::cout << out.report.to_json().dump(2) << "\n";
  } else {
    auto& os = out.report.status == Status::error ? std::cerr : std::cout;
    for (const auto& l : out.lines) os << l << "\n";
    if (command != "harer" || out.report.status == Status::error) os << "status: " << to_string(out.report.status) << "\n";
  }
  return exit_code(out.report.status);
}
