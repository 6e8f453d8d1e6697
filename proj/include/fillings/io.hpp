#pragma once

// JSON formats for complexes, homology tables, orbit data, flags, cut
// surfaces and triple forms, and the report envelope shared by the CLI.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "fillings/buildings.hpp"
#include "fillings/chaincore.hpp"
#include "fillings/curves.hpp"
#include "fillings/kahler.hpp"
#include "fillings/smallness.hpp"

namespace fillings {

using Json = nlohmann::ordered_json;

namespace detail {
inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline Rational as_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("rational values must be strings \"p/q\" or integers");
}

inline Json rational_json(const Rational& r) { return r.get_str(); }
}  // namespace detail

/// Reads a whole file; throws InputError if it cannot be opened or parsed.
inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Complexes and homology

/// {"vertices": [...], "facets": [[...], ...]}. Declared vertices that no
/// facet uses become isolated points.
inline SimplicialComplex complex_from_json(const Json& j) {
  const auto& jv = detail::field(j, "vertices");
  const auto& jf = detail::field(j, "facets");
  if (!jv.is_array() || !jf.is_array()) throw InputError("'vertices' and 'facets' must be arrays");
  SimplicialComplex::Labels labels;
  for (const auto& v : jv) {
    if (v.is_string()) labels.push_back(v.get<std::string>());
    else if (v.is_number_integer()) labels.push_back(std::to_string(v.get<long>()));
    else throw InputError("vertex labels must be strings or integers");
  }
  std::vector<std::vector<std::string>> facets;
  std::set<std::string> used;
  for (const auto& f : jf) {
    if (!f.is_array()) throw InputError("each facet must be an array");
    std::vector<std::string> fs;
    for (const auto& v : f) {
      if (v.is_string()) fs.push_back(v.get<std::string>());
      else if (v.is_number_integer()) fs.push_back(std::to_string(v.get<long>()));
      else throw InputError("vertex labels must be strings or integers");
    }
    used.insert(fs.begin(), fs.end());
    facets.push_back(std::move(fs));
  }
  if (facets.empty() && labels.empty()) throw InputError("empty complex");
  for (const auto& l : labels)
    if (!used.count(l)) facets.push_back({l});
  return SimplicialComplex::from_facets(labels, facets);
}

inline Json complex_to_json(const SimplicialComplex& k) {
  Json j;
  j["vertices"] = k.labels();
  Json facets = Json::array();
  for (const auto& f : k.facets()) {
    Json fj = Json::array();
    for (auto v : f) fj.push_back(k.labels()[v]);
    facets.push_back(fj);
  }
  j["facets"] = facets;
  return j;
}

inline Json homology_to_json(const HomologyTable& h) {
  Json out = Json::array();
  for (const auto& g : h.groups()) {
    Json t = Json::array();
    for (const auto& d : g.torsion) {
      if (d.fits_slong_p()) t.push_back(d.get_si());
      else t.push_back(d.get_str());
    }
    out.push_back({{"degree", g.degree}, {"rank", g.rank}, {"torsion", t}});
  }
  return out;
}

/// A list of {"degree", "rank", "torsion"} entries, missing degrees are zero.
inline HomologyTable homology_from_json(const Json& j, const Coefficients& ring = Coefficients::integers(),
                                        bool reduced = false) {
  if (!j.is_array()) throw InputError("homology must be a list of {degree, rank, torsion}");
  int top = -1;
  for (const auto& e : j) top = std::max(top, detail::as_int(detail::field(e, "degree"), "degree"));
  std::vector<HomologyGroup> groups(static_cast<std::size_t>(top + 1));
  for (int d = 0; d <= top; ++d) groups[static_cast<std::size_t>(d)].degree = d;
  std::set<int> seen;
  for (const auto& e : j) {
    const int d = detail::as_int(detail::field(e, "degree"), "degree");
    if (d < 0) throw InputError("homology degree must be nonnegative");
    if (!seen.insert(d).second) throw InputError("homology degree listed twice");
    auto& g = groups[static_cast<std::size_t>(d)];
    const int r = e.contains("rank") ? detail::as_int(e.at("rank"), "rank") : 0;
    if (r < 0) throw InputError("homology rank must be nonnegative");
    g.rank = static_cast<std::size_t>(r);
    if (e.contains("torsion")) {
      for (const auto& t : e.at("torsion")) {
        Integer z = t.is_string() ? Integer(t.get<std::string>()) : Integer(t.get<long>());
        if (z <= 1) throw InputError("torsion invariant factors must exceed 1");
        g.torsion.push_back(z);
      }
      std::sort(g.torsion.begin(), g.torsion.end());
    }
  }
  return HomologyTable(ring, std::move(groups), reduced);
}

// ---------------------------------------------------------------------------
// Orbit data

inline HdimValue hdim_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.get<long>() < 0) throw InputError("hdim must be nonnegative");
    return HdimValue::exact(j.get<int>());
  }
  if (j.is_string()) return HdimValue::parse(j.get<std::string>());
  throw InputError("hdim must be an integer or a string like \"<=3\"");
}

inline Json hdim_to_json(const HdimValue& h) {
  if (!h.bound) return h.value;
  return h.str();
}

inline OrbitComplex orbit_complex_from_json(const Json& j) {
  OrbitComplex x;
  x.boundary_dim = detail::as_int(detail::field(j, "boundary_dim"), "boundary_dim");
  const auto& c = detail::field(j, "complete");
  if (!c.is_boolean()) throw InputError("'complete' must be true or false");
  x.complete = c.get<bool>();
  if (j.contains("include_empty")) x.include_empty = j.at("include_empty").get<bool>();
  if (j.contains("group_hdim")) x.group_hdim = hdim_from_json(j.at("group_hdim"));
  if (j.contains("provenance")) x.provenance = j.at("provenance").get<std::string>();
  for (const auto& o : detail::field(j, "orbits"))
    x.orbits.push_back({detail::field(o, "label").get<std::string>(), detail::as_int(detail::field(o, "dim"), "dim"),
                        hdim_from_json(detail::field(o, "hdim"))});
  if (j.contains("pairs"))
    for (const auto& p : j.at("pairs")) {
      PairEntry e;
      e.a = detail::field(p, "a").get<std::string>();
      e.b = detail::field(p, "b").get<std::string>();
      e.disjoint = p.contains("disjoint") ? p.at("disjoint").get<bool>() : true;
      e.hdim = hdim_from_json(detail::field(p, "hdim"));
      if (p.contains("pattern")) e.pattern = p.at("pattern").get<std::string>();
      x.pairs.push_back(std::move(e));
    }
  x.validate();
  return x;
}

inline Json orbit_complex_to_json(const OrbitComplex& x) {
  Json j;
  j["boundary_dim"] = x.boundary_dim;
  j["complete"] = x.complete;
  j["include_empty"] = x.include_empty;
  if (x.group_hdim) j["group_hdim"] = hdim_to_json(*x.group_hdim);
  j["provenance"] = x.provenance;
  Json orbits = Json::array();
  for (const auto& o : x.orbits) orbits.push_back({{"label", o.label}, {"dim", o.dim}, {"hdim", hdim_to_json(o.hdim)}});
  j["orbits"] = orbits;
  Json pairs = Json::array();
  for (const auto& p : x.pairs)
    pairs.push_back({{"a", p.a}, {"b", p.b}, {"disjoint", p.disjoint}, {"hdim", hdim_to_json(p.hdim)}, {"pattern", p.pattern}});
  j["pairs"] = pairs;
  return j;
}

inline Json inequality_row_json(const InequalityRow& r) {
  Json j{{"sigma", r.sigma}};
  if (!r.tau.empty()) j["tau"] = r.tau;
  if (!r.pattern.empty()) j["pattern"] = r.pattern;
  j["hdim"] = hdim_to_json(r.hdim);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["relation"] = r.strict ? "<" : "<=";
  j["holds"] = r.holds;
  return j;
}

inline Json small_report_json(const SmallReport& r, bool full_tables) {
  Json j{{"status", to_string(r.status)}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["orbits_checked"] = r.single.size();
  j["pairs_checked"] = r.pairs.size();
  j["min_slack_single"] = r.min_slack_single;
  j["min_slack_pairs"] = r.min_slack_pairs;
  j["equality_in_single"] = r.equality_in_single;
  j["uses_bounds"] = r.uses_bounds;
  if (r.first_violation) j["first_violation"] = inequality_row_json(*r.first_violation);
  if (full_tables) {
    Json s = Json::array(), p = Json::array();
    for (const auto& row : r.single) s.push_back(inequality_row_json(row));
    for (const auto& row : r.pairs) p.push_back(inequality_row_json(row));
    j["single"] = s;
    j["pairs"] = p;
  }
  return j;
}

inline Json certificate_json(const VanishingCertificate& c) {
  Json j{{"status", to_string(c.status)}, {"n", c.n}};
  if (!c.reason.empty()) j["reason"] = c.reason;
  Json b = Json::array();
  for (const auto& s : c.bidegrees) {
    Json e{{"i", s.i}, {"j_min", s.j_min}, {"certified", s.certified}};
    if (!s.blocking.empty()) e["blocking"] = s.blocking;
    b.push_back(e);
  }
  j["bidegrees"] = b;
  Json rows = Json::array();
  for (const auto& r : c.rows)
    rows.push_back({{"sigma", r.sigma}, {"tau", r.tau}, {"pattern", r.pattern}, {"hdim", hdim_to_json(r.hdim)},
                    {"tau_dim", r.tau_dim}, {"bound", r.bound}, {"holds", r.holds}});
  j["table"] = rows;
  return j;
}

// ---------------------------------------------------------------------------
// Flags

/// {"m": 3, "subspaces": [[["1","0","0"]], [["1","0","0"],["0","1","0"]]]}
inline RationalFlag flag_from_json(const Json& j) {
  const int m = detail::as_int(detail::field(j, "m"), "m");
  if (m < 1) throw InputError("m must be positive");
  std::vector<QMatrix> spans;
  for (const auto& sub : detail::field(j, "subspaces")) {
    QMatrix b(0, static_cast<std::size_t>(m));
    for (const auto& row : sub) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(m)) throw InputError("flag vectors must have m entries");
      std::vector<Rational> v;
      for (const auto& x : row) v.push_back(detail::as_rational(x));
      b.append_row(v);
    }
    spans.push_back(std::move(b));
  }
  return RationalFlag(static_cast<std::size_t>(m), spans);
}

inline Json flag_to_json(const RationalFlag& f) {
  Json subs = Json::array();
  for (const auto& s : f.subspaces()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < s.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < s.cols(); ++c) row.push_back(s(r, c).get_str());
      rows.push_back(row);
    }
    subs.push_back(rows);
  }
  return {{"m", f.ambient()}, {"subspaces", subs}};
}

inline Json slm_report_json(const SlmReport& r) {
  return {{"m", r.m},
          {"length_E", r.len_e},
          {"length_F", r.len_f},
          {"dim_N", r.dim_n},
          {"dim_N_cap_stab_F", r.dim_n_cap_stab_f},
          {"dim_N_mod_stab_F", r.nilpotent_codim},
          {"induced_lengths", r.induced_lengths},
          {"sum_L", r.sum_l},
          {"length_F0", r.len_f0},
          {"codim", r.codim},
          {"step_nilpotent_ge_F0", r.step_nilpotent},
          {"step_partition_F0_plus_L_ge_F", r.step_partition},
          {"codim_ge_lenE_lenF_1", r.codim_ok},
          {"dim_G_mod_K", r.dim_gk},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"holds", r.holds}};
}

// ---------------------------------------------------------------------------
// Cut surfaces

/// {"closed_genus": 2, "pieces": [{"g":1,"r":1,"s":1}],
///  "curve_edges": [{"a":0,"b":0,"puncture":"a"}]}
inline CutSurfaceGraph cut_surface_from_json(const Json& j) {
  CutSurfaceGraph c;
  c.closed_genus = detail::as_int(detail::field(j, "closed_genus"), "closed_genus");
  for (const auto& p : detail::field(j, "pieces"))
    c.pieces.push_back({detail::as_int(detail::field(p, "g"), "g"), detail::as_int(detail::field(p, "r"), "r"),
                        detail::as_int(detail::field(p, "s"), "s")});
  for (const auto& e : detail::field(j, "curve_edges")) {
    CurveEdge ce{detail::as_int(detail::field(e, "a"), "a"), detail::as_int(detail::field(e, "b"), "b"), true};
    if (e.contains("puncture")) {
      const auto side = e.at("puncture").get<std::string>();
      if (side != "a" && side != "b") throw InputError("'puncture' must be \"a\" or \"b\"");
      ce.a_gets_puncture = side == "a";
    }
    c.curve_edges.push_back(ce);
  }
  c.validate();
  return c;
}

inline Json cut_surface_to_json(const CutSurfaceGraph& c) {
  Json pieces = Json::array(), edges = Json::array();
  for (const auto& p : c.pieces) pieces.push_back({{"g", p.g}, {"r", p.r}, {"s", p.s}});
  for (const auto& e : c.curve_edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"puncture", e.a_gets_puncture ? "a" : "b"}});
  return {{"closed_genus", c.closed_genus}, {"pieces", pieces}, {"curve_edges", edges}};
}

// ---------------------------------------------------------------------------
// Triple forms

inline TripleForm triple_form_from_json(const Json& j) {
  TripleForm t;
  t.c111 = detail::as_rational(detail::field(j, "c111"));
  t.c112 = detail::as_rational(detail::field(j, "c112"));
  t.c122 = detail::as_rational(detail::field(j, "c122"));
  t.c222 = detail::as_rational(detail::field(j, "c222"));
  t.validate();
  return t;
}

inline Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

inline Json b2_report_json(const B2Report& r) {
  Json j{{"verdict", to_string(r.verdict)}};
  Json cands = Json::array();
  for (const auto& o : r.candidates) {
    Json c{{"beta", rationals_json(o.candidate.beta)},
           {"int_w2_beta", o.candidate.w2b.get_str()},
           {"int_w_beta2", o.candidate.wb2.get_str()},
           {"int_beta3", o.candidate.b3.get_str()}};
    if (o.x) c["x"] = o.x->get_str();
    if (o.y) c["y"] = o.y->get_str();
    if (o.discriminant) c["one_minus_4xy"] = o.discriminant->get_str();
    c["s_roots"] = rationals_json(o.s_roots);
    if (o.zero_root) c["s_zero_root"] = true;
    if (!o.note.empty()) c["note"] = o.note;
    cands.push_back(c);
  }
  j["candidates"] = cands;
  if (r.witness)
    j["witness"] = {{"beta", rationals_json(r.witness->beta)},
                    {"s", r.witness->s.get_str()},
                    {"x", r.witness->x.get_str()},
                    {"y", r.witness->y.get_str()}};
  return j;
}

// ---------------------------------------------------------------------------
// Reports

/// FNV-1a 64 of the canonical (compact, key-ordered) JSON text.
inline std::string digest(const Json& inputs) {
  const std::string text = nlohmann::json(inputs).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

enum class Status { verified, counterexample, inconclusive, error };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::counterexample: return "counterexample";
    case Status::inconclusive: return "inconclusive";
    default: return "error";
  }
}

inline int exit_code(Status s) {
  switch (s) {
    case Status::verified: return 0;
    case Status::counterexample: return 1;
    case Status::inconclusive: return 2;
    default: return 3;
  }
}

struct Report {
  std::string command;
  Json inputs = Json::object();
  Status status = Status::verified;
  Json details = Json::object();
  std::uint64_t seed = 0;
  long runtime_ms = 0;

  [[nodiscard]] Json to_json(bool with_runtime = true) const {
    Json j{{"command", command}, {"inputs_digest", digest(inputs)}, {"status", to_string(status)},
           {"details", details}, {"seed", seed}};
    if (with_runtime) j["runtime_ms"] = runtime_ms;
    return j;
  }
};

}  // namespace fillings
