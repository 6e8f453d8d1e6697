#pragma once

// Orbit data for a Γ-complex with stabilizer homological dimensions, the two
// smallness inequalities, the E^1 vanishing certificate, and the
// homology-support tests for simply connected fillings.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fillings/chaincore.hpp"
#include "fillings/error.hpp"
#include "fillings/verdict.hpp"

namespace fillings {

/// A homological dimension, exact or an upper bound "≤b".
struct HdimValue {
  int value = 0;
  bool bound = false;

  static HdimValue exact(int v) { return {v, false}; }
  static HdimValue at_most(int v) { return {v, true}; }

  /// Accepts "3", "≤3" or "<=3".
  static HdimValue parse(const std::string& text) {
    std::string s = text;
    bool b = false;
    if (s.rfind("≤", 0) == 0) {
      s = s.substr(3);
      b = true;
    } else if (s.rfind("<=", 0) == 0) {
      s = s.substr(2);
      b = true;
    }
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError("bad hdim value '" + text + "'");
    return {std::stoi(s), b};
  }

  [[nodiscard]] std::string str() const { return (bound ? "<=" : "") + std::to_string(value); }
  friend bool operator==(const HdimValue&, const HdimValue&) = default;
};

struct SimplexOrbit {
  std::string label;
  int dim = 0;  // |σ|
  HdimValue hdim;
};

/// hdim(Stab σ ∩ Stab τ) for one configuration of an unordered orbit pair.
struct PairEntry {
  std::string a;
  std::string b;
  bool disjoint = true;  // representatives can be chosen disjoint
  HdimValue hdim;
  std::string pattern;   // free-text configuration tag
};

struct OrbitComplex {
  int boundary_dim = 0;
  std::vector<SimplexOrbit> orbits;
  std::vector<PairEntry> pairs;
  bool complete = false;
  bool include_empty = false;
  std::optional<HdimValue> group_hdim;  // hdim Γ, used for the empty simplex
  std::string provenance;

  [[nodiscard]] const SimplexOrbit* find(const std::string& label) const {
    for (const auto& o : orbits)
      if (o.label == label) return &o;
    return nullptr;
  }

  /// Labels unique, dims ≥ 0, pair entries name known orbits.
  void validate() const {
    std::set<std::string> seen;
    for (const auto& o : orbits) {
      if (!seen.insert(o.label).second) throw InputError("duplicate orbit label '" + o.label + "'");
      if (o.dim < 0) throw InputError("orbit '" + o.label + "' has negative dimension");
      if (o.hdim.value < 0) throw InputError("orbit '" + o.label + "' has negative hdim");
    }
    for (const auto& p : pairs) {
      if (!find(p.a) || !find(p.b)) throw InputError("pair entry names unknown orbit '" + (find(p.a) ? p.b : p.a) + "'");
      if (p.hdim.value < 0) throw InputError("pair entry has negative hdim");
    }
    if (include_empty && !group_hdim) throw InputError("include_empty needs group_hdim");
  }
};

enum class SmallStatus { small, violation, inconclusive };

inline const char* to_string(SmallStatus s) {
  switch (s) {
    case SmallStatus::small: return "small";
    case SmallStatus::violation: return "violation";
    default: return "inconclusive";
  }
}

struct InequalityRow {
  std::string sigma;
  std::string tau;  // empty for the single-simplex inequality
  std::string pattern;
  HdimValue hdim;
  int lhs = 0;    // hdim + |σ| (+ |τ|)
  int rhs = 0;    // dim ∂
  bool strict = false;
  bool holds = false;
  [[nodiscard]] int slack() const { return strict ? rhs - 1 - lhs : rhs - lhs; }
};

struct SmallReport {
  SmallStatus status = SmallStatus::inconclusive;
  std::string reason;
  std::vector<InequalityRow> single;  // hdim Stab σ + |σ| ≤ dim ∂
  std::vector<InequalityRow> pairs;   // pair inequality over disjoint-capable pairs
  std::optional<InequalityRow> first_violation;
  int min_slack_single = 0;
  int min_slack_pairs = 0;
  bool equality_in_single = false;  // some orbit attains hdim + |σ| = dim ∂
  bool uses_bounds = false;
};

namespace detail {
inline SimplexOrbit empty_orbit(const OrbitComplex& x) { return {"∅", -1, *x.group_hdim}; }

/// Disjoint-capable pair entries, with those induced by the empty simplex when requested.
inline std::vector<PairEntry> effective_pairs(const OrbitComplex& x) {
  std::vector<PairEntry> out;
  for (const auto& p : x.pairs)
    if (p.disjoint) out.push_back(p);
  if (x.include_empty) {
    // Stab(∅) = Γ, so Stab(∅) ∩ Stab(τ) = Stab(τ).
    out.push_back({"∅", "∅", true, *x.group_hdim, "empty"});
    for (const auto& o : x.orbits) out.push_back({"∅", o.label, true, o.hdim, "empty"});
  }
  return out;
}

inline int orbit_dim(const OrbitComplex& x, const std::string& label) {
  if (label == "∅") return -1;
  return x.find(label)->dim;
}
}  // namespace detail

/// The single-simplex inequality hdim Stab σ + |σ| ≤ dim ∂ and the pair
/// inequality hdim(Stab σ ∩ Stab τ) + |σ| + |τ| < dim ∂ over disjoint-capable pairs. Bounds "≤b" are used as b.
inline SmallReport check_small(const OrbitComplex& x) {
  x.validate();
  SmallReport r;
  if (!x.complete) {
    r.status = SmallStatus::inconclusive;
    r.reason = "pair table not marked complete";
    return r;
  }
  r.status = SmallStatus::small;
  std::vector<SimplexOrbit> orbits = x.orbits;
  if (x.include_empty) orbits.insert(orbits.begin(), detail::empty_orbit(x));
  bool first1 = true, first2 = true;
  for (const auto& o : orbits) {
    InequalityRow row{o.label, "", "", o.hdim, o.hdim.value + o.dim, x.boundary_dim, false, false};
    row.holds = row.lhs <= row.rhs;
    if (o.hdim.bound) r.uses_bounds = true;
    if (row.lhs == row.rhs) r.equality_in_single = true;
    r.min_slack_single = first1 ? row.slack() : std::min(r.min_slack_single, row.slack());
    first1 = false;
    if (!row.holds && !r.first_violation) r.first_violation = row;
    r.single.push_back(row);
  }
  for (const auto& p : detail::effective_pairs(x)) {
    const int lhs = p.hdim.value + detail::orbit_dim(x, p.a) + detail::orbit_dim(x, p.b);
    InequalityRow row{p.a, p.b, p.pattern, p.hdim, lhs, x.boundary_dim, true, lhs < x.boundary_dim};
    if (p.hdim.bound) r.uses_bounds = true;
    r.min_slack_pairs = first2 ? row.slack() : std::min(r.min_slack_pairs, row.slack());
    first2 = false;
    if (!row.holds && !r.first_violation) r.first_violation = row;
    r.pairs.push_back(row);
  }
  if (r.first_violation) {
    r.status = SmallStatus::violation;
    r.reason = r.first_violation->tau.empty() ? "single-simplex inequality fails" : "pair inequality fails";
  }
  return r;
}

struct CertificateRow {
  std::string sigma;
  std::string tau;
  std::string pattern;
  HdimValue hdim;  // hdim(Stab_{Stab σ}(τ))
  int tau_dim = 0;
  int bound = 0;   // n - 1 - |σ|
  bool holds = false;
};

struct BidegreeStatus {
  int i = 0;      // |σ|
  int j_min = 0;  // every j ≥ j_min with i + j ≥ n - 1 is covered
  bool certified = false;
  std::vector<std::string> blocking;  // orbit pairs that fail
};

struct VanishingCertificate {
  SmallStatus status = SmallStatus::inconclusive;
  std::string reason;
  int n = 0;  // dim M = boundary_dim + 1
  std::vector<CertificateRow> rows;
  std::vector<BidegreeStatus> bidegrees;
  [[nodiscard]] std::vector<std::pair<int, int>> uncertified() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& b : bidegrees)
      if (!b.certified) out.emplace_back(b.i, b.j_min);
    return out;
  }
};

/// E^1_{i,j} = ⊕_{|σ|=i} H_j^{Stab σ}(C, Δ_σ) vanishes for i + j ≥ n - 1 when
/// hdim(Stab_{Stab σ}(τ)) + |τ| < n - 1 - |σ| for every τ disjoint from σ.
/// Runs on any complete table: a failing row names the bidegree it leaves open.
inline VanishingCertificate vanishing_certificate(const OrbitComplex& x) {
  x.validate();
  VanishingCertificate c;
  c.n = x.boundary_dim + 1;
  if (!x.complete) {
    c.reason = "pair table not marked complete";
    return c;
  }
  std::map<int, BidegreeStatus> by_i;
  for (const auto& o : x.orbits) {
    auto& b = by_i[o.dim];
    b.i = o.dim;
    b.j_min = std::max(0, c.n - 1 - o.dim);
    b.certified = true;
  }
  if (x.include_empty) by_i[-1] = {-1, c.n, true, {}};
  for (const auto& p : detail::effective_pairs(x)) {
    const int da = detail::orbit_dim(x, p.a), db = detail::orbit_dim(x, p.b);
    // The pair is unordered: it enters the column of each endpoint.
    for (int side = 0; side < 2; ++side) {
      if (side == 1 && p.a == p.b) break;
      const auto& s = side ? p.b : p.a;
      const auto& t = side ? p.a : p.b;
      const int ds = side ? db : da, dt = side ? da : db;
      CertificateRow row{s, t, p.pattern, p.hdim, dt, c.n - 1 - ds, false};
      row.holds = p.hdim.value + dt < row.bound;
      if (!row.holds) by_i[ds].certified = false, by_i[ds].blocking.push_back(s + "|" + t);
      c.rows.push_back(row);
    }
  }
  for (auto& [i, b] : by_i) c.bidegrees.push_back(b);
  c.status = c.uncertified().empty() ? SmallStatus::small : SmallStatus::violation;
  if (c.status == SmallStatus::violation) c.reason = "some bidegrees cannot be certified zero";
  return c;
}

/// Orbit data for the d-fold join X_1 * ... * X_d under F_2^d, where
/// X_i = F_2 / <[a_i, b_i]>. Simplex orbits are the nonempty factor subsets.
inline OrbitComplex generate_join_model(int d) {
  if (d < 2) throw PreconditionError("join model needs d >= 2");
  if (d > 16) throw PreconditionError("join model limited to d <= 16");
  OrbitComplex x;
  x.boundary_dim = 2 * d - 1;
  x.complete = true;
  x.include_empty = false;
  x.group_hdim = HdimValue::exact(d);
  x.provenance = "join model d=" + std::to_string(d);
  auto label = [&](unsigned mask) {
    std::string s = "{";
    for (int k = 0; k < d; ++k)
      if (mask >> k & 1u) s += (s.size() > 1 ? "," : "") + std::to_string(k + 1);
    return s + "}";
  };
  const unsigned full = (1u << d) - 1;
  // A chosen factor contributes the cyclic stabilizer of a vertex, an unchosen
  // one the whole free group: hdim 1 either way.
  for (unsigned s = 1; s <= full; ++s)
    x.orbits.push_back({label(s), std::popcount(s) - 1, HdimValue::exact(d)});
  // Distinct vertices of X_k have distinct conjugate stabilizers, which meet trivially.
  for (unsigned s = 1; s <= full; ++s)
    for (unsigned t = s; t <= full; ++t)
      x.pairs.push_back({label(s), label(t), true, HdimValue::exact(d - std::popcount(s & t)), "distinct vertices"});
  return x;
}

// ---------------------------------------------------------------------------
// Simply connected fillings

struct HomologySupportProblem {
  int n = 0;  // dim M
  int q = 0;  // universal cover of ∂ ≃ wedge of (q-1)-spheres
  HomologyTable boundary_homology;
};

struct SupportReport {
  Verdict verdict = Verdict::inconclusive;
  std::vector<int> allowed;
  std::vector<int> offending_degrees;
  std::vector<int> torsion_degrees;
};

/// OBSTRUCTED when H_*(∂) has torsion or is nonzero outside {0, q-1, n-q, n-1}.
inline SupportReport simply_connected_obstruction(const HomologySupportProblem& p) {
  if (p.q < 1 || p.q > p.n) throw InputError("need 1 <= q <= n");
  SupportReport r;
  r.allowed = {0, p.q - 1, p.n - p.q, p.n - 1};
  std::sort(r.allowed.begin(), r.allowed.end());
  r.allowed.erase(std::unique(r.allowed.begin(), r.allowed.end()), r.allowed.end());
  for (const auto& g : p.boundary_homology.groups()) {
    if (!g.torsion.empty()) r.torsion_degrees.push_back(g.degree);
    if (!g.is_zero() && !std::binary_search(r.allowed.begin(), r.allowed.end(), g.degree))
      r.offending_degrees.push_back(g.degree);
  }
  r.verdict = r.torsion_degrees.empty() && r.offending_degrees.empty() ? Verdict::inconclusive : Verdict::obstructed;
  return r;
}

struct ParityReport {
  Verdict verdict = Verdict::inconclusive;
  int d = 0;  // n - q
  bool all_even = false;
};

/// With d = n - q: χ(∂) = 0 and q-1, d, d+q-1 all even force odd-degree
/// homology outside the allowed support.
inline ParityReport parity_obstruction(int n, int q, bool chi_zero) {
  if (q < 1 || q > n) throw InputError("need 1 <= q <= n");
  ParityReport r;
  r.d = n - q;
  r.all_even = (q - 1) % 2 == 0 && r.d % 2 == 0 && (r.d + q - 1) % 2 == 0;
  r.verdict = chi_zero && r.all_even ? Verdict::obstructed : Verdict::inconclusive;
  return r;
}

}  // namespace fillings
