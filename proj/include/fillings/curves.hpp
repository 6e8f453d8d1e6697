#pragma once

// Harer's dimension formulas for surface mapping class groups, cutting along
// curves, topological types of multicurves on a closed surface, and the
// stabilizer-dimension sweep behind the curve complex certificate.
//
// A multicurve type is recorded by its dual graph: one vertex per piece of
// the cut surface labelled by genus, one edge per curve (loops allowed).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fillings/error.hpp"
#include "fillings/smallness.hpp"

namespace fillings {

struct SurfaceType {
  int g = 0;  // genus
  int r = 0;  // punctures
  int s = 0;  // boundary components

  [[nodiscard]] bool in_range() const { return g >= 0 && r >= 0 && s >= 0 && 2 * g + r + s > 2; }
  [[nodiscard]] std::string str() const {
    return "(" + std::to_string(g) + "," + std::to_string(r) + "," + std::to_string(s) + ")";
  }
  friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

/// Virtual homological dimension d(g, r, s), valid for 2g + r + s > 2.
inline int harer_dim(const SurfaceType& t) {
  if (!t.in_range()) throw PreconditionError("surface " + t.str() + " is outside 2g+r+s>2");
  if (t.g == 0) return 2 * t.r + t.s - 3;
  if (t.r + t.s == 0) return 4 * t.g - 5;
  return 4 * t.g - 4 + 2 * t.r + t.s;
}

struct SeparatingSplit {
  int g1 = 0, r1 = 0, s1 = 0;
};

/// Nonseparating: (g-1, r+1, s+1). Separating with (g1, r1, s1) on one side:
/// [(g1, r1+1, s1), (g2, r2, s2+1)].
inline std::vector<SurfaceType> cut_nonseparating(const SurfaceType& t) {
  if (!t.in_range()) throw PreconditionError("surface " + t.str() + " is outside 2g+r+s>2");
  if (t.g < 1) throw PreconditionError("nonseparating curve needs genus >= 1");
  SurfaceType out{t.g - 1, t.r + 1, t.s + 1};
  if (!out.in_range()) throw PreconditionError("cut piece " + out.str() + " is outside 2g+r+s>2");
  return {out};
}

inline std::vector<SurfaceType> cut_separating(const SurfaceType& t, const SeparatingSplit& p) {
  if (!t.in_range()) throw PreconditionError("surface " + t.str() + " is outside 2g+r+s>2");
  const int g2 = t.g - p.g1, r2 = t.r - p.r1, s2 = t.s - p.s1;
  if (p.g1 < 0 || p.r1 < 0 || p.s1 < 0 || g2 < 0 || r2 < 0 || s2 < 0)
    throw InputError("separating split does not partition " + t.str());
  SurfaceType a{p.g1, p.r1 + 1, p.s1}, b{g2, r2, s2 + 1};
  if (!a.in_range() || !b.in_range())
    throw PreconditionError("separating split gives a piece outside 2g+r+s>2");
  return {a, b};
}

// ---------------------------------------------------------------------------
// Dual graphs

struct StableGraph {
  std::vector<int> genus;                  // per piece
  std::vector<std::pair<int, int>> edges;  // curves, u <= v; u == v is a loop

  [[nodiscard]] int vertices() const { return static_cast<int>(genus.size()); }
  [[nodiscard]] int curves() const { return static_cast<int>(edges.size()); }
  [[nodiscard]] int valence(int v) const {
    int n = 0;
    for (auto [a, b] : edges) n += (a == v) + (b == v);
    return n;
  }
  [[nodiscard]] bool connected() const {
    if (genus.empty()) return false;
    std::vector<int> parent(genus.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    for (int v = 0; v < vertices(); ++v)
      if (find(v) != find(0)) return false;
    return true;
  }
  /// Σ g_v + first Betti number.
  [[nodiscard]] int closed_genus() const {
    return std::accumulate(genus.begin(), genus.end(), 0) + curves() - vertices() + 1;
  }
  [[nodiscard]] bool stable() const {
    for (int v = 0; v < vertices(); ++v)
      if (2 * genus[static_cast<std::size_t>(v)] + valence(v) <= 2) return false;
    return true;
  }
  [[nodiscard]] std::string describe() const {
    std::string s = "g(";
    for (std::size_t i = 0; i < genus.size(); ++i) s += (i ? "," : "") + std::to_string(genus[i]);
    s += ") e(";
    for (std::size_t i = 0; i < edges.size(); ++i)
      s += (i ? "," : "") + std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
    return s + ")";
  }
  friend bool operator==(const StableGraph&, const StableGraph&) = default;
  friend auto operator<=>(const StableGraph& a, const StableGraph& b) {
    if (auto c = a.genus <=> b.genus; c != 0) return c;
    return a.edges <=> b.edges;
  }
};

namespace detail {

/// Relabels by new_index[v] and sorts edges.
inline StableGraph relabel_graph(const StableGraph& g, const std::vector<int>& new_index) {
  StableGraph out;
  out.genus.assign(g.genus.size(), 0);
  for (std::size_t v = 0; v < g.genus.size(); ++v) out.genus[static_cast<std::size_t>(new_index[v])] = g.genus[v];
  for (auto [a, b] : g.edges) {
    int x = new_index[static_cast<std::size_t>(a)], y = new_index[static_cast<std::size_t>(b)];
    out.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

/// Equitable colour refinement; colours are renumbered 0.. in an order that
/// depends only on the isomorphism class of (graph, colouring).
inline std::vector<int> refine(const StableGraph& g, std::vector<int> color) {
  const int n = g.vertices();
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (auto [a, b] : g.edges) {
    ++mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    if (a != b) ++mult[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  }
  int classes = -1;
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      s.push_back(mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)]);
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < n; ++u)
        if (u != v && mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
          nb.emplace_back(color[static_cast<std::size_t>(u)], mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]);
      std::sort(nb.begin(), nb.end());
      for (auto [c, m] : nb) s.push_back(c), s.push_back(m);
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
    if (static_cast<int>(distinct.size()) == classes) return color;
    classes = static_cast<int>(distinct.size());
  }
}

inline void canonical_search(const StableGraph& g, std::vector<int> color, std::optional<StableGraph>& best) {
  color = refine(g, std::move(color));
  const int n = g.vertices();
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  for (auto c : color) ++size[static_cast<std::size_t>(c)];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (size[static_cast<std::size_t>(c)] > 1) {
      target = c;
      break;
    }
  if (target < 0) {
    auto cand = relabel_graph(g, color);
    if (!best || cand < *best) best = std::move(cand);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (color[static_cast<std::size_t>(v)] != target) continue;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      const int c = color[static_cast<std::size_t>(u)];
      next[static_cast<std::size_t>(u)] = 2 * c + (c == target && u != v ? 1 : 0);
    }
    canonical_search(g, std::move(next), best);
  }
}

}  // namespace detail

/// Canonical representative of the isomorphism class of a dual graph.
inline StableGraph canonical_form(const StableGraph& g) {
  if (g.genus.empty()) return g;
  std::vector<int> color(g.genus.size());
  for (int v = 0; v < g.vertices(); ++v)
    color[static_cast<std::size_t>(v)] = g.genus[static_cast<std::size_t>(v)] * 64 + g.valence(v);
  std::optional<StableGraph> best;
  detail::canonical_search(g, color, best);
  return *best;
}

// ---------------------------------------------------------------------------
// Cut surfaces

struct CurveEdge {
  int a = 0;
  int b = 0;
  bool a_gets_puncture = true;  // otherwise b gets the puncture
};

/// A multicurve on a closed surface: the pieces of the cut surface and the curves joining them.
struct CutSurfaceGraph {
  int closed_genus = 0;
  std::vector<SurfaceType> pieces;
  std::vector<CurveEdge> curve_edges;

  [[nodiscard]] StableGraph graph() const {
    StableGraph g;
    for (const auto& p : pieces) g.genus.push_back(p.g);
    for (const auto& e : curve_edges) g.edges.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    std::sort(g.edges.begin(), g.edges.end());
    return g;
  }

  /// Throws InputError naming the first broken invariant.
  void validate() const {
    if (pieces.empty()) throw InputError("cut surface has no pieces");
    const int n = static_cast<int>(pieces.size());
    std::vector<int> r(static_cast<std::size_t>(n), 0), s(static_cast<std::size_t>(n), 0);
    for (const auto& e : curve_edges) {
      if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n) throw InputError("curve edge names a missing piece");
      ++r[static_cast<std::size_t>(e.a_gets_puncture ? e.a : e.b)];
      ++s[static_cast<std::size_t>(e.a_gets_puncture ? e.b : e.a)];
    }
    for (int v = 0; v < n; ++v) {
      const auto& p = pieces[static_cast<std::size_t>(v)];
      if (p.r != r[static_cast<std::size_t>(v)] || p.s != s[static_cast<std::size_t>(v)])
        throw InputError("piece " + std::to_string(v) + " " + p.str() + " does not match its curve ends");
      if (!p.in_range()) throw InputError("piece " + std::to_string(v) + " " + p.str() + " is outside 2g+r+s>2");
    }
    auto g = graph();
    if (!g.connected()) throw InputError("cut surface graph is not connected");
    if (g.closed_genus() != closed_genus) throw InputError("piece genera and graph cycles do not add up to the closed genus");
    if (static_cast<int>(curve_edges.size()) > std::max(0, 3 * closed_genus - 3))
      throw InputError("more than 3g-3 curves");
  }
};

/// Curve (a, b) with a ≤ b gives its puncture to piece a.
inline CutSurfaceGraph to_cut_surface(const StableGraph& g) {
  CutSurfaceGraph c;
  c.closed_genus = g.closed_genus();
  for (int v = 0; v < g.vertices(); ++v) c.pieces.push_back({g.genus[static_cast<std::size_t>(v)], 0, 0});
  for (auto [a, b] : g.edges) {
    c.curve_edges.push_back({a, b, true});
    ++c.pieces[static_cast<std::size_t>(a)].r;
    ++c.pieces[static_cast<std::size_t>(b)].s;
  }
  return c;
}

/// Σ harer_dim over the pieces (pointwise stabilizer of the multicurve).
inline int multicurve_stab_hdim(const CutSurfaceGraph& c) {
  c.validate();
  if (c.curve_edges.empty()) return harer_dim({c.closed_genus, 0, 0});
  int total = 0;
  for (const auto& p : c.pieces) total += harer_dim(p);
  return total;
}

inline int multicurve_stab_hdim(const StableGraph& g) { return multicurve_stab_hdim(to_cut_surface(g)); }

/// The type of the sub-multicurve on the curves in `keep` (bitmask over
/// edges). Forgetting a curve merges its two pieces, or raises the genus of
/// the piece when the curve is a loop.
inline StableGraph sub_multicurve(const StableGraph& g, std::uint32_t keep) {
  StableGraph cur = g;
  // Highest index first, so lower edge indices survive each removal.
  for (int e = g.curves() - 1; e >= 0; --e) {
    if (keep >> e & 1u) continue;
    auto [a, b] = cur.edges[static_cast<std::size_t>(e)];
    cur.edges.erase(cur.edges.begin() + e);
    if (a == b) {
      ++cur.genus[static_cast<std::size_t>(a)];
      continue;
    }
    cur.genus[static_cast<std::size_t>(a)] += cur.genus[static_cast<std::size_t>(b)];
    cur.genus.erase(cur.genus.begin() + b);
    for (auto& [x, y] : cur.edges) {
      if (x == b) x = a;
      if (y == b) y = a;
      if (x > b) --x;
      if (y > b) --y;
      if (x > y) std::swap(x, y);
    }
  }
  return canonical_form(cur);
}

inline StableGraph remove_curve(const StableGraph& g, int e) {
  const std::uint32_t all = (1u << g.curves()) - 1;
  return sub_multicurve(g, all & ~(1u << e));
}

/// All multicurve types on the closed genus-g surface, indexed by number of
/// curves 0..3g-3, built by adding one curve at a time.
inline std::vector<std::vector<StableGraph>> multicurve_types_by_size(int g) {
  if (g < 2) throw PreconditionError("multicurves need genus >= 2");
  if (g > 6) throw PreconditionError("multicurve enumeration limited to genus <= 6");
  const int top = 3 * g - 3;
  std::vector<std::vector<StableGraph>> by_k(static_cast<std::size_t>(top + 1));
  by_k[0].push_back(StableGraph{{g}, {}});
  for (int k = 1; k <= top; ++k) {
    std::set<StableGraph> found;
    for (const auto& base : by_k[static_cast<std::size_t>(k - 1)]) {
      for (int v = 0; v < base.vertices(); ++v) {
        const int gv = base.genus[static_cast<std::size_t>(v)];
        if (gv >= 1) {
          StableGraph h = base;
          --h.genus[static_cast<std::size_t>(v)];
          h.edges.emplace_back(v, v);
          found.insert(canonical_form(h));
        }
        // Half-edges at v as (edge index, end).
        std::vector<std::pair<int, int>> ends;
        for (int e = 0; e < base.curves(); ++e) {
          if (base.edges[static_cast<std::size_t>(e)].first == v) ends.emplace_back(e, 0);
          if (base.edges[static_cast<std::size_t>(e)].second == v) ends.emplace_back(e, 1);
        }
        const int nv = static_cast<int>(ends.size());
        const int w = base.vertices();  // new vertex
        for (int g1 = 0; g1 <= gv; ++g1)
          for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
            const int h1 = std::popcount(mask), h2 = nv - h1;
            if (2 * g1 + h1 + 1 <= 2 || 2 * (gv - g1) + h2 + 1 <= 2) continue;
            StableGraph h = base;
            h.genus[static_cast<std::size_t>(v)] = g1;
            h.genus.push_back(gv - g1);
            for (int t = 0; t < nv; ++t) {
              if (mask >> t & 1u) continue;
              auto& edge = h.edges[static_cast<std::size_t>(ends[static_cast<std::size_t>(t)].first)];
              (ends[static_cast<std::size_t>(t)].second == 0 ? edge.first : edge.second) = w;
            }
            for (auto& edge : h.edges)
              if (edge.first > edge.second) std::swap(edge.first, edge.second);
            h.edges.emplace_back(v, w);
            found.insert(canonical_form(h));
          }
      }
    }
    by_k[static_cast<std::size_t>(k)].assign(found.begin(), found.end());
  }
  return by_k;
}

inline std::vector<StableGraph> enumerate_multicurves(int g, int k) {
  if (g < 2) throw PreconditionError("multicurves need genus >= 2");
  if (k < 1 || k > 3 * g - 3) throw PreconditionError("need 1 <= k <= 3g-3");
  return multicurve_types_by_size(g)[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------
// Stabilizer sweep

struct SweepWitness {
  std::string type;
  std::uint32_t a_mask = 0;  // curves in A
  int hdim = 0;
  int a = 0;
  int b = 0;
  int lhs = 0;
};

struct SweepReport {
  int g = 0;
  int rhs = 0;  // 6g - 7
  std::size_t types = 0;
  std::size_t exact_rows = 0;
  std::size_t bound_rows = 0;
  int max_exact_lhs = 0;
  SweepWitness exact_witness;
  int max_bound_lhs = 0;
  SweepWitness bound_witness;
  std::vector<SweepWitness> violations;
  int max_removal_increase = 0;  // over all types and curves
  std::size_t removal_checks = 0;
  std::vector<int> pants_hdims;  // one per pants type
  [[nodiscard]] bool pass() const {
    return violations.empty() && max_exact_lhs == 6 * g - 8 && max_removal_increase <= 1;
  }
};

/// Exact branch: every type C and split C = A ⊔ B into nonempty parts,
/// hdim Stab(C) + |A|-1 + |B|-1 < 6g-7. Bound branch: intersecting A and B
/// with 1 ≤ |A| ≤ |B|, using hdim ≤ max(0, hdim Stab(B) - |A|).
inline SweepReport lemma_smallstabilizers_sweep(int g) {
  if (g < 2) throw PreconditionError("sweep needs genus >= 2");
  SweepReport r;
  r.g = g;
  r.rhs = 6 * g - 7;
  auto by_k = multicurve_types_by_size(g);
  bool first_exact = true, first_bound = true;
  for (std::size_t k = 0; k < by_k.size(); ++k)
    for (const auto& c : by_k[k]) {
      ++r.types;
      const int h = multicurve_stab_hdim(c);
      const int ck = c.curves();
      if (ck == 3 * g - 3) r.pants_hdims.push_back(h);
      for (int e = 0; e < ck; ++e) {
        const int inc = multicurve_stab_hdim(remove_curve(c, e)) - h;
        r.max_removal_increase = std::max(r.max_removal_increase, inc);
        ++r.removal_checks;
      }
      if (ck >= 2)
        for (std::uint32_t mask = 1; mask + 1 < (1u << ck); ++mask) {
          const int a = std::popcount(mask), b = ck - a;
          SweepWitness w{c.describe(), mask, h, a, b, h + (a - 1) + (b - 1)};
          ++r.exact_rows;
          if (first_exact || w.lhs > r.max_exact_lhs) r.max_exact_lhs = w.lhs, r.exact_witness = w;
          first_exact = false;
          if (w.lhs >= r.rhs) r.violations.push_back(w);
        }
      if (ck >= 1)
        for (int a = 1; a <= ck; ++a) {
          const int bound = std::max(0, h - a);
          SweepWitness w{c.describe(), 0, bound, a, ck, bound + (a - 1) + (ck - 1)};
          ++r.bound_rows;
          if (first_bound || w.lhs > r.max_bound_lhs) r.max_bound_lhs = w.lhs, r.bound_witness = w;
          first_bound = false;
          if (w.lhs >= r.rhs) r.violations.push_back(w);
        }
    }
  return r;
}

/// Orbit data of the curve complex: simplex orbits are multicurve types.
/// Disjoint pairs whose union is a multicurve carry the exact hdim of the
/// union; intersecting pairs carry the counting bound max(0, hdim Stab(B) - |A|).
inline OrbitComplex curve_complex_certificate(int g) {
  if (g < 2 || g > 3) throw PreconditionError("curve complex certificate supports g in {2, 3}");
  OrbitComplex x;
  x.boundary_dim = 6 * g - 7;
  x.complete = true;
  x.include_empty = false;
  x.provenance = "curve complex of the closed genus " + std::to_string(g) + " surface (pointwise stabilizers)";
  auto by_k = multicurve_types_by_size(g);
  std::map<StableGraph, std::string> label;
  std::map<StableGraph, int> hdim;
  std::vector<StableGraph> all;
  for (std::size_t k = 1; k < by_k.size(); ++k)
    for (const auto& c : by_k[k]) {
      label[c] = "k" + std::to_string(k) + ":" + c.describe();
      hdim[c] = multicurve_stab_hdim(c);
      x.orbits.push_back({label[c], static_cast<int>(k) - 1, HdimValue::exact(hdim[c])});
      all.push_back(c);
    }
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto& c : all) {
    const int ck = c.curves();
    for (std::uint32_t mask = 1; mask + 1 < (1u << ck); ++mask) {
      auto a = sub_multicurve(c, mask);
      auto b = sub_multicurve(c, ((1u << ck) - 1) & ~mask);
      std::string la = label.at(a), lb = label.at(b);
      if (lb < la) std::swap(la, lb);
      if (!seen.emplace(la, lb, label.at(c)).second) continue;
      x.pairs.push_back({la, lb, true, HdimValue::exact(hdim.at(c)), "union " + label.at(c)});
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      // B is the larger collection; A meets at least |A| of its curves.
      const auto& small = all[i].curves() <= all[j].curves() ? all[i] : all[j];
      const auto& large = all[i].curves() <= all[j].curves() ? all[j] : all[i];
      const int bound = std::max(0, hdim.at(large) - small.curves());
      x.pairs.push_back({label.at(all[i]), label.at(all[j]), true, HdimValue::at_most(bound), "intersecting"});
    }
  return x;
}

}  // namespace fillings
