#pragma once

// Finite abstract simplicial complexes, chain complexes over Z and F_p, and
// their homology.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fillings/error.hpp"
#include "fillings/normal_form.hpp"

namespace fillings {

/// Sorted vertex indices into the owning complex's label table.
using Simplex = std::vector<std::uint32_t>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

inline bool is_face_of(const Simplex& face, const Simplex& s) {
  return std::includes(s.begin(), s.end(), face.begin(), face.end());
}

inline Simplex simplex_union(const Simplex& a, const Simplex& b) {
  Simplex u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

inline bool simplices_meet(const Simplex& a, const Simplex& b) {
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Chain complexes and homology

/// Graded free module with boundary maps. boundary(k) : C_k -> C_{k-1}.
class ChainComplex {
 public:
  ChainComplex(Coefficients ring, std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries)
      : ring_(ring), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    if (boundaries_.size() != ranks_.size())
      throw PreconditionError("chain complex needs one boundary slot per degree");
    for (std::size_t k = 0; k < ranks_.size(); ++k) {
      auto& d = boundaries_[k];
      std::size_t expected_rows = k == 0 ? 0 : ranks_[k - 1];
      if (d.cols != ranks_[k] || d.rows != expected_rows || d.columns.size() != d.cols)
        throw PreconditionError("boundary matrix in degree " + std::to_string(k) +
                                " does not match adjacent ranks");
      d.normalize(ring_);
    }
  }

  [[nodiscard]] const Coefficients& ring() const { return ring_; }
  /// Number of degrees stored (top degree + 1).
  [[nodiscard]] std::size_t length() const { return ranks_.size(); }
  [[nodiscard]] std::size_t rank(std::size_t k) const { return k < ranks_.size() ? ranks_[k] : 0; }
  [[nodiscard]] const std::vector<std::size_t>& ranks() const { return ranks_; }
  [[nodiscard]] const SparseMatrix& boundary(std::size_t k) const { return boundaries_.at(k); }

  [[nodiscard]] bool squares_to_zero() const {
    for (std::size_t k = 2; k < ranks_.size(); ++k)
      if (!is_zero(multiply(boundaries_[k - 1], boundaries_[k], ring_))) return false;
    return true;
  }

  [[nodiscard]] std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < ranks_.size(); ++k)
      chi += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(ranks_[k]);
    return chi;
  }

 private:
  Coefficients ring_;
  std::vector<std::size_t> ranks_;
  std::vector<SparseMatrix> boundaries_;
};

struct HomologyGroup {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  [[nodiscard]] bool is_zero() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Per-degree free rank and torsion. Degrees with zero groups are kept so the
/// table spans the whole chain complex.
class HomologyTable {
 public:
  HomologyTable() = default;
  HomologyTable(Coefficients ring, std::vector<HomologyGroup> groups, bool reduced)
      : ring_(ring), groups_(std::move(groups)), reduced_(reduced) {}

  [[nodiscard]] const Coefficients& ring() const { return ring_; }
  [[nodiscard]] bool reduced() const { return reduced_; }
  [[nodiscard]] const std::vector<HomologyGroup>& groups() const { return groups_; }

  [[nodiscard]] std::size_t rank(int k) const {
    for (const auto& g : groups_)
      if (g.degree == k) return g.rank;
    return 0;
  }
  [[nodiscard]] std::vector<Integer> torsion(int k) const {
    for (const auto& g : groups_)
      if (g.degree == k) return g.torsion;
    return {};
  }
  [[nodiscard]] bool has_torsion() const {
    return std::any_of(groups_.begin(), groups_.end(), [](const auto& g) { return !g.torsion.empty(); });
  }
  [[nodiscard]] bool is_trivial() const {
    return std::all_of(groups_.begin(), groups_.end(), [](const auto& g) { return g.is_zero(); });
  }
  [[nodiscard]] std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (const auto& g : groups_) chi += (g.degree % 2 ? -1 : 1) * static_cast<std::int64_t>(g.rank);
    return chi;
  }
  /// Degrees carrying a nonzero group.
  [[nodiscard]] std::vector<int> support() const {
    std::vector<int> out;
    for (const auto& g : groups_)
      if (!g.is_zero()) out.push_back(g.degree);
    return out;
  }

  /// Same groups in every degree (missing degrees count as zero).
  [[nodiscard]] bool isomorphic_to(const HomologyTable& other) const {
    int top = 0;
    for (const auto& g : groups_) top = std::max(top, g.degree);
    for (const auto& g : other.groups_) top = std::max(top, g.degree);
    for (int k = 0; k <= top; ++k)
      if (rank(k) != other.rank(k) || torsion(k) != other.torsion(k)) return false;
    return true;
  }

 private:
  Coefficients ring_ = Coefficients::integers();
  std::vector<HomologyGroup> groups_;
  bool reduced_ = false;
};

inline HomologyTable homology(const ChainComplex& c, std::size_t bit_bound = kDefaultBitBound) {
  std::vector<NormalForm> nf(c.length() + 1);
  for (std::size_t k = 1; k < c.length(); ++k) nf[k] = normal_form(c.boundary(k), c.ring(), bit_bound);
  std::vector<HomologyGroup> groups;
  for (std::size_t k = 0; k < c.length(); ++k) {
    HomologyGroup g;
    g.degree = static_cast<int>(k);
    g.rank = c.rank(k) - nf[k].rank - nf[k + 1].rank;
    g.torsion = nf[k + 1].torsion;
    groups.push_back(std::move(g));
  }
  return HomologyTable(c.ring(), std::move(groups), false);
}

/// Builds the cellular chain complex on a graded cell list. `faces(cell)`
/// yields (face, sign) pairs. Faces absent from the list are an error for a
/// subcomplex and are dropped for a quotient (they lie in the subcomplex
/// being divided out).
template <class Cell, class Faces>
ChainComplex cellular_chains(const std::vector<std::vector<Cell>>& cells_by_degree, Faces&& faces,
                             const Coefficients& ring, bool quotient) {
  std::vector<std::map<Cell, std::uint32_t>> index(cells_by_degree.size());
  for (std::size_t k = 0; k < cells_by_degree.size(); ++k)
    for (std::uint32_t i = 0; i < cells_by_degree[k].size(); ++i) index[k].emplace(cells_by_degree[k][i], i);
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> boundaries;
  for (std::size_t k = 0; k < cells_by_degree.size(); ++k) {
    ranks.push_back(cells_by_degree[k].size());
    SparseMatrix d(k == 0 ? 0 : cells_by_degree[k - 1].size(), cells_by_degree[k].size());
    if (k > 0) {
      for (std::size_t j = 0; j < cells_by_degree[k].size(); ++j) {
        for (const auto& [face, sign] : faces(cells_by_degree[k][j])) {
          auto it = index[k - 1].find(face);
          if (it == index[k - 1].end()) {
            if (quotient) continue;
            throw PreconditionError("cell list is not closed under taking faces");
          }
          d.columns[j].emplace_back(it->second, sign);
        }
      }
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(ring, std::move(ranks), std::move(boundaries));
}

/// Faces of a simplex with the alternating signs of the induced ordering.
inline std::vector<std::pair<Simplex, int>> simplex_faces(const Simplex& s) {
  std::vector<std::pair<Simplex, int>> out;
  if (s.size() < 2) return out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) f.push_back(s[j]);
    out.emplace_back(std::move(f), i % 2 ? -1 : 1);
  }
  return out;
}

/// Total complex of A ⊗ B: d(a⊗b) = da⊗b + (-1)^{|a|} a⊗db.
inline ChainComplex tensor_total(const ChainComplex& a, const ChainComplex& b) {
  if (!(a.ring() == b.ring())) throw InputError("tensor_total: coefficient rings differ");
  const std::size_t top = a.length() + b.length() - 1;
  // offset[n][p] = position of block A_p ⊗ B_{n-p} inside degree n.
  std::vector<std::vector<std::size_t>> offset(top, std::vector<std::size_t>(a.length() + 1, 0));
  std::vector<std::size_t> ranks(top, 0);
  for (std::size_t n = 0; n < top; ++n) {
    std::size_t acc = 0;
    for (std::size_t p = 0; p < a.length(); ++p) {
      offset[n][p] = acc;
      if (n >= p) acc += a.rank(p) * b.rank(n - p);
    }
    ranks[n] = acc;
  }
  std::vector<SparseMatrix> boundaries;
  for (std::size_t n = 0; n < top; ++n) {
    SparseMatrix d(n == 0 ? 0 : ranks[n - 1], ranks[n]);
    if (n > 0) {
      for (std::size_t p = 0; p < a.length() && p <= n; ++p) {
        const std::size_t q = n - p;
        if (q >= b.length()) continue;
        const std::size_t bq = b.rank(q);
        for (std::size_t i = 0; i < a.rank(p); ++i)
          for (std::size_t j = 0; j < bq; ++j) {
            auto& col = d.columns[offset[n][p] + i * bq + j];
            if (p > 0)
              for (const auto& [r, v] : a.boundary(p).columns[i])
                col.emplace_back(offset[n - 1][p - 1] + r * bq + j, v);
            if (q > 0) {
              const std::size_t bq1 = b.rank(q - 1);
              const int sign = p % 2 ? -1 : 1;
              for (const auto& [r, v] : b.boundary(q).columns[j])
                col.emplace_back(offset[n - 1][p] + i * bq1 + r, sign * v);
            }
          }
      }
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(a.ring(), std::move(ranks), std::move(boundaries));
}

// ---------------------------------------------------------------------------
// Simplicial complexes

class SimplicialComplex {
 public:
  using Labels = std::vector<std::string>;

  SimplicialComplex() : labels_(std::make_shared<Labels>()) {}

  /// Downward closure of `facets` over the declared vertex labels.
  static SimplicialComplex from_facets(const Labels& vertices, const std::vector<std::vector<std::string>>& facets) {
    std::map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < vertices.size(); ++i)
      if (!index.emplace(vertices[i], i).second) throw InputError("duplicate vertex label '" + vertices[i] + "'");
    std::vector<Simplex> idx_facets;
    for (const auto& f : facets) {
      if (f.empty()) throw InputError("empty facet");
      Simplex s;
      for (const auto& v : f) {
        auto it = index.find(v);
        if (it == index.end()) throw InputError("facet uses undeclared vertex '" + v + "'");
        s.push_back(it->second);
      }
      idx_facets.push_back(std::move(s));
    }
    return from_index_facets(std::make_shared<Labels>(vertices), std::move(idx_facets));
  }

  static SimplicialComplex from_index_facets(std::shared_ptr<const Labels> labels, std::vector<Simplex> facets) {
    SimplicialComplex k;
    k.labels_ = std::move(labels);
    std::vector<std::set<Simplex>> by_dim;
    for (auto& f : facets) {
      if (f.empty()) throw InputError("empty facet");
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InputError("facet repeats a vertex");
      for (auto v : f)
        if (v >= k.labels_->size()) throw InputError("facet uses undeclared vertex index");
      if (f.size() > 24) throw InputError("facet too large for explicit closure");
      const std::uint32_t n = static_cast<std::uint32_t>(f.size());
      if (by_dim.size() < n) by_dim.resize(n);
      if (by_dim[n - 1].count(f)) continue;
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex s;
        for (std::uint32_t i = 0; i < n; ++i)
          if (mask & (1u << i)) s.push_back(f[i]);
        by_dim[s.size() - 1].insert(std::move(s));
      }
    }
    k.build_from(std::move(by_dim));
    return k;
  }

  /// Complex with exactly the given simplex set, which must be downward closed.
  static SimplicialComplex from_simplices(std::shared_ptr<const Labels> labels, const std::vector<Simplex>& simplices) {
    std::vector<std::set<Simplex>> by_dim;
    for (const auto& s : simplices) {
      if (s.empty()) continue;
      if (by_dim.size() < s.size()) by_dim.resize(s.size());
      by_dim[s.size() - 1].insert(s);
    }
    SimplicialComplex k;
    k.labels_ = std::move(labels);
    k.build_from(std::move(by_dim));
    for (int d = 1; d <= k.dimension(); ++d)
      for (const auto& s : k.simplices(d))
        for (const auto& [f, sign] : simplex_faces(s))
          if (!k.contains(f)) throw PreconditionError("simplex set is not downward closed");
    return k;
  }

  [[nodiscard]] const Labels& labels() const { return *labels_; }
  [[nodiscard]] const std::shared_ptr<const Labels>& label_table() const { return labels_; }
  [[nodiscard]] bool empty() const { return by_dim_.empty(); }
  [[nodiscard]] int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  [[nodiscard]] std::size_t count(int k) const {
    return k >= 0 && k <= dimension() ? by_dim_[static_cast<std::size_t>(k)].size() : 0;
  }
  [[nodiscard]] std::size_t size() const {
    std::size_t n = 0;
    for (const auto& d : by_dim_) n += d.size();
    return n;
  }
  [[nodiscard]] const std::vector<Simplex>& simplices(int k) const {
    static const std::vector<Simplex> none;
    return k >= 0 && k <= dimension() ? by_dim_[static_cast<std::size_t>(k)] : none;
  }
  [[nodiscard]] std::vector<Simplex> all_simplices() const {
    std::vector<Simplex> out;
    for (const auto& d : by_dim_) out.insert(out.end(), d.begin(), d.end());
    return out;
  }
  [[nodiscard]] const std::vector<Simplex>& facets() const { return facets_; }
  [[nodiscard]] std::vector<std::uint32_t> vertices() const {
    std::vector<std::uint32_t> out;
    for (const auto& s : simplices(0)) out.push_back(s[0]);
    return out;
  }
  [[nodiscard]] bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  [[nodiscard]] std::optional<std::size_t> index_of(const Simplex& s) const {
    if (s.empty() || static_cast<int>(s.size()) - 1 > dimension()) return std::nullopt;
    const auto& level = by_dim_[s.size() - 1];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
  }

  [[nodiscard]] std::string describe(const Simplex& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + (*labels_)[s[i]];
    return out + "}";
  }

  /// Simplicial chains, unreduced.
  [[nodiscard]] ChainComplex chains(const Coefficients& ring) const {
    return cellular_chains(by_dim_, simplex_faces, ring, false);
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.by_dim_ == b.by_dim_;
  }

 private:
  void build_from(std::vector<std::set<Simplex>> by_dim) {
    while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
    by_dim_.clear();
    for (auto& level : by_dim) by_dim_.emplace_back(level.begin(), level.end());
    facets_.clear();
    std::set<Simplex> covered;
    for (int d = dimension(); d >= 0; --d)
      for (const auto& s : by_dim_[static_cast<std::size_t>(d)]) {
        if (!covered.count(s)) facets_.push_back(s);
        for (const auto& [f, sign] : simplex_faces(s)) covered.insert(f);
      }
    std::sort(facets_.begin(), facets_.end());
  }

  std::shared_ptr<const Labels> labels_;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> by_dim_;
};

inline HomologyTable homology(const SimplicialComplex& k, const Coefficients& ring,
                              std::size_t bit_bound = kDefaultBitBound) {
  if (k.empty()) throw InputError("homology of the empty complex is not modeled");
  return homology(k.chains(ring), bit_bound);
}

/// Reduced homology: H~_0 drops one free summand; higher degrees unchanged.
inline HomologyTable reduced(const HomologyTable& h) {
  if (h.reduced()) return h;
  auto groups = h.groups();
  for (auto& g : groups)
    if (g.degree == 0 && g.rank > 0) --g.rank;
  return HomologyTable(h.ring(), std::move(groups), true);
}

inline HomologyTable reduced_homology(const SimplicialComplex& k, const Coefficients& ring,
                                      std::size_t bit_bound = kDefaultBitBound) {
  return reduced(homology(k, ring, bit_bound));
}

/// Chains of the pair (K, L) for a subcomplex L ⊆ K.
inline ChainComplex relative_chains(const SimplicialComplex& k, const SimplicialComplex& l, const Coefficients& ring) {
  std::vector<std::vector<Simplex>> cells(static_cast<std::size_t>(std::max(k.dimension() + 1, 0)));
  for (int d = 0; d <= k.dimension(); ++d) {
    for (const auto& s : l.simplices(d))
      if (!k.contains(s)) throw PreconditionError("relative_chains: L is not a subcomplex of K");
    for (const auto& s : k.simplices(d))
      if (!l.contains(s)) cells[static_cast<std::size_t>(d)].push_back(s);
  }
  return cellular_chains(cells, simplex_faces, ring, true);
}

inline bool is_acyclic(const SimplicialComplex& k, const Coefficients& ring = Coefficients::integers()) {
  return reduced_homology(k, ring).is_trivial();
}

// ---------------------------------------------------------------------------
// Subcomplex constructions

/// True iff every set of pairwise adjacent vertices spans a simplex.
inline bool is_flag(const SimplicialComplex& k) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& e : k.simplices(1)) edges.emplace(e[0], e[1]);
  auto adjacent = [&](std::uint32_t a, std::uint32_t b) {
    return edges.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  const auto verts = k.vertices();
  // Every clique is a simplex iff each simplex extends by every vertex adjacent to all of it.
  for (int d = 1; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d))
      for (auto v : verts) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        if (!std::all_of(s.begin(), s.end(), [&](std::uint32_t u) { return adjacent(u, v); })) continue;
        Simplex t = s;
        t.insert(std::lower_bound(t.begin(), t.end(), v), v);
        if (!k.contains(t)) return false;
      }
  return true;
}

inline void require_simplex(const SimplicialComplex& k, const Simplex& sigma) {
  if (!k.contains(sigma)) throw PreconditionError(k.describe(sigma) + " is not a simplex of the complex");
}

/// Lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}. May be empty (σ a facet).
inline SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma) {
  require_simplex(k, sigma);
  std::vector<Simplex> out;
  for (const auto& s : k.all_simplices())
    if (!simplices_meet(s, sigma) && k.contains(simplex_union(s, sigma))) out.push_back(s);
  return SimplicialComplex::from_simplices(k.label_table(), out);
}

/// Δ_σ: union of all simplices containing σ (the closed star).
inline SimplicialComplex delta_sigma(const SimplicialComplex& k, const Simplex& sigma) {
  require_simplex(k, sigma);
  std::vector<Simplex> out;
  for (const auto& s : k.all_simplices())
    if (k.contains(simplex_union(s, sigma))) out.push_back(s);
  return SimplicialComplex::from_simplices(k.label_table(), out);
}

/// N(σ): union of all simplices meeting σ.
inline SimplicialComplex neighborhood(const SimplicialComplex& k, const Simplex& sigma) {
  require_simplex(k, sigma);
  std::vector<Simplex> facets;
  for (const auto& s : k.all_simplices())
    if (simplices_meet(s, sigma)) facets.push_back(s);
  return SimplicialComplex::from_index_facets(k.label_table(), std::move(facets));
}

/// Join of two complexes on one label table with disjoint vertex sets. Either may be empty.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.label_table() != b.label_table() && a.labels() != b.labels())
    throw PreconditionError("join needs complexes over the same vertex labels");
  auto av = a.all_simplices(), bv = b.all_simplices();
  for (const auto& s : av)
    for (const auto& t : bv)
      if (simplices_meet(s, t)) throw PreconditionError("join needs disjoint vertex sets");
  std::vector<Simplex> out(av);
  out.insert(out.end(), bv.begin(), bv.end());
  for (const auto& s : av)
    for (const auto& t : bv) out.push_back(simplex_union(s, t));
  auto labels = a.empty() ? b.label_table() : a.label_table();
  return SimplicialComplex::from_simplices(labels, out);
}

/// The full simplex σ as a complex over `k`'s labels.
inline SimplicialComplex simplex_closure(const SimplicialComplex& k, const Simplex& sigma) {
  return SimplicialComplex::from_index_facets(k.label_table(), {sigma});
}

/// Same complex with vertex i renamed to labels[perm[i]] and indices permuted accordingly.
inline SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<std::uint32_t>& perm) {
  if (perm.size() != k.labels().size()) throw PreconditionError("relabel: permutation size mismatch");
  auto labels = std::make_shared<SimplicialComplex::Labels>(k.labels().size());
  for (std::size_t i = 0; i < perm.size(); ++i) (*labels)[perm[i]] = k.labels()[i];
  std::vector<Simplex> facets;
  for (const auto& f : k.facets()) {
    Simplex g;
    for (auto v : f) g.push_back(perm[v]);
    facets.push_back(std::move(g));
  }
  return SimplicialComplex::from_index_facets(labels, std::move(facets));
}

// ---------------------------------------------------------------------------
// Small generators shared by tests and sweeps

inline SimplicialComplex::Labels numbered_labels(std::size_t n, const std::string& prefix = "v") {
  SimplicialComplex::Labels l;
  for (std::size_t i = 0; i < n; ++i) l.push_back(prefix + std::to_string(i));
  return l;
}

inline SimplicialComplex full_simplex(std::size_t n_vertices) {
  Simplex s(n_vertices);
  for (std::uint32_t i = 0; i < n_vertices; ++i) s[i] = i;
  return SimplicialComplex::from_index_facets(std::make_shared<SimplicialComplex::Labels>(numbered_labels(n_vertices)),
                                              {s});
}

/// Boundary of the simplex on n vertices, a sphere of dimension n - 2.
inline SimplicialComplex simplex_boundary(std::size_t n_vertices) {
  std::vector<Simplex> facets;
  for (std::uint32_t skip = 0; skip < n_vertices; ++skip) {
    Simplex s;
    for (std::uint32_t i = 0; i < n_vertices; ++i)
      if (i != skip) s.push_back(i);
    facets.push_back(s);
  }
  return SimplicialComplex::from_index_facets(std::make_shared<SimplicialComplex::Labels>(numbered_labels(n_vertices)),
                                              std::move(facets));
}

/// Cycle graph on n >= 3 vertices.
inline SimplicialComplex polygon(std::size_t n) {
  std::vector<Simplex> facets;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t j = static_cast<std::uint32_t>((i + 1) % n);
    facets.push_back({std::min(i, j), std::max(i, j)});
  }
  return SimplicialComplex::from_index_facets(std::make_shared<SimplicialComplex::Labels>(numbered_labels(n)),
                                              std::move(facets));
}

/// Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
/// With `punctured`, the triangle {0, 1, 3} is removed.
inline SimplicialComplex seven_vertex_torus(bool punctured = false) {
  std::vector<Simplex> facets;
  for (std::uint32_t i = 0; i < 7; ++i)
    for (std::uint32_t step : {1u, 2u}) {
      Simplex t{i, (i + step) % 7, (i + 3) % 7};
      std::sort(t.begin(), t.end());
      if (punctured && t == Simplex{0, 1, 3}) continue;
      facets.push_back(std::move(t));
    }
  return SimplicialComplex::from_index_facets(std::make_shared<SimplicialComplex::Labels>(numbered_labels(7)),
                                              std::move(facets));
}

/// Edges lying in exactly one triangle, with their vertices: the boundary of a 2-manifold.
inline SimplicialComplex surface_boundary(const SimplicialComplex& k) {
  std::map<Simplex, int> uses;
  for (const auto& t : k.simplices(2))
    for (const auto& [e, sign] : simplex_faces(t)) ++uses[e];
  std::vector<Simplex> edges;
  for (const auto& [e, n] : uses)
    if (n == 1) edges.push_back(e);
  return SimplicialComplex::from_index_facets(k.label_table(), std::move(edges));
}

/// Clique complex of a graph given by an adjacency matrix (Bron–Kerbosch on maximal cliques).
inline SimplicialComplex clique_complex(const std::vector<std::vector<bool>>& adj,
                                        std::shared_ptr<const SimplicialComplex::Labels> labels) {
  const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
  std::vector<Simplex> facets;
  auto bk = [&](auto&& self, Simplex r, std::vector<std::uint32_t> p, std::vector<std::uint32_t> x) -> void {
    if (p.empty() && x.empty()) {
      if (!r.empty()) {
        std::sort(r.begin(), r.end());
        facets.push_back(r);
      }
      return;
    }
    auto pcopy = p;
    for (auto v : pcopy) {
      std::vector<std::uint32_t> np, nx;
      for (auto u : p)
        if (adj[v][u]) np.push_back(u);
      for (auto u : x)
        if (adj[v][u]) nx.push_back(u);
      Simplex nr = r;
      nr.push_back(v);
      self(self, nr, np, nx);
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<std::uint32_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
  bk(bk, {}, all, {});
  return SimplicialComplex::from_index_facets(std::move(labels), std::move(facets));
}

/// Clique complex of an Erdős–Rényi graph G(n, p).
template <class Rng>
SimplicialComplex random_flag_complex(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = coin(rng);
  return clique_complex(adj, std::make_shared<SimplicialComplex::Labels>(numbered_labels(n)));
}

}  // namespace fillings
