#pragma once

// Product chains on C x C, the simplicial diagonal as a chain subcomplex, and
// the quotient double complex, with the trivial group acting.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fillings/chaincore.hpp"

namespace fillings {

using ProductCell = std::pair<Simplex, Simplex>;

inline int product_degree(const ProductCell& c) { return simplex_dim(c.first) + simplex_dim(c.second); }

/// ∂(σ⊗τ) = ∂σ⊗τ + (-1)^{dim σ} σ⊗∂τ.
inline std::vector<std::pair<ProductCell, int>> product_faces(const ProductCell& c) {
  std::vector<std::pair<ProductCell, int>> out;
  for (auto& [f, s] : simplex_faces(c.first)) out.push_back({{f, c.second}, s});
  const int sign = simplex_dim(c.first) % 2 ? -1 : 1;
  for (auto& [f, s] : simplex_faces(c.second)) out.push_back({{c.first, f}, sign * s});
  return out;
}

using GradedCells = std::vector<std::vector<ProductCell>>;

/// Cell-by-cell model of the product chains C_*(A) ⊗^Tot C_*(B).
class ProductChainComplex {
 public:
  ProductChainComplex(SimplicialComplex a, SimplicialComplex b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty() || b_.empty()) throw InputError("product of an empty complex");
    cells_.resize(static_cast<std::size_t>(a_.dimension() + b_.dimension() + 1));
    for (int i = 0; i <= a_.dimension(); ++i)
      for (int j = 0; j <= b_.dimension(); ++j)
        for (const auto& s : a_.simplices(i))
          for (const auto& t : b_.simplices(j)) cells_[static_cast<std::size_t>(i + j)].push_back({s, t});
    for (auto& level : cells_) std::sort(level.begin(), level.end());
  }

  [[nodiscard]] const SimplicialComplex& first() const { return a_; }
  [[nodiscard]] const SimplicialComplex& second() const { return b_; }
  [[nodiscard]] const GradedCells& cells() const { return cells_; }
  [[nodiscard]] std::size_t count(int n) const {
    return n >= 0 && static_cast<std::size_t>(n) < cells_.size() ? cells_[static_cast<std::size_t>(n)].size() : 0;
  }

  /// Cells satisfying `keep`, graded as in the parent.
  template <class Pred>
  [[nodiscard]] GradedCells select(Pred&& keep) const {
    GradedCells out(cells_.size());
    for (std::size_t n = 0; n < cells_.size(); ++n)
      for (const auto& c : cells_[n])
        if (keep(c)) out[n].push_back(c);
    return out;
  }

  [[nodiscard]] ChainComplex chains(const Coefficients& ring) const {
    return cellular_chains(cells_, product_faces, ring, false);
  }

 private:
  SimplicialComplex a_;
  SimplicialComplex b_;
  GradedCells cells_;
};

/// Cells of ∂(A x B) = (∂A x B) ∪ (A x ∂B) for manifolds A, B with boundary subcomplexes.
inline GradedCells product_boundary_cells(const SimplicialComplex& a, const SimplicialComplex& da,
                                          const SimplicialComplex& b, const SimplicialComplex& db) {
  ProductChainComplex p(a, b);
  return p.select([&](const ProductCell& c) { return da.contains(c.first) || db.contains(c.second); });
}

/// True iff every face of every listed cell is listed.
inline bool closed_under_boundary(const GradedCells& cells) {
  for (std::size_t n = 1; n < cells.size(); ++n)
    for (const auto& c : cells[n])
      for (const auto& [f, s] : product_faces(c))
        if (!std::binary_search(cells[n - 1].begin(), cells[n - 1].end(), f)) return false;
  return true;
}

/// Chains supported on Δ: product cells (σ, τ) with σ ∪ τ a simplex of C.
class DiagonalSubcomplex {
 public:
  explicit DiagonalSubcomplex(const SimplicialComplex& c) : parent_(c, c) {
    const auto& k = parent_.first();
    cells_ = parent_.select([&](const ProductCell& p) { return k.contains(simplex_union(p.first, p.second)); });
    closed_ = closed_under_boundary(cells_);
    if (!closed_) throw PreconditionError("simplicial diagonal is not closed under the boundary map");
    flag_input_ = is_flag(k);
  }

  [[nodiscard]] const ProductChainComplex& parent() const { return parent_; }
  [[nodiscard]] const SimplicialComplex& base() const { return parent_.first(); }
  [[nodiscard]] const GradedCells& cells() const { return cells_; }
  [[nodiscard]] bool closed() const { return closed_; }
  /// Non-flag inputs are accepted; callers surface this as a warning.
  [[nodiscard]] bool flag_input() const { return flag_input_; }

  [[nodiscard]] std::size_t count(int n) const {
    return n >= 0 && static_cast<std::size_t>(n) < cells_.size() ? cells_[static_cast<std::size_t>(n)].size() : 0;
  }
  [[nodiscard]] bool contains(const ProductCell& p) const {
    const auto n = static_cast<std::size_t>(product_degree(p));
    return n < cells_.size() && std::binary_search(cells_[n].begin(), cells_[n].end(), p);
  }
  [[nodiscard]] bool contains_all_diagonal_cells() const {
    for (const auto& s : base().all_simplices())
      if (!contains({s, s})) return false;
    return true;
  }

  [[nodiscard]] ChainComplex chains(const Coefficients& ring) const {
    return cellular_chains(cells_, product_faces, ring, false);
  }
  /// Chains of the pair (C x C, Δ).
  [[nodiscard]] ChainComplex relative_chains(const Coefficients& ring) const {
    return cellular_chains(quotient_cells(), product_faces, ring, true);
  }
  [[nodiscard]] GradedCells quotient_cells() const {
    return parent_.select([&](const ProductCell& p) { return !contains(p); });
  }

 private:
  ProductChainComplex parent_;
  GradedCells cells_;
  bool closed_ = false;
  bool flag_input_ = false;
};

inline DiagonalSubcomplex build_diagonal(const SimplicialComplex& c) {
  if (c.empty()) throw InputError("build_diagonal: empty complex");
  return DiagonalSubcomplex(c);
}

/// E_{i,j} = product cells (σ, τ) outside Δ with dim σ = i, dim τ = j.
class QuotientDoubleComplex {
 public:
  explicit QuotientDoubleComplex(const DiagonalSubcomplex& delta) : delta_(&delta) {
    const auto& c = delta.base();
    rows_ = static_cast<std::size_t>(c.dimension() + 1);
    pieces_.assign(rows_, std::vector<std::vector<ProductCell>>(rows_));
    for (const auto& level : delta.quotient_cells())
      for (const auto& p : level)
        pieces_[static_cast<std::size_t>(simplex_dim(p.first))][static_cast<std::size_t>(simplex_dim(p.second))]
            .push_back(p);
  }

  [[nodiscard]] std::size_t extent() const { return rows_; }
  [[nodiscard]] const std::vector<ProductCell>& piece(std::size_t i, std::size_t j) const { return pieces_[i][j]; }
  [[nodiscard]] std::size_t count(std::size_t i, std::size_t j) const { return pieces_[i][j].size(); }

  using Chain = std::map<ProductCell, std::int64_t>;

  /// Horizontal part ∂σ ⊗ τ, projected away from Δ.
  [[nodiscard]] Chain horizontal(const Chain& x) const {
    Chain out;
    for (const auto& [p, v] : x)
      for (auto& [f, s] : simplex_faces(p.first)) add(out, {f, p.second}, s * v);
    return out;
  }
  /// Vertical part (-1)^i σ ⊗ ∂τ, projected away from Δ.
  [[nodiscard]] Chain vertical(const Chain& x) const {
    Chain out;
    for (const auto& [p, v] : x) {
      const int sign = simplex_dim(p.first) % 2 ? -1 : 1;
      for (auto& [f, s] : simplex_faces(p.second)) add(out, {p.first, f}, sign * s * v);
    }
    return out;
  }

  /// d_h² = 0, d_v² = 0 and d_h d_v + d_v d_h = 0 on every generator.
  [[nodiscard]] bool differentials_consistent() const {
    for (const auto& row : pieces_)
      for (const auto& cellset : row)
        for (const auto& p : cellset) {
          Chain x{{p, 1}};
          if (!horizontal(horizontal(x)).empty() || !vertical(vertical(x)).empty()) return false;
          Chain hv = horizontal(vertical(x));
          for (const auto& [q, v] : vertical(horizontal(x))) add(hv, q, v);
          if (!hv.empty()) return false;
        }
    return true;
  }

  /// Column complex E_{i,*} with the vertical differential.
  [[nodiscard]] ChainComplex column(std::size_t i, const Coefficients& ring) const {
    std::vector<std::vector<ProductCell>> cells(rows_);
    for (std::size_t j = 0; j < rows_; ++j) cells[j] = pieces_[i][j];
    for (auto& level : cells) std::sort(level.begin(), level.end());
    auto faces = [](const ProductCell& p) {
      std::vector<std::pair<ProductCell, int>> out;
      const int sign = simplex_dim(p.first) % 2 ? -1 : 1;
      for (auto& [f, s] : simplex_faces(p.second)) out.push_back({{p.first, f}, sign * s});
      return out;
    };
    return cellular_chains(cells, faces, ring, true);
  }

  /// Total complex: degree n collects E_{i,n-i}.
  [[nodiscard]] ChainComplex total(const Coefficients& ring) const { return delta_->relative_chains(ring); }

 private:
  void add(Chain& c, const ProductCell& p, std::int64_t v) const {
    if (delta_->contains(p)) return;
    auto& slot = c[p];
    slot += v;
    if (slot == 0) c.erase(p);
  }

  const DiagonalSubcomplex* delta_;
  std::size_t rows_ = 0;
  std::vector<std::vector<std::vector<ProductCell>>> pieces_;
};

// ---------------------------------------------------------------------------
// Checks

struct RetractionReport {
  HomologyTable complex;
  HomologyTable diagonal;
  bool pass = false;
};

/// H_*(Δ) ≅ H_*(C) degreewise.
inline RetractionReport check_retraction(const SimplicialComplex& c, const Coefficients& ring) {
  auto delta = build_diagonal(c);
  RetractionReport r;
  r.complex = homology(c, ring);
  r.diagonal = homology(delta.chains(ring));
  r.pass = r.complex.isomorphic_to(r.diagonal);
  return r;
}

struct DecompositionRow {
  int i = 0;          // dim σ
  int j = 0;          // dim of the second factor
  std::size_t diagonal_cells = 0;  // cells of C_{i,*}(Δ) in total degree i + j
  std::size_t star_cells = 0;      // Σ_{dim σ = i} #j-cells of Δ_σ
};

struct DecompositionReport {
  std::vector<DecompositionRow> rows;
  bool pass = false;
};

/// Cell counts of C_{i,*}(Δ) against the direct sum of the Δ_σ, every bidegree.
inline DecompositionReport decomposition_check(const SimplicialComplex& c) {
  auto delta = build_diagonal(c);
  DecompositionReport r;
  r.pass = true;
  const int top = c.dimension();
  std::vector<std::vector<std::size_t>> lhs(static_cast<std::size_t>(top + 1), std::vector<std::size_t>(static_cast<std::size_t>(top + 1), 0));
  for (const auto& level : delta.cells())
    for (const auto& p : level) ++lhs[static_cast<std::size_t>(simplex_dim(p.first))][static_cast<std::size_t>(simplex_dim(p.second))];
  std::vector<std::vector<std::size_t>> rhs = lhs;
  for (auto& row : rhs) std::fill(row.begin(), row.end(), 0);
  for (int i = 0; i <= top; ++i)
    for (const auto& s : c.simplices(i)) {
      auto star = delta_sigma(c, s);
      for (int j = 0; j <= star.dimension(); ++j) rhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += star.count(j);
    }
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j) {
      DecompositionRow row{i, j, lhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], rhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]};
      if (row.diagonal_cells != row.star_cells) r.pass = false;
      r.rows.push_back(row);
    }
  return r;
}

struct E1Entry {
  int i = 0;
  int j = 0;
  HomologyGroup column_homology;  // H_j of E_{i,*}
  HomologyGroup summed;           // ⊕_{dim σ = i} H_j(C, Δ_σ)
};

struct QuotientReport {
  int n = 0;
  HomologyTable product;   // H_*(C x C)
  HomologyTable diagonal;  // H_*(Δ)
  HomologyTable relative;  // H_*(C x C, Δ)
  std::vector<int> nonvanishing_at_or_above;  // degrees k >= n-1 with H_k(CxC,Δ) != 0
  bool differentials_consistent = false;
  bool bookkeeping_exact = false;         // Tot(E) cell counts = parent - Δ in every degree
  bool euler_consistent = false;          // χ(CxC) = χ(Δ) + χ(CxC, Δ)
  bool e1_matches_decomposition = false;  // column homology = ⊕ H(C, Δ_σ)
  std::vector<E1Entry> e1;
  bool pass = false;  // relative homology vanishes in degrees >= n-1
};

/// Relative homology H_k(C x C, Δ) via the quotient double complex, with the
/// E^1 page of the column filtration.
inline QuotientReport quotient_vanishing(const SimplicialComplex& c, const Coefficients& ring, int n) {
  auto delta = build_diagonal(c);
  QuotientDoubleComplex e(delta);
  QuotientReport r;
  r.n = n;
  r.product = homology(delta.parent().chains(ring));
  r.diagonal = homology(delta.chains(ring));
  auto tot = e.total(ring);
  r.relative = homology(tot);
  for (const auto& g : r.relative.groups())
    if (g.degree >= n - 1 && !g.is_zero()) r.nonvanishing_at_or_above.push_back(g.degree);
  r.differentials_consistent = e.differentials_consistent();

  r.bookkeeping_exact = true;
  for (std::size_t d = 0; d < tot.length(); ++d) {
    std::size_t from_pieces = 0;
    for (std::size_t i = 0; i <= d && i < e.extent(); ++i)
      if (d - i < e.extent()) from_pieces += e.count(i, d - i);
    if (from_pieces != tot.rank(d) || tot.rank(d) + delta.count(static_cast<int>(d)) != delta.parent().count(static_cast<int>(d)))
      r.bookkeeping_exact = false;
  }
  r.euler_consistent = r.product.euler_characteristic() == r.diagonal.euler_characteristic() + r.relative.euler_characteristic();

  r.e1_matches_decomposition = true;
  for (std::size_t i = 0; i < e.extent(); ++i) {
    auto col = homology(e.column(i, ring));
    std::vector<HomologyGroup> summed(e.extent());
    for (std::size_t j = 0; j < e.extent(); ++j) summed[j].degree = static_cast<int>(j);
    for (const auto& s : c.simplices(static_cast<int>(i))) {
      auto rel = homology(relative_chains(c, delta_sigma(c, s), ring));
      for (const auto& g : rel.groups()) {
        auto& slot = summed[static_cast<std::size_t>(g.degree)];
        slot.rank += g.rank;
        slot.torsion.insert(slot.torsion.end(), g.torsion.begin(), g.torsion.end());
      }
    }
    for (std::size_t j = 0; j < e.extent(); ++j) {
      std::sort(summed[j].torsion.begin(), summed[j].torsion.end());
      E1Entry entry{static_cast<int>(i), static_cast<int>(j), {}, summed[j]};
      entry.column_homology.degree = static_cast<int>(j);
      entry.column_homology.rank = col.rank(static_cast<int>(j));
      entry.column_homology.torsion = col.torsion(static_cast<int>(j));
      // Torsion of a direct sum is compared as a multiset of invariant factors up to
      // regrouping; over a field only ranks exist.
      if (entry.column_homology.rank != entry.summed.rank ||
          (ring.is_field() ? false : entry.column_homology.torsion != entry.summed.torsion))
        r.e1_matches_decomposition = false;
      r.e1.push_back(std::move(entry));
    }
  }
  r.pass = r.nonvanishing_at_or_above.empty();
  return r;
}

}  // namespace fillings
