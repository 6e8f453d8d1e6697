#pragma once

// Flags of subspaces in Q^m: stabilizer dimensions by exact linear algebra,
// forced zero entries for permuted standard flags, the splitting of a flag
// stabilizer, induced flags on graded pieces and the codimension chain.
// Also the finite building of F_q^m as a simplicial complex.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <bit>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "fillings/chaincore.hpp"
#include "fillings/error.hpp"
#include "fillings/linalg.hpp"

namespace fillings {

/// Strictly increasing chain of proper nonzero subspaces of Q^m, each stored
/// as its canonical RREF basis.
class RationalFlag {
 public:
  RationalFlag() = default;

  RationalFlag(std::size_t m, const std::vector<QMatrix>& spans) : m_(m) {
    if (m == 0) throw InputError("flag ambient dimension must be positive");
    for (const auto& s : spans) {
      if (s.cols() != m && !(s.rows() == 0)) throw InputError("flag subspace has wrong ambient dimension");
      QMatrix b = row_basis(s.rows() ? s : QMatrix(0, m));
      if (b.rows() == 0 || b.rows() >= m) throw InputError("flag subspaces must be proper and nonzero");
      if (!subspaces_.empty()) {
        const auto& prev = subspaces_.back();
        if (b.rows() <= prev.rows() || !row_span_contains(b, prev))
          throw InputError("flag subspaces must be strictly increasing under containment");
      }
      subspaces_.push_back(std::move(b));
    }
  }

  [[nodiscard]] std::size_t ambient() const { return m_; }
  [[nodiscard]] std::size_t length() const { return subspaces_.size(); }
  [[nodiscard]] bool empty() const { return subspaces_.empty(); }
  [[nodiscard]] const std::vector<QMatrix>& subspaces() const { return subspaces_; }
  [[nodiscard]] const QMatrix& operator[](std::size_t i) const { return subspaces_[i]; }
  [[nodiscard]] std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : subspaces_) d.push_back(s.rows());
    return d;
  }

  /// E_0 = 0, E_1, ..., E_r, E_{r+1} = Q^m.
  [[nodiscard]] QMatrix padded(std::size_t i) const {
    if (i == 0) return QMatrix(0, m_);
    if (i <= subspaces_.size()) return subspaces_[i - 1];
    return QMatrix::identity(m_);
  }

  friend bool operator==(const RationalFlag& a, const RationalFlag& b) {
    return a.m_ == b.m_ && a.subspaces_ == b.subspaces_;
  }

 private:
  std::size_t m_ = 0;
  std::vector<QMatrix> subspaces_;
};

/// Span of the given coordinate vectors (0-based indices).
inline QMatrix coordinate_span(std::size_t m, const std::vector<std::size_t>& coords) {
  QMatrix b(0, m);
  for (auto c : coords) {
    std::vector<Rational> v(m);
    v[c] = 1;
    b.append_row(v);
  }
  return b;
}

/// dims ⊆ {1..m-1} and a permutation w of {0..m-1}; the flag w·F with
/// F_k = <e_1..e_{dims_k}>.
struct CoordinateFlagSpec {
  std::size_t m = 0;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> w;  // w[i] = image of i, 0-based

  void validate() const {
    if (dims.empty()) throw InputError("coordinate flag needs nonempty dims");
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (dims[k] < 1 || dims[k] >= m) throw InputError("coordinate flag dims must lie in 1..m-1");
      if (k && dims[k] <= dims[k - 1]) throw InputError("coordinate flag dims must be strictly increasing");
    }
    if (w.size() != m) throw InputError("permutation has wrong size");
    std::vector<bool> seen(m, false);
    for (auto x : w) {
      if (x >= m || seen[x]) throw InputError("w is not a permutation");
      seen[x] = true;
    }
  }

  /// w(S_k) for S_k = {0..dims_k - 1}.
  [[nodiscard]] std::vector<std::size_t> image(std::size_t k) const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < dims[k]; ++i) s.push_back(w[i]);
    std::sort(s.begin(), s.end());
    return s;
  }

  [[nodiscard]] RationalFlag flag() const {
    std::vector<QMatrix> spans;
    for (std::size_t k = 0; k < dims.size(); ++k) spans.push_back(coordinate_span(m, image(k)));
    return RationalFlag(m, spans);
  }
};

inline RationalFlag standard_flag(std::size_t m, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> id(m);
  std::iota(id.begin(), id.end(), 0);
  return CoordinateFlagSpec{m, dims, id}.flag();
}

/// Above-diagonal entries (i, j), i < j, forced to vanish on Stab(wF): some
/// w(S_k) contains j but not i. Precondition: w(S_k) ≠ S_k for all k.
inline std::vector<std::pair<std::size_t, std::size_t>> forced_zero_entries(const CoordinateFlagSpec& spec) {
  spec.validate();
  std::vector<std::vector<bool>> in(spec.dims.size(), std::vector<bool>(spec.m, false));
  for (std::size_t k = 0; k < spec.dims.size(); ++k) {
    bool fixed = true;
    for (auto x : spec.image(k)) {
      in[k][x] = true;
      if (x >= spec.dims[k]) fixed = false;
    }
    if (fixed) throw PreconditionError("w preserves F_" + std::to_string(k + 1) + " (dim " + std::to_string(spec.dims[k]) + ")");
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < spec.m; ++j)
    for (std::size_t i = 0; i < j; ++i)
      for (std::size_t k = 0; k < spec.dims.size(); ++k)
        if (in[k][j] && !in[k][i]) {
          out.emplace_back(i, j);
          break;
        }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t forced_zero_count(const CoordinateFlagSpec& spec) { return forced_zero_entries(spec).size(); }

// ---------------------------------------------------------------------------
// Stabilizer Lie algebras. Unknown X is m x m, variable a*m + b is X_ab.

namespace detail {
/// Appends the linear conditions X·U ⊆ V.
inline void add_maps_into(QMatrix& rows, std::size_t m, const QMatrix& u, const QMatrix& v) {
  if (u.rows() == 0) return;
  QMatrix ann = annihilator(v.rows() ? v : QMatrix(0, m), m);
  for (std::size_t a = 0; a < ann.rows(); ++a)
    for (std::size_t b = 0; b < u.rows(); ++b) {
      std::vector<Rational> eq(m * m);
      bool nonzero = false;
      for (std::size_t x = 0; x < m; ++x) {
        if (sgn(ann(a, x)) == 0) continue;
        for (std::size_t y = 0; y < m; ++y) {
          if (sgn(u(b, y)) == 0) continue;
          eq[x * m + y] = ann(a, x) * u(b, y);
          nonzero = true;
        }
      }
      if (nonzero) rows.append_row(eq);
    }
}

inline void add_stabilizes(QMatrix& rows, const RationalFlag& f) {
  for (const auto& s : f.subspaces()) add_maps_into(rows, f.ambient(), s, s);
}

/// n(E) = {X : X E_{i+1} ⊆ E_i, i = 0..r}.
inline void add_nilpotent(QMatrix& rows, const RationalFlag& e) {
  for (std::size_t i = 0; i <= e.length(); ++i) add_maps_into(rows, e.ambient(), e.padded(i + 1), e.padded(i));
}

inline std::size_t solution_dim(const QMatrix& rows, std::size_t m) {
  if (rows.rows() == 0) return m * m;
  return m * m - rank(rows);
}

inline void require_same_ambient(const RationalFlag& e, const RationalFlag& f) {
  if (e.ambient() != f.ambient()) throw InputError("flags live in different ambient dimensions");
}
}  // namespace detail

/// Basis of the stabilizer algebra {X : X V ⊆ V for every V in F}, one matrix per row.
inline QMatrix stab_algebra(const RationalFlag& f) {
  const std::size_t m = f.ambient();
  QMatrix rows(0, m * m);
  detail::add_stabilizes(rows, f);
  if (rows.rows() == 0) return QMatrix::identity(m * m);
  return nullspace(rows);
}

inline std::size_t stab_dim(const RationalFlag& f) {
  QMatrix rows(0, f.ambient() * f.ambient());
  detail::add_stabilizes(rows, f);
  return detail::solution_dim(rows, f.ambient());
}

inline std::size_t stab_pair_dim(const RationalFlag& e, const RationalFlag& f) {
  detail::require_same_ambient(e, f);
  QMatrix rows(0, e.ambient() * e.ambient());
  detail::add_stabilizes(rows, e);
  detail::add_stabilizes(rows, f);
  return detail::solution_dim(rows, e.ambient());
}

/// dim Stab(E) / (Stab(E) ∩ Stab(F)).
inline std::size_t orbit_codim(const RationalFlag& e, const RationalFlag& f) { return stab_dim(e) - stab_pair_dim(e, f); }

/// No subspace of E equals a subspace of F.
inline bool disjoint(const RationalFlag& e, const RationalFlag& f) {
  detail::require_same_ambient(e, f);
  for (const auto& a : e.subspaces())
    for (const auto& b : f.subspaces())
      if (a == b) return false;
  return true;
}

/// Entries of Stab(F) that vanish on every element (zero in every basis vector).
inline std::vector<std::pair<std::size_t, std::size_t>> zero_entries_above_diagonal(const RationalFlag& f) {
  const std::size_t m = f.ambient();
  QMatrix basis = stab_algebra(f);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      bool zero = true;
      for (std::size_t r = 0; r < basis.rows() && zero; ++r)
        if (sgn(basis(r, i * m + j)) != 0) zero = false;
      if (zero) out.emplace_back(i, j);
    }
  return out;
}

inline bool preserves_some_member(const CoordinateFlagSpec& spec) {
  for (std::size_t k = 0; k < spec.dims.size(); ++k)
    if (spec.image(k).back() < spec.dims[k]) return true;
  return false;
}

struct LemmaUpperReport {
  std::size_t m = 0;
  std::size_t cases = 0;
  std::size_t skipped = 0;  // w preserves some F_k
  std::size_t violations = 0;
  std::size_t min_slack = SIZE_MAX;
  std::size_t oracle_checked = 0;
  std::size_t oracle_mismatch = 0;
  std::optional<CoordinateFlagSpec> first_violation;
  [[nodiscard]] bool pass() const { return violations == 0 && oracle_mismatch == 0; }
};

/// Counts forced zeros for one case; the stabilizer-algebra oracle is optional
/// since it is slow past m = 4.
inline void lemma_upper_case(LemmaUpperReport& r, const CoordinateFlagSpec& spec, bool oracle) {
  if (preserves_some_member(spec)) {
    ++r.skipped;
    return;
  }
  const auto zeros = forced_zero_entries(spec);
  ++r.cases;
  if (zeros.size() < spec.dims.size() && r.violations++ == 0) r.first_violation = spec;
  r.min_slack = std::min(r.min_slack, zeros.size() - std::min(zeros.size(), spec.dims.size()));
  if (oracle) {
    ++r.oracle_checked;
    if (zero_entries_above_diagonal(spec.flag()) != zeros) ++r.oracle_mismatch;
  }
}

/// Every nonempty dimension set and every permutation w.
inline LemmaUpperReport lemma_upper_exhaustive(std::size_t m, bool oracle) {
  if (m < 2 || m > 8) throw PreconditionError("exhaustive lemma check needs 2 <= m <= 8");
  LemmaUpperReport r;
  r.m = m;
  for (unsigned mask = 1; mask < (1u << (m - 1)); ++mask) {
    CoordinateFlagSpec spec{m, {}, std::vector<std::size_t>(m)};
    for (std::size_t d = 1; d < m; ++d)
      if (mask >> (d - 1) & 1u) spec.dims.push_back(d);
    std::iota(spec.w.begin(), spec.w.end(), 0);
    do lemma_upper_case(r, spec, oracle);
    while (std::next_permutation(spec.w.begin(), spec.w.end()));
  }
  return r;
}

template <class Rng>
LemmaUpperReport lemma_upper_random(std::size_t m, std::size_t samples, Rng& rng, bool oracle) {
  if (m < 2) throw PreconditionError("lemma check needs m >= 2");
  LemmaUpperReport r;
  r.m = m;
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t s = 0; s < samples; ++s) {
    CoordinateFlagSpec spec{m, {}, std::vector<std::size_t>(m)};
    while (spec.dims.empty())
      for (std::size_t d = 1; d < m; ++d)
        if (coin(rng)) spec.dims.push_back(d);
    std::iota(spec.w.begin(), spec.w.end(), 0);
    std::shuffle(spec.w.begin(), spec.w.end(), rng);
    lemma_upper_case(r, spec, oracle);
  }
  return r;
}

struct SplitDims {
  std::vector<std::size_t> graded;  // d_i = dim E_{i+1}/E_i
  std::size_t dim_n = 0;
  std::size_t dim_levi = 0;
  std::size_t dim_stab = 0;
  std::size_t dim_n_linear = 0;    // dim n(E) from the constraint system
  std::size_t dim_stab_linear = 0; // stab_dim(E)
  [[nodiscard]] bool consistent() const { return dim_n == dim_n_linear && dim_stab == dim_stab_linear; }
};

inline std::size_t nilpotent_dim(const RationalFlag& e) {
  QMatrix rows(0, e.ambient() * e.ambient());
  detail::add_nilpotent(rows, e);
  return detail::solution_dim(rows, e.ambient());
}

inline SplitDims split_dims(const RationalFlag& e) {
  SplitDims s;
  std::size_t prev = 0;
  for (std::size_t i = 1; i <= e.length() + 1; ++i) {
    const std::size_t cur = i <= e.length() ? e[i - 1].rows() : e.ambient();
    s.graded.push_back(cur - prev);
    prev = cur;
  }
  for (std::size_t i = 0; i < s.graded.size(); ++i) {
    s.dim_levi += s.graded[i] * s.graded[i];
    for (std::size_t j = i + 1; j < s.graded.size(); ++j) s.dim_n += s.graded[i] * s.graded[j];
  }
  s.dim_stab = s.dim_n + s.dim_levi;
  s.dim_n_linear = nilpotent_dim(e);
  s.dim_stab_linear = stab_dim(e);
  return s;
}

// ---------------------------------------------------------------------------
// Induced flags

/// F_{i*} inside E_{i+1}/E_i. A subspace of the quotient is stored by its
/// preimage E_i + (E_{i+1} ∩ F_j), between E_i and E_{i+1}.
struct InducedFlag {
  std::size_t piece = 0;
  std::size_t piece_dim = 0;                // d_i
  std::vector<std::size_t> image_dims;      // per F_j, dim of its image
  std::vector<QMatrix> chain;               // distinct proper nontrivial images, increasing
  [[nodiscard]] std::size_t length() const { return chain.size(); }
};

inline std::vector<InducedFlag> induced_flags(const RationalFlag& e, const RationalFlag& f) {
  detail::require_same_ambient(e, f);
  const std::size_t m = e.ambient();
  std::vector<InducedFlag> out;
  for (std::size_t i = 0; i <= e.length(); ++i) {
    const QMatrix lo = e.padded(i), hi = e.padded(i + 1);
    InducedFlag fl;
    fl.piece = i;
    fl.piece_dim = hi.rows() - lo.rows();
    for (const auto& fj : f.subspaces()) {
      QMatrix cap = intersect(hi, fj, m);
      QMatrix pre = row_basis(stack(lo.rows() ? lo : QMatrix(0, m), cap.rows() ? cap : QMatrix(0, m)));
      const std::size_t d = pre.rows() - lo.rows();
      fl.image_dims.push_back(d);
      if (d == 0 || d == fl.piece_dim) continue;
      if (std::find(fl.chain.begin(), fl.chain.end(), pre) == fl.chain.end()) fl.chain.push_back(std::move(pre));
    }
    std::sort(fl.chain.begin(), fl.chain.end(), [](const QMatrix& a, const QMatrix& b) { return a.rows() < b.rows(); });
    out.push_back(std::move(fl));
  }
  return out;
}

/// F^0: the F_j whose image in every graded piece of E is trivial or full.
inline RationalFlag f0_subflag(const RationalFlag& e, const RationalFlag& f) {
  if (!disjoint(e, f)) throw PreconditionError("f0_subflag needs disjoint flags");
  auto ind = induced_flags(e, f);
  std::vector<QMatrix> keep;
  for (std::size_t j = 0; j < f.length(); ++j) {
    bool ok = true;
    for (const auto& fl : ind) {
      const auto d = fl.image_dims[j];
      if (d != 0 && d != fl.piece_dim) ok = false;
    }
    if (ok) keep.push_back(f[j]);
  }
  return RationalFlag(e.ambient(), keep);
}

struct SlmReport {
  std::size_t m = 0;
  std::size_t len_e = 0;
  std::size_t len_f = 0;
  std::size_t dim_n = 0;
  std::size_t dim_n_cap_stab_f = 0;
  std::size_t nilpotent_codim = 0;  // dim N/(Stab F ∩ N)
  std::vector<std::size_t> induced_lengths;  // L(i)
  std::size_t sum_l = 0;
  std::size_t len_f0 = 0;
  std::size_t codim = 0;  // nilpotent_codim + Σ (1 + L(i))
  bool step_nilpotent = false;  // nilpotent_codim ≥ length F^0
  bool step_partition = false;  // length F^0 + Σ L(i) ≥ length F
  bool codim_ok = false;        // codim ≥ length E + length F + 1
  long dim_gk = 0;              // m(m+1)/2 - codim
  long lhs = 0;                 // dim G/K + |σ| + |τ|
  long rhs = 0;                 // m(m+1)/2 - 2
  bool holds = false;
  [[nodiscard]] bool pass() const { return codim_ok && holds && dim_gk >= 0; }
};

inline SlmReport slm_inequality(const RationalFlag& e, const RationalFlag& f) {
  detail::require_same_ambient(e, f);
  if (e.empty() || f.empty()) throw PreconditionError("slm_inequality needs nonempty flags");
  if (!disjoint(e, f)) throw PreconditionError("slm_inequality needs disjoint flags");
  const std::size_t m = e.ambient();
  SlmReport r;
  r.m = m;
  r.len_e = e.length();
  r.len_f = f.length();
  r.dim_n = nilpotent_dim(e);
  QMatrix rows(0, m * m);
  detail::add_nilpotent(rows, e);
  detail::add_stabilizes(rows, f);
  r.dim_n_cap_stab_f = detail::solution_dim(rows, m);
  r.nilpotent_codim = r.dim_n - r.dim_n_cap_stab_f;
  for (const auto& fl : induced_flags(e, f)) {
    r.induced_lengths.push_back(fl.length());
    r.sum_l += fl.length();
  }
  r.len_f0 = f0_subflag(e, f).length();
  r.codim = r.nilpotent_codim + r.induced_lengths.size() + r.sum_l;
  r.step_nilpotent = r.nilpotent_codim >= r.len_f0;
  r.step_partition = r.len_f0 + r.sum_l >= r.len_f;
  r.codim_ok = r.codim >= r.len_e + r.len_f + 1;
  const long top = static_cast<long>(m * (m + 1) / 2);
  r.dim_gk = top - static_cast<long>(r.codim);
  r.lhs = r.dim_gk + static_cast<long>(r.len_e - 1) + static_cast<long>(r.len_f - 1);
  r.rhs = top - 2;
  r.holds = r.lhs < r.rhs;
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration and sampling

/// Every chain of coordinate subspaces of Q^m of length ≥ 1.
inline std::vector<RationalFlag> coordinate_flags(std::size_t m) {
  std::set<std::vector<std::vector<std::size_t>>> seen;
  std::vector<RationalFlag> out;
  std::vector<std::size_t> w(m);
  std::iota(w.begin(), w.end(), 0);
  do {
    for (unsigned mask = 1; mask < (1u << (m - 1)); ++mask) {
      CoordinateFlagSpec spec{m, {}, w};
      for (std::size_t d = 1; d < m; ++d)
        if (mask >> (d - 1) & 1u) spec.dims.push_back(d);
      std::vector<std::vector<std::size_t>> key;
      for (std::size_t k = 0; k < spec.dims.size(); ++k) key.push_back(spec.image(k));
      if (seen.insert(key).second) out.push_back(spec.flag());
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::vector<RationalFlag> standard_flags(std::size_t m) {
  std::vector<RationalFlag> out;
  for (unsigned mask = 1; mask < (1u << (m - 1)); ++mask) {
    std::vector<std::size_t> dims;
    for (std::size_t d = 1; d < m; ++d)
      if (mask >> (d - 1) & 1u) dims.push_back(d);
    out.push_back(standard_flag(m, dims));
  }
  return out;
}

/// Random flag: random nonempty dims, spans of leading rows of a random
/// invertible matrix with entries p/q, |p| ≤ 5, 1 ≤ q ≤ 5.
template <class Rng>
RationalFlag random_rational_flag(std::size_t m, Rng& rng) {
  if (m < 2) throw PreconditionError("random flag needs m >= 2");
  std::uniform_int_distribution<int> num(-5, 5), den(1, 5), coin(0, 1);
  std::vector<std::size_t> dims;
  while (dims.empty())
    for (std::size_t d = 1; d < m; ++d)
      if (coin(rng)) dims.push_back(d);
  for (;;) {
    QMatrix a(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        a(r, c) = x;
      }
    if (rank(a) < m) continue;
    std::vector<QMatrix> spans;
    for (auto d : dims) {
      QMatrix s(0, m);
      for (std::size_t r = 0; r < d; ++r) s.append_row(a.row(r));
      spans.push_back(s);
    }
    return RationalFlag(m, spans);
  }
}

/// A disjoint pair; regenerates until disjoint.
template <class Rng>
std::pair<RationalFlag, RationalFlag> random_disjoint_pair(std::size_t m, Rng& rng) {
  for (;;) {
    auto e = random_rational_flag(m, rng);
    auto f = random_rational_flag(m, rng);
    if (disjoint(e, f)) return {std::move(e), std::move(f)};
  }
}

// ---------------------------------------------------------------------------
// Finite buildings

struct BuildingGuard {
  std::size_t max_m = 4;
  std::size_t max_q = 3;
};

inline bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

/// Number of complete flags in F_q^m: ∏_{k=1}^m (q^k - 1)/(q - 1).
inline std::size_t complete_flag_count(std::size_t m, std::size_t q) {
  std::size_t n = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    std::size_t qk = 1;
    for (std::size_t i = 0; i < k; ++i) qk *= q;
    n *= (qk - 1) / (q - 1);
  }
  return n;
}

namespace detail {
/// All RREF matrices of rank k over F_q on m columns.
inline std::vector<std::vector<std::vector<std::size_t>>> rref_patterns(std::size_t m, std::size_t k, std::size_t q) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> pivots(k);
  // Iterate over pivot sets.
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::size_t t = 0;
    for (std::size_t c = 0; c < m; ++c)
      if (mask >> c & 1u) pivots[t++] = c;
    // Free positions: row r, column c > pivots[r], c not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = pivots[r] + 1; c < m; ++c)
        if (!(mask >> c & 1u)) free.emplace_back(r, c);
    std::vector<std::size_t> digits(free.size(), 0);
    for (;;) {
      std::vector<std::vector<std::size_t>> rows(k, std::vector<std::size_t>(m, 0));
      for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = digits[f];
      out.push_back(std::move(rows));
      std::size_t f = 0;
      while (f < digits.size() && ++digits[f] == q) digits[f++] = 0;
      if (f == digits.size()) break;
    }
  }
  return out;
}

/// Nonzero vectors of the row span, encoded base q.
inline std::vector<std::uint32_t> span_points(const std::vector<std::vector<std::size_t>>& rows, std::size_t m, std::size_t q) {
  std::vector<std::uint32_t> pts;
  std::vector<std::size_t> coef(rows.size(), 0);
  for (;;) {
    std::size_t f = 0;
    while (f < coef.size() && ++coef[f] == q) coef[f++] = 0;
    if (f == coef.size()) break;
    std::uint32_t code = 0;
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t x = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) x += coef[r] * rows[r][c];
      code = code * static_cast<std::uint32_t>(q) + static_cast<std::uint32_t>(x % q);
    }
    pts.push_back(code);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}
}  // namespace detail

/// Order complex of proper nonzero subspaces of F_q^m, q prime.
inline SimplicialComplex finite_building(std::size_t m, std::size_t q, BuildingGuard guard = {}) {
  if (m < 2) throw InputError("building needs m >= 2");
  if (!is_prime(q)) throw InputError("building needs q prime");
  if (m > guard.max_m || q > guard.max_q) throw PreconditionError("building size guard exceeded");
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> points;
  std::vector<std::size_t> dim;
  for (std::size_t k = 1; k < m; ++k)
    for (const auto& rows : detail::rref_patterns(m, k, q)) {
      std::string s = "[";
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) s += ",";
        for (auto x : rows[r]) s += std::to_string(x);
      }
      labels.push_back(s + "]");
      points.push_back(detail::span_points(rows, m, q));
      dim.push_back(k);
    }
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (dim[a] < dim[b] && std::includes(points[b].begin(), points[b].end(), points[a].begin(), points[a].end()))
        adj[a][b] = adj[b][a] = true;
  return clique_complex(adj, std::make_shared<SimplicialComplex::Labels>(std::move(labels)));
}

}  // namespace fillings
