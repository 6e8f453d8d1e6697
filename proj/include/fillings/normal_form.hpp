#pragma once

// Rank and Smith normal form of sparse integer matrices, over Z or F_p.
//
// Elimination first pivots on unit entries (every nonzero entry over a
// field), which for boundary matrices of simplicial and product complexes
// removes almost everything. Whatever survives over Z is finished by a dense
// Smith normal form with a hard cap on coefficient size.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fillings/error.hpp"
#include "fillings/rational.hpp"

namespace fillings {

/// Coefficient ring for chain complexes: Z or F_p with p prime.
class Coefficients {
 public:
  static Coefficients integers() { return Coefficients(0); }
  static Coefficients mod(std::uint32_t p) {
    if (p < 2) throw InputError("field characteristic must be a prime, got " + std::to_string(p));
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw InputError("field characteristic must be a prime, got " + std::to_string(p));
    return Coefficients(p);
  }
  /// Parses "Z" or "F<p>" / "<p>".
  static Coefficients parse(const std::string& s) {
    if (s == "Z" || s == "z" || s == "ZZ") return integers();
    std::string digits = (!s.empty() && (s[0] == 'F' || s[0] == 'f')) ? s.substr(1) : s;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw InputError("unknown coefficient ring '" + s + "' (expected Z or F<p>)");
    return mod(static_cast<std::uint32_t>(std::stoul(digits)));
  }

  [[nodiscard]] bool is_field() const { return p_ != 0; }
  [[nodiscard]] std::uint32_t characteristic() const { return p_; }
  [[nodiscard]] std::string name() const { return p_ == 0 ? "Z" : "F" + std::to_string(p_); }

  /// Representative of an integer in this ring (reduced mod p over a field).
  [[nodiscard]] std::int64_t reduce(std::int64_t x) const {
    if (p_ == 0) return x;
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return r < 0 ? r + p_ : r;
  }

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  explicit Coefficients(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Column-major sparse integer matrix; each column is sorted by row index.
struct SparseMatrix {
  using Entry = std::pair<std::uint32_t, std::int64_t>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  [[nodiscard]] std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : columns) n += col.size();
    return n;
  }

  /// Sorts each column and merges duplicate rows, dropping zeros.
  void normalize(const Coefficients& ring) {
    for (auto& col : columns) {
      std::sort(col.begin(), col.end());
      std::vector<Entry> merged;
      for (const auto& [r, v] : col) {
        if (!merged.empty() && merged.back().first == r)
          merged.back().second += v;
        else
          merged.emplace_back(r, v);
      }
      std::erase_if(merged, [&](Entry& e) {
        e.second = ring.reduce(e.second);
        return e.second == 0;
      });
      col = std::move(merged);
    }
  }
};

/// Product a*b over the ring (integers are exact; entries must fit int64).
inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, const Coefficients& ring) {
  if (a.cols != b.rows) throw PreconditionError("matrix shapes do not compose");
  SparseMatrix out(a.rows, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j) {
    auto& col = out.columns[j];
    for (const auto& [k, bv] : b.columns[j])
      for (const auto& [i, av] : a.columns[k]) col.emplace_back(i, ring.reduce(av * bv));
  }
  out.normalize(ring);
  return out;
}

inline bool is_zero(const SparseMatrix& m) {
  return std::all_of(m.columns.begin(), m.columns.end(), [](const auto& c) { return c.empty(); });
}

/// rank plus the nontrivial invariant factors (empty over a field).
struct NormalForm {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

inline constexpr std::size_t kDefaultBitBound = 4096;

namespace detail {

struct IntegerRing {
  using value_type = Integer;
  std::size_t bit_bound;

  [[nodiscard]] value_type from(std::int64_t x) const { return Integer(static_cast<long>(x)); }
  static bool zero(const value_type& v) { return sgn(v) == 0; }
  static bool unit(const value_type& v) { return v == 1 || v == -1; }
  static value_type unit_inverse(const value_type& v) { return v; }
  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const {
    value_type r = a * b;
    check(r);
    return r;
  }
  void sub_mul(value_type& dst, const value_type& f, const value_type& src) const {
    dst -= f * src;
    check(dst);
  }
  void check(const value_type& v) const {
    if (sgn(v) != 0 && mpz_sizeinbase(v.get_mpz_t(), 2) > bit_bound)
      throw CoefficientOverflow("Smith normal form entry exceeded " + std::to_string(bit_bound) +
                                " bits");
  }
};

struct PrimeField {
  using value_type = std::uint64_t;
  std::uint64_t p;

  [[nodiscard]] value_type from(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<value_type>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  static bool zero(value_type v) { return v == 0; }
  static bool unit(value_type v) { return v != 0; }
  [[nodiscard]] value_type unit_inverse(value_type v) const {
    value_type result = 1, base = v, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
  [[nodiscard]] value_type mul(value_type a, value_type b) const { return a * b % p; }
  void sub_mul(value_type& dst, value_type f, value_type src) const { dst = (dst + p - f * src % p) % p; }
};

/// Unit-pivot elimination. Returns the number of pivots taken; `cols` is left
/// holding the residual matrix (rows/columns of pivots removed).
template <class Ring>
std::size_t eliminate_units(std::vector<std::vector<std::pair<std::uint32_t, typename Ring::value_type>>>& cols,
                            std::size_t nrows, const Ring& ring) {
  using V = typename Ring::value_type;
  using Col = std::vector<std::pair<std::uint32_t, V>>;

  std::vector<std::vector<std::uint32_t>> row_cols(nrows);
  for (std::uint32_t c = 0; c < cols.size(); ++c)
    for (const auto& e : cols[c]) row_cols[e.first].push_back(c);

  std::vector<char> alive(cols.size(), 1);
  std::vector<std::uint32_t> mark(cols.size(), UINT32_MAX);
  std::size_t pivots = 0;
  std::uint32_t stamp = 0;

  auto find_in = [](const Col& col, std::uint32_t r) -> const V* {
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, std::uint32_t key) { return e.first < key; });
    return (it != col.end() && it->first == r) ? &it->second : nullptr;
  };

  auto pivot_on = [&](std::uint32_t c, std::uint32_t r) {
    const V u = *find_in(cols[c], r);
    const V uinv = ring.unit_inverse(u);
    ++stamp;
    for (std::uint32_t c2 : row_cols[r]) {
      if (c2 == c || !alive[c2] || mark[c2] == stamp) continue;
      mark[c2] = stamp;
      const V* hit = find_in(cols[c2], r);
      if (!hit) continue;
      const V f = ring.mul(*hit, uinv);
      // cols[c2] -= f * cols[c]
      Col merged;
      merged.reserve(cols[c2].size() + cols[c].size());
      auto a = cols[c2].begin(), ae = cols[c2].end();
      auto b = cols[c].begin(), be = cols[c].end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
          V v = ring.from(0);
          ring.sub_mul(v, f, b->second);
          if (!Ring::zero(v)) {
            row_cols[b->first].push_back(c2);
            merged.emplace_back(b->first, std::move(v));
          }
          ++b;
        } else {
          V v = a->second;
          ring.sub_mul(v, f, b->second);
          if (!Ring::zero(v)) merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      cols[c2] = std::move(merged);
    }
    alive[c] = 0;
    cols[c].clear();
    row_cols[r].clear();
    ++pivots;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::uint32_t> order;
    for (std::uint32_t c = 0; c < cols.size(); ++c)
      if (alive[c] && !cols[c].empty()) order.push_back(c);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return cols[a].size() < cols[b].size(); });
    for (std::uint32_t c : order) {
      if (!alive[c] || cols[c].empty()) continue;
      std::uint32_t best_row = UINT32_MAX;
      std::size_t best_load = SIZE_MAX;
      for (const auto& [r, v] : cols[c]) {
        if (!Ring::unit(v)) continue;
        if (row_cols[r].size() < best_load) {
          best_load = row_cols[r].size();
          best_row = r;
        }
      }
      if (best_row == UINT32_MAX) continue;
      pivot_on(c, best_row);
      progress = true;
    }
  }
  for (std::uint32_t c = 0; c < cols.size(); ++c)
    if (!alive[c]) cols[c].clear();
  return pivots;
}

/// Dense Smith normal form diagonal (absolute values, nonzero only).
inline std::vector<Integer> dense_smith_diagonal(std::vector<std::vector<Integer>> a, const IntegerRing& ring) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<Integer> diag;
  auto abs_less = [](const Integer& x, const Integer& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()) < 0; };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    auto place_min = [&](bool trailing_only_line) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (trailing_only_line && i != t && j != t) continue;
          if (sgn(a[i][j]) == 0) continue;
          if (bi == m || abs_less(a[i][j], a[bi][bj])) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) return false;
      std::swap(a[t], a[bi]);
      for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][bj]);
      return true;
    };
    if (!place_min(false)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        if (sgn(q) != 0)
          for (std::size_t j = t; j < n; ++j)
            if (sgn(a[t][j]) != 0) ring.sub_mul(a[i][j], q, a[t][j]);
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        if (sgn(q) != 0)
          for (std::size_t i = t; i < m; ++i)
            if (sgn(a[i][t]) != 0) ring.sub_mul(a[i][j], q, a[i][t]);
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (!clean) {
        place_min(true);
        continue;
      }
      // Divisibility of the trailing block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (sgn(a[i][j]) == 0) continue;
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < n; ++k) {
              a[t][k] += a[i][k];
              ring.check(a[t][k]);
            }
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

}  // namespace detail

/// Rank and invariant factors of `m` over `ring`.
inline NormalForm normal_form(const SparseMatrix& m, const Coefficients& ring,
                              std::size_t bit_bound = kDefaultBitBound) {
  NormalForm out;
  if (ring.is_field()) {
    detail::PrimeField field{ring.characteristic()};
    std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> cols(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c)
      for (const auto& [r, v] : m.columns[c]) {
        auto x = field.from(v);
        if (x) cols[c].emplace_back(r, x);
      }
    out.rank = detail::eliminate_units(cols, m.rows, field);
    return out;
  }
  detail::IntegerRing zring{bit_bound};
  std::vector<std::vector<std::pair<std::uint32_t, Integer>>> cols(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c])
      if (v != 0) cols[c].emplace_back(r, zring.from(v));
  out.rank = detail::eliminate_units(cols, m.rows, zring);

  // Compress the residual to a dense block.
  std::vector<std::uint32_t> live_cols;
  std::vector<std::int64_t> row_index(m.rows, -1);
  std::size_t live_rows = 0;
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    if (cols[c].empty()) continue;
    live_cols.push_back(c);
    for (const auto& e : cols[c])
      if (row_index[e.first] < 0) row_index[e.first] = static_cast<std::int64_t>(live_rows++);
  }
  if (live_cols.empty()) return out;
  std::vector<std::vector<Integer>> dense(live_rows, std::vector<Integer>(live_cols.size()));
  for (std::size_t j = 0; j < live_cols.size(); ++j)
    for (const auto& [r, v] : cols[live_cols[j]]) dense[static_cast<std::size_t>(row_index[r])][j] = v;
  for (auto& d : detail::dense_smith_diagonal(std::move(dense), zring)) {
    ++out.rank;
    if (d != 1) out.torsion.push_back(d);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace fillings
