#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fillings/rational.hpp"

namespace fillings {

/// Dense row-major matrix over the rationals. Rows double as vectors when the
/// matrix holds a basis of a subspace.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
    return id;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::vector<Rational> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  void append_row(const std::vector<Rational>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  /// Keeps the first `n` rows.
  void truncate_rows(std::size_t n) {
    if (n < rows_) {
      rows_ = n;
      data_.resize(rows_ * cols_);
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// In-place reduced row echelon form. Returns the pivot columns; rows past
/// the rank are zero afterwards.
inline std::vector<std::size_t> reduce_to_rref(QMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, lead);
    Rational inv = 1 / a(lead, c);
    for (std::size_t k = c; k < a.cols(); ++k)
      if (sgn(a(lead, k)) != 0) a(lead, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (sgn(a(lead, k)) != 0) a(r, k) -= f * a(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

inline std::size_t rank(QMatrix a) { return reduce_to_rref(a).size(); }

/// Canonical basis (nonzero RREF rows) of the row space.
inline QMatrix row_basis(QMatrix a) {
  auto pivots = reduce_to_rref(a);
  a.truncate_rows(pivots.size());
  return a;
}

/// Basis of {x : a x = 0}, one vector per row, indexed by the free columns.
inline QMatrix nullspace(QMatrix a) {
  const std::size_t n = a.cols();
  auto pivots = reduce_to_rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  QMatrix basis(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    basis.append_row(v);
  }
  return basis;
}

inline QMatrix stack(const QMatrix& a, const QMatrix& b) {
  QMatrix out(0, a.cols() ? a.cols() : b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.append_row(a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

inline QMatrix transpose(const QMatrix& a) {
  QMatrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  return t;
}

/// Rows spanning the orthogonal complement {w : w.u = 0 for all rows u}.
inline QMatrix annihilator(const QMatrix& basis, std::size_t ambient) {
  if (basis.rows() == 0) return QMatrix::identity(ambient);
  return nullspace(basis);
}

/// Canonical basis of rowspan(u) ∩ rowspan(v).
inline QMatrix intersect(const QMatrix& u, const QMatrix& v, std::size_t ambient) {
  if (u.rows() == 0 || v.rows() == 0) return QMatrix(0, ambient);
  // Solve sum a_i u_i - sum b_j v_j = 0 for (a, b).
  QMatrix system(ambient, u.rows() + v.rows());
  for (std::size_t c = 0; c < ambient; ++c) {
    for (std::size_t i = 0; i < u.rows(); ++i) system(c, i) = u(i, c);
    for (std::size_t j = 0; j < v.rows(); ++j) system(c, u.rows() + j) = -v(j, c);
  }
  QMatrix kernel = nullspace(system);
  QMatrix span(0, ambient);
  for (std::size_t k = 0; k < kernel.rows(); ++k) {
    std::vector<Rational> x(ambient);
    for (std::size_t i = 0; i < u.rows(); ++i) {
      if (sgn(kernel(k, i)) == 0) continue;
      for (std::size_t c = 0; c < ambient; ++c) x[c] += kernel(k, i) * u(i, c);
    }
    span.append_row(x);
  }
  if (span.rows() == 0) return QMatrix(0, ambient);
  return row_basis(span);
}

/// Coordinates of v in the basis given by independent rows of `basis`, if v lies in its span.
inline std::optional<std::vector<Rational>> coordinates(const QMatrix& basis,
                                                        const std::vector<Rational>& v) {
  const std::size_t n = v.size();
  QMatrix system(n, basis.rows() + 1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < basis.rows(); ++i) system(c, i) = basis(i, c);
    system(c, basis.rows()) = v[c];
  }
  auto pivots = reduce_to_rref(system);
  if (!pivots.empty() && pivots.back() == basis.rows()) return std::nullopt;
  std::vector<Rational> x(basis.rows());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = system(r, basis.rows());
  return x;
}

/// True iff every row of `inner` lies in rowspan(outer).
inline bool row_span_contains(const QMatrix& outer, const QMatrix& inner) {
  if (inner.rows() == 0) return true;
  return rank(stack(outer, inner)) == rank(outer);
}

}  // namespace fillings
