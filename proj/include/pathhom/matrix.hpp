#pragma once

#include <cstddef>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pathhom/error.hpp"
#include "pathhom/field.hpp"

// Test builds define PATHHOM_CHECKS=1 to re-verify every elimination result
// (rank-nullity, kernel vectors annihilated, canonical entries).
#ifndef PATHHOM_CHECKS
#ifdef NDEBUG
#define PATHHOM_CHECKS 0
#else
#define PATHHOM_CHECKS 1
#endif
#endif

namespace pathhom {

/// Dense row-major matrix over an exact field policy F.
template <class F>
class ExactMatrix {
 public:
  using value_type = typename F::value_type;

  ExactMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static ExactMatrix identity(F field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static ExactMatrix from_rows(F field, std::size_t cols,
                               const std::vector<std::vector<value_type>>& rows) {
    ExactMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw error(error_kind::dimension_mismatch, "ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  /// Columns given as vectors of length `rows`.
  static ExactMatrix from_columns(F field, std::size_t rows,
                                  const std::vector<std::vector<value_type>>& columns) {
    ExactMatrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw error(error_kind::dimension_mismatch, "column length");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  static ExactMatrix from_ints(F field, const std::vector<std::vector<long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r].at(c));
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const F& field() const noexcept { return field_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<value_type> column(std::size_t c) const {
    std::vector<value_type> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Horizontal concatenation [this | other].
  ExactMatrix hstack(const ExactMatrix& other) const {
    if (other.rows_ != rows_) throw error(error_kind::dimension_mismatch, "hstack rows");
    ExactMatrix m(field_, rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
      for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
    }
    return m;
  }

  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <class F>
std::vector<typename F::value_type> multiply(const ExactMatrix<F>& m,
                                             std::span<const typename F::value_type> x) {
  if (x.size() != m.cols()) throw error(error_kind::dimension_mismatch, "matrix-vector");
  const F& f = m.field();
  std::vector<typename F::value_type> y(m.rows(), f.zero());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (f.is_zero(x[c])) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!f.is_zero(m(r, c))) y[r] = f.add(y[r], f.mul(m(r, c), x[c]));
    }
  }
  return y;
}

template <class F>
ExactMatrix<F> multiply(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
  if (a.cols() != b.rows()) throw error(error_kind::dimension_mismatch, "matrix product");
  const F& f = a.field();
  ExactMatrix<F> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!f.is_zero(b(k, j))) out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
      }
    }
  }
  return out;
}

/// In-place reduced row echelon form. Pivots are chosen column by column at
/// the lowest available row index. Returns the pivot columns in order.
template <class F>
std::vector<std::size_t> rref(ExactMatrix<F>& m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t r = prow;
    while (r < m.rows() && f.is_zero(m(r, c))) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(prow, r);

    auto inv = f.div(f.one(), m(prow, c));
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!f.is_zero(m(prow, j))) m(prow, j) = f.mul(m(prow, j), inv);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == prow || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!f.is_zero(m(prow, j))) m(i, j) = f.sub(m(i, j), f.mul(factor, m(prow, j)));
      }
    }
    pivots.push_back(c);
    ++prow;
  }
#if PATHHOM_CHECKS
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!f.is_canonical(m(r, c))) throw std::logic_error("non-canonical entry after elimination");
    }
  }
#endif
  return pivots;
}

template <class F>
std::size_t rank(ExactMatrix<F> m) {
  return rref(m).size();
}

/// Basis of {x : m x = 0}: one vector per free column, with that column set
/// to 1 and the pivot coordinates read off the reduced echelon form.
template <class F>
std::vector<std::vector<typename F::value_type>> kernel_basis(const ExactMatrix<F>& m) {
  const F& f = m.field();
  ExactMatrix<F> reduced = m;
  auto pivots = rref(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(reduced(k, free));
    basis.push_back(std::move(v));
  }
#if PATHHOM_CHECKS
  if (pivots.size() + basis.size() != m.cols()) throw std::logic_error("rank-nullity violated");
  for (auto& v : basis) {
    for (auto& y : multiply(m, std::span<const typename F::value_type>(v))) {
      if (!f.is_zero(y)) throw std::logic_error("kernel vector not annihilated");
    }
  }
#endif
  return basis;
}

/// Row space basis in reduced echelon form (canonical for a given span).
template <class F>
std::vector<std::vector<typename F::value_type>> span_basis(
    const F& field, std::size_t dim, const std::vector<std::vector<typename F::value_type>>& vs) {
  auto m = ExactMatrix<F>::from_rows(field, dim, vs);
  auto pivots = rref(m);
  std::vector<std::vector<typename F::value_type>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    auto row = m.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

template <class F>
std::size_t span_rank(const F& field, std::size_t dim,
                      const std::vector<std::vector<typename F::value_type>>& vs) {
  if (vs.empty()) return 0;
  return rank(ExactMatrix<F>::from_rows(field, dim, vs));
}

/// Basis of span(a) ∩ span(b): kernel of [A | -B], mapped back through A,
/// returned in reduced echelon form.
template <class F>
std::vector<std::vector<typename F::value_type>> intersect_spans(
    const F& field, std::size_t dim, const std::vector<std::vector<typename F::value_type>>& a,
    const std::vector<std::vector<typename F::value_type>>& b) {
  for (auto* side : {&a, &b}) {
    for (auto& v : *side) {
      if (v.size() != dim) throw error(error_kind::dimension_mismatch, "intersect_spans");
    }
  }
  if (a.empty() || b.empty()) return {};
  ExactMatrix<F> block(field, dim, a.size() + b.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    for (std::size_t r = 0; r < dim; ++r) block(r, c) = a[c][r];
  }
  for (std::size_t c = 0; c < b.size(); ++c) {
    for (std::size_t r = 0; r < dim; ++r) block(r, a.size() + c) = field.neg(b[c][r]);
  }
  std::vector<std::vector<typename F::value_type>> images;
  for (auto& k : kernel_basis(block)) {
    std::vector<typename F::value_type> v(dim, field.zero());
    for (std::size_t c = 0; c < a.size(); ++c) {
      if (field.is_zero(k[c])) continue;
      for (std::size_t r = 0; r < dim; ++r) v[r] = field.add(v[r], field.mul(k[c], a[c][r]));
    }
    images.push_back(std::move(v));
  }
  if (images.empty()) return {};
  return span_basis(field, dim, images);
}

/// Solves A X = B for A with independent columns; NotInSpan when some column
/// of B is not a combination of the columns of A.
template <class F>
ExactMatrix<F> solve_independent(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
  if (a.rows() != b.rows()) throw error(error_kind::dimension_mismatch, "solve rows");
  const F& f = a.field();
  auto aug = a.hstack(b);
  auto pivots = rref(aug);
  std::size_t left = 0;
  for (auto c : pivots) {
    if (c >= a.cols()) throw error(error_kind::not_in_span, "right-hand side not in span");
    ++left;
  }
  if (left != a.cols()) throw error(error_kind::dimension_mismatch, "basis columns are dependent");
  ExactMatrix<F> x(f, a.cols(), b.cols());
  for (std::size_t r = 0; r < a.cols(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = aug(r, a.cols() + c);
  }
  return x;
}

template <class F>
std::string to_tsv(const ExactMatrix<F>& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << '\t';
      out << m.field().to_string(m(r, c));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pathhom
