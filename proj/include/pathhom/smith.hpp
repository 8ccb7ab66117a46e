#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pathhom/error.hpp"
#include "pathhom/matrix.hpp"

namespace pathhom {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntegerMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw error(error_kind::dimension_mismatch, "ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(src, c)) != 0) (*this)(dst, c) += k * (*this)(src, c);
    }
  }
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (sgn((*this)(r, src)) != 0) (*this)(r, dst) += k * (*this)(r, src);
    }
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }
  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

inline IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw error(error_kind::dimension_mismatch, "matrix product");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline mpz_class determinant(IntegerMatrix m) {
  if (m.rows() != m.cols()) throw error(error_kind::dimension_mismatch, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m(r, k)) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline std::string to_tsv(const IntegerMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << '\t';
      out << m(r, c).get_str();
    }
    out << '\n';
  }
  return out.str();
}

struct SmithForm {
  IntegerMatrix diagonal;       // D
  IntegerMatrix left;           // U, rows x rows
  IntegerMatrix right;          // V, cols x cols
  IntegerMatrix left_inverse;   // U^-1, integral
  IntegerMatrix right_inverse;  // V^-1, integral
  std::size_t rank = 0;
  std::vector<mpz_class> invariant_factors;  // nonzero diagonal, d_1 | d_2 | ...
  std::vector<mpz_class> torsion;            // invariant factors > 1
};

namespace detail {

inline int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
inline int cmpabs(const mpz_class& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

// Nonzero entry of least absolute value in the trailing block, ties broken by
// lowest row then lowest column.
inline std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntegerMatrix& a,
                                                                         std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  mpz_class best_abs;
  for (std::size_t r = t; r < a.rows(); ++r) {
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (sgn(a(r, c)) == 0) continue;
      if (!best || cmpabs(a(r, c), best_abs) < 0) {
        best = {r, c};
        best_abs = abs(a(r, c));
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

// Row operations on D are mirrored on U; the inverse of U picks up the
// inverse elementary operation as a column operation. Likewise for V.
struct SmithState {
  IntegerMatrix d, u, u_inv, v, v_inv;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
    u_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
    v_inv.swap_rows(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const mpz_class& k) {
    d.add_row(dst, src, k);
    u.add_row(dst, src, k);
    u_inv.add_col(src, dst, -k);
  }
  void add_col(std::size_t dst, std::size_t src, const mpz_class& k) {
    d.add_col(dst, src, k);
    v.add_col(dst, src, k);
    v_inv.add_row(src, dst, -k);
  }
  void negate_row(std::size_t r) {
    d.negate_row(r);
    u.negate_row(r);
    u_inv.negate_col(r);
  }
};

}  // namespace detail

/// U A V = D by elementary row and column operations, always pivoting on a
/// nonzero entry of minimal absolute value.
inline SmithForm smith_normal_form(const IntegerMatrix& a) {
  detail::SmithState st{a, IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.rows()),
                        IntegerMatrix::identity(a.cols()), IntegerMatrix::identity(a.cols())};
  auto& d = st.d;
  const std::size_t limit = std::min(a.rows(), a.cols());

  std::size_t t = 0;
  for (; t < limit; ++t) {
    auto pivot = detail::smallest_entry(d, t);
    if (!pivot) break;
    st.swap_rows(t, pivot->first);
    st.swap_cols(t, pivot->second);

    for (;;) {
      bool dirty = false;
      // Clear column t below the pivot.
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (sgn(d(r, t)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
        st.add_row(r, t, -q);
        if (sgn(d(r, t)) != 0) dirty = true;
      }
      // Clear row t right of the pivot.
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (sgn(d(t, c)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
        st.add_col(c, t, -q);
        if (sgn(d(t, c)) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived; move it into place.
        std::size_t br = t, bc = t;
        for (std::size_t r = t + 1; r < d.rows(); ++r) {
          if (sgn(d(r, t)) != 0 && detail::cmpabs(d(r, t), d(br, bc)) < 0) br = r, bc = t;
        }
        for (std::size_t c = t + 1; c < d.cols(); ++c) {
          if (sgn(d(t, c)) != 0 && detail::cmpabs(d(t, c), d(br, bc)) < 0) br = t, bc = c;
        }
        st.swap_rows(t, br);
        st.swap_cols(t, bc);
        continue;
      }
      // The pivot must divide the whole trailing block.
      if (detail::cmpabs(d(t, t), 1) == 0) break;
      bool fixed = false;
      for (std::size_t r = t + 1; r < d.rows() && !fixed; ++r) {
        for (std::size_t c = t + 1; c < d.cols(); ++c) {
          if (sgn(d(r, c)) != 0 && !mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
            st.add_row(t, r, 1);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    if (sgn(d(t, t)) < 0) st.negate_row(t);
  }

  SmithForm s{std::move(st.d), std::move(st.u), std::move(st.v), std::move(st.u_inv),
              std::move(st.v_inv), t, {}, {}};
  for (std::size_t i = 0; i < s.rank; ++i) {
    s.invariant_factors.push_back(s.diagonal(i, i));
    if (s.diagonal(i, i) > 1) s.torsion.push_back(s.diagonal(i, i));
  }
  return s;
}

/// Checks U A V = D, unimodularity of U and V (an integral two-sided inverse
/// exists), D diagonal with a positive divisibility chain. Returns an empty
/// string on success, else the reason.
inline std::string verify_smith(const IntegerMatrix& a, const SmithForm& s) {
  if (multiply(multiply(s.left, a), s.right) != s.diagonal) return "U*A*V != D";
  const auto iu = IntegerMatrix::identity(a.rows());
  const auto iv = IntegerMatrix::identity(a.cols());
  if (multiply(s.left, s.left_inverse) != iu || multiply(s.left_inverse, s.left) != iu) {
    return "U not unimodular";
  }
  if (multiply(s.right, s.right_inverse) != iv || multiply(s.right_inverse, s.right) != iv) {
    return "V not unimodular";
  }
  for (std::size_t r = 0; r < s.diagonal.rows(); ++r) {
    for (std::size_t c = 0; c < s.diagonal.cols(); ++c) {
      if (r != c && sgn(s.diagonal(r, c)) != 0) return "D not diagonal";
    }
  }
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.diagonal(i, i) <= 0) return "nonpositive invariant factor";
    if (i > 0 && !mpz_divisible_p(s.diagonal(i, i).get_mpz_t(), s.diagonal(i - 1, i - 1).get_mpz_t())) {
      return "divisibility chain broken";
    }
  }
  for (std::size_t i = s.rank; i < std::min(s.diagonal.rows(), s.diagonal.cols()); ++i) {
    if (sgn(s.diagonal(i, i)) != 0) return "nonzero entry past rank";
  }
  return {};
}

struct CokernelStructure {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;
};

/// Z^rows / colspan(a) = Z^free_rank ⊕ ⊕ Z/d_i.
inline CokernelStructure cokernel_structure(const IntegerMatrix& a) {
  auto s = smith_normal_form(a);
#if PATHHOM_CHECKS
  if (auto why = verify_smith(a, s); !why.empty()) throw std::logic_error("smith form: " + why);
#endif
  return {a.rows() - s.rank, s.torsion};
}

}  // namespace pathhom
