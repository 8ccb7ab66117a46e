#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathhom/digraph.hpp"
#include "pathhom/error.hpp"
#include "pathhom/field.hpp"
#include "pathhom/matrix.hpp"
#include "pathhom/short_moves.hpp"

namespace pathhom {

/// Sparse exact combination of n-paths; indices refer to enumerate_paths(g, n).
/// Zero coefficients are never stored.
template <class F>
struct ChainVector {
  using value_type = typename F::value_type;

  std::size_t level = 0;
  std::map<std::size_t, value_type> coefficients;

  value_type coefficient(const F& f, std::size_t path) const {
    auto it = coefficients.find(path);
    return it == coefficients.end() ? f.zero() : it->second;
  }

  std::vector<value_type> dense(const F& f, std::size_t dim) const {
    std::vector<value_type> v(dim, f.zero());
    for (auto& [i, a] : coefficients) v.at(i) = a;
    return v;
  }

  static ChainVector from_dense(const F& f, std::size_t level, const std::vector<value_type>& v) {
    ChainVector c;
    c.level = level;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!f.is_zero(v[i])) c.coefficients.emplace(i, v[i]);
    }
    return c;
  }

  bool operator==(const ChainVector&) const = default;
};

enum class basis_method { general, class_basis };

inline const char* to_string(basis_method m) {
  return m == basis_method::general ? "general" : "class_basis";
}

/// A basis of Omega_n in the coordinates of the n-paths.
template <class F>
struct OmegaBasis {
  F field;
  std::size_t level = 0;
  std::vector<Path> paths;  // coordinate system: enumerate_paths(g, level)
  std::vector<ChainVector<F>> vectors;
  basis_method method = basis_method::general;
  std::vector<std::size_t> class_tags;  // class representative per vector (class_basis only)

  std::size_t dim() const noexcept { return vectors.size(); }

  std::vector<std::vector<typename F::value_type>> dense() const {
    std::vector<std::vector<typename F::value_type>> out;
    for (auto& v : vectors) out.push_back(v.dense(field, paths.size()));
    return out;
  }
};

// ---------------------------------------------------------------------------
// Boundary in the tuple complex

using Tuple = std::vector<vertex_id>;

/// ∂ of a chain expanded over non-degenerate (n-1)-tuples; faces with a
/// consecutive repetition vanish in the normalised complex.
template <class F>
std::map<Tuple, typename F::value_type> expand_boundary(const F& f, const std::vector<Path>& paths,
                                                        const ChainVector<F>& v) {
  std::map<Tuple, typename F::value_type> out;
  if (v.level == 0) return out;
  for (auto& [idx, coeff] : v.coefficients) {
    const auto& p = paths.at(idx).vertices;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0 && i + 1 < p.size() && p[i - 1] == p[i + 1]) continue;
      Tuple face;
      face.reserve(p.size() - 1);
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (j != i) face.push_back(p[j]);
      }
      auto term = (i % 2 == 0) ? coeff : f.neg(coeff);
      auto [it, inserted] = out.emplace(std::move(face), term);
      if (!inserted) it->second = f.add(it->second, term);
    }
  }
  std::erase_if(out, [&](const auto& kv) { return f.is_zero(kv.second); });
  return out;
}

inline bool is_path(const Digraph& g, const Tuple& t) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (!g.has_arrow(t[i], t[i + 1])) return false;
  }
  return !t.empty();
}

/// ∂v lies in span of (n-1)-paths: the defining condition of Omega_n.
template <class F>
bool boundary_is_supported_on_paths(const Digraph& g, const F& f, const std::vector<Path>& paths,
                                    const ChainVector<F>& v) {
  for (auto& [tuple, coeff] : expand_boundary(f, paths, v)) {
    if (!is_path(g, tuple)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Omega_n, general definition

/// Omega_n = A_n ∩ ∂^{-1}(A_{n-1}), computed for any digraph as the kernel of
/// ∂ composed with the projection onto non-path (n-1)-tuples. Only interior
/// faces can be non-paths, so rows are indexed by those. Each vector is scaled
/// so its first nonzero coefficient is 1.
template <class F>
OmegaBasis<F> omega_general(const Digraph& g, std::size_t n, const F& field) {
  OmegaBasis<F> basis{field, n, enumerate_paths(g, n), {}, basis_method::general, {}};
  const auto& paths = basis.paths;

  std::map<Tuple, std::size_t> row_of;
  struct Entry {
    std::size_t row, col;
    bool negative;
  };
  std::vector<Entry> entries;
  for (std::size_t col = 0; col < paths.size(); ++col) {
    const auto& p = paths[col].vertices;
    for (std::size_t i = 1; i < n; ++i) {
      if (p[i - 1] == p[i + 1] || g.has_arrow(p[i - 1], p[i + 1])) continue;
      Tuple face;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j != i) face.push_back(p[j]);
      }
      auto [it, inserted] = row_of.emplace(std::move(face), row_of.size());
      entries.push_back({it->second, col, i % 2 == 1});
    }
  }

  ExactMatrix<F> projected(field, row_of.size(), paths.size());
  for (auto& e : entries) {
    auto one = e.negative ? field.neg(field.one()) : field.one();
    projected(e.row, e.col) = field.add(projected(e.row, e.col), one);
  }
  for (auto& k : kernel_basis(projected)) {
    auto lead = std::find_if(k.begin(), k.end(), [&](const auto& a) { return !field.is_zero(a); });
    auto scale = field.div(field.one(), *lead);
    for (auto& a : k) a = field.mul(a, scale);
    basis.vectors.push_back(ChainVector<F>::from_dense(field, n, k));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Omega_n from short-move classes

/// For a multisquare-free digraph: in characteristic 2 the unsigned class sum
/// of every thick class; otherwise the signed sum (+ on the part holding the
/// representative) of every thick bipartite class. Thin classes contribute
/// nothing.
template <class F>
OmegaBasis<F> omega_class_basis(const Digraph& g, std::size_t n, const F& field,
                                const std::vector<SnClass>& classes) {
  require_multisquare_free(g);
  OmegaBasis<F> basis{field, n, enumerate_paths(g, n), {}, basis_method::class_basis, {}};
  const bool char_two = field.characteristic() == 2;
  for (const auto& c : classes) {
    if (c.is_thin) continue;
    ChainVector<F> v;
    v.level = n;
    if (char_two) {
      for (auto m : c.members) v.coefficients.emplace(m, field.one());
    } else {
      if (!c.is_bipartite) continue;
      for (auto m : c.positive) v.coefficients.emplace(m, field.one());
      for (auto m : c.negative) v.coefficients.emplace(m, field.neg(field.one()));
    }
    basis.vectors.push_back(std::move(v));
    basis.class_tags.push_back(c.representative());
  }
  return basis;
}

template <class F>
OmegaBasis<F> omega_class_basis(const Digraph& g, std::size_t n, const F& field) {
  require_multisquare_free(g);
  auto smg = build_smoves(g, n);
  return omega_class_basis(g, n, field, classify_components(smg, g));
}

/// dim span(a) = dim span(b) = dim span(a ∪ b).
template <class F>
bool same_span(const OmegaBasis<F>& a, const OmegaBasis<F>& b) {
  if (a.level != b.level || a.paths.size() != b.paths.size()) return false;
  const auto dim = a.paths.size();
  auto da = a.dense();
  auto db = b.dense();
  const auto ra = span_rank(a.field, dim, da);
  const auto rb = span_rank(a.field, dim, db);
  da.insert(da.end(), db.begin(), db.end());
  const auto rab = span_rank(a.field, dim, da);
  return ra == a.dim() && rb == b.dim() && ra == rb && rab == ra;
}

// ---------------------------------------------------------------------------
// Boundary matrices

/// Matrix of ∂: span(domain) -> span(codomain) in the two bases. Throws
/// NotInSpan when some ∂(domain vector) escapes the codomain span.
template <class F>
ExactMatrix<F> boundary_matrix(const Digraph& g, const OmegaBasis<F>& domain,
                               const OmegaBasis<F>& codomain) {
  const F& f = domain.field;
  if (domain.level == 0) return ExactMatrix<F>(f, codomain.dim(), domain.dim());
  if (codomain.level + 1 != domain.level) {
    throw error(error_kind::level_mismatch, "codomain must sit one level below the domain");
  }
  const auto rows = codomain.paths.size();
  ExactMatrix<F> images(f, rows, domain.dim());
  for (std::size_t c = 0; c < domain.dim(); ++c) {
    for (auto& [tuple, coeff] : expand_boundary(f, domain.paths, domain.vectors[c])) {
      auto idx = is_path(g, tuple) ? find_path(codomain.paths, Path{tuple}) : std::nullopt;
      if (!idx) throw error(error_kind::not_in_span, "boundary leaves the path module");
      images(*idx, c) = coeff;
    }
  }
  auto basis = ExactMatrix<F>::from_columns(f, rows, codomain.dense());
  return solve_independent(basis, images);
}

// ---------------------------------------------------------------------------
// Homology summary

struct HomologySummary {
  FieldDescriptor field;
  std::vector<std::size_t> omega_dims;      // n = 0 .. last computed level
  std::vector<std::size_t> boundary_ranks;  // rank of ∂_n on Omega_n; [0] = 0
  std::vector<long> ph_dims;
  bool bounded = false;
  std::optional<long> euler;
  std::optional<bool> method_agreement;  // nullopt when the class method does not apply
  std::size_t n_max = 0;

  bool operator==(const HomologySummary&) const = default;
};

inline constexpr std::size_t default_level_cap = 16;

/// Default top level: longest path length + 1, or the cap for cyclic digraphs.
inline std::size_t default_n_max(const Digraph& g, std::size_t cap = default_level_cap) {
  auto longest = longest_path_length(g);
  return longest ? std::min(*longest + 1, cap) : cap;
}

namespace detail {

template <class F>
HomologySummary homology_summary_impl(const Digraph& g, const F& field, std::size_t n_max) {
  HomologySummary s;
  s.field = field.descriptor();
  s.n_max = n_max;
  const bool class_method = static_cast<bool>(is_multisquare_free(g));
  if (class_method) s.method_agreement = true;

  std::optional<OmegaBasis<F>> previous;
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    auto basis = omega_general(g, n, field);
    if (class_method) {
      auto classes = omega_class_basis(g, n, field);
      if (!same_span(basis, classes)) {
        throw error(error_kind::method_mismatch,
                    "class basis and general basis disagree at level " + std::to_string(n));
      }
    }
    s.omega_dims.push_back(basis.dim());
    s.boundary_ranks.push_back(previous ? rank(boundary_matrix(g, basis, *previous)) : 0);
    if (basis.dim() == 0) {
      s.bounded = true;
      break;
    }
    previous = std::move(basis);
  }

  const std::size_t levels = s.bounded ? s.omega_dims.size() : n_max + 1;
  for (std::size_t n = 0; n < levels; ++n) {
    long above = n + 1 < s.boundary_ranks.size() ? static_cast<long>(s.boundary_ranks[n + 1]) : 0;
    s.ph_dims.push_back(static_cast<long>(s.omega_dims[n]) -
                        static_cast<long>(s.boundary_ranks[n]) - above);
  }
  if (s.bounded) {
    long chi = 0, chi_ph = 0;
    for (std::size_t n = 0; n < s.omega_dims.size(); ++n) {
      chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(s.omega_dims[n]);
      chi_ph += (n % 2 == 0 ? 1 : -1) * s.ph_dims[n];
    }
    if (chi != chi_ph) throw std::logic_error("Euler characteristic mismatch");
    s.euler = chi;
  }
  return s;
}

}  // namespace detail

/// Omega dimensions, boundary ranks and path homology dimensions up to n_max
/// (Omega is computed one level further to get rank ∂_{n_max+1}). The complex
/// is bounded once some Omega_m vanishes, and then χ = Σ (-1)^n dim Omega_n.
/// For multisquare-free digraphs every level is cross-checked against the
/// class basis; a disagreement throws MethodMismatch.
inline HomologySummary homology_summary(const Digraph& g, const FieldDescriptor& f,
                                        std::optional<std::size_t> n_max = std::nullopt) {
  const std::size_t top = std::max<std::size_t>(1, n_max.value_or(default_n_max(g)));
  return visit_field(f, [&](const auto& field) { return detail::homology_summary_impl(g, field, top); });
}

// ---------------------------------------------------------------------------
// Boundary entries in the class bases

struct BoundaryEntryLevel {
  std::size_t level = 0;  // matrix of ∂_level
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::map<std::string, std::size_t> entries;  // nonzero entry -> multiplicity
  bool all_unit = true;                         // every nonzero entry is ±1
};

struct BoundaryEntryReport {
  FieldDescriptor field;
  std::vector<BoundaryEntryLevel> levels;
  bool non_unit_found = false;
};

/// Observes the nonzero entries of ∂ written in the class bases and flags any
/// entry other than ±1. Multisquare-free digraphs only.
inline BoundaryEntryReport boundary_entry_report(const Digraph& g, const FieldDescriptor& f,
                                                 std::size_t n_max) {
  require_multisquare_free(g);
  return visit_field(f, [&](const auto& field) {
    BoundaryEntryReport report{f, {}, false};
    auto lower = omega_class_basis(g, 0, field);
    for (std::size_t n = 1; n <= n_max; ++n) {
      auto upper = omega_class_basis(g, n, field);
      auto m = boundary_matrix(g, upper, lower);
      BoundaryEntryLevel level{n, m.rows(), m.cols(), {}, true};
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (field.is_zero(m(r, c))) continue;
          ++level.entries[field.to_string(m(r, c))];
          if (!field.is_unit_sign(m(r, c))) level.all_unit = false;
        }
      }
      report.non_unit_found = report.non_unit_found || !level.all_unit;
      report.levels.push_back(std::move(level));
      lower = std::move(upper);
    }
    return report;
  });
}

}  // namespace pathhom
