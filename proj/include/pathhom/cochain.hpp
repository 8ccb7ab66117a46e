#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pathhom/chain_complex.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/error.hpp"
#include "pathhom/short_moves.hpp"
#include "pathhom/smith.hpp"

namespace pathhom {

/// Generators of the degree-n part of the relation ideal for a multisquare-free
/// digraph: q + q' for every short-move edge (thick part) and every thin
/// n-path on its own (thin part).
struct RelationSet {
  std::size_t level = 0;
  std::vector<std::pair<std::size_t, std::size_t>> thick_relations;
  std::vector<std::size_t> thin_relations;
};

inline RelationSet relation_set(const Digraph& g, std::size_t n) {
  require_multisquare_free(g);
  auto smg = build_smoves(g, n);
  RelationSet rs;
  rs.level = n;
  for (auto& e : smg.edges) rs.thick_relations.emplace_back(e.a, e.b);
  for (std::size_t i = 0; i < smg.nodes.size(); ++i) {
    if (is_thin_path(g, smg.nodes[i])) rs.thin_relations.push_back(i);
  }
  return rs;
}

namespace detail {

// Paths of the given length starting at `from` (forward) or ending at `to`
// (backward), as vertex sequences in path order.
inline void walks(const Digraph& g, vertex_id anchor, std::size_t length, bool forward,
                  std::vector<Tuple>& out) {
  Tuple stack{anchor};
  auto step = [&](auto&& self) -> void {
    if (stack.size() == length + 1) {
      Tuple t = stack;
      if (!forward) std::reverse(t.begin(), t.end());
      out.push_back(std::move(t));
      return;
    }
    for (vertex_id w : forward ? g.out(stack.back()) : g.in(stack.back())) {
      stack.push_back(w);
      self(self);
      stack.pop_back();
    }
  };
  step(step);
}

}  // namespace detail

/// Degree-n component of the two-sided ideal generated by the t_{x,y}
/// (sum of all 2-paths from x to y, d(x,y) = 2), written in n-path
/// coordinates: one column per distinct product a · t_{x,y} · b. Valid for
/// any digraph.
inline IntegerMatrix relation_set_general(const Digraph& g, std::size_t n) {
  auto paths = enumerate_paths(g, n);
  std::set<std::vector<std::size_t>> columns;
  if (n >= 2) {
    for (const auto& pair : classify_pairs(g)) {
      for (std::size_t j = 0; j + 2 <= n; ++j) {
        std::vector<Tuple> left, right;
        detail::walks(g, pair.source, j, false, left);
        detail::walks(g, pair.target, n - 2 - j, true, right);
        for (const auto& a : left) {
          for (const auto& b : right) {
            std::vector<std::size_t> rows;
            for (vertex_id v : pair.midpoints) {
              Path p{a};
              p.vertices.push_back(v);
              p.vertices.insert(p.vertices.end(), b.begin(), b.end());
              rows.push_back(*find_path(paths, p));
            }
            std::sort(rows.begin(), rows.end());
            columns.insert(std::move(rows));
          }
        }
      }
    }
  }
  IntegerMatrix m(paths.size(), columns.size());
  std::size_t c = 0;
  for (const auto& rows : columns) {
    for (auto r : rows) m(r, c) = 1;
    ++c;
  }
  return m;
}

/// Module structure of the degree-n path cochains over the integers.
struct CochainStructure {
  std::size_t level = 0;
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;
  std::vector<std::size_t> free_representatives;     // one path per thick bipartite class
  std::vector<std::size_t> torsion_representatives;  // one path per thick non-bipartite class
  bool has_representatives = false;

  bool same_module(const CochainStructure& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator==(const CochainStructure&) const = default;
};

namespace detail {

inline void fill_representatives(CochainStructure& s, const std::vector<SnClass>& classes) {
  for (const auto& c : classes) {
    if (c.is_thin) continue;
    (c.is_bipartite ? s.free_representatives : s.torsion_representatives)
        .push_back(c.representative());
  }
  s.has_representatives = true;
}

}  // namespace detail

/// Structure read off the module's classes: Z per thick bipartite class, Z/2
/// per thick non-bipartite class, nothing for thin classes.
inline CochainStructure cochain_structure_classes(const Digraph& g, std::size_t n,
                                                  const std::vector<SnClass>& classes) {
  require_multisquare_free(g);
  CochainStructure s;
  s.level = n;
  detail::fill_representatives(s, classes);
  s.free_rank = s.free_representatives.size();
  s.torsion.assign(s.torsion_representatives.size(), mpz_class(2));
  return s;
}

inline CochainStructure cochain_structure_classes(const Digraph& g, std::size_t n) {
  require_multisquare_free(g);
  auto smg = build_smoves(g, n);
  return cochain_structure_classes(g, n, classify_components(smg, g));
}

/// Structure of Z^{n-paths} / T^n by Smith normal form of the general
/// relation matrix. Representatives are attached when the digraph is
/// multisquare-free.
inline CochainStructure cochain_structure_snf(const Digraph& g, std::size_t n) {
  auto coker = cokernel_structure(relation_set_general(g, n));
  CochainStructure s;
  s.level = n;
  s.free_rank = coker.free_rank;
  s.torsion = std::move(coker.torsion);
  if (is_multisquare_free(g)) {
    auto smg = build_smoves(g, n);
    detail::fill_representatives(s, classify_components(smg, g));
  }
  return s;
}

/// dim over a field of (Z-structure) ⊗ field.
inline std::size_t cochain_dimension(const CochainStructure& s, const FieldDescriptor& f) {
  std::size_t dim = s.free_rank;
  if (!f.is_rational()) {
    for (const auto& d : s.torsion) {
      if (mpz_divisible_ui_p(d.get_mpz_t(), f.p)) ++dim;
    }
  }
  return dim;
}

/// <Σ α_p e_p, q + T> = α_q.
template <class F>
typename F::value_type pairing(const F& f, const ChainVector<F>& v, std::size_t q_level,
                               std::size_t q) {
  if (v.level != q_level) throw error(error_kind::level_mismatch, "pairing across levels");
  return v.coefficient(f, q);
}

/// Every basis vector pairs to zero with every column of the relation matrix.
template <class F>
bool orthogonal_to_relations(const OmegaBasis<F>& basis, const IntegerMatrix& relations) {
  const F& f = basis.field;
  if (relations.rows() != basis.paths.size()) {
    throw error(error_kind::dimension_mismatch, "relation matrix rows");
  }
  for (const auto& v : basis.vectors) {
    for (std::size_t c = 0; c < relations.cols(); ++c) {
      auto sum = f.zero();
      for (auto& [idx, a] : v.coefficients) {
        if (sgn(relations(idx, c)) != 0) sum = f.add(sum, f.mul(a, f.from_integer(relations(idx, c))));
      }
      if (!f.is_zero(sum)) return false;
    }
  }
  return true;
}

/// Pairing of each class-basis vector against each class representative; the
/// bases are dual when this is the identity.
template <class F>
ExactMatrix<F> duality_matrix(const OmegaBasis<F>& basis) {
  const F& f = basis.field;
  ExactMatrix<F> m(f, basis.dim(), basis.class_tags.size());
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    for (std::size_t j = 0; j < basis.class_tags.size(); ++j) {
      m(i, j) = pairing(f, basis.vectors[i], basis.level, basis.class_tags[j]);
    }
  }
  return m;
}

}  // namespace pathhom
