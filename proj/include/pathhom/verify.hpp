#pragma once

// Acceptance suite: the numbered checks run by `pathhom verify-paper` and by
// the acceptance test binary. Every check is deterministic.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pathhom/chain_complex.hpp"
#include "pathhom/cochain.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/field.hpp"
#include "pathhom/fixtures.hpp"
#include "pathhom/short_moves.hpp"
#include "pathhom/smith.hpp"

namespace pathhom::verify {

struct CheckResult {
  int id = 0;
  std::string name;
  std::string anchor;
  bool passed = false;
  std::string detail;
};

inline std::string format(const CheckResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.anchor
      << "): " << r.detail;
  return out.str();
}

// ---------------------------------------------------------------------------
// Brute-force counts, written against the adjacency relation only.

namespace oracle {

/// Triples a -> b -> c with a -> c.
inline std::size_t directed_triangles(const Digraph& g) {
  const auto n = static_cast<vertex_id>(g.vertex_count());
  std::size_t count = 0;
  for (vertex_id a = 0; a < n; ++a)
    for (vertex_id b = 0; b < n; ++b)
      for (vertex_id c = 0; c < n; ++c)
        if (a != c && g.has_arrow(a, b) && g.has_arrow(b, c) && g.has_arrow(a, c)) ++count;
  return count;
}

/// Ordered pairs a != c, no arrow a -> c, with exactly two b such that a -> b -> c.
inline std::size_t thick_pairs(const Digraph& g) {
  const auto n = static_cast<vertex_id>(g.vertex_count());
  std::size_t count = 0;
  for (vertex_id a = 0; a < n; ++a) {
    for (vertex_id c = 0; c < n; ++c) {
      if (a == c || g.has_arrow(a, c)) continue;
      std::size_t mids = 0;
      for (vertex_id b = 0; b < n; ++b) mids += g.has_arrow(a, b) && g.has_arrow(b, c);
      if (mids == 2) ++count;
    }
  }
  return count;
}

/// Ordered pairs with arrows both ways (each gives the 2-path a b a).
inline std::size_t back_and_forth(const Digraph& g) {
  std::size_t count = 0;
  for (auto [a, b] : g.arrows()) count += g.has_arrow(b, a);
  return count;
}

inline std::size_t omega2_dimension(const Digraph& g) {
  return directed_triangles(g) + thick_pairs(g) + back_and_forth(g);
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// Corpus

struct CorpusEntry {
  std::string name;
  Digraph graph;
};

inline std::vector<CorpusEntry> fixture_corpus() {
  std::vector<CorpusEntry> out;
  for (auto name : fixture_names) out.push_back({std::string(name), builtin_fixture(name)});
  return out;
}

namespace detail {

inline std::uint32_t draw(std::mt19937& rng, std::uint32_t bound) { return rng() % bound; }

enum class family { acyclic, layered, cyclic };

// Acyclic draws put arrows along a random vertex order; layered draws join
// consecutive layers densely with occasional arrows skipping one layer;
// cyclic draws allow both directions. Multisquares are broken by deleting an
// arrow into a midpoint until none remain.
inline Digraph random_digraph(std::mt19937& rng, family kind) {
  const vertex_id n = 3 + draw(rng, 8);
  std::vector<vertex_id> order(n);
  for (vertex_id i = 0; i < n; ++i) order[i] = i;
  for (vertex_id i = n - 1; i > 0; --i) std::swap(order[i], order[draw(rng, i + 1)]);

  std::set<Digraph::arrow> arrows;
  if (kind == family::layered) {
    std::vector<vertex_id> layer(n);
    vertex_id current = 0, width = 0, target = 1 + draw(rng, 3);
    for (vertex_id i = 0; i < n; ++i) {
      if (width == target) ++current, width = 0, target = draw(rng, 5) == 0 ? 1 : 2;
      layer[order[i]] = current;
      ++width;
    }
    for (vertex_id u = 0; u < n; ++u) {
      for (vertex_id v = 0; v < n; ++v) {
        if (layer[v] == layer[u] + 1 && draw(rng, 100) < 90) arrows.emplace(u, v);
        if (layer[v] == layer[u] + 2 && draw(rng, 100) < 8) arrows.emplace(u, v);
      }
    }
  } else {
    const bool acyclic = kind == family::acyclic;
    const std::uint32_t density = acyclic ? 25 + draw(rng, 25) : 15 + draw(rng, 20);
    for (vertex_id i = 0; i < n; ++i) {
      for (vertex_id j = i + 1; j < n; ++j) {
        if (draw(rng, 100) < density) arrows.emplace(order[i], order[j]);
        if (!acyclic && draw(rng, 100) < density) arrows.emplace(order[j], order[i]);
      }
    }
  }
  std::vector<std::string> names;
  for (vertex_id v = 0; v < n; ++v) names.push_back(std::to_string(v));

  for (;;) {
    Digraph g(names, {arrows.begin(), arrows.end()});
    auto check = is_multisquare_free(g);
    if (check) return g;
    arrows.erase({check.witness->source, check.witness->midpoints.back()});
  }
}

}  // namespace detail

inline constexpr std::uint32_t default_seed = 20240611;
inline constexpr std::size_t cyclic_path_cap = 250;

/// `count` multisquare-free digraphs on 3..10 vertices: acyclic, layered,
/// layered, cyclic in rotation. Cyclic draws whose 6-paths exceed
/// cyclic_path_cap are redrawn to keep the suite fast.
inline std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint32_t seed = default_seed) {
  std::mt19937 rng(seed);
  std::vector<CorpusEntry> out;
  while (out.size() < count) {
    using detail::family;
    constexpr family rotation[] = {family::acyclic, family::layered, family::layered, family::cyclic};
    const family kind = rotation[out.size() % 4];
    auto g = detail::random_digraph(rng, kind);
    if (kind == family::cyclic && enumerate_paths(g, 6).size() > cyclic_path_cap) continue;
    out.push_back({"random#" + std::to_string(out.size()), std::move(g)});
  }
  return out;
}

inline const std::vector<FieldDescriptor>& suite_fields() {
  static const std::vector<FieldDescriptor> fields{FieldDescriptor::rational(), FieldDescriptor::prime(2),
                                                   FieldDescriptor::prime(3)};
  return fields;
}

// ---------------------------------------------------------------------------
// Helpers

inline std::size_t dim_at(const HomologySummary& s, std::size_t n) {
  return n < s.omega_dims.size() ? s.omega_dims[n] : 0;
}

inline std::string describe(const CochainStructure& s) {
  std::string out;
  auto add = [&](const std::string& part) { out += (out.empty() ? "" : " + ") + part; };
  if (s.free_rank > 0) add("Z^" + std::to_string(s.free_rank));
  for (const auto& d : s.torsion) add("Z/" + d.get_str());
  return out.empty() ? "0" : out;
}

// Collects the first few failure messages of a sweep.
class Tally {
 public:
  void fail(std::string what) {
    ++failures_;
    if (examples_.size() < 3) examples_.push_back(std::move(what));
  }
  void count(std::size_t k = 1) { checked_ += k; }
  bool ok() const { return failures_ == 0; }
  std::size_t checked() const { return checked_; }

  std::string summary(const std::string& what) const {
    std::ostringstream out;
    out << checked_ << " " << what;
    if (failures_ > 0) {
      out << "; " << failures_ << " failed";
      for (auto& e : examples_) out << "; " << e;
    }
    return out.str();
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> examples_;
};

inline std::string where(const CorpusEntry& e, const FieldDescriptor& f, std::size_t n) {
  return e.name + " " + f.name() + " n=" + std::to_string(n);
}

// ---------------------------------------------------------------------------
// 1. Main example outcomes

struct MainOutcomes {
  std::size_t dim_q = 0;
  std::size_t dim_f2 = 0;
  CochainStructure integral;
  std::optional<long> euler_q;
  std::optional<long> euler_f2;

  bool expected() const {
    return dim_q == 0 && dim_f2 == 1 && integral.free_rank == 0 &&
           integral.torsion == std::vector<mpz_class>{2} && euler_q && euler_f2 &&
           *euler_f2 == *euler_q + 1;
  }

  bool same(const MainOutcomes& o) const {
    return std::tie(dim_q, dim_f2, euler_q, euler_f2) == std::tie(o.dim_q, o.dim_f2, o.euler_q, o.euler_f2) &&
           integral.same_module(o.integral);
  }

  std::string str() const {
    auto chi = [](const std::optional<long>& e) { return e ? std::to_string(*e) : std::string("undefined"); };
    return "dim Omega_4 Q=" + std::to_string(dim_q) + " F2=" + std::to_string(dim_f2) +
           "; Omega^4(Z)=" + describe(integral) + "; chi Q=" + chi(euler_q) + " F2=" + chi(euler_f2);
  }
};

inline MainOutcomes main_outcomes(const Digraph& g) {
  auto q = homology_summary(g, FieldDescriptor::rational());
  auto f2 = homology_summary(g, FieldDescriptor::prime(2));
  return {dim_at(q, 4), dim_at(f2, 4), cochain_structure_snf(g, 4), q.euler, f2.euler};
}

inline CheckResult check_main_theorem(const Digraph& g) {
  auto o = main_outcomes(g);
  return {1, "main-theorem", "main example: torsion and field-dependent Euler characteristic", o.expected(),
          o.str()};
}

// ---------------------------------------------------------------------------
// 2. The S_4 diagram of the main example

inline std::string odd_cycle_problem(const ShortMoveGraph& smg, const SnClass& c) {
  const auto& cyc = c.odd_cycle;
  if (cyc.size() % 2 == 0) return "witness has even length";
  if (std::set<std::size_t>(cyc.begin(), cyc.end()).size() != cyc.size()) return "witness repeats a node";
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    auto a = cyc[i], b = cyc[(i + 1) % cyc.size()];
    auto& adj = smg.adjacency[a];
    bool found = std::any_of(adj.begin(), adj.end(), [&](auto& e) { return e.first == b; });
    if (!found) return "witness uses a non-edge";
  }
  return "";
}

inline CheckResult check_s4_diagram(const Digraph& g_main, const Digraph& g_prime) {
  CheckResult r{2, "s4-diagram", "main example: short-move graph on 4-paths", false, ""};
  auto smg = build_smoves(g_main, 4);
  auto classes = classify_components(smg, g_main);
  std::ostringstream d;
  d << "g_main S_4: " << smg.nodes.size() << " nodes, " << smg.edges.size() << " edges, " << classes.size()
    << " class(es)";
  bool ok = smg.nodes.size() == 12 && smg.edges.size() == 15 && classes.size() == 1;
  if (classes.size() == 1) {
    const auto& c = classes.front();
    d << ", " << (c.is_thin ? "thin" : "thick") << ", " << (c.is_bipartite ? "bipartite" : "non-bipartite");
    if (!c.is_bipartite) {
      auto problem = odd_cycle_problem(smg, c);
      d << ", odd cycle length " << c.odd_cycle.size() << (problem.empty() ? "" : " (" + problem + ")");
      ok = ok && problem.empty() && c.odd_cycle.size() == 9;
    }
    ok = ok && c.is_thick() && !c.is_bipartite;
  }

  auto smg_prime = build_smoves(g_prime, 4);
  auto classes_prime = classify_components(smg_prime, g_prime);
  const bool same_graph = smg_prime.nodes == smg.nodes && smg_prime.edges == smg.edges;
  d << "; g_prime S_4 " << (same_graph ? "identical" : "differs");
  ok = ok && same_graph && classes_prime.size() == 1;
  if (classes_prime.size() == 1) {
    const auto& c = classes_prime.front();
    d << ", " << (c.is_thin ? "thin" : "thick") << " with " << c.thin_members.size() << " thin paths";
    ok = ok && c.is_thin && c.thin_members.size() == 6;
  }
  r.passed = ok;
  r.detail = d.str();
  return r;
}

// ---------------------------------------------------------------------------
// 3. Short-move examples

inline CheckResult check_short_move_examples() {
  CheckResult r{3, "smove-examples", "short-move examples: grid, cube, trapezohedron", false, ""};
  std::ostringstream d;

  auto grid = builtin_fixture("grid");
  auto sg = build_smoves(grid, 3);
  std::set<std::tuple<std::string, std::string, std::size_t>> edges;
  for (auto& e : sg.edges) edges.emplace(path_label(grid, sg.nodes[e.a]), path_label(grid, sg.nodes[e.b]), e.color);
  const std::set<std::tuple<std::string, std::string, std::size_t>> expected{{"0125", "0145", 2},
                                                                             {"0145", "0345", 1}};
  const bool grid_ok = sg.nodes.size() == 3 && edges == expected;
  d << "grid S_3 " << (grid_ok ? "0125 -2- 0145 -1- 0345" : "unexpected (" + std::to_string(sg.nodes.size()) + " nodes)");

  auto cycle_ok = [](const ShortMoveGraph& smg, bool alternating) {
    if (smg.components.size() != 1 || smg.edges.size() != smg.nodes.size()) return false;
    for (std::size_t i = 0; i < smg.nodes.size(); ++i) {
      if (smg.degree(i) != 2) return false;
      if (alternating && smg.adjacency[i][0].second == smg.adjacency[i][1].second) return false;
    }
    return true;
  };

  auto cube = builtin_fixture("cube");
  auto sc = build_smoves(cube, 3);
  auto cc = classify_components(sc, cube);
  const bool cube_ok = sc.nodes.size() == 6 && cycle_ok(sc, true) && cc.front().is_thick() && cc.front().is_bipartite;
  d << "; cube S_3 " << (cube_ok ? "6-cycle, alternating colors" : "unexpected");

  auto trap = builtin_fixture("trapezohedron");
  auto st = build_smoves(trap, 3);
  auto ct = classify_components(st, trap);
  const bool trap_ok = cycle_ok(st, false) && st.nodes.size() % 2 == 0 && ct.front().is_thick() &&
                       ct.front().is_bipartite;
  d << "; trapezohedron S_3 " << (trap_ok ? std::to_string(st.nodes.size()) + "-cycle, thick bipartite" : "unexpected");

  r.passed = grid_ok && cube_ok && trap_ok;
  r.detail = d.str();
  return r;
}

// ---------------------------------------------------------------------------
// 4. Low-degree dimensions

inline CheckResult check_low_degree(const std::vector<CorpusEntry>& graphs) {
  Tally t;
  for (const auto& e : graphs) {
    const auto& g = e.graph;
    const std::size_t expected[3] = {g.vertex_count(), g.arrow_count(), oracle::omega2_dimension(g)};
    for (const auto& f : suite_fields()) {
      visit_field(f, [&](const auto& field) {
        for (std::size_t n = 0; n < 3; ++n) {
          t.count();
          auto dim = omega_general(g, n, field).dim();
          if (dim != expected[n]) {
            t.fail(where(e, f, n) + ": " + std::to_string(dim) + " vs " + std::to_string(expected[n]));
          }
        }
      });
    }
  }
  return {4, "low-degree", "dimensions of Omega_0, Omega_1, Omega_2", t.ok(),
          t.summary("dimension comparisons against vertex, arrow, triangle and square counts")};
}

// ---------------------------------------------------------------------------
// 5. Class basis against the general definition

inline CheckResult check_oracle_equivalence(const std::vector<CorpusEntry>& graphs, std::size_t max_level) {
  Tally t;
  for (const auto& e : graphs) {
    for (const auto& f : suite_fields()) {
      visit_field(f, [&](const auto& field) {
        for (std::size_t n = 0; n <= max_level; ++n) {
          t.count();
          auto general = omega_general(e.graph, n, field);
          auto classes = omega_class_basis(e.graph, n, field);
          if (!same_span(general, classes)) {
            t.fail(where(e, f, n) + ": dims " + std::to_string(general.dim()) + " vs " +
                   std::to_string(classes.dim()));
          }
        }
      });
    }
  }
  return {5, "basis-equivalence", "class basis spans Omega_n", t.ok(),
          t.summary("(digraph, field, level) span comparisons")};
}

// ---------------------------------------------------------------------------
// 6. Integral structure: Smith form against the class count

inline CheckResult check_structure_theorem(const std::vector<CorpusEntry>& graphs, std::size_t max_level) {
  Tally t;
  std::size_t with_torsion = 0;
  for (const auto& e : graphs) {
    for (std::size_t n = 0; n <= max_level; ++n) {
      t.count();
      auto snf = cochain_structure_snf(e.graph, n);
      auto classes = cochain_structure_classes(e.graph, n);
      with_torsion += !snf.torsion.empty();
      if (!snf.same_module(classes)) {
        t.fail(e.name + " n=" + std::to_string(n) + ": " + describe(snf) + " vs " + describe(classes));
      }
    }
  }
  return {6, "structure-theorem", "integral cochains from short-move classes", t.ok(),
          t.summary("(digraph, level) comparisons, " + std::to_string(with_torsion) + " with torsion")};
}

// ---------------------------------------------------------------------------
// 7. Invariants

inline CheckResult check_invariants(const std::vector<CorpusEntry>& graphs, std::size_t max_level) {
  Tally dd, ortho, dual, bip, snf, nullity;
  for (const auto& e : graphs) {
    const auto& g = e.graph;
    std::vector<IntegerMatrix> relations;
    for (std::size_t n = 0; n <= max_level; ++n) {
      relations.push_back(relation_set_general(g, n));
      snf.count();
      auto why = verify_smith(relations.back(), smith_normal_form(relations.back()));
      if (!why.empty()) snf.fail(e.name + " n=" + std::to_string(n) + ": " + why);
    }

    for (const auto& f : suite_fields()) {
      visit_field(f, [&](const auto& field) {
        using Field = std::decay_t<decltype(field)>;
        std::vector<OmegaBasis<Field>> bases;
        std::vector<ExactMatrix<Field>> boundaries;
        for (std::size_t n = 0; n <= max_level; ++n) {
          bases.push_back(omega_general(g, n, field));
          ortho.count();
          if (!orthogonal_to_relations(bases.back(), relations[n])) ortho.fail(where(e, f, n));

          auto classes = omega_class_basis(g, n, field);
          dual.count();
          auto m = duality_matrix(classes);
          if (m != ExactMatrix<Field>::identity(field, classes.dim())) dual.fail(where(e, f, n));

          if (n == 0) continue;
          boundaries.push_back(boundary_matrix(g, bases[n], bases[n - 1]));
          const auto& b = boundaries.back();
          nullity.count();
          if (rank(b) + kernel_basis(b).size() != b.cols()) nullity.fail(where(e, f, n));
          if (boundaries.size() >= 2) {
            dd.count();
            auto prod = multiply(boundaries[boundaries.size() - 2], b);
            if (prod != ExactMatrix<Field>(field, prod.rows(), prod.cols())) dd.fail(where(e, f, n));
          }
        }
      });
    }

    bip.count();
    auto s3 = build_smoves(g, 3);
    for (const auto& c : classify_components(s3, g)) {
      if (!c.is_bipartite) {
        bip.fail(e.name + ": non-bipartite class at " + path_label(g, s3.nodes[c.representative()]));
        break;
      }
    }
  }

  const bool ok = dd.ok() && ortho.ok() && dual.ok() && bip.ok() && snf.ok() && nullity.ok();
  std::string detail = dd.summary("d o d = 0") + "; " + ortho.summary("orthogonality") + "; " +
                       dual.summary("duality identities") + "; " + bip.summary("S_3 bipartite") + "; " +
                       snf.summary("Smith forms verified") + "; " + nullity.summary("rank-nullity");
  return {7, "invariants", "boundary, orthogonality, duality, S_3 bipartite, exact linear algebra", ok,
          detail};
}

// ---------------------------------------------------------------------------
// 8. Field independence

inline bool has_thick_non_bipartite(const Digraph& g, std::size_t top) {
  for (std::size_t n = 0; n <= top; ++n) {
    auto smg = build_smoves(g, n);
    for (const auto& c : classify_components(smg, g)) {
      if (c.is_thick() && !c.is_bipartite) return true;
    }
  }
  return false;
}

inline CheckResult check_field_independence(const std::vector<CorpusEntry>& graphs, std::size_t max_level) {
  Tally dims, chi;
  for (const auto& e : graphs) {
    std::vector<HomologySummary> per_field;
    for (const auto& f : suite_fields()) per_field.push_back(homology_summary(e.graph, f, max_level));
    for (std::size_t n = 0; n <= 3; ++n) {
      dims.count();
      auto d = dim_at(per_field[0], n);
      if (dim_at(per_field[1], n) != d || dim_at(per_field[2], n) != d) dims.fail(e.name + " n=" + std::to_string(n));
    }
    const bool bounded = std::all_of(per_field.begin(), per_field.end(), [](auto& s) { return s.euler.has_value(); });
    if (!bounded) continue;
    std::size_t top = 0;
    for (auto& s : per_field) top = std::max(top, s.omega_dims.size());
    if (has_thick_non_bipartite(e.graph, top)) continue;
    chi.count();
    if (per_field[1].euler != per_field[0].euler || per_field[2].euler != per_field[0].euler) {
      chi.fail(e.name + ": chi " + std::to_string(*per_field[0].euler) + "/" + std::to_string(*per_field[1].euler) +
               "/" + std::to_string(*per_field[2].euler));
    }
  }
  return {8, "field-independence", "low dimensions and torsion-free Euler characteristics agree across fields",
          dims.ok() && chi.ok(),
          dims.summary("(digraph, level <= 3) comparisons") + "; " + chi.summary("Euler characteristic comparisons")};
}

// ---------------------------------------------------------------------------
// 9. Negative control

inline CheckResult check_negative_control(const Digraph& g_main) {
  Tally t;
  const auto baseline = main_outcomes(g_main);
  std::string sample;
  for (auto& [u, v] : main_example_chords()) {
    t.count();
    auto su = g_main.find(u), sv = g_main.find(v);
    const std::string label = u + "->" + v;
    if (!su || !sv || !g_main.has_arrow(*su, *sv)) {
      t.fail(label + " missing");
      continue;
    }
    auto mutated = main_outcomes(g_main.without_arrow(*su, *sv));
    if (mutated.same(baseline)) {
      t.fail(label + " changes nothing");
    } else if (sample.empty()) {
      sample = "; without " + label + ": " + mutated.str();
    }
  }
  return {9, "negative-control", "deleting a chord of the main example breaks its outcomes", t.ok(),
          t.summary("chord deletions checked") + sample};
}

// ---------------------------------------------------------------------------

struct SuiteOptions {
  std::size_t corpus_size = 200;
  std::uint32_t seed = default_seed;
  std::size_t max_level = 5;
  std::optional<Digraph> main_override;  // replaces g_main in checks 1, 2 and 9
};

/// Runs checks 1..9 in order; `on_result` sees each result as soon as it is ready.
inline std::vector<CheckResult> run_suite(const SuiteOptions& opts = {},
                                          const std::function<void(const CheckResult&)>& on_result = {}) {
  const Digraph g_main = opts.main_override ? *opts.main_override : builtin_fixture("g_main");
  const Digraph g_prime = builtin_fixture("g_prime");
  auto fixtures = fixture_corpus();
  auto corpus = fixtures;
  for (auto& e : random_corpus(opts.corpus_size, opts.seed)) corpus.push_back(std::move(e));

  std::vector<std::function<CheckResult()>> checks{
      [&] { return check_main_theorem(g_main); },
      [&] { return check_s4_diagram(g_main, g_prime); },
      [&] { return check_short_move_examples(); },
      [&] { return check_low_degree(fixtures); },
      [&] { return check_oracle_equivalence(corpus, opts.max_level); },
      [&] { return check_structure_theorem(corpus, opts.max_level); },
      [&] { return check_invariants(corpus, opts.max_level); },
      [&] { return check_field_independence(corpus, opts.max_level); },
      [&] { return check_negative_control(g_main); },
  };
  std::vector<CheckResult> results;
  for (auto& check : checks) {
    results.push_back(check());
    if (on_result) on_result(results.back());
  }
  return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](auto& r) { return r.passed; });
}

}  // namespace pathhom::verify
