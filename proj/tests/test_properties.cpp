#include <gtest/gtest.h>

#include <numeric>

#include "pathhom/pathhom.hpp"

using namespace pathhom;

namespace {

const std::vector<verify::CorpusEntry>& corpus() {
  static const auto c = [] {
    auto all = verify::fixture_corpus();
    for (auto& e : verify::random_corpus(80, 7)) all.push_back(e);
    return all;
  }();
  return c;
}

Digraph reversed(const Digraph& g) {
  std::vector<Digraph::arrow> arrows;
  for (auto [u, v] : g.arrows()) arrows.emplace_back(v, u);
  return Digraph(g.names(), arrows);
}

std::size_t weak_components(const Digraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = g.vertex_count();
  for (auto [u, v] : g.arrows()) {
    auto a = root(u), b = root(v);
    if (a != b) parent[a] = b, --count;
  }
  return count;
}

const FieldDescriptor fields[] = {FieldDescriptor::rational(), FieldDescriptor::prime(2),
                                  FieldDescriptor::prime(3)};

}  // namespace

TEST(Properties, LowDegreeDimensions) {
  for (auto& e : corpus()) {
    EXPECT_EQ(omega_general(e.graph, 0, RationalField{}).dim(), e.graph.vertex_count());
    EXPECT_EQ(omega_general(e.graph, 1, RationalField{}).dim(), e.graph.arrow_count());
    EXPECT_EQ(omega_general(e.graph, 2, RationalField{}).dim(), verify::oracle::omega2_dimension(e.graph))
        << e.name;
  }
}

TEST(Properties, HomologyBookkeeping) {
  for (auto& e : corpus()) {
    for (auto& f : fields) {
      auto s = homology_summary(e.graph, f, 5);
      ASSERT_EQ(s.ph_dims.size() + (s.bounded ? 0 : 1), s.omega_dims.size());
      EXPECT_EQ(s.ph_dims[0], static_cast<long>(weak_components(e.graph))) << e.name;
      for (std::size_t n = 0; n < s.ph_dims.size(); ++n) {
        long above = n + 1 < s.boundary_ranks.size() ? static_cast<long>(s.boundary_ranks[n + 1]) : 0;
        long expect = static_cast<long>(s.omega_dims[n]) - static_cast<long>(s.boundary_ranks[n]) - above;
        EXPECT_EQ(s.ph_dims[n], expect);
        EXPECT_GE(s.ph_dims[n], 0);
      }
      if (s.euler) {
        long chi = 0, alt = 0;
        for (std::size_t n = 0; n < s.ph_dims.size(); ++n) chi += (n % 2 ? -1 : 1) * s.ph_dims[n];
        for (std::size_t n = 0; n < s.omega_dims.size(); ++n) {
          alt += (n % 2 ? -1 : 1) * static_cast<long>(s.omega_dims[n]);
        }
        EXPECT_EQ(*s.euler, chi);
        EXPECT_EQ(*s.euler, alt);
      }
      if (is_multisquare_free(e.graph)) {
        EXPECT_EQ(s.method_agreement, std::optional<bool>(true));
      }
    }
  }
}

TEST(Properties, ReversalPreservesDimensions) {
  for (auto& e : corpus()) {
    auto r = reversed(e.graph);
    for (auto& f : {FieldDescriptor::rational(), FieldDescriptor::prime(2)}) {
      auto a = homology_summary(e.graph, f, 5), b = homology_summary(r, f, 5);
      EXPECT_EQ(a.omega_dims, b.omega_dims) << e.name;
      EXPECT_EQ(a.ph_dims, b.ph_dims) << e.name;
    }
  }
}

TEST(Properties, CoefficientMonotonicity) {
  for (auto& e : corpus()) {
    for (std::size_t n = 0; n <= 5; ++n) {
      auto q = omega_general(e.graph, n, RationalField{}).dim();
      EXPECT_GE(omega_general(e.graph, n, PrimeField(2)).dim(), q);
      EXPECT_GE(omega_general(e.graph, n, PrimeField(5)).dim(), q);
    }
  }
}

TEST(Properties, ClassBasisSpansOmega) {
  for (auto& e : corpus()) {
    if (!is_multisquare_free(e.graph)) continue;
    for (std::size_t n = 0; n <= 5; ++n) {
      visit_field(FieldDescriptor::prime(2), [&](const auto& f) {
        EXPECT_TRUE(same_span(omega_class_basis(e.graph, n, f), omega_general(e.graph, n, f))) << e.name;
      });
      EXPECT_TRUE(same_span(omega_class_basis(e.graph, n, RationalField{}),
                            omega_general(e.graph, n, RationalField{})))
          << e.name;
    }
  }
}

TEST(Properties, CochainStructureMethodsAgree) {
  for (auto& e : corpus()) {
    if (!is_multisquare_free(e.graph)) continue;
    for (std::size_t n = 1; n <= 5; ++n) {
      auto snf = cochain_structure_snf(e.graph, n);
      auto cls = cochain_structure_classes(e.graph, n);
      EXPECT_TRUE(snf.same_module(cls)) << e.name << " n=" << n;
      for (auto& d : snf.torsion) EXPECT_EQ(d, 2);
    }
  }
}

TEST(Properties, ShortMoveClassesPartitionNodes) {
  for (auto& e : corpus()) {
    if (!is_multisquare_free(e.graph)) continue;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto smg = build_smoves(e.graph, n);
      auto classes = classify_components(smg, e.graph);
      std::vector<int> owner(smg.nodes.size(), -1);
      for (std::size_t k = 0; k < classes.size(); ++k) {
        for (auto m : classes[k].members) {
          EXPECT_EQ(owner[m], -1);
          owner[m] = static_cast<int>(k);
        }
      }
      for (auto o : owner) EXPECT_NE(o, -1);
      for (auto& edge : smg.edges) {
        EXPECT_EQ(owner[edge.a], owner[edge.b]);
        auto& c = classes[owner[edge.a]];
        if (c.is_bipartite) {
          bool a_plus = std::find(c.positive.begin(), c.positive.end(), edge.a) != c.positive.end();
          bool b_plus = std::find(c.positive.begin(), c.positive.end(), edge.b) != c.positive.end();
          EXPECT_NE(a_plus, b_plus);
        }
      }
      for (auto& c : classes) {
        if (c.is_bipartite) continue;
        EXPECT_EQ(c.odd_cycle.size() % 2, 1u);
        for (std::size_t i = 0; i < c.odd_cycle.size(); ++i) {
          auto a = c.odd_cycle[i], b = c.odd_cycle[(i + 1) % c.odd_cycle.size()];
          auto& adj = smg.adjacency[a];
          EXPECT_TRUE(std::any_of(adj.begin(), adj.end(), [&](auto& x) { return x.first == b; }));
        }
      }
    }
  }
}
