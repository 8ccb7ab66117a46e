#include <gtest/gtest.h>

#include "pathhom/fixtures.hpp"
#include "pathhom/report.hpp"

using namespace pathhom;

TEST(ReportJson, HomologyRoundTrip) {
  for (auto f : {FieldDescriptor::rational(), FieldDescriptor::prime(2)}) {
    auto s = homology_summary(builtin_fixture("g_main"), f);
    EXPECT_EQ(homology_summary_from_json(to_json(s)), s);
  }
  auto cyclic = homology_summary(parse_digraph("a b\nb a\n"), FieldDescriptor::rational(), 3);
  auto j = to_json(cyclic);
  EXPECT_TRUE(j["euler"].is_null());
  EXPECT_EQ(homology_summary_from_json(j), cyclic);
}

TEST(ReportJson, HomologyKeyOrder) {
  auto j = to_json(homology_summary(parse_digraph("0 1\n1 3\n0 2\n2 3\n"), FieldDescriptor::rational()));
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"field", "omega_dims", "boundary_ranks", "ph_dims", "euler",
                                            "bounded", "method_agreement", "n_max"}));
  EXPECT_EQ(j["omega_dims"], json({4, 4, 1, 0}));
}

TEST(ReportJson, CochainRoundTrip) {
  auto s = cochain_structure_snf(builtin_fixture("g_main"), 4);
  auto j = to_json(s);
  EXPECT_EQ(j["torsion"], json({2}));
  EXPECT_EQ(cochain_structure_from_json(j), s);

  CochainStructure big;
  big.level = 3;
  big.free_rank = 1;
  big.torsion = {mpz_class("123456789012345678901234567890")};
  auto bj = to_json(big);
  EXPECT_TRUE(bj["torsion"][0].is_string());
  EXPECT_TRUE(bj["representatives"].is_null());
  EXPECT_EQ(cochain_structure_from_json(bj), big);
}

TEST(ReportJson, SmovesRoundTrip) {
  for (auto name : {"g_main", "cube", "g_prime", "trapezohedron"}) {
    auto g = builtin_fixture(name);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto smg = build_smoves(g, n);
      auto classes = classify_components(smg, g);
      auto doc = smoves_from_json(to_json(smg, classes, g));
      EXPECT_EQ(doc.graph.nodes, smg.nodes);
      EXPECT_EQ(doc.graph.edges, smg.edges);
      EXPECT_EQ(doc.graph.adjacency, smg.adjacency);
      ASSERT_EQ(doc.classes.size(), classes.size());
      for (std::size_t k = 0; k < classes.size(); ++k) {
        EXPECT_EQ(doc.classes[k].members, classes[k].members);
        EXPECT_EQ(doc.classes[k].is_bipartite, classes[k].is_bipartite);
        EXPECT_EQ(doc.classes[k].odd_cycle, classes[k].odd_cycle);
        EXPECT_EQ(doc.classes[k].positive, classes[k].positive);
      }
    }
  }
}

TEST(ReportJson, Deterministic) {
  auto g = builtin_fixture("g_main");
  auto a = to_json(build_smoves(g, 4), classify_components(build_smoves(g, 4), g), g).dump();
  auto b = to_json(build_smoves(g, 4), classify_components(build_smoves(g, 4), g), g).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_json(homology_summary(g, FieldDescriptor::prime(2))).dump(),
            to_json(homology_summary(g, FieldDescriptor::prime(2))).dump());
}

TEST(ReportJson, OmegaBasis) {
  auto g = parse_digraph("0 1\n1 3\n0 2\n2 3\n");
  auto j = to_json(omega_general(g, 2, RationalField{}), g);
  EXPECT_EQ(j["field"], "Q");
  EXPECT_EQ(j["dim"], 1);
  EXPECT_EQ(j["vectors"][0]["terms"], json::parse(R"([["013","1"],["023","-1"]])"));
  auto c = to_json(omega_class_basis(g, 2, PrimeField(2)), g);
  EXPECT_EQ(c["method"], "class_basis");
  EXPECT_EQ(c["vectors"][0]["class"], "013");
}

TEST(ReportJson, BoundaryEntries) {
  auto r = boundary_entry_report(builtin_fixture("g_main"), FieldDescriptor::rational(), 4);
  auto j = to_json(r);
  EXPECT_EQ(j["levels"].size(), 4u);
  EXPECT_EQ(j["non_unit_found"], r.non_unit_found);
  for (auto& l : j["levels"]) {
    for (auto& [value, count] : l["entries"].items()) {
      if (l["all_unit"].get<bool>()) {
        EXPECT_TRUE(value == "1" || value == "-1");
      }
    }
  }
}
