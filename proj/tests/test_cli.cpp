#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "commands.hpp"

using namespace pathhom;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pathhom");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pathhom_test_" + name);
}

}  // namespace

TEST(Cli, Info) {
  auto r = run({"info", "-i", "fixture:g_main"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "11 vertices, 24 arrows, multisquare-free, 0 thin pairs, 15 thick pairs\nlongest path length: 4\n");
  auto j = json::parse(run({"info", "-i", "fixture:g_prime", "--json"}).out);
  EXPECT_EQ(j["pairs"]["thin"], 6);
  EXPECT_TRUE(j["multisquare_witness"].is_null());
}

TEST(Cli, InfoReadsFile) {
  auto path = temp_file("ms.txt");
  std::ofstream(path) << "0 a\n0 b\n0 c\na 1\nb 1\nc 1\n";
  auto r = run({"info", "-i", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "not multisquare-free (0 -> 1 has 3 midpoints)"));
  std::filesystem::remove(path);
}

TEST(Cli, Smoves) {
  auto r = run({"smoves", "-i", "fixture:g_main", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "thick NON-bipartite, 12 nodes (odd cycle length 9)"));
  auto cube = run({"smoves", "-i", "fixture:cube", "--n", "3"});
  EXPECT_TRUE(contains(cube.out, "S_3: 6 nodes, 6 edges, 1 class"));
  EXPECT_TRUE(contains(cube.out, "thick bipartite, 6 nodes (cycle)"));
  auto j = json::parse(run({"smoves", "-i", "fixture:trapezohedron", "--n", "3", "--json"}).out);
  EXPECT_EQ(j["levels"][0]["nodes"].size(), 10u);
}

TEST(Cli, SmovesDot) {
  auto path = temp_file("s.dot");
  auto r = run({"smoves", "-i", "fixture:cube", "--n", "3", "--dot", path.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_TRUE(contains(text, "graph"));
  EXPECT_TRUE(contains(text, "--"));
  std::filesystem::remove(path);
}

TEST(Cli, Basis) {
  auto path = temp_file("sq.txt");
  std::ofstream(path) << "0 1\n1 3\n0 2\n2 3\n";
  auto r = run({"basis", "-i", path.string(), "--n", "2", "--method", "general"});
  EXPECT_EQ(r.out, "Omega_2 over Q (general): dim 1\n  e013 - e023\n");
  auto f2 = run({"basis", "-i", path.string(), "--n", "2", "--field", "F2"});
  EXPECT_EQ(f2.out, "Omega_2 over F2 (class_basis): dim 1\n  e013 + e023\n");
  EXPECT_EQ(run({"basis", "-i", path.string(), "--method", "bogus"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, Homology) {
  auto r = run({"homology", "-i", "fixture:g_main", "--field", "Q", "--field", "F2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "Q: omega_dims [11, 24, 21, 7, 0], ph_dims [1, 0, 0, 0, 0], chi 1, class basis agrees"));
  EXPECT_TRUE(contains(r.out, "F2: omega_dims [11, 24, 21, 7, 1, 0], ph_dims [1, 0, 1, 0, 0, 0], chi 2"));
  auto j = json::parse(run({"homology", "-i", "fixture:g_prime", "--json"}).out);
  EXPECT_EQ(j["results"][0]["euler"], 2);
  EXPECT_EQ(homology_summary_from_json(j["results"][0]).ph_dims, (std::vector<long>{1, 0, 1, 0}));
}

TEST(Cli, Cochain) {
  auto r = run({"cochain", "-i", "fixture:g_main", "--n", "4", "--field", "F2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=4: Z-structure: Z/2Z (torsion!), SNF and class method agree, dim over F2 1\n");
  auto cube = run({"cochain", "-i", "fixture:cube", "--n", "3"});
  EXPECT_TRUE(contains(cube.out, "Z-structure: Z^1 (torsion-free)"));
  auto j = json::parse(run({"cochain", "-i", "fixture:g_main", "--n", "4", "--json", "--field", "F3"}).out);
  EXPECT_EQ(j["levels"][0]["torsion"], json::parse("[2]"));
  EXPECT_EQ(j["levels"][0]["dimensions"]["F3"], 0);
  EXPECT_EQ(j["levels"][0]["method_agreement"], true);
}

TEST(Cli, CochainTsv) {
  auto path = temp_file("rel.tsv");
  EXPECT_EQ(run({"cochain", "-i", "fixture:cube", "--n", "3", "--tsv", path.string()}).code, 0);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "# level 3");
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"info"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  auto missing = run({"info", "-i", "/nonexistent/graph.txt"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_TRUE(contains(missing.err, "cannot read"));
  EXPECT_EQ(run({"info", "-i", "fixture:nope"}).code, 2);
  EXPECT_EQ(run({"homology", "-i", "fixture:g_main", "--field", "F4"}).code, 2);
  EXPECT_EQ(run({"smoves", "-i", "fixture:g_main", "--n-min", "3", "--n-max", "2"}).code, 2);
}

TEST(Cli, MalformedInputReportsLine) {
  auto path = temp_file("bad.txt");
  std::ofstream(path) << "a b\nb\n";
  auto r = run({"info", "-i", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "2")) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, VerifyChecks) {
  auto a = run({"verify-paper", "--corpus", "12"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_TRUE(contains(a.out, "9/9 checks passed"));
  EXPECT_EQ(a.out, run({"verify-paper", "--corpus", "12"}).out);
  auto j = json::parse(run({"verify-paper", "--corpus", "12", "--json"}).out);
  EXPECT_EQ(j["passed"], 9);
  EXPECT_EQ(j["checks"].size(), 9u);
}

TEST(Cli, VerifyDetectsDeletedChord) {
  auto r = run({"verify-paper", "--corpus", "12", "--drop-arrow", "x1^0->x3^0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "FAIL [1]"));
  EXPECT_FALSE(contains(r.out, "9/9"));
  EXPECT_EQ(run({"verify-paper", "--drop-arrow", "x0->x4"}).code, 2);
  EXPECT_EQ(run({"verify-paper", "--drop-arrow", "x0"}).code, 2);
}
