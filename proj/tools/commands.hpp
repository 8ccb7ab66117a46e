#pragma once

// The `pathhom` command line. Kept in a header so the test suite can drive
// run_cli() with in-memory streams.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pathhom/pathhom.hpp"

namespace pathhom::cli {

enum exit_code : int { ok = 0, check_failed = 1, usage = 2 };

struct RunConfig {
  std::string input;
  std::optional<std::size_t> n;
  std::optional<std::size_t> n_min;
  std::optional<std::size_t> n_max;
  std::vector<std::string> fields;
  bool json = false;
  std::string dot_path;
  std::string tsv_path;
  std::string method = "auto";
  std::string drop_arrow;
  std::size_t corpus = 200;
  std::uint32_t seed = verify::default_seed;
};

inline Digraph load_input(const std::string& input) {
  if (input.starts_with("fixture:")) return builtin_fixture(input.substr(8));
  std::stringstream buf;
  if (input == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream file(input, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot read input file: " + input);
    buf << file.rdbuf();
  }
  return parse_digraph(buf.str());
}

inline std::vector<FieldDescriptor> selected_fields(const RunConfig& cfg) {
  std::vector<FieldDescriptor> out;
  for (auto& f : cfg.fields) out.push_back(parse_field(f));
  if (out.empty()) out.push_back(FieldDescriptor::rational());
  return out;
}

// Levels from --n, or --n-min/--n-max, else 0..longest path (4 when cyclic).
inline std::vector<std::size_t> selected_levels(const RunConfig& cfg, const Digraph& g, std::size_t first = 0) {
  if (cfg.n) return {*cfg.n};
  auto longest = longest_path_length(g);
  std::size_t lo = cfg.n_min.value_or(first);
  std::size_t hi = cfg.n_max.value_or(longest ? std::max<std::size_t>(*longest, lo) : 4);
  if (hi < lo) throw std::invalid_argument("--n-max must be at least --n-min");
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string join(const std::vector<long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string basis_symbol(const Digraph& g, const Path& p) {
  auto label = path_label(g, p);
  return label.find(' ') == std::string::npos ? "e" + label : "e(" + label + ")";
}

inline std::string z_structure(const CochainStructure& s) {
  std::string out;
  auto add = [&](const std::string& part) { out += (out.empty() ? "" : " + ") + part; };
  if (s.free_rank > 0) add("Z^" + std::to_string(s.free_rank));
  for (const auto& d : s.torsion) add("Z/" + d.get_str() + "Z");
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

inline int cmd_info(const RunConfig& cfg, std::ostream& out) {
  auto g = load_input(cfg.input);
  auto msf = is_multisquare_free(g);
  std::size_t counts[3] = {0, 0, 0};
  for (auto& p : classify_pairs(g)) ++counts[static_cast<int>(p.kind())];
  auto longest = longest_path_length(g);

  if (cfg.json) {
    json j;
    j["vertices"] = g.vertex_count();
    j["arrows"] = g.arrow_count();
    j["multisquare_free"] = msf.free;
    if (msf.witness) {
      j["multisquare_witness"] = {g.name(msf.witness->source), g.name(msf.witness->target)};
    } else {
      j["multisquare_witness"] = nullptr;
    }
    j["pairs"] = {{"thin", counts[0]}, {"thick", counts[1]}, {"multi", counts[2]}};
    j["longest_path"] = longest ? json(*longest) : json(nullptr);
    out << j.dump(2) << "\n";
    return ok;
  }
  out << g.vertex_count() << " vertices, " << g.arrow_count() << " arrows, ";
  if (msf) {
    out << "multisquare-free";
  } else {
    out << "not multisquare-free (" << g.name(msf.witness->source) << " -> " << g.name(msf.witness->target)
        << " has " << msf.witness->midpoints.size() << " midpoints)";
  }
  out << ", " << counts[0] << " thin pairs, " << counts[1] << " thick pairs";
  if (counts[2] > 0) out << ", " << counts[2] << " multisquare pairs";
  out << "\nlongest path length: " << (longest ? std::to_string(*longest) : std::string("unbounded (cyclic)"))
      << "\n";
  return ok;
}

inline std::string class_shape(const ShortMoveGraph& smg, const SnClass& c) {
  std::size_t edges = 0, max_degree = 0;
  for (auto m : c.members) {
    edges += smg.degree(m);
    max_degree = std::max(max_degree, smg.degree(m));
  }
  edges /= 2;
  if (c.members.size() == 1) return "single";
  if (max_degree <= 2 && edges + 1 == c.members.size()) return "path";
  if (max_degree == 2 && edges == c.members.size()) return "cycle";
  return "";
}

inline int cmd_smoves(const RunConfig& cfg, std::ostream& out) {
  auto g = load_input(cfg.input);
  json levels = json::array();
  std::string dot;
  for (auto n : selected_levels(cfg, g, 1)) {
    auto smg = build_smoves(g, n);
    auto classes = classify_components(smg, g);
    dot += export_dot(smg, g);
    if (cfg.json) {
      levels.push_back(to_json(smg, classes, g));
      continue;
    }
    out << "S_" << n << ": " << smg.nodes.size() << " nodes, " << smg.edges.size() << " edges, "
        << classes.size() << (classes.size() == 1 ? " class" : " classes") << "\n";
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const auto& c = classes[k];
      out << "  [" << k << "] " << (c.is_thin ? "thin" : "thick") << " "
          << (c.is_bipartite ? "bipartite" : "NON-bipartite") << ", " << c.members.size()
          << (c.members.size() == 1 ? " node" : " nodes");
      if (!c.is_bipartite) {
        out << " (odd cycle length " << c.odd_cycle.size() << ")";
      } else if (auto shape = class_shape(smg, c); !shape.empty()) {
        out << " (" << shape << ")";
      }
      if (c.is_thin) out << ", " << c.thin_members.size() << " thin";
      out << ", representative " << path_label(g, smg.nodes[c.representative()]) << "\n";
    }
  }
  if (cfg.json) out << json{{"levels", levels}}.dump(2) << "\n";
  if (!cfg.dot_path.empty()) {
    std::ofstream file(cfg.dot_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write " + cfg.dot_path);
    file << dot;
  }
  return ok;
}

inline int cmd_basis(const RunConfig& cfg, std::ostream& out) {
  auto g = load_input(cfg.input);
  bool use_class = cfg.method == "class" || (cfg.method == "auto" && static_cast<bool>(is_multisquare_free(g)));
  json results = json::array();
  for (auto n : selected_levels(cfg, g)) {
    for (auto& f : selected_fields(cfg)) {
      visit_field(f, [&](const auto& field) {
        auto basis = use_class ? omega_class_basis(g, n, field) : omega_general(g, n, field);
        if (cfg.json) {
          results.push_back(to_json(basis, g));
          return;
        }
        out << "Omega_" << n << " over " << f.name() << " (" << to_string(basis.method) << "): dim "
            << basis.dim() << "\n";
        for (const auto& v : basis.vectors) {
          std::string line;
          for (auto& [idx, a] : v.coefficients) {
            auto coeff = field.to_string(a);
            bool negative = coeff.starts_with("-");
            if (negative) coeff = coeff.substr(1);
            std::string term = (coeff == "1" ? "" : coeff + " ") + basis_symbol(g, basis.paths[idx]);
            if (line.empty()) {
              line = (negative ? "-" : "") + term;
            } else {
              line += (negative ? " - " : " + ") + term;
            }
          }
          out << "  " << line << "\n";
        }
      });
    }
  }
  if (cfg.json) out << json{{"bases", results}}.dump(2) << "\n";
  return ok;
}

inline int cmd_homology(const RunConfig& cfg, std::ostream& out) {
  auto g = load_input(cfg.input);
  std::optional<std::size_t> n_max = cfg.n_max ? cfg.n_max : cfg.n;
  json results = json::array();
  for (auto& f : selected_fields(cfg)) {
    auto s = homology_summary(g, f, n_max);
    if (cfg.json) {
      results.push_back(to_json(s));
      continue;
    }
    out << f.name() << ": omega_dims " << join(s.omega_dims) << ", ph_dims " << join(s.ph_dims) << ", chi ";
    if (s.euler) {
      out << *s.euler;
    } else {
      out << "undefined (no vanishing Omega up to n=" << s.n_max + 1 << ")";
    }
    if (s.method_agreement) {
      out << ", class basis " << (*s.method_agreement ? "agrees" : "DISAGREES");
    } else {
      out << ", class basis not applicable";
    }
    out << "\n";
  }
  if (cfg.json) out << json{{"results", results}}.dump(2) << "\n";
  return ok;
}

inline int cmd_cochain(const RunConfig& cfg, std::ostream& out) {
  auto g = load_input(cfg.input);
  const bool msf = static_cast<bool>(is_multisquare_free(g));
  json levels = json::array();
  std::string tsv;
  bool agree_all = true;
  for (auto n : selected_levels(cfg, g, 1)) {
    auto snf = cochain_structure_snf(g, n);
    std::optional<bool> agree;
    if (msf) agree = snf.same_module(cochain_structure_classes(g, n));
    agree_all = agree_all && agree.value_or(true);
    if (!cfg.tsv_path.empty()) tsv += "# level " + std::to_string(n) + "\n" + to_tsv(relation_set_general(g, n));
    if (cfg.json) {
      auto j = to_json(snf);
      j["method_agreement"] = agree ? json(*agree) : json(nullptr);
      json dims = json::object();
      for (auto& f : cfg.fields) dims[parse_field(f).name()] = cochain_dimension(snf, parse_field(f));
      j["dimensions"] = dims;
      levels.push_back(j);
      continue;
    }
    out << "n=" << n << ": Z-structure: " << z_structure(snf) << (snf.torsion.empty() ? " (torsion-free)" : " (torsion!)");
    if (agree) {
      out << ", SNF and class method " << (*agree ? "agree" : "DISAGREE");
    } else {
      out << ", class method not applicable";
    }
    for (auto& f : cfg.fields) {
      auto fd = parse_field(f);
      out << ", dim over " << fd.name() << " " << cochain_dimension(snf, fd);
    }
    out << "\n";
  }
  if (cfg.json) out << json{{"levels", levels}}.dump(2) << "\n";
  if (!cfg.tsv_path.empty()) {
    std::ofstream file(cfg.tsv_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write " + cfg.tsv_path);
    file << tsv;
  }
  return agree_all ? ok : check_failed;
}

inline int cmd_verify_paper(const RunConfig& cfg, std::ostream& out) {
  verify::SuiteOptions opts;
  opts.corpus_size = cfg.corpus;
  opts.seed = cfg.seed;
  if (!cfg.drop_arrow.empty()) {
    auto sep = cfg.drop_arrow.find("->");
    if (sep == std::string::npos) throw std::invalid_argument("--drop-arrow expects SRC->DST");
    auto g = builtin_fixture("g_main");
    auto u = g.index_of(cfg.drop_arrow.substr(0, sep));
    auto v = g.index_of(cfg.drop_arrow.substr(sep + 2));
    if (!g.has_arrow(u, v)) throw std::invalid_argument("g_main has no arrow " + cfg.drop_arrow);
    opts.main_override = g.without_arrow(u, v);
    out << "g_main with " << cfg.drop_arrow << " deleted\n";
  }
  auto results = verify::run_suite(opts, [&](const verify::CheckResult& r) {
    if (cfg.json) return;
    out << verify::format(r) << "\n";
    out.flush();
  });
  std::size_t passed = 0;
  for (auto& r : results) passed += r.passed;
  if (cfg.json) {
    json checks = json::array();
    for (auto& r : results) {
      checks.push_back({{"id", r.id}, {"name", r.name}, {"anchor", r.anchor}, {"passed", r.passed}, {"detail", r.detail}});
    }
    out << json{{"checks", checks}, {"passed", passed}, {"total", results.size()}}.dump(2) << "\n";
  } else {
    out << passed << "/" << results.size() << " checks passed\n";
  }
  return passed == results.size() ? ok : check_failed;
}

// ---------------------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path homology of digraphs: short moves, Omega bases, homology and integral cochains"};
  app.name("pathhom");
  app.require_subcommand(1);
  RunConfig cfg;

  auto input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input, "edge-list file, '-' for stdin, or fixture:NAME")->required();
  };
  auto levels = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "single level");
    sub->add_option("--n-min", cfg.n_min, "lowest level");
    sub->add_option("--n-max", cfg.n_max, "highest level");
  };
  auto fields = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.fields, "Q, F2, F3, Fp or GF(p); repeatable");
  };

  auto* info = app.add_subcommand("info", "vertex, arrow and pair census");
  input(info);
  info->add_flag("--json", cfg.json);

  auto* smoves = app.add_subcommand("smoves", "short-move graphs and their classes");
  input(smoves);
  levels(smoves);
  smoves->add_flag("--json", cfg.json);
  smoves->add_option("--dot", cfg.dot_path, "write Graphviz output here");

  auto* basis = app.add_subcommand("basis", "basis of Omega_n");
  input(basis);
  levels(basis);
  fields(basis);
  basis->add_option("--method", cfg.method, "auto, general or class")
      ->check(CLI::IsMember({"auto", "general", "class"}));
  basis->add_flag("--json", cfg.json);

  auto* homology = app.add_subcommand("homology", "Omega and path homology dimensions, Euler characteristic");
  input(homology);
  homology->add_option("--n", cfg.n, "highest level (alias of --n-max)");
  homology->add_option("--n-max", cfg.n_max, "highest level");
  fields(homology);
  homology->add_flag("--json", cfg.json);

  auto* cochain = app.add_subcommand("cochain", "integral structure of path cochains");
  input(cochain);
  levels(cochain);
  fields(cochain);
  cochain->add_flag("--json", cfg.json);
  cochain->add_option("--tsv", cfg.tsv_path, "write relation matrices here");

  auto* verify_paper = app.add_subcommand("verify-paper", "run the acceptance checks");
  verify_paper->add_option("--drop-arrow", cfg.drop_arrow, "delete SRC->DST from g_main first");
  verify_paper->add_option("--corpus", cfg.corpus, "number of random digraphs");
  verify_paper->add_option("--seed", cfg.seed, "corpus seed");
  verify_paper->add_flag("--json", cfg.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*info) return cmd_info(cfg, out);
    if (*smoves) return cmd_smoves(cfg, out);
    if (*basis) return cmd_basis(cfg, out);
    if (*homology) return cmd_homology(cfg, out);
    if (*cochain) return cmd_cochain(cfg, out);
    if (*verify_paper) return cmd_verify_paper(cfg, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == error_kind::method_mismatch ? check_failed : usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace pathhom::cli
