#pragma once

// JSON encodings of the analysis results. Keys are emitted in a fixed order
// and nothing time-dependent is included, so output is byte-stable.

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pathhom/chain_complex.hpp"
#include "pathhom/cochain.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/field.hpp"
#include "pathhom/short_moves.hpp"

namespace pathhom {

using json = nlohmann::ordered_json;

namespace detail {

inline json big_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline mpz_class big_from_json(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Homology summary: {field, omega_dims, boundary_ranks, ph_dims, euler, bounded, method_agreement, n_max}

inline json to_json(const HomologySummary& s) {
  json j;
  j["field"] = s.field.name();
  j["omega_dims"] = s.omega_dims;
  j["boundary_ranks"] = s.boundary_ranks;
  j["ph_dims"] = s.ph_dims;
  j["euler"] = s.euler ? json(*s.euler) : json(nullptr);
  j["bounded"] = s.bounded;
  j["method_agreement"] = s.method_agreement ? json(*s.method_agreement) : json(nullptr);
  j["n_max"] = s.n_max;
  return j;
}

inline HomologySummary homology_summary_from_json(const json& j) {
  HomologySummary s;
  s.field = parse_field(j.at("field").get<std::string>());
  s.omega_dims = j.at("omega_dims").get<std::vector<std::size_t>>();
  s.boundary_ranks = j.at("boundary_ranks").get<std::vector<std::size_t>>();
  s.ph_dims = j.at("ph_dims").get<std::vector<long>>();
  if (!j.at("euler").is_null()) s.euler = j.at("euler").get<long>();
  s.bounded = j.at("bounded").get<bool>();
  if (!j.at("method_agreement").is_null()) s.method_agreement = j.at("method_agreement").get<bool>();
  s.n_max = j.at("n_max").get<std::size_t>();
  return s;
}

// ---------------------------------------------------------------------------
// Cochain structure: {level, free_rank, torsion, representatives}

inline json to_json(const CochainStructure& s) {
  json j;
  j["level"] = s.level;
  j["free_rank"] = s.free_rank;
  json torsion = json::array();
  for (const auto& d : s.torsion) torsion.push_back(detail::big_to_json(d));
  j["torsion"] = torsion;
  if (s.has_representatives) {
    j["representatives"] = {{"free", s.free_representatives}, {"torsion", s.torsion_representatives}};
  } else {
    j["representatives"] = nullptr;
  }
  return j;
}

inline CochainStructure cochain_structure_from_json(const json& j) {
  CochainStructure s;
  s.level = j.at("level").get<std::size_t>();
  s.free_rank = j.at("free_rank").get<std::size_t>();
  for (const auto& d : j.at("torsion")) s.torsion.push_back(detail::big_from_json(d));
  if (!j.at("representatives").is_null()) {
    s.has_representatives = true;
    s.free_representatives = j["representatives"].at("free").get<std::vector<std::size_t>>();
    s.torsion_representatives = j["representatives"].at("torsion").get<std::vector<std::size_t>>();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Short-move graph: {level, nodes, labels, edges:[[p,q,color]], classes:[...]}

inline json to_json(const ShortMoveGraph& smg, const std::vector<SnClass>& classes, const Digraph& g) {
  json j;
  j["level"] = smg.level;
  json nodes = json::array();
  json labels = json::array();
  for (const auto& p : smg.nodes) {
    nodes.push_back(p.vertices);
    labels.push_back(path_label(g, p));
  }
  j["nodes"] = nodes;
  j["labels"] = labels;
  json edges = json::array();
  for (const auto& e : smg.edges) edges.push_back({e.a, e.b, e.color});
  j["edges"] = edges;
  json cs = json::array();
  for (const auto& c : classes) {
    json cj;
    cj["members"] = c.members;
    cj["thin"] = c.is_thin;
    cj["bipartite"] = c.is_bipartite;
    if (c.is_bipartite) {
      cj["parts"] = {{"plus", c.positive}, {"minus", c.negative}};
    } else {
      cj["odd_cycle"] = c.odd_cycle;
    }
    cj["thin_paths"] = c.thin_members;
    cj["supported_for_basis"] = c.supported_for_basis;
    cs.push_back(cj);
  }
  j["classes"] = cs;
  return j;
}

struct SmovesDocument {
  ShortMoveGraph graph;
  std::vector<SnClass> classes;
};

inline SmovesDocument smoves_from_json(const json& j) {
  SmovesDocument doc;
  auto& smg = doc.graph;
  smg.level = j.at("level").get<std::size_t>();
  for (const auto& n : j.at("nodes")) smg.nodes.push_back(Path{n.get<std::vector<vertex_id>>()});
  smg.adjacency.resize(smg.nodes.size());
  for (const auto& e : j.at("edges")) {
    SmoveEdge edge{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), e.at(2).get<std::size_t>()};
    smg.edges.push_back(edge);
    smg.adjacency.at(edge.a).emplace_back(edge.b, edge.color);
    smg.adjacency.at(edge.b).emplace_back(edge.a, edge.color);
  }
  for (auto& adj : smg.adjacency) std::sort(adj.begin(), adj.end());
  for (const auto& cj : j.at("classes")) {
    SnClass c;
    c.members = cj.at("members").get<std::vector<std::size_t>>();
    c.is_thin = cj.at("thin").get<bool>();
    c.is_bipartite = cj.at("bipartite").get<bool>();
    if (c.is_bipartite) {
      c.positive = cj.at("parts").at("plus").get<std::vector<std::size_t>>();
      c.negative = cj.at("parts").at("minus").get<std::vector<std::size_t>>();
    } else {
      c.odd_cycle = cj.at("odd_cycle").get<std::vector<std::size_t>>();
    }
    c.thin_members = cj.at("thin_paths").get<std::vector<std::size_t>>();
    c.supported_for_basis = cj.at("supported_for_basis").get<bool>();
    smg.components.push_back(c.members);
    doc.classes.push_back(std::move(c));
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Omega bases and boundary entry reports

template <class F>
json to_json(const OmegaBasis<F>& b, const Digraph& g) {
  json j;
  j["field"] = b.field.descriptor().name();
  j["level"] = b.level;
  j["method"] = to_string(b.method);
  j["dim"] = b.dim();
  json vectors = json::array();
  for (std::size_t k = 0; k < b.vectors.size(); ++k) {
    json terms = json::array();
    for (auto& [idx, a] : b.vectors[k].coefficients) {
      terms.push_back({path_label(g, b.paths[idx]), b.field.to_string(a)});
    }
    json v;
    if (b.method == basis_method::class_basis) v["class"] = path_label(g, b.paths[b.class_tags[k]]);
    v["terms"] = terms;
    vectors.push_back(v);
  }
  j["vectors"] = vectors;
  return j;
}

inline json to_json(const BoundaryEntryReport& r) {
  json j;
  j["field"] = r.field.name();
  json levels = json::array();
  for (const auto& l : r.levels) {
    json lj;
    lj["level"] = l.level;
    lj["rows"] = l.rows;
    lj["cols"] = l.cols;
    json entries = json::object();
    for (const auto& [value, count] : l.entries) entries[value] = count;
    lj["entries"] = entries;
    lj["all_unit"] = l.all_unit;
    levels.push_back(lj);
  }
  j["levels"] = levels;
  j["non_unit_found"] = r.non_unit_found;
  return j;
}

}  // namespace pathhom
