#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pathhom/digraph.hpp"

namespace pathhom {

struct SmoveEdge {
  std::size_t a = 0;  // a < b, indices into ShortMoveGraph::nodes
  std::size_t b = 0;
  std::size_t color = 0;  // position of the replaced vertex, 1..n-1

  auto operator<=>(const SmoveEdge&) const = default;
};

/// The graph of short moves on n-paths. Two n-paths are adjacent when they
/// differ in exactly one interior position i and the neighbours of that
/// position are at distance 2; the edge is colored i.
struct ShortMoveGraph {
  std::size_t level = 0;
  std::vector<Path> nodes;  // enumerate_paths(g, level)
  std::vector<SmoveEdge> edges;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency;  // (neighbour, color)
  std::vector<std::vector<std::size_t>> components;  // sorted, ordered by least member

  std::size_t degree(std::size_t node) const { return adjacency[node].size(); }
};

inline ShortMoveGraph build_smoves(const Digraph& g, std::size_t n) {
  ShortMoveGraph smg;
  smg.level = n;
  smg.nodes = enumerate_paths(g, n);
  smg.adjacency.resize(smg.nodes.size());

  for (std::size_t idx = 0; idx < smg.nodes.size(); ++idx) {
    const Path& p = smg.nodes[idx];
    for (std::size_t i = 1; i < n; ++i) {
      vertex_id x = p[i - 1], y = p[i + 1];
      if (!at_distance_two(g, x, y)) continue;
      for (vertex_id v : midpoints(g, x, y)) {
        if (v <= p[i]) continue;  // each edge once, from its smaller endpoint
        Path q = p;
        q.vertices[i] = v;
        auto other = find_path(smg.nodes, q);
        smg.edges.push_back({idx, *other, i});
      }
    }
  }
  std::sort(smg.edges.begin(), smg.edges.end());
  for (auto& e : smg.edges) {
    smg.adjacency[e.a].emplace_back(e.b, e.color);
    smg.adjacency[e.b].emplace_back(e.a, e.color);
  }
  for (auto& adj : smg.adjacency) std::sort(adj.begin(), adj.end());

  std::vector<bool> seen(smg.nodes.size(), false);
  for (std::size_t start = 0; start < smg.nodes.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> members{start};
    seen[start] = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (auto [w, color] : smg.adjacency[members[k]]) {
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    smg.components.push_back(std::move(members));
  }
  return smg;
}

/// One connected component of the short-move graph.
struct SnClass {
  std::vector<std::size_t> members;  // sorted node indices
  bool is_thin = false;
  bool is_bipartite = true;
  std::vector<std::size_t> positive;    // c+, holds the representative
  std::vector<std::size_t> negative;    // c-
  std::vector<std::size_t> odd_cycle;   // closed walk v0 .. v_{k-1} (v_{k-1} ~ v0), k odd
  bool supported_for_basis = true;      // false when the digraph has a multisquare
  std::vector<std::size_t> thin_members;

  std::size_t representative() const { return members.front(); }
  bool is_thick() const noexcept { return !is_thin; }
};

/// Thin/thick and bipartite classification of every component, ordered by
/// representative (least member). Bipartiteness is a BFS 2-coloring from the
/// representative; the first conflicting edge closes an odd cycle through the
/// lowest common BFS ancestor.
inline std::vector<SnClass> classify_components(const ShortMoveGraph& smg, const Digraph& g) {
  const bool supported = static_cast<bool>(is_multisquare_free(g));
  std::vector<SnClass> classes;
  std::vector<int> side(smg.nodes.size(), 0);  // +1 / -1, 0 = unvisited
  std::vector<std::size_t> parent(smg.nodes.size());
  std::vector<std::size_t> depth(smg.nodes.size());

  for (const auto& members : smg.components) {
    SnClass c;
    c.members = members;
    c.supported_for_basis = supported;
    for (auto m : members) {
      if (is_thin_path(g, smg.nodes[m])) c.thin_members.push_back(m);
    }
    c.is_thin = !c.thin_members.empty();

    const std::size_t root = members.front();
    side[root] = 1;
    parent[root] = root;
    depth[root] = 0;
    std::deque<std::size_t> queue{root};
    std::optional<std::pair<std::size_t, std::size_t>> conflict;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto [y, color] : smg.adjacency[x]) {
        if (side[y] == 0) {
          side[y] = -side[x];
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (side[y] == side[x] && !conflict) {
          conflict = {x, y};
        }
      }
    }
    if (conflict) {
      c.is_bipartite = false;
      auto [u, w] = *conflict;
      std::vector<std::size_t> up, down;  // u .. lca, w .. lca
      while (depth[u] > depth[w]) up.push_back(u), u = parent[u];
      while (depth[w] > depth[u]) down.push_back(w), w = parent[w];
      while (u != w) {
        up.push_back(u), u = parent[u];
        down.push_back(w), w = parent[w];
      }
      up.push_back(u);
      c.odd_cycle = std::move(up);
      c.odd_cycle.insert(c.odd_cycle.end(), down.rbegin(), down.rend());
    } else {
      for (auto m : members) (side[m] > 0 ? c.positive : c.negative).push_back(m);
    }
    classes.push_back(std::move(c));
  }
  return classes;
}

/// Graphviz rendering: node labels are vertex-name sequences, edge labels are
/// colors, class flags ride along as node attributes.
inline std::string export_dot(const ShortMoveGraph& smg, const Digraph& g) {
  auto classes = classify_components(smg, g);
  std::vector<std::size_t> class_of(smg.nodes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (auto m : classes[k].members) class_of[m] = k;
  }
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };

  std::ostringstream out;
  out << "graph S" << smg.level << " {\n";
  for (std::size_t i = 0; i < smg.nodes.size(); ++i) {
    const auto& c = classes[class_of[i]];
    bool thin_path = std::binary_search(c.thin_members.begin(), c.thin_members.end(), i);
    out << "  n" << i << " [label=" << quote(path_label(g, smg.nodes[i]))
        << ", class=" << class_of[i] << ", class_thin=" << (c.is_thin ? "true" : "false")
        << ", class_bipartite=" << (c.is_bipartite ? "true" : "false");
    if (c.is_bipartite) {
      bool plus = std::binary_search(c.positive.begin(), c.positive.end(), i);
      out << ", part=\"" << (plus ? '+' : '-') << "\"";
    }
    if (thin_path) out << ", thin_path=true, shape=box";
    out << "];\n";
  }
  for (const auto& e : smg.edges) {
    out << "  n" << e.a << " -- n" << e.b << " [label=\"" << e.color << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pathhom
