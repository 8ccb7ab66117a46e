#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathhom/error.hpp"

namespace pathhom {

using vertex_id = std::uint32_t;

/// A finite simple digraph: no loops, no parallel arrows. Vertex names are
/// opaque strings mapped to dense indices in declaration order; all math runs
/// on the dense indices. Immutable after construction.
class Digraph {
 public:
  using arrow = std::pair<vertex_id, vertex_id>;

  Digraph() = default;

  /// Throws LoopArrow / DuplicateArrow / UnknownVertex on malformed input.
  Digraph(std::vector<std::string> names, const std::vector<arrow>& arrows)
      : names_(std::move(names)),
        out_(names_.size()),
        in_(names_.size()),
        adjacent_(names_.size() * names_.size(), false) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      index_.emplace(names_[i], static_cast<vertex_id>(i));
    }
    for (auto [u, v] : arrows) {
      if (u >= names_.size() || v >= names_.size()) {
        throw error(error_kind::unknown_vertex, "arrow endpoint out of range");
      }
      if (u == v) throw error(error_kind::loop_arrow, names_[u]);
      if (adjacent_[u * names_.size() + v]) {
        throw error(error_kind::duplicate_arrow, names_[u] + " -> " + names_[v]);
      }
      adjacent_[u * names_.size() + v] = true;
      out_[u].push_back(v);
      in_[v].push_back(u);
      arrows_.emplace_back(u, v);
    }
    for (auto& l : out_) std::sort(l.begin(), l.end());
    for (auto& l : in_) std::sort(l.begin(), l.end());
    std::sort(arrows_.begin(), arrows_.end());
  }

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(vertex_id v) const { return names_.at(v); }
  const std::vector<arrow>& arrows() const noexcept { return arrows_; }
  const std::vector<vertex_id>& out(vertex_id v) const { return out_.at(v); }
  const std::vector<vertex_id>& in(vertex_id v) const { return in_.at(v); }

  bool has_arrow(vertex_id u, vertex_id v) const noexcept {
    return u < names_.size() && v < names_.size() && adjacent_[u * names_.size() + v];
  }

  std::optional<vertex_id> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  vertex_id index_of(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw error(error_kind::unknown_vertex, std::string(name));
  }

  /// Copy of this digraph with one arrow removed (vertex order preserved).
  Digraph without_arrow(vertex_id u, vertex_id v) const {
    if (!has_arrow(u, v)) throw error(error_kind::unknown_vertex, "no such arrow");
    std::vector<arrow> kept;
    for (auto a : arrows_) {
      if (a != arrow{u, v}) kept.push_back(a);
    }
    return Digraph(names_, kept);
  }

 private:
  std::vector<std::string> names_;
  std::vector<arrow> arrows_;
  std::vector<std::vector<vertex_id>> out_;
  std::vector<std::vector<vertex_id>> in_;
  std::vector<bool> adjacent_;
  std::map<std::string, vertex_id, std::less<>> index_;
};

/// A directed walk (p_0, ..., p_n); ordering is lexicographic on indices.
struct Path {
  std::vector<vertex_id> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  vertex_id operator[](std::size_t i) const { return vertices[i]; }

  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;
};

/// Label a path by vertex names: concatenated when every name is a single
/// character (so the grid reads "0125"), space-separated otherwise.
inline std::string path_label(const Digraph& g, const Path& p) {
  bool short_names = std::all_of(g.names().begin(), g.names().end(),
                                 [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i > 0 && !short_names) out += ' ';
    out += g.name(p.vertices[i]);
  }
  return out;
}

enum class pair_kind { thin, thick, multi };

inline const char* to_string(pair_kind k) {
  switch (k) {
    case pair_kind::thin: return "thin";
    case pair_kind::thick: return "thick";
    case pair_kind::multi: return "multi";
  }
  return "?";
}

struct VertexPair {
  vertex_id source = 0;
  vertex_id target = 0;
  std::optional<std::size_t> distance;  // nullopt = unreachable
  std::vector<vertex_id> midpoints;

  bool is_thin() const noexcept { return distance == 2 && midpoints.size() == 1; }
  bool is_thick() const noexcept { return distance == 2 && midpoints.size() == 2; }
  pair_kind kind() const noexcept {
    if (midpoints.size() == 1) return pair_kind::thin;
    if (midpoints.size() == 2) return pair_kind::thick;
    return pair_kind::multi;
  }
};

// ---------------------------------------------------------------------------
// Parsing

/// Edge-list format: one "SRC DST" per line, '#' starts a comment, blank
/// lines ignored, LF or CRLF.
inline Digraph parse_digraph(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, vertex_id, std::less<>> index;
  std::vector<Digraph::arrow> arrows;
  std::map<Digraph::arrow, std::size_t> seen;

  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, static_cast<vertex_id>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream tokens{std::string(line)};
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (words.size() != 2) {
      throw parse_error(error_kind::syntax_error, line_no, "expected \"SRC DST\"");
    }
    if (words[0] == words[1]) {
      throw parse_error(error_kind::loop_arrow, line_no, "loop at " + words[0]);
    }
    vertex_id u = intern(words[0]);
    vertex_id v = intern(words[1]);
    if (auto [it, inserted] = seen.emplace(Digraph::arrow{u, v}, line_no); !inserted) {
      throw parse_error(error_kind::duplicate_arrow, line_no,
                        words[0] + " -> " + words[1] + " repeats line " +
                            std::to_string(it->second));
    }
    arrows.emplace_back(u, v);
    if (end == text.size()) break;
  }
  return Digraph(std::move(names), arrows);
}

// ---------------------------------------------------------------------------
// Distances and paths

/// Directed BFS distance; nullopt when v is unreachable from u.
inline std::optional<std::size_t> distance(const Digraph& g, vertex_id u, vertex_id v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw error(error_kind::unknown_vertex, "vertex index out of range");
  }
  if (u == v) return 0;
  std::vector<std::size_t> dist(g.vertex_count(), SIZE_MAX);
  std::deque<vertex_id> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    vertex_id x = queue.front();
    queue.pop_front();
    for (vertex_id y : g.out(x)) {
      if (dist[y] != SIZE_MAX) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

inline std::optional<std::size_t> distance(const Digraph& g, std::string_view u,
                                           std::string_view v) {
  return distance(g, g.index_of(u), g.index_of(v));
}

/// All n-paths in lexicographic order of their index sequences. DFS over
/// sorted out-lists yields the order directly.
inline std::vector<Path> enumerate_paths(const Digraph& g, std::size_t n) {
  std::vector<Path> result;
  std::vector<vertex_id> stack;
  stack.reserve(n + 1);
  auto extend = [&](auto&& self) -> void {
    if (stack.size() == n + 1) {
      result.push_back(Path{stack});
      return;
    }
    for (vertex_id w : g.out(stack.back())) {
      stack.push_back(w);
      self(self);
      stack.pop_back();
    }
  };
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    stack.assign(1, v);
    extend(extend);
  }
  return result;
}

/// Index of p in a lexicographically sorted path list, or nullopt.
inline std::optional<std::size_t> find_path(const std::vector<Path>& sorted, const Path& p) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
  if (it == sorted.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

/// Length of the longest path, or nullopt when the digraph has a directed
/// cycle (paths of every length then exist).
inline std::optional<std::size_t> longest_path_length(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n);
  for (vertex_id v = 0; v < n; ++v) indegree[v] = g.in(v).size();
  std::deque<vertex_id> ready;
  for (vertex_id v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<std::size_t> longest(n, 0);
  std::size_t visited = 0;
  std::size_t best = 0;
  while (!ready.empty()) {
    vertex_id v = ready.front();
    ready.pop_front();
    ++visited;
    best = std::max(best, longest[v]);
    for (vertex_id w : g.out(v)) {
      longest[w] = std::max(longest[w], longest[v] + 1);
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (visited != n) return std::nullopt;
  return best;
}

// ---------------------------------------------------------------------------
// Distance-2 pairs

/// Sorted v with x -> v -> y.
inline std::vector<vertex_id> midpoints(const Digraph& g, vertex_id x, vertex_id y) {
  std::vector<vertex_id> mids;
  std::set_intersection(g.out(x).begin(), g.out(x).end(), g.in(y).begin(), g.in(y).end(),
                        std::back_inserter(mids));
  return mids;
}

/// d(x, y) == 2 given that some 2-path x -> v -> y exists.
inline bool at_distance_two(const Digraph& g, vertex_id x, vertex_id y) {
  return x != y && !g.has_arrow(x, y);
}

/// Every pair at distance exactly 2 with its midpoints, sorted by (source, target).
inline std::vector<VertexPair> classify_pairs(const Digraph& g) {
  std::vector<VertexPair> pairs;
  for (vertex_id x = 0; x < g.vertex_count(); ++x) {
    std::vector<vertex_id> reach;
    for (vertex_id v : g.out(x)) {
      for (vertex_id y : g.out(v)) {
        if (at_distance_two(g, x, y)) reach.push_back(y);
      }
    }
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    for (vertex_id y : reach) pairs.push_back(VertexPair{x, y, 2, midpoints(g, x, y)});
  }
  return pairs;
}

struct MultisquareCheck {
  bool free = true;
  std::optional<VertexPair> witness;

  explicit operator bool() const noexcept { return free; }
};

inline MultisquareCheck is_multisquare_free(const Digraph& g) {
  for (auto& p : classify_pairs(g)) {
    if (p.midpoints.size() >= 3) return {false, p};
  }
  return {true, std::nullopt};
}

/// Throws MultisquarePresent with the first offending pair.
inline void require_multisquare_free(const Digraph& g) {
  if (auto check = is_multisquare_free(g); !check) {
    const auto& w = *check.witness;
    throw multisquare_error(w.source, w.target,
                            g.name(w.source) + " -> " + g.name(w.target) + " has " +
                                std::to_string(w.midpoints.size()) + " midpoints");
  }
}

/// (p_{i-1}, p_{i+1}) thin for some interior i.
inline bool is_thin_path(const Digraph& g, const Path& p) {
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    vertex_id x = p[i - 1], y = p[i + 1];
    if (at_distance_two(g, x, y) && midpoints(g, x, y).size() == 1) return true;
  }
  return false;
}

}  // namespace pathhom
