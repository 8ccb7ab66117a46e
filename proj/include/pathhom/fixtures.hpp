#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathhom/digraph.hpp"
#include "pathhom/error.hpp"

namespace pathhom {

namespace detail {

inline Digraph from_named(std::vector<std::string> names,
                          const std::vector<std::pair<std::string, std::string>>& arrows) {
  Digraph lookup(names, {});
  std::vector<Digraph::arrow> ids;
  ids.reserve(arrows.size());
  for (auto& [u, v] : arrows) ids.emplace_back(lookup.index_of(u), lookup.index_of(v));
  return Digraph(std::move(names), ids);
}

inline std::string x(int layer, int copy) {
  return "x" + std::to_string(layer) + "^" + std::to_string(((copy % 3) + 3) % 3);
}

inline std::vector<std::string> main_example_names() {
  std::vector<std::string> names{"x0"};
  for (int j = 1; j <= 3; ++j) {
    for (int i = 0; i < 3; ++i) names.push_back(x(j, i));
  }
  names.push_back("x4");
  return names;
}

inline std::vector<std::pair<std::string, std::string>> main_example_arrows(bool chords) {
  std::vector<std::pair<std::string, std::string>> a;
  for (int i = 0; i < 3; ++i) {
    a.emplace_back("x0", x(1, i));
    a.emplace_back(x(3, i), "x4");
    for (int j = 1; j <= 2; ++j) {
      a.emplace_back(x(j, i), x(j + 1, i));
      a.emplace_back(x(j, i), x(j + 1, i + 1));
    }
  }
  if (chords) {
    for (int i = 0; i < 3; ++i) {
      a.emplace_back(x(1, i), x(3, i));
      a.emplace_back(x(1, i), x(3, i + 2));
    }
  }
  return a;
}

// Source s, five middle pairs a_k -> b_k, a_k -> b_{k+1}, sink t.
inline std::vector<std::string> fan_names() {
  std::vector<std::string> names{"s"};
  for (int k = 1; k <= 5; ++k) names.push_back("a" + std::to_string(k));
  for (int k = 1; k <= 5; ++k) names.push_back("b" + std::to_string(k));
  names.push_back("t");
  return names;
}

inline std::vector<std::pair<std::string, std::string>> fan_arrows() {
  std::vector<std::pair<std::string, std::string>> a;
  for (int k = 1; k <= 5; ++k) {
    auto ak = "a" + std::to_string(k);
    auto bk = "b" + std::to_string(k);
    a.emplace_back("s", ak);
    a.emplace_back(ak, bk);
    if (k < 5) a.emplace_back(ak, "b" + std::to_string(k + 1));
    a.emplace_back(bk, "t");
  }
  return a;
}

}  // namespace detail

inline constexpr std::array<std::string_view, 8> fixture_names{
    "grid", "grid_chords", "star6", "star6_chords", "cube", "trapezohedron", "g_prime", "g_main"};

/// The worked examples: the two grids, the two fans, the directed 3-cube, the
/// trapezohedron, and the digraphs G' and G of the main example. G adds
/// the six chords x1^i -> x3^i, x1^i -> x3^{i+2} to G'.
inline Digraph builtin_fixture(std::string_view name) {
  using detail::from_named;
  const std::vector<std::string> digits{"0", "1", "2", "3", "4", "5", "6", "7"};
  if (name == "grid" || name == "grid_chords") {
    std::vector<std::pair<std::string, std::string>> a{
        {"0", "1"}, {"1", "2"}, {"0", "3"}, {"1", "4"}, {"2", "5"}, {"3", "4"}, {"4", "5"}};
    if (name == "grid_chords") {
      a.emplace_back("0", "2");
      a.emplace_back("3", "5");
    }
    return from_named({digits.begin(), digits.begin() + 6}, a);
  }
  if (name == "star6" || name == "star6_chords" || name == "trapezohedron") {
    auto a = detail::fan_arrows();
    if (name == "star6_chords") {
      a.emplace_back("s", "b1");
      a.emplace_back("a5", "t");
    }
    if (name == "trapezohedron") a.emplace_back("a5", "b1");
    return from_named(detail::fan_names(), a);
  }
  if (name == "cube") {
    return from_named(digits, {{"0", "1"}, {"0", "2"}, {"0", "3"}, {"1", "4"},
                               {"1", "5"}, {"2", "4"}, {"2", "6"}, {"3", "5"},
                               {"3", "6"}, {"4", "7"}, {"5", "7"}, {"6", "7"}});
  }
  if (name == "g_prime") {
    return from_named(detail::main_example_names(), detail::main_example_arrows(false));
  }
  if (name == "g_main") {
    return from_named(detail::main_example_names(), detail::main_example_arrows(true));
  }
  throw error(error_kind::unknown_fixture, std::string(name));
}

/// The six arrows that g_main adds to g_prime, as (source, target) names.
inline std::vector<std::pair<std::string, std::string>> main_example_chords() {
  std::vector<std::pair<std::string, std::string>> a;
  for (int i = 0; i < 3; ++i) {
    a.emplace_back(detail::x(1, i), detail::x(3, i));
    a.emplace_back(detail::x(1, i), detail::x(3, i + 2));
  }
  return a;
}

}  // namespace pathhom
