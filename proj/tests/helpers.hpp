// Fixture builders shared by the unit tests and the acceptance binary.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "deodhar/diagrams.hpp"
#include "deodhar/networks.hpp"
#include "deodhar/wilson.hpp"

namespace fixtures {

using namespace deodhar;

// rows given as strings of '+', 'o', 'b', top row first.
inline GoDiagram diagram(int n, Subset steps, const std::vector<std::string>& rows) {
  std::vector<std::vector<Fill>> fills;
  for (const std::string& r : rows) {
    std::vector<Fill> row;
    for (char c : r) row.push_back(fill_from_char(c));
    fills.push_back(row);
  }
  return GoDiagram(FerrersShape(n, std::move(steps)), fills);
}

inline GoDiagram go33() { return diagram(6, {1, 2, 3}, {"+b+", "b+o", "+o+"}); }

inline std::map<Box, Rational> w33() {
  return {{{1, 4}, 1}, {{1, 5}, 1}, {{1, 6}, 2}, {{2, 5}, -1},
          {{2, 6}, 0}, {{3, 4}, 1}, {{3, 6}, 2}};
}

// D(W) for W = ((1,5),(2,4)), n = 6, computed from the bases of C(W).
inline GoDiagram dw() { return diagram(6, {1, 2}, {"++o+", "o+++"}); }
inline GoDiagram dw_star() { return diagram(7, {1, 2}, {"b++o+", "+o+++"}); }
// The same diagrams as drawn in the reference figure: the row-1 stone sits in column 5.
inline GoDiagram dw_drawn() { return diagram(6, {1, 2}, {"+o++", "o+++"}); }
inline GoDiagram dw_star_drawn() { return diagram(7, {1, 2}, {"b+o++", "+o+++"}); }

inline GoDiagram fiber_base() { return diagram(5, {1, 2, 3}, {"b+", "+o", "o+"}); }

// The sample coordinates listed with the network figure.
inline std::map<Subset, Rational> reference_table() {
  return {{{1, 2, 3}, 1},  {{1, 2, 4}, 1},  {{1, 2, 5}, 0},  {{1, 2, 6}, 2},  {{1, 3, 4}, 0},
          {{1, 3, 5}, -1}, {{1, 3, 6}, 0},  {{1, 4, 5}, -1}, {{1, 4, 6}, 0},  {{1, 5, 6}, 2},
          {{2, 3, 4}, 1},  {{2, 3, 5}, 1},  {{2, 3, 6}, 2},  {{2, 4, 5}, 1},  {{2, 4, 6}, 2},
          {{2, 5, 6}, -2}, {{3, 4, 5}, 1},  {{3, 4, 6}, 0},  {{3, 5, 6}, -2}, {{4, 5, 6}, -2}};
}

// Every shape inside a k x (n-k) box.
inline std::vector<FerrersShape> shapes_within(int k, int cols) {
  std::vector<FerrersShape> out;
  for (const Subset& s : k_subsets(k + cols, k)) out.emplace_back(k + cols, s);
  return out;
}

inline WilsonLoopDiagram wld26() { return {6, {{1, 5}, {2, 4}}}; }

// Admissible diagrams with k distinct propagators i < j, one per row in
// lexicographic order.
inline std::vector<WilsonLoopDiagram> admissible_wlds(int k, int n) {
  std::vector<Propagator> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  std::vector<WilsonLoopDiagram> out;
  const int m = static_cast<int>(pairs.size());
  for (const Subset& pick : k_subsets(m, k)) {
    WilsonLoopDiagram w{n, {}};
    for (int x : pick) w.propagators.push_back(pairs[x - 1]);
    if (is_admissible(w).admissible) out.push_back(w);
  }
  return out;
}

}  // namespace fixtures
