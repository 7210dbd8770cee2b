#include <algorithm>

#include "deodhar/fibers.hpp"
#include "deodhar/networks.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace deodhar;

namespace {

std::set<Subset> zero_pattern(const PluckerVector& p) {
  const auto z = p.zeros();
  return {z.begin(), z.end()};
}

// Affine dimension of the grid points g in {-2..2}^2 for which every minor of
// the lifted matrix [M | g] has the sign of the base's nonzero minors.
int nonneg_fiber_dimension(const Matrix& base) {
  Matrix pts;
  for (int g1 = -2; g1 <= 2; ++g1)
    for (int g2 = -2; g2 <= 2; ++g2) {
      Matrix lift = base;
      lift[0].push_back(g1);
      lift[1].push_back(g2);
      bool ok = true;
      for (const auto& [j, v] : minors_of_matrix(lift).coords) ok = ok && v >= 0;
      if (ok) pts.push_back({g1, g2});
    }
  if (pts.empty()) return -1;
  Matrix diffs;
  for (const auto& p : pts) diffs.push_back({p[0] - pts[0][0], p[1] - pts[0][1]});
  return rank(diffs);
}

CellDescription lift(const CellDescription& c) {
  CellDescription out = c;
  out.m = c.m + 1;
  return out;
}

}  // namespace

TEST_CASE("extend and delete columns") {
  const GoDiagram base = fixtures::fiber_base();
  const GoDiagram ext = extend_diagram(base, {Fill::White, Fill::Plus, Fill::Plus});
  CHECK(ext.shape().n() == 6);
  CHECK(ext.shape().column_labels().front() == 6);
  CHECK(delete_leftmost_column(ext) == base);
  CHECK_THROWS_AS(extend_diagram(base, {Fill::Plus}), ValidationError);
  CHECK_THROWS_AS(delete_leftmost_column(GoDiagram::filled(FerrersShape(4, {1, 4}), Fill::Plus)), ValidationError);
}

TEST_CASE("fiber of the three-row example") {
  const GoDiagram base = fixtures::fiber_base();
  const auto comps = fiber_components(base);
  CHECK(comps.size() == 6);
  const BoundaryPoset p = fiber_poset(base);
  CHECK(p.nodes.size() == 6);
  CHECK(p.covers.size() == 7);
  CHECK(p.rank_profile() == std::vector<int>{1, 2, 2, 1});
  CHECK(top_fiber_component(base).extended == p.nodes[std::max_element(p.nodes.begin(), p.nodes.end(), [](const GoDiagram& a, const GoDiagram& b) { return a.dimension() < b.dimension(); }) - p.nodes.begin()]);
}

TEST_CASE("small fibers") {
  const GoDiagram point = GoDiagram::filled(FerrersShape(1, {1}), Fill::Plus);
  CHECK(fiber_components(point).size() == 2);
  const BoundaryPoset chain = fiber_poset(point);
  CHECK(chain.covers.size() == 1);
  CHECK(chain.rank_profile() == std::vector<int>{1, 1});

  const GoDiagram rect = GoDiagram::filled(FerrersShape(4, {1, 2}), Fill::Plus);
  const GoDiagram top = top_fiber_component(rect).extended;
  CHECK(top.count(Fill::Plus) == 6);
  CHECK(top_fiber_component(fixtures::dw()).extended == fixtures::dw_star());
}

TEST_CASE("fiber dimension invariants") {
  for (const FerrersShape& s : fixtures::shapes_within(3, 3))
    for (const GoDiagram& d : all_go_diagrams(s)) {
      const auto comps = fiber_components(d);
      const int k = s.k();
      int top = 0;
      for (const FiberComponent& c : comps) {
        CHECK(validate_filling(c.extended).valid);
        CHECK(delete_leftmost_column(c.extended) == d);
        const auto col = c.new_column();
        const bool no_white = std::count(col.begin(), col.end(), Fill::White) == 0;
        CHECK(c.extended.dimension() <= d.dimension() + k);
        CHECK((c.extended.dimension() == d.dimension() + k) == no_white);
        top += no_white;
        if (no_white) CHECK(c.extended == top_fiber_component(d).extended);
      }
      CHECK(top == 1);
      // fiber_poset throws if the cover rule leaves the fiber.
      const BoundaryPoset p = fiber_poset(d);
      for (auto [a, b] : p.covers) CHECK(p.nodes[a].dimension() == p.nodes[b].dimension() + 1);
    }
}

TEST_CASE("covers shrink the sampled support") {
  for (const GoDiagram& base : {fixtures::fiber_base(), fixtures::dw(),
                                GoDiagram::filled(FerrersShape(4, {1, 2}), Fill::Plus)}) {
    const BoundaryPoset p = fiber_poset(base);
    std::vector<std::set<Subset>> zeros;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) zeros.push_back(zero_pattern(sample_point(p.nodes[i], 20 + i)));
    for (auto [a, b] : p.covers)
      CHECK(std::includes(zeros[b].begin(), zeros[b].end(), zeros[a].begin(), zeros[a].end()));
  }
}

TEST_CASE("2x2 fiber poset against brute force") {
  const GoDiagram rect = GoDiagram::filled(FerrersShape(4, {1, 2}), Fill::Plus);
  const BoundaryPoset p = fiber_poset(rect);
  std::vector<std::set<Subset>> zeros;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) zeros.push_back(zero_pattern(sample_point(p.nodes[i], 60 + i)));
  std::set<std::pair<int, int>> brute;
  for (std::size_t a = 0; a < p.nodes.size(); ++a)
    for (std::size_t b = 0; b < p.nodes.size(); ++b)
      if (a != b && p.nodes[a].dimension() == p.nodes[b].dimension() + 1 &&
          std::includes(zeros[b].begin(), zeros[b].end(), zeros[a].begin(), zeros[a].end()))
        brute.emplace(static_cast<int>(a), static_cast<int>(b));
  CHECK(std::set<std::pair<int, int>>(p.covers.begin(), p.covers.end()) == brute);
}

TEST_CASE("classify_fiber_point") {
  std::uint64_t seed = 500;
  for (const GoDiagram& base : {fixtures::fiber_base(), fixtures::dw(), fixtures::go33()})
    for (const FiberComponent& c : fiber_components(base))
      CHECK(classify_fiber_point(base, sample_point(c.extended, seed++)).extended == c.extended);

  // A zero last column: every unforced new box is white.
  const GoDiagram base = fixtures::fiber_base();
  Matrix m = realize_matrix(weigh(build_network(base), random_weights(base, 3)));
  for (auto& row : m) row.push_back(0);
  const auto col = classify_fiber_point(base, minors_of_matrix(m)).new_column();
  for (int r = 0; r < 3; ++r) CHECK(col[r] != Fill::Plus);

  CHECK_THROWS_AS(classify_fiber_point(base, sample_point(fixtures::dw(), 1)), ValidationError);
  // The projection must lie in the base component.
  CHECK_THROWS_AS(classify_fiber_point(base, sample_point(extend_diagram(GoDiagram::filled(FerrersShape(5, {1, 2, 3}), Fill::Plus), {Fill::Plus, Fill::Plus, Fill::Plus}), 2)), ValidationError);
}

TEST_CASE("nonnegative fibers") {
  const GoDiagram rect = GoDiagram::filled(FerrersShape(5, {1, 2}), Fill::Plus);
  const BoundaryPoset full = nonneg_fiber_components(rect);
  CHECK(full.nodes.size() == 4);
  CHECK(is_boolean_lattice(full));
  CHECK(le_free_rows(rect).size() == 2);

  // D_*(W) has a black stone, so the top Le-component falls one short of
  // dim + k: a Plus in the lower new box would put a + left of the white (2,6).
  const BoundaryPoset dw = nonneg_fiber_components(fixtures::dw());
  CHECK(is_boolean_lattice(dw));
  int top = 0;
  for (const GoDiagram& d : dw.nodes) {
    CHECK(d != fixtures::dw_star());
    CHECK(d.at(1, 0) == Fill::White);
    top = std::max(top, d.dimension());
  }
  CHECK(top == fixtures::dw().dimension() + 1);
  CHECK(dw.nodes.size() == 2);
  CHECK_THROWS_AS(nonneg_fiber_components(fixtures::go33()), ValidationError);

  for (const FerrersShape& s : fixtures::shapes_within(2, 3))
    for (const GoDiagram& d : all_le_diagrams(s)) {
      const BoundaryPoset p = nonneg_fiber_components(d);
      CHECK(is_boolean_lattice(p));
      CHECK(p.nodes.size() == (1UL << le_free_rows(d).size()));
    }
}

TEST_CASE("is_boolean_lattice rejects non-lattices") {
  BoundaryPoset chain = fiber_poset(GoDiagram::filled(FerrersShape(1, {1}), Fill::Plus));
  CHECK(is_boolean_lattice(chain));
  BoundaryPoset three;
  three.nodes = {fixtures::dw(), fixtures::dw(), fixtures::dw()};
  three.covers = {{0, 1}, {1, 2}};
  CHECK_FALSE(is_boolean_lattice(three));
  CHECK_FALSE(is_boolean_lattice(BoundaryPoset{}));
}

TEST_CASE("projection commutes with closure") {
  for (const FerrersShape& s : fixtures::shapes_within(2, 3))
    for (const GoDiagram& d : all_le_diagrams(s)) {
      const CellDescription cell = necklace_description(le_to_necklace(d), NecklaceFlavor::Cell);
      CHECK(closure_description(lift(cell)) == lift(closure_description(cell)));
      const CellDescription closed = closure_description(cell);
      // Boundary points of each nonnegative fiber cell project into the closed base cell.
      for (const GoDiagram& up : nonneg_fiber_components(d).nodes) {
        const CellDescription up_closed =
            closure_description(necklace_description(le_to_necklace(up), NecklaceFlavor::Cell));
        for (const GoDiagram& e : all_le_diagrams(up.shape())) {
          const PluckerVector p = sample_point(e, 13, true);
          if (!satisfies(up_closed, p)) continue;
          const PluckerVector q = p.restrict_to(s.n());
          if (q.is_zero()) continue;
          CHECK(satisfies(closed, q));
        }
      }
    }
}

TEST_CASE("nonnegative fibers are not equidimensional") {
  CHECK(nonneg_fiber_dimension({{1, 0, -1}, {0, 1, 0}}) == 1);
  CHECK(nonneg_fiber_dimension({{1, 1, 0}, {0, 0, 1}}) == 2);
}

TEST_CASE("project_point") {
  CHECK(project_point({{1, 0, 5}, {0, 1, 7}}) == Matrix{{1, 0}, {0, 1}});
  CHECK(project_point({{1, 0, -1, 3}, {0, 1, 0, -2}}) == Matrix{{1, 0, -1}, {0, 1, 0}});
  CHECK_THROWS_AS(project_point({{1, 0, 0}, {0, 0, 1}}), ComputationError);
  CHECK_THROWS_AS(project_point({{1, 2, 3}, {2, 4, 6}}), ValidationError);
}
