#include <random>

#include "deodhar/fibers.hpp"
#include "deodhar/networks.hpp"
#include "deodhar/wilson.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace deodhar;

namespace {

SparsePolynomial var(int p, int q) { return SparsePolynomial::variable({p, q}); }

std::string signs_string(const std::vector<int>& row) {
  std::string s;
  for (int x : row) s += x > 0 ? '+' : '-';
  return s;
}

// The reference sign pattern for a row, listed over the sorted support.
SymbolicMatrix signed_pattern(int n, const std::vector<Subset>& supports, const std::vector<std::string>& signs) {
  SymbolicMatrix m = pattern_matrix(n, supports);
  for (std::size_t r = 0; r < supports.size(); ++r)
    for (std::size_t t = 0; t < supports[r].size(); ++t)
      m.entries[r][supports[r][t] - 1].sign = signs[r][t] == '+' ? 1 : -1;
  return m;
}

// Some minor of the signed pattern is a single negative monomial.
bool forced_negative_minor(const SymbolicMatrix& m) {
  for (const Subset& j : k_subsets(m.m, m.k)) {
    const SparsePolynomial f = symbolic_minor(m, j);
    if (f.terms().size() == 1 && f.terms().begin()->second < 0) return true;
  }
  return false;
}

const std::vector<WilsonLoopDiagram>& small_admissible() {
  static const std::vector<WilsonLoopDiagram> all = [] {
    std::vector<WilsonLoopDiagram> out;
    for (int k = 1; k <= 3; ++k)
      for (int n = k + 4; n <= 8; ++n)
        for (const WilsonLoopDiagram& w : fixtures::admissible_wlds(k, n)) out.push_back(w);
    return out;
  }();
  return all;
}

}  // namespace

TEST_CASE("supports") {
  CHECK(propagator_support(6, {1, 5}) == Subset{1, 2, 5, 6});
  CHECK(propagator_support(6, {4, 6}) == Subset{1, 4, 5, 6});
  const WilsonLoopDiagram w = fixtures::wld26();
  CHECK(support(w, {}).empty());
  CHECK(support(w, {1, 2}) == Subset{1, 2, 3, 4, 5, 6});
  CHECK(wrap(0, 6) == 6);
  CHECK(wrap(7, 6) == 1);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(fixtures::wld26()).admissible);
  CHECK_FALSE(is_admissible({6, {{1, 2}}}).admissible);
  CHECK_FALSE(is_admissible({6, {{1, 1}}}).admissible);
  const AdmissibilityReport crossing = is_admissible({7, {{1, 3}, {2, 4}}});
  CHECK_FALSE(crossing.admissible);
  CHECK_FALSE(crossing.violations.empty());
  CHECK_FALSE(is_admissible({5, {{1, 3}, {3, 5}}}).admissible);
  CHECK(crosses(7, {1, 3}, {2, 4}));
  CHECK_FALSE(crosses(6, {1, 5}, {2, 4}));
  CHECK_FALSE(crosses(6, {1, 5}, {1, 3}));
}

TEST_CASE("C(W) and C_*(W) patterns") {
  const WilsonLoopDiagram w = fixtures::wld26();
  const SymbolicMatrix cs = c_star_matrix(w);
  CHECK(cs.m == 7);
  CHECK(cs.row_supports() == std::vector<Subset>{{1, 2, 5, 6, 7}, {2, 3, 4, 5, 7}});
  CHECK(c_matrix(w).row_supports() == std::vector<Subset>{{1, 2, 5, 6}, {2, 3, 4, 5}});
  CHECK(c_matrix({6, {}}).entries.empty());
  const WilsonLoopDiagram w6{6, {{5, 3}, {5, 1}}};
  CHECK(c_star_matrix(w6).row_supports() == std::vector<Subset>{{3, 4, 5, 6, 7}, {1, 2, 5, 6, 7}});
}

TEST_CASE("symbolic minors") {
  const SymbolicMatrix c = c_matrix(fixtures::wld26());
  CHECK(symbolic_minor(c, {1, 3}) == var(1, 1) * var(2, 3));
  CHECK(symbolic_minor(c, {1, 6}).is_zero());
  CHECK(symbolic_minor(c, {2, 5}) == var(1, 2) * var(2, 5) - var(1, 5) * var(2, 2));
  CHECK_THROWS_AS(symbolic_minor(c, {3, 3}), ValidationError);
  CHECK_THROWS_AS(symbolic_minor(c, {1, 2, 3}), ValidationError);
  const SparsePolynomial f = var(1, 1) * var(2, 3) - var(1, 3);
  CHECK(f.evaluate({{{1, 1}, 2}, {{2, 3}, 3}, {{1, 3}, 1}}) == 5);
  CHECK((f - f).is_zero());
}

TEST_CASE("matroid bases") {
  const auto bases = matroid_bases(fixtures::wld26());
  CHECK(std::count(bases.begin(), bases.end(), Subset{1, 3}) == 1);
  CHECK(std::count(bases.begin(), bases.end(), Subset{1, 6}) == 0);
  CHECK(matroid_bases({6, {{1, 3}}}) == std::vector<Subset>{{1}, {2}, {3}, {4}});
}

TEST_CASE("bases: symbolic determinant against matching") {
  for (const WilsonLoopDiagram& w : small_admissible()) {
    std::vector<Subset> supports;
    for (const Propagator& p : w.propagators) supports.push_back(propagator_support(w.n, p));
    const auto bases = matroid_bases(w);
    CHECK(bases == transversal_bases(w.n, supports));
    // Positroid: the necklace of the bases reconstructs them.
    CHECK(positroid_bases(necklace_from_bases(w.n, w.k(), bases)) == bases);
  }
}

TEST_CASE("sigma cell") {
  const SigmaCell cell = sigma_cell(fixtures::wld26());
  CHECK(cell.le == fixtures::dw());
  CHECK(cell.dimension == 6);
  CHECK(sigma_cell({5, {{1, 3}}}).dimension == 3);
  CHECK_THROWS_AS(sigma_cell({6, {{1, 2}}}), ValidationError);
  CHECK(d_star_diagram(fixtures::wld26()) == fixtures::dw_star());
  CHECK(positivity_violation(fixtures::wld26()));
  const WilsonLoopDiagram calm{7, {{1, 3}, {1, 4}}};
  CHECK_FALSE(positivity_violation(calm));
  CHECK(d_star_diagram(calm).count(Fill::Black) == 0);
  CHECK_FALSE(positivity_violation({6, {{2, 5}}}));
}

TEST_CASE("the drawn D(W) does not match C(W)") {
  const WilsonLoopDiagram w = fixtures::wld26();
  const auto bases = matroid_bases(w);
  CHECK(flow_subsets(build_network(fixtures::dw())) == bases);
  // The drawn diagram loses {4,5}, but that minor of C(W) is -c_{1,5}c_{2,4}.
  const auto drawn = flow_subsets(build_network(fixtures::dw_drawn()));
  CHECK(std::count(drawn.begin(), drawn.end(), Subset{4, 5}) == 0);
  CHECK(symbolic_minor(c_matrix(w), {4, 5}) == SparsePolynomial::constant(-1) * var(1, 5) * var(2, 4));
  // Both agree that column 6 reads (+, o) and the new column (b, +).
  for (const GoDiagram& d : {fixtures::dw(), fixtures::dw_drawn()}) {
    CHECK(d.at(0, 0) == Fill::Plus);
    CHECK(d.at(1, 0) == Fill::White);
    CHECK(d.dimension() == 6);
  }
  CHECK(top_fiber_component(fixtures::dw_drawn()).extended == fixtures::dw_star_drawn());
}

TEST_CASE("dimensions and positivity on all small admissible diagrams") {
  for (const WilsonLoopDiagram& w : small_admissible()) {
    const SigmaCell cell = sigma_cell(w);
    CHECK(cell.dimension == 3 * w.k());
    CHECK(cell.le.count(Fill::Plus) == 3 * w.k());
    const GoDiagram star = d_star_diagram(w);
    CHECK(star.dimension() == 4 * w.k());
    // Column scan oracle for the violation.
    bool scan = false;
    const FerrersShape& s = cell.le.shape();
    for (int c = 0; c < s.num_columns(); ++c)
      for (int r = 0; r < s.column_height(c); ++r)
        for (int rr = r + 1; rr < s.column_height(c); ++rr)
          scan = scan || (cell.le.at(r, c) == Fill::Plus && cell.le.at(rr, c) == Fill::White);
    CHECK(positivity_violation(w) == scan);
    CHECK(positivity_violation(w) == (star.count(Fill::Black) > 0));
    if (w.k() == 1) CHECK_FALSE(positivity_violation(w));
  }
}

TEST_CASE("C_* places no constraint on the new column") {
  const WilsonLoopDiagram w = fixtures::wld26();
  const Realization base = positive_realization(w, 3);
  const PluckerVector bp = minors_of_matrix(base.c);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    Matrix lifted = base.c;
    for (auto& row : lifted) row.push_back(Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 5)));
    const PluckerVector p = minors_of_matrix(lifted);
    CHECK(p.restrict_to(6).coords == bp.coords);
    // The lift lies over Sigma(W), so it lands in some fiber component.
    const FiberComponent c = classify_fiber_point(sigma_cell(w).le, p);
    CHECK(delete_leftmost_column(c.extended) == fixtures::dw());
  }
  // Every subset through column 7 has a nonzero symbolic minor in C_*.
  const SymbolicMatrix cs = c_star_matrix(w);
  for (const Subset& j : k_subsets(7, 2))
    if (j.back() == 7) CHECK_FALSE(symbolic_minor(cs, j).is_zero());
}

TEST_CASE("positive realization on the rotation fixture") {
  const Rotation rot = rotation_sequence(fixtures::wld26(), Family::Parallel);
  REQUIRE(rot.diagrams.size() == 7);
  std::vector<Realization> rs;
  for (const WilsonLoopDiagram& w : rot.diagrams) rs.push_back(positive_realization(w, 1));
  CHECK(signs_string(rs[0].signs[0]) == "++--");
  CHECK(signs_string(rs[0].signs[1]) == "++++");
  CHECK(signs_string(rs[1].signs[0]) == "+---");
  CHECK(signs_string(rs[1].signs[1]) == "++++");
  CHECK(signs_string(rs[2].signs[1]) == "++++");
  CHECK(signs_string(rs[4].signs[0]) == "----");
  CHECK(signs_string(rs[6].signs[0]) == "----");
  for (std::size_t l = 0; l < rs.size(); ++l) {
    const PluckerVector p = minors_of_matrix(rs[l].c);
    for (const auto& [j, v] : p.coords) CHECK(v >= 0);
    const auto bases = matroid_bases(rot.diagrams[l]);
    CHECK(p.support() == bases);
    CHECK(satisfies(necklace_description(sigma_cell(rot.diagrams[l]).necklace, NecklaceFlavor::Cell), p));
  }
}

TEST_CASE("the listed sign patterns for W4 to W7 are not nonnegative") {
  // Rows over sorted supports, as printed in the rotation table.
  const std::vector<Subset> w4{{1, 4, 5, 6}, {1, 2, 3, 6}};
  CHECK(forced_negative_minor(signed_pattern(6, w4, {"+---", "++++"})));
  const SparsePolynomial d46 = symbolic_minor(signed_pattern(6, w4, {"+---", "++++"}), {4, 6});
  CHECK(d46 == SparsePolynomial::constant(-1) * var(1, 4) * var(2, 6));
  const std::vector<Subset> w5{{3, 4, 5, 6}, {1, 2, 3, 6}};
  CHECK(forced_negative_minor(signed_pattern(6, w5, {"----", "++++"})));
  const std::vector<Subset> w6{{3, 4, 5, 6}, {1, 2, 5, 6}};
  CHECK(forced_negative_minor(signed_pattern(6, w6, {"----", "++++"})));
  const std::vector<Subset> w7{{2, 3, 4, 5}, {1, 2, 5, 6}};
  CHECK(forced_negative_minor(signed_pattern(6, w7, {"----", "++++"})));
  // The first three rows of the table are consistent.
  CHECK_FALSE(forced_negative_minor(signed_pattern(6, {{1, 2, 5, 6}, {2, 3, 4, 5}}, {"++--", "++++"})));
}

TEST_CASE("positive realization of every small admissible diagram") {
  std::uint64_t seed = 1;
  for (const WilsonLoopDiagram& w : small_admissible()) {
    if (w.n > 7) continue;
    const Realization r = positive_realization(w, seed++);
    const PluckerVector p = minors_of_matrix(r.c);
    for (const auto& [j, v] : p.coords) CHECK(v >= 0);
    CHECK(p.support() == matroid_bases(w));
    for (int row = 0; row < w.k(); ++row) {
      Subset nz;
      for (int q = 1; q <= w.n; ++q)
        if (r.c[row][q - 1] != 0) nz.push_back(q);
      CHECK(nz == propagator_support(w.n, w.row(row + 1)));
    }
    if (w.k() == 1) CHECK(signs_string(r.signs[0]) == "++++");
  }
}

TEST_CASE("boundary moves") {
  const WilsonLoopDiagram w{6, {{1, 5}, {1, 3}}};
  const BoundaryMove drop = boundary_move(w, 1, 2);
  REQUIRE(drop.accepted);
  CHECK(drop.kind == BoundaryKind::Drop);
  CHECK(drop.pattern.supports[0] == Subset{1, 5, 6});
  CHECK(boundary_minor(w, 1, 2) == var(1, 2));

  const BoundaryMove meet = boundary_move(w, 1, 1);
  REQUIRE(meet.accepted);
  CHECK(meet.kind == BoundaryKind::Meet);
  CHECK(meet.q == 2);
  CHECK(boundary_minor(w, 1, 1) == var(1, 1) * var(2, 2) - var(2, 1) * var(1, 2));

  const BoundaryMove rejected = boundary_move({6, {{1, 4}, {1, 3}}}, 1, 5);
  CHECK_FALSE(rejected.accepted);
  CHECK_FALSE(rejected.reason.empty());
  CHECK_THROWS_AS(boundary_minor({6, {{1, 4}, {1, 3}}}, 1, 5), ValidationError);
  CHECK_THROWS_AS(boundary_move(w, 1, 3), ValidationError);
}

TEST_CASE("boundary patterns drop exactly the vanishing minors") {
  const WilsonLoopDiagram w{6, {{1, 5}, {1, 3}}};
  const BoundaryMove drop = boundary_move(w, 1, 2);
  const auto before = matroid_bases(w);
  const auto after = boundary_bases(drop.pattern);
  for (const Subset& j : after) CHECK(std::count(before.begin(), before.end(), j) == 1);
  const SparsePolynomial f = boundary_minor(w, 1, 2);
  for (const Subset& j : before) {
    // A basis survives iff its minor does not contain the vanishing entry in every term.
    const SparsePolynomial m = symbolic_minor(c_matrix(w), j);
    bool all_terms = true;
    for (const auto& [mono, coef] : m.terms())
      all_terms = all_terms && std::count(mono.begin(), mono.end(), std::make_pair(Variable{1, 2}, 1)) == 1;
    CHECK((std::count(after.begin(), after.end(), j) == 0) == all_terms);
  }
  (void)f;
}

TEST_CASE("shares_boundary") {
  const Rotation rot = rotation_sequence(fixtures::wld26(), Family::Parallel);
  CHECK(shares_boundary(rot.diagrams[0], rot.diagrams[1]).has_value());
  CHECK_FALSE(shares_boundary(fixtures::wld26(), {6, {{3, 1}, {4, 6}}}).has_value());
  CHECK(shares_boundary({6, {{1, 4}}}, {6, {{1, 3}}}).has_value());
  CHECK(shares_boundary({6, {{1, 4}}}, {6, {{6, 4}}}).has_value());
}

TEST_CASE("clockwise moves") {
  const WilsonLoopDiagram w = fixtures::wld26();
  const MoveResult a = clockwise_move(w, 1, End::I);
  REQUIRE(a.accepted);
  CHECK(a.result.row(1) == Propagator{6, 4});
  const MoveResult b = clockwise_move(a.result, 2, End::I);
  REQUIRE(b.accepted);
  CHECK(b.result.row(2) == Propagator{1, 3});
  const MoveResult bad = clockwise_move({7, {{1, 3}, {3, 5}}}, 2, End::I);
  CHECK_FALSE(bad.accepted);
  CHECK_FALSE(bad.reason.empty());
}

TEST_CASE("families") {
  CHECK(parallel_wld(2, 6) == WilsonLoopDiagram{6, {{2, 4}, {1, 5}}});
  const WilsonLoopDiagram s = series_wld(2, 6);
  CHECK(s.row(1).j <= s.row(2).i);
  CHECK(is_admissible(s).admissible);
  CHECK_THROWS_AS(series_wld(2, 4), ValidationError);
  CHECK_THROWS_AS(parallel_wld(3, 6), ValidationError);
  CHECK(parse_family("series") == Family::Series);
  CHECK(family_name(Family::Parallel) == "parallel");
  CHECK_THROWS_AS(parse_family("loop"), ValidationError);
  for (int k = 1; k <= 4; ++k)
    for (int n = k + 4; n <= 12; ++n) {
      CHECK(is_admissible(parallel_wld(k, n)).admissible);
      if (n > 2 * k) CHECK(is_admissible(series_wld(k, n)).admissible);
    }
}

TEST_CASE("rotation of the Gr(2,6) fixture") {
  const Rotation rot = rotation_sequence(fixtures::wld26(), Family::Parallel);
  const std::vector<std::vector<Subset>> table{
      {{1, 2, 5, 6}, {2, 3, 4, 5}}, {{1, 4, 5, 6}, {2, 3, 4, 5}}, {{1, 4, 5, 6}, {1, 2, 3, 4}},
      {{1, 4, 5, 6}, {1, 2, 3, 6}}, {{3, 4, 5, 6}, {1, 2, 3, 6}}, {{3, 4, 5, 6}, {1, 2, 5, 6}},
      {{2, 3, 4, 5}, {1, 2, 5, 6}}};
  REQUIRE(rot.diagrams.size() == table.size());
  for (std::size_t l = 0; l < table.size(); ++l) CHECK(c_matrix(rot.diagrams[l]).row_supports() == table[l]);
  CHECK(rot.sigma.one_line() == "21");
  CHECK_FALSE(rot.used_fallback);
  CHECK(chart_index(rot.diagrams[0], rot.diagrams[1]) == Subset{1, 2});
  CHECK(chart_index(rot.diagrams[5], rot.diagrams[6]) == Subset{1, 3});
  CHECK(chart_index(rot.diagrams[0], rot.diagrams[0]) == matroid_bases(rot.diagrams[0]).front());

  const Rotation one = rotation_sequence(series_wld(1, 5), Family::Series);
  CHECK(one.sigma == Permutation::identity(1));
  CHECK(one.diagrams.size() > 2);
}

TEST_CASE("rotations over both families") {
  for (int k = 1; k <= 3; ++k)
    for (int n = k + 4; n <= 9; ++n)
      for (Family f : {Family::Series, Family::Parallel}) {
        if (f == Family::Series && n <= 2 * k) continue;
        const WilsonLoopDiagram w = f == Family::Series ? series_wld(k, n) : parallel_wld(k, n);
        if (!is_admissible(w).admissible) continue;
        const Rotation rot = rotation_sequence(w, f);
        CHECK(rot.sigma == expected_rotation_sigma(k, f));
        const int expected_sign = f == Family::Series ? ((k - 1) % 2 ? -1 : 1) : ((k / 2) % 2 ? -1 : 1);
        CHECK(rot.sigma.sign() == expected_sign);
        for (std::size_t l = 0; l + 1 < rot.diagrams.size(); ++l) {
          CHECK(is_admissible(rot.diagrams[l + 1]).admissible);
          CHECK(shares_boundary(rot.diagrams[l], rot.diagrams[l + 1]).has_value());
        }
        // Same propagators at the end, rows permuted by sigma.
        const WilsonLoopDiagram& last = rot.diagrams.back();
        for (int r = 1; r <= k; ++r) CHECK(same_propagator(last.row(r), w.row(rot.sigma(r))));
      }
}

TEST_CASE("monodromy") {
  const MonodromyReport fx = monodromy_sign(fixtures::wld26(), Family::Parallel);
  CHECK(fx.total == -1);
  CHECK_FALSE(fx.structural_only);
  CHECK(fx.charts == std::vector<Subset>{{1, 2}, {1, 2}, {1, 2}, {1, 4}, {1, 3}, {1, 3}});
  int product = fx.wrap_sign;
  for (int s : fx.step_signs) product *= s;
  CHECK(product == fx.total);
  CHECK(monodromy_sign(series_wld(3, 7), Family::Series).total == 1);
  CHECK(monodromy_sign(parallel_wld(2, 6), Family::Parallel).total == -1);
  // n = k + 3 is below the admissible range: only sign(sigma) is available.
  const MonodromyReport tight = monodromy_sign({5, {{1, 3}, {3, 5}}}, Family::Series);
  CHECK(tight.structural_only);
  CHECK(tight.total == -1);
}
