#include "deodhar/fibers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace deodhar {

namespace {

// Product of the stones read before box b in the canonical order.
Permutation stones_before(const GoDiagram& d, const Box& b) {
  const FerrersShape& s = d.shape();
  Permutation u = Permutation::identity(s.n());
  for (const Box& x : canonical_reading_order(s)) {
    if (x == b) break;
    if (d.at(x) != Fill::Plus) u = u.times_generator(box_transposition(s, x));
  }
  return u;
}

bool forced_black(const GoDiagram& d, int r) {
  const Box b = d.shape().box_at(r, 0);
  const Permutation u = stones_before(d, b);
  return u.times_generator(box_transposition(d.shape(), b)).length() < u.length();
}

unsigned long counter_value(const FiberComponent& c) {
  unsigned long value = 0;
  const std::vector<Fill> col = c.new_column();
  for (std::size_t r = 0; r < col.size(); ++r)
    if (col[r] == Fill::Plus) value |= 1UL << (col.size() - 1 - r);
  return value;
}

}  // namespace

FerrersShape extend_shape(const FerrersShape& s) { return FerrersShape(s.n() + 1, s.vertical_steps()); }

GoDiagram extend_diagram(const GoDiagram& base, const std::vector<Fill>& column) {
  const FerrersShape ext = extend_shape(base.shape());
  if (static_cast<int>(column.size()) != ext.k())
    throw ValidationError("new column needs one entry per row");
  std::vector<std::vector<Fill>> rows;
  for (int r = 0; r < ext.k(); ++r) {
    std::vector<Fill> row{column[r]};
    row.insert(row.end(), base.rows()[r].begin(), base.rows()[r].end());
    rows.push_back(std::move(row));
  }
  return GoDiagram(ext, rows);
}

GoDiagram delete_leftmost_column(const GoDiagram& extended) {
  const FerrersShape& s = extended.shape();
  if (s.num_columns() == 0 || s.column_labels()[0] != s.n() || s.column_height(0) != s.k())
    throw ValidationError("diagram has no full leftmost column labelled n");
  std::vector<std::vector<Fill>> rows;
  for (const auto& row : extended.rows()) rows.emplace_back(row.begin() + 1, row.end());
  return GoDiagram(FerrersShape(s.n() - 1, s.vertical_steps()), rows);
}

std::vector<Fill> FiberComponent::new_column() const {
  std::vector<Fill> col;
  for (int r = 0; r < extended.shape().k(); ++r) col.push_back(extended.at(r, 0));
  return col;
}

std::vector<FiberComponent> fiber_components(const GoDiagram& d) {
  if (!validate_filling(d).valid) throw ValidationError("base is not a Go-diagram");
  const int k = d.shape().k();
  std::vector<FiberComponent> out;
  GoDiagram ext = extend_diagram(d, std::vector<Fill>(k, Fill::White));
  std::function<void(int)> fill = [&](int r) {
    if (r < 0) {
      out.push_back({d, ext});
      return;
    }
    if (forced_black(ext, r)) {
      ext.set(r, 0, Fill::Black);
      fill(r - 1);
      return;
    }
    for (Fill f : {Fill::White, Fill::Plus}) {
      ext.set(r, 0, f);
      fill(r - 1);
    }
    ext.set(r, 0, Fill::White);
  };
  fill(k - 1);
  std::stable_sort(out.begin(), out.end(), [](const FiberComponent& a, const FiberComponent& b) {
    return counter_value(a) < counter_value(b);
  });
  return out;
}

FiberComponent top_fiber_component(const GoDiagram& d) {
  if (!validate_filling(d).valid) throw ValidationError("base is not a Go-diagram");
  const int k = d.shape().k();
  GoDiagram ext = extend_diagram(d, std::vector<Fill>(k, Fill::Plus));
  for (int r = k - 1; r >= 0; --r)
    if (forced_black(ext, r)) ext.set(r, 0, Fill::Black);
  return {d, ext};
}

FiberComponent classify_fiber_point(const GoDiagram& base, const PluckerVector& point) {
  const FerrersShape& s = base.shape();
  if (point.m != s.n() + 1 || point.k != s.k())
    throw ValidationError("point must live in Gr(k, n+1)");
  if (!satisfies(deodhar_description(base), point.restrict_to(s.n())))
    throw ValidationError("projection of the point is not in the base component");
  GoDiagram ext = extend_diagram(base, std::vector<Fill>(s.k(), Fill::Plus));
  for (int r = s.k() - 1; r >= 0; --r) {
    if (forced_black(ext, r)) {
      ext.set(r, 0, Fill::Black);
      continue;
    }
    const Subset ib = i_b_formula(ext, ext.shape().box_at(r, 0));
    ext.set(r, 0, point.at(ib) == 0 ? Fill::White : Fill::Plus);
  }
  return {base, ext};
}

std::vector<int> BoundaryPoset::rank_profile() const {
  std::map<int, int, std::greater<int>> by_dim;
  for (const GoDiagram& d : nodes) ++by_dim[d.dimension()];
  std::vector<int> out;
  for (const auto& [dim, count] : by_dim) out.push_back(count);
  return out;
}

BoundaryPoset fiber_poset(const GoDiagram& d) {
  BoundaryPoset p;
  for (const FiberComponent& c : fiber_components(d)) p.nodes.push_back(c.extended);
  auto index_of = [&](const GoDiagram& x) {
    auto it = std::find(p.nodes.begin(), p.nodes.end(), x);
    return it == p.nodes.end() ? -1 : static_cast<int>(it - p.nodes.begin());
  };
  for (std::size_t a = 0; a < p.nodes.size(); ++a) {
    const GoDiagram& upper = p.nodes[a];
    for (int r = 0; r < upper.shape().k(); ++r) {
      if (upper.at(r, 0) != Fill::Plus) continue;
      GoDiagram lower = upper;
      lower.set(r, 0, Fill::White);
      for (int rr = r - 1; rr >= 0; --rr)
        if (lower.at(rr, 0) == Fill::Black && !forced_black(lower, rr)) lower.set(rr, 0, Fill::Plus);
      const int b = index_of(lower);
      if (b < 0) throw ComputationError("cover rule left the fiber:\n" + lower.render());
      p.covers.emplace_back(static_cast<int>(a), b);
    }
  }
  return p;
}

std::vector<int> le_free_rows(const GoDiagram& d) {
  if (!is_le_diagram(d)) throw ValidationError("not a Le-diagram");
  std::vector<int> free;
  const FerrersShape& s = d.shape();
  for (int r = 0; r < s.k(); ++r) {
    bool blocked = false;
    for (int c = 0; c < s.row_length(r) && !blocked; ++c) {
      if (d.at(r, c) != Fill::White) continue;
      for (int rr = 0; rr < r; ++rr) blocked = blocked || d.at(rr, c) == Fill::Plus;
    }
    if (!blocked) free.push_back(r);
  }
  return free;
}

BoundaryPoset nonneg_fiber_components(const GoDiagram& d) {
  if (!is_le_diagram(d)) throw ValidationError("not a Le-diagram");
  BoundaryPoset p;
  for (const FiberComponent& c : fiber_components(d))
    if (is_le_diagram(c.extended)) p.nodes.push_back(c.extended);
  for (std::size_t a = 0; a < p.nodes.size(); ++a)
    for (std::size_t b = 0; b < p.nodes.size(); ++b) {
      int dropped = 0, other = 0;
      for (int r = 0; r < d.shape().k(); ++r) {
        const Fill x = p.nodes[a].at(r, 0), y = p.nodes[b].at(r, 0);
        if (x == Fill::Plus && y == Fill::White) ++dropped;
        else if (x != y) ++other;
      }
      if (dropped == 1 && other == 0) p.covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return p;
}

bool is_boolean_lattice(const BoundaryPoset& p) {
  const int n = static_cast<int>(p.nodes.size());
  if (n == 0) return false;
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  std::vector<std::vector<int>> lower(n);
  for (auto [a, b] : p.covers) lower[a].push_back(b);
  for (int a = 0; a < n; ++a) {
    std::vector<int> stack{a};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (below[a][x]) continue;
      below[a][x] = true;
      for (int y : lower[x]) stack.push_back(y);
    }
  }
  std::vector<int> bottoms;
  for (int a = 0; a < n; ++a)
    if (lower[a].empty()) bottoms.push_back(a);
  if (bottoms.size() != 1) return false;
  std::vector<int> atoms;
  for (auto [a, b] : p.covers)
    if (b == bottoms[0]) atoms.push_back(a);
  const std::size_t f = atoms.size();
  if (f >= 8 * sizeof(unsigned long) || static_cast<std::size_t>(n) != (1UL << f)) return false;
  std::vector<unsigned long> code(n, 0);
  std::set<unsigned long> seen;
  for (int a = 0; a < n; ++a) {
    for (std::size_t t = 0; t < f; ++t)
      if (below[a][atoms[t]]) code[a] |= 1UL << t;
    if (!seen.insert(code[a]).second) return false;
  }
  std::set<std::pair<int, int>> cover_set(p.covers.begin(), p.covers.end());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const unsigned long diff = code[a] ^ code[b];
      const bool subset_cover = (code[b] & ~code[a]) == 0 && diff && !(diff & (diff - 1));
      if (subset_cover != static_cast<bool>(cover_set.count({a, b}))) return false;
    }
  return true;
}

Matrix project_point(const Matrix& m) {
  const int k = static_cast<int>(m.size());
  if (k == 0 || m[0].size() < 2) throw ValidationError("need a k x (n+1) matrix with n >= 1");
  if (rank(m) != k) throw ValidationError("matrix is not full rank");
  Matrix out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end() - 1);
  if (rank(out) != k) throw ComputationError("projected rank drop: image lies in Gr(k-1, n)");
  return out;
}

}  // namespace deodhar
