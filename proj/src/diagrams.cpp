#include "deodhar/diagrams.hpp"

#include <algorithm>
#include <sstream>

namespace deodhar {

char fill_char(Fill f) {
  switch (f) {
    case Fill::Plus: return '+';
    case Fill::White: return 'o';
    case Fill::Black: return 'b';
  }
  return '?';
}

Fill fill_from_char(char c) {
  switch (c) {
    case '+': return Fill::Plus;
    case 'o': return Fill::White;
    case 'b': return Fill::Black;
  }
  throw ValidationError(std::string("bad filling symbol '") + c + "'");
}

std::string box_string(const Box& b) {
  return "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")";
}

FerrersShape::FerrersShape(int n, Subset vertical) : n_(n), vertical_(std::move(vertical)) {
  if (n < 1) throw ValidationError("shape needs n >= 1");
  if (static_cast<int>(vertical_.size()) > n)
    throw ValidationError("more vertical steps than n");
  for (std::size_t r = 0; r < vertical_.size(); ++r) {
    if (vertical_[r] < 1 || vertical_[r] > n)
      throw ValidationError("vertical step outside [1,n]");
    if (r && vertical_[r] <= vertical_[r - 1])
      throw ValidationError("vertical steps must be strictly increasing");
  }
  horizontal_ = complement(n, vertical_);
  columns_.assign(horizontal_.rbegin(), horizontal_.rend());
  for (int i : vertical_)
    lengths_.push_back(static_cast<int>(
        std::count_if(horizontal_.begin(), horizontal_.end(), [&](int j) { return j > i; })));
}

int FerrersShape::column_height(int c) const {
  return static_cast<int>(
      std::count_if(lengths_.begin(), lengths_.end(), [&](int len) { return len > c; }));
}

int FerrersShape::size() const {
  int s = 0;
  for (int len : lengths_) s += len;
  return s;
}

bool FerrersShape::contains(const Box& b) const {
  auto r = std::find(vertical_.begin(), vertical_.end(), b.i);
  auto c = std::find(columns_.begin(), columns_.end(), b.j);
  if (r == vertical_.end() || c == columns_.end()) return false;
  return (c - columns_.begin()) < lengths_[r - vertical_.begin()];
}

std::pair<int, int> FerrersShape::position(const Box& b) const {
  if (!contains(b)) throw ValidationError("box " + box_string(b) + " not in shape");
  int r = static_cast<int>(std::find(vertical_.begin(), vertical_.end(), b.i) - vertical_.begin());
  int c = static_cast<int>(std::find(columns_.begin(), columns_.end(), b.j) - columns_.begin());
  return {r, c};
}

Box FerrersShape::box_at(int r, int c) const {
  if (r < 0 || r >= k() || c < 0 || c >= lengths_[r])
    throw ValidationError("box position out of shape");
  return {vertical_[r], columns_[c]};
}

std::vector<Box> FerrersShape::boxes() const {
  std::vector<Box> out;
  for (int r = 0; r < k(); ++r)
    for (int c = 0; c < lengths_[r]; ++c) out.push_back(box_at(r, c));
  return out;
}

int box_transposition(const FerrersShape& s, const Box& b) {
  auto [r, c] = s.position(b);
  return s.n() - s.k() + r - c;
}

std::vector<Box> canonical_reading_order(const FerrersShape& s) {
  std::vector<Box> out;
  for (int r = s.k() - 1; r >= 0; --r)
    for (int c = s.row_length(r) - 1; c >= 0; --c) out.push_back(s.box_at(r, c));
  return out;
}

bool is_valid_reading_order(const FerrersShape& s, const std::vector<Box>& order) {
  if (static_cast<int>(order.size()) != s.size()) return false;
  std::vector<std::vector<int>> when(s.k());
  for (int r = 0; r < s.k(); ++r) when[r].assign(s.row_length(r), -1);
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (!s.contains(order[t])) return false;
    auto [r, c] = s.position(order[t]);
    if (when[r][c] != -1) return false;
    when[r][c] = static_cast<int>(t);
  }
  for (int r = 0; r < s.k(); ++r)
    for (int c = 0; c < s.row_length(r); ++c) {
      if (c + 1 < s.row_length(r) && when[r][c + 1] > when[r][c]) return false;
      if (r + 1 < s.k() && c < s.row_length(r + 1) && when[r + 1][c] > when[r][c]) return false;
    }
  return true;
}

Word word_of_shape(const FerrersShape& s) { return word_of_shape(s, canonical_reading_order(s)); }

Word word_of_shape(const FerrersShape& s, const std::vector<Box>& order) {
  if (!is_valid_reading_order(s, order)) throw ValidationError("invalid reading order");
  Word w{s.n(), {}};
  for (const Box& b : order) w.letters.push_back(box_transposition(s, b));
  return w;
}

Permutation grassmannian_permutation(const FerrersShape& s) {
  std::vector<int> img(s.vertical_steps());
  img.insert(img.end(), s.horizontal_steps().begin(), s.horizontal_steps().end());
  return Permutation(std::move(img));
}

FerrersShape shape_from_permutation(const Permutation& p, int k) {
  const int n = p.n();
  if (k < 0 || k > n) throw ValidationError("k out of range");
  for (int i = 1; i < n; ++i)
    if (i != k && p(i) > p(i + 1))
      throw ValidationError("permutation " + p.one_line() + " is not Grassmannian at k=" +
                            std::to_string(k));
  Subset v(p.images().begin(), p.images().begin() + k);
  return FerrersShape(n, v);
}

GoDiagram::GoDiagram(FerrersShape shape, std::vector<std::vector<Fill>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.k())
    throw ValidationError("filling has " + std::to_string(rows_.size()) + " rows, shape has " +
                          std::to_string(shape_.k()));
  for (int r = 0; r < shape_.k(); ++r)
    if (static_cast<int>(rows_[r].size()) != shape_.row_length(r))
      throw ValidationError("filling row " + std::to_string(r + 1) + " has length " +
                            std::to_string(rows_[r].size()) + ", shape row has " +
                            std::to_string(shape_.row_length(r)));
}

GoDiagram GoDiagram::filled(const FerrersShape& shape, Fill f) {
  std::vector<std::vector<Fill>> rows;
  for (int r = 0; r < shape.k(); ++r) rows.emplace_back(shape.row_length(r), f);
  return GoDiagram(shape, rows);
}

Fill GoDiagram::at(const Box& b) const {
  auto [r, c] = shape_.position(b);
  return rows_[r][c];
}

void GoDiagram::set(const Box& b, Fill f) {
  auto [r, c] = shape_.position(b);
  rows_[r][c] = f;
}

int GoDiagram::count(Fill f) const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(std::count(row.begin(), row.end(), f));
  return total;
}

std::string GoDiagram::render() const {
  std::ostringstream out;
  int width = 1;
  for (int x : shape_.vertical_steps()) width = std::max<int>(width, std::to_string(x).size());
  out << std::string(width, ' ') << " |";
  for (int j : shape_.column_labels()) out << ' ' << j;
  out << '\n';
  for (int r = 0; r < shape_.k(); ++r) {
    std::string label = std::to_string(shape_.vertical_steps()[r]);
    out << std::string(width - label.size(), ' ') << label << " |";
    for (int c = 0; c < shape_.row_length(r); ++c) {
      std::string pad(std::to_string(shape_.column_labels()[c]).size(), ' ');
      pad.back() = fill_char(rows_[r][c]);
      out << ' ' << pad;
    }
    out << '\n';
  }
  return out.str();
}

ValidationReport validate_filling(const GoDiagram& d) {
  return validate_filling(d, canonical_reading_order(d.shape()));
}

ValidationReport validate_filling(const GoDiagram& d, const std::vector<Box>& order) {
  const FerrersShape& s = d.shape();
  if (!is_valid_reading_order(s, order)) throw ValidationError("invalid reading order");
  ValidationReport rep;
  rep.u = Permutation::identity(s.n());
  rep.v = rep.u;
  for (const Box& b : order) {
    const int g = box_transposition(s, b);
    rep.v = rep.v.times_generator(g);
    Permutation t = rep.u.times_generator(g);
    const bool decreases = t.length() < rep.u.length();
    const Fill f = d.at(b);
    const bool ok = f == Fill::Black ? decreases : !decreases;
    if (!ok) {
      rep.valid = false;
      rep.offending.push_back(b);
    }
    if (f != Fill::Plus) rep.u = t;
  }
  return rep;
}

SubexpressionMask subexpression_of(const GoDiagram& d) {
  return subexpression_of(d, canonical_reading_order(d.shape()));
}

SubexpressionMask subexpression_of(const GoDiagram& d, const std::vector<Box>& order) {
  SubexpressionMask m{word_of_shape(d.shape(), order), {}};
  for (const Box& b : order) m.selected.push_back(d.at(b) != Fill::Plus);
  return m;
}

std::vector<GoDiagram> all_go_diagrams(const FerrersShape& s) {
  const std::vector<Box> order = canonical_reading_order(s);
  const std::size_t nbox = order.size();
  std::vector<GoDiagram> out;
  for (unsigned long bits = 0; bits < (1UL << nbox); ++bits) {
    GoDiagram d = GoDiagram::filled(s, Fill::Plus);
    Permutation u = Permutation::identity(s.n());
    for (std::size_t t = 0; t < nbox; ++t) {
      Permutation next = u.times_generator(box_transposition(s, order[t]));
      if (next.length() < u.length()) {
        d.set(order[t], Fill::Black);
        u = next;
      } else if (!((bits >> t) & 1UL)) {
        d.set(order[t], Fill::White);
        u = next;
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<GoDiagram> all_le_diagrams(const FerrersShape& s) {
  std::vector<GoDiagram> out;
  for (GoDiagram& d : all_go_diagrams(s))
    if (is_le_diagram(d)) out.push_back(std::move(d));
  return out;
}

bool is_le_diagram(const GoDiagram& d) {
  const FerrersShape& s = d.shape();
  for (int r = 0; r < s.k(); ++r)
    for (int c = 0; c < s.row_length(r); ++c) {
      if (d.at(r, c) == Fill::Black) return false;
      if (d.at(r, c) != Fill::White) continue;
      bool left = false, above = false;
      for (int cc = 0; cc < c; ++cc) left = left || d.at(r, cc) == Fill::Plus;
      for (int rr = 0; rr < r; ++rr) above = above || d.at(rr, c) == Fill::Plus;
      if (left && above) return false;
    }
  return true;
}

std::vector<Box> boxes_in(const FerrersShape& s, const Box& b) {
  auto [r, c] = s.position(b);
  std::vector<Box> out;
  for (int rr = r; rr < s.k(); ++rr)
    for (int cc = c; cc < s.row_length(rr); ++cc)
      if (rr != r || cc != c) out.push_back(s.box_at(rr, cc));
  return out;
}

Subset i_b_formula(const GoDiagram& d, const Box& b) {
  const FerrersShape& s = d.shape();
  auto [r, c] = s.position(b);
  Permutation u = Permutation::identity(s.n());
  Permutation v = u;
  for (const Box& x : canonical_reading_order(s)) {
    auto [xr, xc] = s.position(x);
    if (xr < r || xc < c || (xr == r && xc == c)) continue;
    const int g = box_transposition(s, x);
    v = v.times_generator(g);
    if (d.at(x) != Fill::Plus) u = u.times_generator(g);
  }
  Permutation w = u.times_generator(box_transposition(s, b)) * v.inverse();
  return w.project(s.vertical_steps());
}

bool CellDescription::disjoint() const {
  const std::set<Subset>* classes[] = {&zero_set, &nonzero_set, &positive_set, &nonneg_set};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (const Subset& s : *classes[a])
        if (classes[b]->count(s)) return false;
  return true;
}

bool satisfies(const CellDescription& c, const PluckerVector& p) {
  if (p.m != c.m || p.k != c.k) return false;
  for (const Subset& s : c.zero_set)
    if (p.at(s) != 0) return false;
  for (const Subset& s : c.nonzero_set)
    if (p.at(s) == 0) return false;
  for (int sign : {1, -1}) {
    bool ok = true;
    for (const Subset& s : c.positive_set) ok = ok && sign * p.at(s) > 0;
    for (const Subset& s : c.nonneg_set) ok = ok && sign * p.at(s) >= 0;
    if (ok) return true;
  }
  return false;
}

CellDescription deodhar_description(const GoDiagram& d) {
  if (!validate_filling(d).valid) throw ValidationError("not a Go-diagram");
  const FerrersShape& s = d.shape();
  CellDescription c{s.n(), s.k(), {}, {}, {}, {}};
  for (const Box& b : s.boxes()) {
    if (d.at(b) == Fill::White) c.zero_set.insert(i_b_formula(d, b));
    if (d.at(b) == Fill::Plus) c.nonzero_set.insert(i_b_formula(d, b));
  }
  c.nonzero_set.insert(s.vertical_steps());
  for (const Subset& j : k_subsets(s.n(), s.k()))
    if (gale_less(s.n(), 1, j, s.vertical_steps())) c.zero_set.insert(j);
  return c;
}

void GrassmannNecklace::validate() const {
  if (n < 1 || k < 0 || k > n) throw ValidationError("necklace needs 0 <= k <= n");
  if (static_cast<int>(sets.size()) != n)
    throw ValidationError("necklace needs exactly n sets");
  for (const Subset& s : sets) {
    if (static_cast<int>(s.size()) != k) throw ValidationError("necklace set of wrong size");
    for (std::size_t t = 0; t < s.size(); ++t)
      if (s[t] < 1 || s[t] > n || (t && s[t] <= s[t - 1]))
        throw ValidationError("necklace set " + subset_string(s) + " is not a sorted subset of [n]");
  }
  for (int m = 1; m <= n; ++m) {
    const Subset& cur = sets[m - 1];
    const Subset& next = sets[m % n];
    for (int x : cur)
      if (x != m && !contains(next, x))
        throw ValidationError("necklace axiom fails at m=" + std::to_string(m));
  }
}

std::vector<Subset> positroid_bases(const GrassmannNecklace& neck) {
  neck.validate();
  std::vector<Subset> out;
  for (const Subset& j : k_subsets(neck.n, neck.k)) {
    bool ok = true;
    for (int m = 1; m <= neck.n && ok; ++m) ok = gale_leq(neck.n, m, neck.sets[m - 1], j);
    if (ok) out.push_back(j);
  }
  return out;
}

CellDescription necklace_description(const GrassmannNecklace& neck, NecklaceFlavor f) {
  const std::vector<Subset> bases = positroid_bases(neck);
  CellDescription c{neck.n, neck.k, {}, {}, {}, {}};
  for (const Subset& j : k_subsets(neck.n, neck.k))
    if (!std::binary_search(bases.begin(), bases.end(), j)) c.zero_set.insert(j);
  if (f == NecklaceFlavor::Cell)
    c.positive_set.insert(bases.begin(), bases.end());
  else
    c.nonzero_set.insert(neck.sets.begin(), neck.sets.end());
  return c;
}

CellDescription closure_description(const CellDescription& c) {
  CellDescription out{c.m, c.k, c.zero_set, {}, {}, c.nonneg_set};
  out.nonneg_set.insert(c.positive_set.begin(), c.positive_set.end());
  return out;
}

GrassmannNecklace necklace_from_bases(int n, int k, const std::vector<Subset>& bases) {
  if (bases.empty()) throw ComputationError("empty basis list");
  GrassmannNecklace neck{n, k, {}};
  for (int m = 1; m <= n; ++m) {
    std::vector<Subset> mins;
    for (const Subset& j : bases) {
      bool below_all = true;
      for (const Subset& other : bases) below_all = below_all && gale_leq(n, m, j, other);
      if (below_all) mins.push_back(j);
    }
    if (mins.size() != 1)
      throw ComputationError("bases have no <=_" + std::to_string(m) + " minimum");
    neck.sets.push_back(mins.front());
  }
  return neck;
}

Subset richardson_set(const GoDiagram& d) {
  const ValidationReport rep = validate_filling(d);
  if (!rep.valid) throw ValidationError("not a Go-diagram");
  const int n = d.shape().n(), k = d.shape().k();
  Subset s;
  for (int i = n - k + 1; i <= n; ++i) s.push_back(rep.u(i));
  std::sort(s.begin(), s.end());
  return s;
}

Permutation le_permutation(const GoDiagram& d) {
  if (!is_le_diagram(d)) throw ValidationError("not a Le-diagram");
  const FerrersShape& s = d.shape();
  const Subset& vs = s.vertical_steps();
  std::vector<int> img(s.n());
  for (int start = 1; start <= s.n(); ++start) {
    int r, c;
    bool west;
    if (contains(vs, start)) {
      r = static_cast<int>(std::find(vs.begin(), vs.end(), start) - vs.begin());
      c = s.row_length(r) - 1;
      west = true;
    } else {
      const auto& cols = s.column_labels();
      c = static_cast<int>(std::find(cols.begin(), cols.end(), start) - cols.begin());
      r = s.column_height(c) - 1;
      west = false;
    }
    if (r < 0 || c < 0) {
      img[start - 1] = start;
      continue;
    }
    while (true) {
      if (d.at(r, c) == Fill::Plus) west = !west;
      if (west) {
        if (--c < 0) {
          img[start - 1] = vs[r];
          break;
        }
      } else if (--r < 0) {
        img[start - 1] = s.column_labels()[c];
        break;
      }
    }
  }
  return Permutation(std::move(img));
}

GrassmannNecklace le_to_necklace(const GoDiagram& d) {
  const Permutation pi = le_permutation(d);
  const FerrersShape& s = d.shape();
  GrassmannNecklace neck{s.n(), s.k(), {s.vertical_steps()}};
  for (int m = 1; m < s.n(); ++m) {
    Subset next = neck.sets.back();
    if (contains(next, m)) {
      next.erase(std::find(next.begin(), next.end(), m));
      next.push_back(pi(m));
      std::sort(next.begin(), next.end());
    }
    neck.sets.push_back(next);
  }
  neck.validate();
  return neck;
}

GoDiagram necklace_to_le(const GrassmannNecklace& neck) {
  neck.validate();
  const int n = neck.n;
  FerrersShape shape(n, neck.sets[0]);
  std::vector<int> img(n);
  for (int m = 1; m <= n; ++m) {
    const Subset& cur = neck.sets[m - 1];
    const Subset& next = neck.sets[m % n];
    img[m - 1] = m;
    if (!contains(cur, m)) continue;
    for (int x : next)
      if (x == m || !contains(cur, x)) img[m - 1] = x;
  }
  const Permutation pi(img);
  const Word w = word_of_shape(shape);
  const Permutation u = pi.inverse() * evaluate_word(w);
  const SubexpressionMask mask = positive_subexpression(w, u);
  GoDiagram d = GoDiagram::filled(shape, Fill::Plus);
  const std::vector<Box> order = canonical_reading_order(shape);
  for (std::size_t t = 0; t < order.size(); ++t)
    if (mask.selected[t]) d.set(order[t], Fill::White);
  if (le_to_necklace(d) != neck)
    throw ComputationError("necklace inversion did not round-trip");
  return d;
}

}  // namespace deodhar
