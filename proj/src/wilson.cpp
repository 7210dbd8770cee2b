#include "deodhar/wilson.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "deodhar/fibers.hpp"
#include "deodhar/networks.hpp"

namespace deodhar {

int wrap(int x, int n) { return ((x - 1) % n + n) % n + 1; }

std::string WilsonLoopDiagram::to_string() const {
  std::string out = "n=" + std::to_string(n) + ":";
  for (const Propagator& p : propagators)
    out += " (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
  return out;
}

Subset propagator_support(int n, const Propagator& p) {
  std::set<int> s{wrap(p.i, n), wrap(p.i + 1, n), wrap(p.j, n), wrap(p.j + 1, n)};
  return Subset(s.begin(), s.end());
}

Subset support(const WilsonLoopDiagram& w, const std::vector<int>& rows) {
  std::set<int> s;
  for (int r : rows) {
    const Subset part = propagator_support(w.n, w.row(r));
    s.insert(part.begin(), part.end());
  }
  return Subset(s.begin(), s.end());
}

bool crosses(int n, const Propagator& a, const Propagator& b) {
  if (b.i == a.i || b.i == a.j || b.j == a.i || b.j == a.j) return false;
  auto inside = [&](int x) {
    const int off = ((x - a.i) % n + n) % n;
    return off > 0 && off < ((a.j - a.i) % n + n) % n;
  };
  return inside(b.i) != inside(b.j);
}

bool same_propagator(const Propagator& a, const Propagator& b) {
  return (a.i == b.i && a.j == b.j) || (a.i == b.j && a.j == b.i);
}

std::optional<std::string> support_violation(int n, const std::vector<Subset>& supports,
                                             std::size_t min_size) {
  const std::size_t k = supports.size();
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    std::set<int> u;
    std::size_t count = 0;
    std::string rows;
    for (std::size_t r = 0; r < k; ++r)
      if ((mask >> r) & 1UL) {
        u.insert(supports[r].begin(), supports[r].end());
        ++count;
        rows += (rows.empty() ? "" : ",") + std::to_string(r + 1);
      }
    if (count < min_size) continue;
    if (u.size() < count + 3)
      return "rows {" + rows + "} are supported on " + std::to_string(u.size()) +
             " vertices, need " + std::to_string(count + 3);
  }
  (void)n;
  return std::nullopt;
}

AdmissibilityReport is_admissible(const WilsonLoopDiagram& w) {
  AdmissibilityReport rep;
  auto fail = [&](std::string why) {
    rep.admissible = false;
    rep.violations.push_back(std::move(why));
  };
  if (w.n < w.k() + 4)
    fail("n = " + std::to_string(w.n) + " < k + 4 = " + std::to_string(w.k() + 4));
  bool in_range = true;
  for (const Propagator& p : w.propagators) {
    if (p.i < 1 || p.i > w.n || p.j < 1 || p.j > w.n) {
      fail("propagator edge outside [1,n]");
      in_range = false;
      continue;
    }
    const int diff = ((p.j - p.i) % w.n + w.n) % w.n;
    if (diff == 0 || diff == 1 || diff == w.n - 1)
      fail("propagator (" + std::to_string(p.i) + "," + std::to_string(p.j) +
           ") ends on the same or adjacent edges");
  }
  if (!in_range) return rep;
  std::vector<Subset> supports;
  for (const Propagator& p : w.propagators) supports.push_back(propagator_support(w.n, p));
  if (auto why = support_violation(w.n, supports, 1)) fail(*why);
  for (int a = 0; a < w.k(); ++a)
    for (int b = a + 1; b < w.k(); ++b)
      if (crosses(w.n, w.propagators[a], w.propagators[b]))
        fail("rows " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " cross");
  return rep;
}

std::string variable_name(const Variable& v) {
  return "c_{" + std::to_string(v.p) + "," + std::to_string(v.q) + "}";
}

SparsePolynomial SparsePolynomial::constant(const Rational& c) {
  SparsePolynomial p;
  p.add_term({}, c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(const Variable& v) {
  SparsePolynomial p;
  p.add_term({{v, 1}}, 1);
  return p;
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  Rational& slot = terms_[m];
  slot += c;
  if (slot == 0) terms_.erase(m);
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  SparsePolynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  SparsePolynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  SparsePolynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      std::map<Variable, int> merged;
      for (const auto& [v, e] : ma) merged[v] += e;
      for (const auto& [v, e] : mb) merged[v] += e;
      out.add_term(Monomial(merged.begin(), merged.end()), ca * cb);
    }
  return out;
}

Rational SparsePolynomial::evaluate(const std::map<Variable, Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m)
      for (int x = 0; x < e; ++x) t *= values.at(v);
    total += t;
  }
  return total;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string body;
    for (const auto& [v, e] : m) {
      if (!body.empty()) body += "*";
      body += variable_name(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += body;
    else
      out += mag.get_str() + "*" + body;
  }
  return out;
}

std::vector<Subset> SymbolicMatrix::row_supports() const {
  std::vector<Subset> out;
  for (const auto& row : entries) {
    Subset s;
    for (int q = 0; q < m; ++q)
      if (row[q].nonzero) s.push_back(q + 1);
    out.push_back(s);
  }
  return out;
}

SymbolicMatrix pattern_matrix(int m, const std::vector<Subset>& row_supports) {
  SymbolicMatrix out{static_cast<int>(row_supports.size()), m, {}};
  for (const Subset& s : row_supports) {
    std::vector<SymbolicEntry> row(m);
    for (int q : s) row.at(q - 1).nonzero = true;
    out.entries.push_back(std::move(row));
  }
  return out;
}

SymbolicMatrix c_matrix(const WilsonLoopDiagram& w) {
  std::vector<Subset> supports;
  for (const Propagator& p : w.propagators) supports.push_back(propagator_support(w.n, p));
  return pattern_matrix(w.n, supports);
}

SymbolicMatrix c_star_matrix(const WilsonLoopDiagram& w) {
  std::vector<Subset> supports;
  for (const Propagator& p : w.propagators) {
    Subset s = propagator_support(w.n, p);
    s.push_back(w.n + 1);
    supports.push_back(s);
  }
  return pattern_matrix(w.n + 1, supports);
}

namespace {

int parity_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv % 2 ? -1 : 1;
}

void check_columns(const SymbolicMatrix& m, const Subset& cols) {
  if (static_cast<int>(cols.size()) != m.k) throw ValidationError("minor needs k columns");
  for (std::size_t t = 0; t < cols.size(); ++t)
    if (cols[t] < 1 || cols[t] > m.m || (t && cols[t] <= cols[t - 1]))
      throw ValidationError("minor columns must be distinct, sorted and in range");
}

// Leibniz terms of a pattern minor: (sign of the column permutation, column
// chosen by each row).
std::vector<std::pair<int, std::vector<int>>> leibniz_terms(const std::vector<Subset>& supports,
                                                            const Subset& cols) {
  std::vector<std::pair<int, std::vector<int>>> out;
  std::vector<int> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    std::vector<int> chosen;
    for (std::size_t r = 0; r < perm.size() && ok; ++r) {
      ok = contains(supports[r], cols[perm[r]]);
      chosen.push_back(cols[perm[r]]);
    }
    if (ok) out.emplace_back(parity_sign(perm), chosen);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

SparsePolynomial symbolic_minor(const SymbolicMatrix& m, const Subset& cols) {
  check_columns(m, cols);
  SparsePolynomial total;
  for (const auto& [sign, chosen] : leibniz_terms(m.row_supports(), cols)) {
    SparsePolynomial term = SparsePolynomial::constant(sign);
    for (std::size_t r = 0; r < chosen.size(); ++r) {
      const SymbolicEntry& e = m.entries[r][chosen[r] - 1];
      term = term * SparsePolynomial::constant(e.sign) *
             SparsePolynomial::variable({static_cast<int>(r) + 1, chosen[r]});
    }
    total = total + term;
  }
  return total;
}

std::vector<Subset> matroid_bases(const WilsonLoopDiagram& w) {
  const SymbolicMatrix m = c_matrix(w);
  std::vector<Subset> out;
  for (const Subset& j : k_subsets(w.n, w.k()))
    if (!symbolic_minor(m, j).is_zero()) out.push_back(j);
  return out;
}

std::vector<Subset> transversal_bases(int m, const std::vector<Subset>& supports) {
  const int k = static_cast<int>(supports.size());
  std::vector<Subset> out;
  for (const Subset& j : k_subsets(m, k)) {
    std::vector<int> owner(j.size(), -1);
    std::function<bool(int, std::vector<bool>&)> augment = [&](int r, std::vector<bool>& seen) {
      for (std::size_t c = 0; c < j.size(); ++c) {
        if (seen[c] || !contains(supports[r], j[c])) continue;
        seen[c] = true;
        if (owner[c] < 0 || augment(owner[c], seen)) {
          owner[c] = r;
          return true;
        }
      }
      return false;
    };
    bool perfect = true;
    for (int r = 0; r < k && perfect; ++r) {
      std::vector<bool> seen(j.size(), false);
      perfect = augment(r, seen);
    }
    if (perfect) out.push_back(j);
  }
  return out;
}

SigmaCell sigma_cell(const WilsonLoopDiagram& w) {
  const AdmissibilityReport rep = is_admissible(w);
  if (!rep.admissible) throw ValidationError("inadmissible diagram: " + rep.violations.front());
  SigmaCell cell;
  cell.necklace = necklace_from_bases(w.n, w.k(), matroid_bases(w));
  cell.le = necklace_to_le(cell.necklace);
  cell.dimension = cell.le.count(Fill::Plus);
  return cell;
}

GoDiagram d_star_diagram(const WilsonLoopDiagram& w) {
  return top_fiber_component(sigma_cell(w).le).extended;
}

bool positivity_violation(const WilsonLoopDiagram& w) {
  const GoDiagram le = sigma_cell(w).le;
  const FerrersShape& s = le.shape();
  for (int c = 0; c < s.num_columns(); ++c) {
    bool plus_above = false;
    for (int r = 0; r < s.column_height(c); ++r) {
      if (le.at(r, c) == Fill::White && plus_above) return true;
      plus_above = plus_above || le.at(r, c) == Fill::Plus;
    }
  }
  return false;
}

namespace {

std::vector<std::vector<int>> sign_patterns(std::size_t size, bool exhaustive) {
  std::vector<std::vector<int>> out;
  if (exhaustive) {
    for (unsigned long mask = 0; mask < (1UL << size); ++mask) {
      std::vector<int> p(size);
      for (std::size_t t = 0; t < size; ++t) p[t] = ((mask >> t) & 1UL) ? -1 : 1;
      out.push_back(p);
    }
    return out;
  }
  for (int lead : {1, -1})
    for (std::size_t change = size; change >= 1; --change) {
      std::vector<int> p(size, lead);
      for (std::size_t t = change; t < size; ++t) p[t] = -lead;
      out.push_back(p);
    }
  return out;
}

}  // namespace

namespace {

// The one-dimensional kernel of a (rows x cols) system, or nullopt.
std::optional<std::vector<Rational>> kernel_line(Matrix a, int cols) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < a.size(); ++c) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    for (int cc = cols - 1; cc >= c; --cc) a[row][cc] /= a[row][c];
    for (std::size_t r = 0; r < a.size(); ++r)
      if (r != row && a[r][c] != 0) {
        const Rational f = a[r][c];
        for (int cc = c; cc < cols; ++cc) a[r][cc] -= f * a[row][cc];
      }
    pivot_col.push_back(c);
    ++row;
  }
  if (static_cast<int>(pivot_col.size()) != cols - 1) return std::nullopt;
  int free = 0;
  while (free < static_cast<int>(pivot_col.size()) && pivot_col[free] == free) ++free;
  std::vector<Rational> y(cols, Rational(0));
  y[free] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) y[pivot_col[r]] = -a[r][free];
  return y;
}

}  // namespace

Realization positive_realization(const WilsonLoopDiagram& w, std::uint64_t seed) {
  const AdmissibilityReport rep = is_admissible(w);
  if (!rep.admissible) throw ValidationError("inadmissible diagram: " + rep.violations.front());
  const int k = w.k();
  std::vector<Subset> supports;
  for (const Propagator& p : w.propagators) supports.push_back(propagator_support(w.n, p));
  const std::vector<Subset> bases = matroid_bases(w);

  auto certified_point = [&](const Matrix& c) {
    for (int r = 0; r < k; ++r)
      for (int q = 1; q <= w.n; ++q)
        if ((c[r][q - 1] != 0) != contains(supports[r], q)) return false;
    PluckerVector minors;
    try {
      minors = minors_of_matrix(c);
    } catch (const ComputationError&) {
      return false;
    }
    if (minors.support() != bases) return false;
    return std::all_of(minors.coords.begin(), minors.coords.end(),
                       [](const auto& kv) { return kv.second > 0; });
  };

  // Each term as (sign, per-row position inside the row's support).
  std::vector<std::pair<int, std::vector<int>>> terms;
  for (const Subset& j : bases)
    for (const auto& [sign, chosen] : leibniz_terms(supports, j)) {
      std::vector<int> pos;
      for (int r = 0; r < k; ++r)
        pos.push_back(static_cast<int>(
            std::find(supports[r].begin(), supports[r].end(), chosen[r]) - supports[r].begin()));
      terms.emplace_back(sign, pos);
    }

  std::vector<std::vector<int>> chosen(k);
  auto certified = [&]() {
    for (const auto& [sign, pos] : terms) {
      int s = sign;
      for (int r = 0; r < k; ++r) s *= chosen[r][pos[r]];
      if (s < 0) return false;
    }
    return true;
  };

  Realization out;
  bool found = false;
  for (bool exhaustive : {false, true}) {
    if (exhaustive && k > 3) break;
    std::vector<std::vector<std::vector<int>>> options;
    for (int r = 0; r < k; ++r) options.push_back(sign_patterns(supports[r].size(), exhaustive));
    // The last row varies slowest.
    std::function<bool(int)> search = [&](int r) {
      if (r < 0) return certified();
      for (const auto& p : options[r]) {
        chosen[r] = p;
        if (search(r - 1)) return true;
      }
      return false;
    };
    if (k == 0 || search(k - 1)) {
      found = true;
      out.exhaustive = exhaustive;
      break;
    }
  }

  if (found) {
    out.signs = chosen;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 12), den(1, 5);
    out.c.assign(k, std::vector<Rational>(w.n, Rational(0)));
    for (int r = 0; r < k; ++r)
      for (std::size_t t = 0; t < supports[r].size(); ++t) {
        Rational mag(num(rng), den(rng));
        mag.canonicalize();
        out.c[r][supports[r][t] - 1] = chosen[r][t] * mag;
      }
    if (!certified_point(out.c))
      throw ComputationError("sign-certified realization failed its exact check");
    return out;
  }

  // Cut a positive point of Sigma(W) down to the row supports.
  const GoDiagram le = sigma_cell(w).le;
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    const Matrix x =
        realize_matrix(weigh(build_network(le), random_weights(le, seed + 101 * attempt, true)));
    Matrix c;
    for (int r = 0; r < k; ++r) {
      Matrix eqs;
      for (int q = 1; q <= w.n; ++q) {
        if (contains(supports[r], q)) continue;
        std::vector<Rational> eq;
        for (int s = 0; s < k; ++s) eq.push_back(x[s][q - 1]);
        eqs.push_back(eq);
      }
      const auto y = kernel_line(eqs, k);
      if (!y) break;
      std::vector<Rational> row(w.n, Rational(0));
      for (int q = 0; q < w.n; ++q)
        for (int s = 0; s < k; ++s) row[q] += (*y)[s] * x[s][q];
      c.push_back(row);
    }
    if (static_cast<int>(c.size()) != k) continue;
    if (!bases.empty() && determinant(submatrix(c, bases.front())) < 0)
      for (Rational& v : c[0]) v = -v;
    if (!certified_point(c)) continue;
    out.c = c;
    out.from_cell = true;
    out.signs.assign(k, {});
    for (int r = 0; r < k; ++r)
      for (int q : supports[r]) out.signs[r].push_back(sgn(c[r][q - 1]));
    return out;
  }
  throw ComputationError("no-realization-found: no sign pattern or cell point fits the row supports");
}

std::string BoundaryPattern::canonical() const {
  std::vector<std::string> rows;
  for (const Subset& s : supports) rows.push_back(subset_string(s));
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const std::string& r : rows) out += r + ";";
  if (rel_p) {
    std::string a = subset_string(supports[rel_p - 1]), b = subset_string(supports[rel_q - 1]);
    if (b < a) std::swap(a, b);
    out += "|" + a + "~" + b + "@" + std::to_string(rel_edge);
  }
  return out;
}

BoundaryMove boundary_move(const WilsonLoopDiagram& w, int p, int v) {
  if (p < 1 || p > w.k()) throw ValidationError("propagator index out of range");
  const int n = w.n;
  const Propagator prop = w.row(p);
  if (!contains(propagator_support(n, prop), v))
    throw ValidationError("vertex " + std::to_string(v) + " is not in the support of row " +
                          std::to_string(p));
  BoundaryMove mv;
  mv.p = p;
  mv.v = v;
  const bool on_i = v == prop.i || v == wrap(prop.i + 1, n);
  const int e = on_i ? prop.i : prop.j;
  mv.edge = e;

  // Ends on edge e, nearest to vertex e first.
  struct EndRef {
    int row, d;
  };
  std::vector<EndRef> ends;
  for (int r = 1; r <= w.k(); ++r) {
    const Propagator& q = w.row(r);
    if (q.i == e) ends.push_back({r, ((q.j - e) % n + n) % n});
    if (q.j == e) ends.push_back({r, ((q.i - e) % n + n) % n});
  }
  std::stable_sort(ends.begin(), ends.end(),
                   [](const EndRef& a, const EndRef& b) { return a.d > b.d; });
  const int ip = static_cast<int>(
      std::find_if(ends.begin(), ends.end(), [&](const EndRef& x) { return x.row == p; }) -
      ends.begin());
  const int nearest = v == e ? ip + 1 : ip - 1;

  for (const Propagator& q : w.propagators) mv.pattern.supports.push_back(propagator_support(n, q));
  mv.pattern.n = n;
  if (nearest >= 0 && nearest < static_cast<int>(ends.size())) {
    mv.kind = BoundaryKind::Meet;
    mv.q = ends[nearest].row;
    mv.pattern.rel_p = p;
    mv.pattern.rel_q = mv.q;
    mv.pattern.rel_edge = e;
    mv.accepted = true;
    return mv;
  }
  mv.kind = BoundaryKind::Drop;
  Subset& s = mv.pattern.supports[p - 1];
  s.erase(std::find(s.begin(), s.end(), v));
  if (auto why = support_violation(n, mv.pattern.supports, 2)) {
    mv.reason = *why;
    return mv;
  }
  mv.accepted = true;
  return mv;
}

SparsePolynomial boundary_minor(const WilsonLoopDiagram& w, int p, int v) {
  const BoundaryMove mv = boundary_move(w, p, v);
  if (!mv.accepted) throw ValidationError("rejected boundary move: " + mv.reason);
  if (mv.kind == BoundaryKind::Drop) return SparsePolynomial::variable({p, v});
  const int e = mv.edge, e1 = wrap(mv.edge + 1, w.n), q = mv.q;
  using SP = SparsePolynomial;
  return SP::variable({p, e}) * SP::variable({q, e1}) - SP::variable({q, e}) * SP::variable({p, e1});
}

std::vector<Subset> boundary_bases(const BoundaryPattern& b, std::uint64_t seed) {
  const int k = static_cast<int>(b.supports.size());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 997), den(1, 89), coin(0, 1);
  Matrix m(k, std::vector<Rational>(b.n, Rational(0)));
  for (int r = 0; r < k; ++r)
    for (int q : b.supports[r]) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      m[r][q - 1] = coin(rng) ? Rational(-x) : x;
    }
  if (b.rel_p) {
    const int p = b.rel_p - 1, q = b.rel_q - 1, e = b.rel_edge - 1, e1 = wrap(b.rel_edge + 1, b.n) - 1;
    m[p][e1] = m[q][e1] * m[p][e] / m[q][e];
  }
  std::vector<Subset> out;
  for (const Subset& j : k_subsets(b.n, k))
    if (determinant(submatrix(m, j)) != 0) out.push_back(j);
  return out;
}

std::optional<BoundaryWitness> shares_boundary(const WilsonLoopDiagram& a,
                                               const WilsonLoopDiagram& b) {
  if (a.n != b.n || a.k() != b.k()) return std::nullopt;
  auto moves = [](const WilsonLoopDiagram& w) {
    std::vector<BoundaryMove> out;
    for (int p = 1; p <= w.k(); ++p)
      for (int v : propagator_support(w.n, w.row(p))) {
        BoundaryMove mv = boundary_move(w, p, v);
        if (mv.accepted) out.push_back(std::move(mv));
      }
    return out;
  };
  const auto ma = moves(a), mb = moves(b);
  for (const BoundaryMove& x : ma) {
    const std::string key = x.pattern.canonical();
    for (const BoundaryMove& y : mb)
      if (y.pattern.canonical() == key) return BoundaryWitness{x.p, x.v, y.p, y.v, x.pattern};
  }
  return std::nullopt;
}

MoveResult clockwise_move(const WilsonLoopDiagram& w, int p, End end) {
  if (p < 1 || p > w.k()) throw ValidationError("propagator index out of range");
  const int n = w.n;
  const Propagator prop = w.row(p);
  const int diff = ((prop.j - prop.i) % n + n) % n;
  Propagator moved = prop;
  if (diff == 2 || diff == n - 2) {
    moved = {wrap(prop.i - 1, n), wrap(prop.j - 1, n)};
  } else if (end == End::I) {
    moved.i = wrap(prop.i - 1, n);
  } else {
    moved.j = wrap(prop.j - 1, n);
  }
  MoveResult res;
  res.result = w;
  res.result.propagators[p - 1] = moved;
  const AdmissibilityReport rep = is_admissible(res.result);
  if (!rep.admissible) {
    res.reason = "result inadmissible: " + rep.violations.front();
    return res;
  }
  if (!shares_boundary(w, res.result)) {
    res.reason = "result shares no boundary with the diagram";
    return res;
  }
  res.accepted = true;
  return res;
}

Family parse_family(const std::string& s) {
  if (s == "series") return Family::Series;
  if (s == "parallel") return Family::Parallel;
  throw ValidationError("family must be series or parallel, got '" + s + "'");
}

std::string family_name(Family f) { return f == Family::Series ? "series" : "parallel"; }

WilsonLoopDiagram series_wld(int k, int n) {
  if (k < 1) throw ValidationError("series family needs k >= 1");
  if (n <= 2 * k) throw ValidationError("series family needs n > 2k");
  if (n < k + 4) throw ValidationError("series family needs n >= k + 4");
  WilsonLoopDiagram w{n, {}};
  for (int r = 1; r <= k; ++r) w.propagators.push_back({2 * r - 1, 2 * r + 1});
  return w;
}

WilsonLoopDiagram parallel_wld(int k, int n) {
  if (k < 1) throw ValidationError("parallel family needs k >= 1");
  if (n < k + 4) throw ValidationError("parallel family needs n >= k + 4");
  const int one_sided = std::max(0, 2 * k + 2 - n);
  WilsonLoopDiagram w{n, {{k, k + 2}}};
  for (int r = 2; r <= k; ++r) {
    const int j = r == k ? n - 1 : w.propagators.back().j + (r - 1 <= one_sided ? 0 : 1);
    w.propagators.push_back({k + 1 - r, j});
  }
  const AdmissibilityReport rep = is_admissible(w);
  if (!rep.admissible)
    throw ComputationError("parallel constructor produced an inadmissible diagram: " +
                           rep.violations.front());
  return w;
}

Permutation expected_rotation_sigma(int k, Family f) {
  std::vector<int> img(k);
  for (int r = 1; r <= k; ++r) img[r - 1] = f == Family::Series ? wrap(r - 1, k) : k + 1 - r;
  return Permutation(img);
}

namespace {

struct EndSlot {
  int row;
  bool is_j;
};

int end_edge(const WilsonLoopDiagram& w, const EndSlot& e) {
  return e.is_j ? w.row(e.row).j : w.row(e.row).i;
}

int end_depth(const WilsonLoopDiagram& w, const EndSlot& e) {
  const int other = e.is_j ? w.row(e.row).i : w.row(e.row).j;
  return ((other - end_edge(w, e)) % w.n + w.n) % w.n;
}

// Ends in boundary order: by edge, then nearest to the edge's first vertex.
std::vector<int> ordered_ends(const WilsonLoopDiagram& w, const std::vector<EndSlot>& ends) {
  std::vector<int> idx(ends.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    const int ea = end_edge(w, ends[a]), eb = end_edge(w, ends[b]);
    if (ea != eb) return ea < eb;
    return end_depth(w, ends[a]) > end_depth(w, ends[b]);
  });
  return idx;
}

struct DiagramLess {
  bool operator()(const WilsonLoopDiagram& a, const WilsonLoopDiagram& b) const {
    return std::tie(a.n, a.propagators) < std::tie(b.n, b.propagators);
  }
};

bool is_short(const WilsonLoopDiagram& w, int row) {
  const Propagator& p = w.row(row);
  const int diff = ((p.j - p.i) % w.n + w.n) % w.n;
  return diff == 2 || diff == w.n - 2;
}

// Shortest sequence of valid clockwise moves from w to w with its rows
// permuted by the family permutation.
std::optional<Rotation> rotation_by_search(const WilsonLoopDiagram& w, Family f) {
  const int k = w.k();
  const Permutation sigma = expected_rotation_sigma(k, f);
  auto is_goal = [&](const WilsonLoopDiagram& d) {
    for (int r = 1; r <= k; ++r)
      if (!same_propagator(d.row(r), w.row(sigma(r)))) return false;
    return true;
  };
  std::map<WilsonLoopDiagram, std::pair<WilsonLoopDiagram, int>, DiagramLess> parent;
  std::queue<WilsonLoopDiagram> frontier;
  frontier.push(w);
  parent.emplace(w, std::make_pair(w, 0));
  std::optional<WilsonLoopDiagram> goal;
  while (!frontier.empty() && !goal && parent.size() < 200000) {
    const WilsonLoopDiagram d = frontier.front();
    frontier.pop();
    for (int r = 1; r <= k && !goal; ++r)
      for (End e : {End::I, End::J}) {
        const MoveResult mv = clockwise_move(d, r, e);
        if (!mv.accepted || parent.count(mv.result)) continue;
        parent.emplace(mv.result, std::make_pair(d, r));
        if (is_goal(mv.result)) {
          goal = mv.result;
          break;
        }
        frontier.push(mv.result);
      }
  }
  if (!goal) return std::nullopt;
  Rotation rot;
  rot.used_fallback = true;
  rot.sigma = sigma;
  for (WilsonLoopDiagram d = *goal; !(d == w);) {
    const auto& [prev, row] = parent.at(d);
    rot.diagrams.push_back(d);
    rot.moved_rows.push_back(row);
    d = prev;
  }
  rot.diagrams.push_back(w);
  std::reverse(rot.diagrams.begin(), rot.diagrams.end());
  std::reverse(rot.moved_rows.begin(), rot.moved_rows.end());
  return rot;
}

}  // namespace

Rotation rotation_sequence(const WilsonLoopDiagram& w, Family f) {
  const AdmissibilityReport rep = is_admissible(w);
  if (!rep.admissible) throw ValidationError("inadmissible diagram: " + rep.violations.front());
  const int k = w.k(), n = w.n;
  Rotation rot;
  rot.diagrams.push_back(w);
  if (k == 0) {
    rot.sigma = Permutation::identity(0);
    return rot;
  }
  std::vector<EndSlot> ends;
  for (int r = 1; r <= k; ++r) {
    ends.push_back({r, false});
    ends.push_back({r, true});
  }
  const std::vector<int> seq = ordered_ends(w, ends);
  const int total = 2 * k;
  const int shift = k == 1 ? 0 : (f == Family::Series ? 2 : k) % total;
  std::vector<int> remaining(total), target(total);
  for (int t = 0; t < total; ++t) {
    const int e = seq[t];
    target[e] = end_edge(w, ends[seq[((t - shift) % total + total) % total]]);
    remaining[e] = shift == 0 ? n : ((end_edge(w, ends[e]) - target[e]) % n + n) % n;
  }
  // The targets must reassemble the original propagators.
  std::vector<Propagator> final_props;
  for (int r = 1; r <= k; ++r) final_props.push_back({target[2 * (r - 1)], target[2 * (r - 1) + 1]});
  for (const Propagator& fp : final_props)
    if (std::none_of(w.propagators.begin(), w.propagators.end(),
                     [&](const Propagator& q) { return same_propagator(q, fp); }))
      throw ComputationError("rotation targets do not reassemble the diagram");

  auto partner = [](int e) { return e % 2 ? e - 1 : e + 1; };
  auto try_moves = [&](const WilsonLoopDiagram& cur, const std::vector<int>& rem) {
    std::vector<std::pair<std::vector<int>, MoveResult>> out;
    for (int e : ordered_ends(cur, ends)) {
      if (rem[e] <= 0) continue;
      const int row = ends[e].row;
      const bool both = is_short(cur, row);
      if (both && rem[partner(e)] <= 0) continue;
      MoveResult mv = clockwise_move(cur, row, ends[e].is_j ? End::J : End::I);
      if (!mv.accepted) continue;
      std::vector<int> next = rem;
      --next[e];
      if (both) --next[partner(e)];
      out.emplace_back(std::move(next), std::move(mv));
    }
    return out;
  };

  WilsonLoopDiagram cur = w;
  std::vector<int> rem = remaining;
  auto done = [](const std::vector<int>& r) {
    return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
  };
  while (!done(rem)) {
    auto options = try_moves(cur, rem);
    if (!options.empty()) {
      auto& [next, mv] = options.front();
      for (int r = 1; r <= k; ++r)
        if (mv.result.row(r) != cur.row(r)) rot.moved_rows.push_back(r);
      cur = mv.result;
      rem = next;
      rot.diagrams.push_back(cur);
      continue;
    }
    // Breadth-first search over remaining-distance vectors.
    rot.used_fallback = true;
    std::map<std::vector<int>, std::pair<std::vector<int>, WilsonLoopDiagram>> parent;
    std::queue<std::pair<std::vector<int>, WilsonLoopDiagram>> frontier;
    frontier.push({rem, cur});
    parent[rem] = {rem, cur};
    std::optional<std::vector<int>> goal;
    while (!frontier.empty() && !goal && parent.size() < 500000) {
      auto [r, d] = frontier.front();
      frontier.pop();
      for (auto& [next, mv] : try_moves(d, r)) {
        if (parent.count(next)) continue;
        parent[next] = {r, d};
        if (done(next)) {
          goal = next;
          break;
        }
        frontier.push({next, mv.result});
      }
    }
    if (!goal) {
      if (auto found = rotation_by_search(w, f)) return *found;
      throw ComputationError("rotation stuck at " + cur.to_string() + " after " +
                             std::to_string(rot.diagrams.size() - 1) + " moves");
    }
    std::vector<std::vector<int>> path{*goal};
    while (path.back() != rem) path.push_back(parent.at(path.back()).first);
    std::reverse(path.begin(), path.end());
    for (std::size_t t = 1; t < path.size(); ++t) {
      const WilsonLoopDiagram& prev = rot.diagrams.back();
      for (auto& [next, mv] : try_moves(prev, path[t - 1]))
        if (next == path[t]) {
          for (int r = 1; r <= k; ++r)
            if (mv.result.row(r) != prev.row(r)) rot.moved_rows.push_back(r);
          rot.diagrams.push_back(mv.result);
          break;
        }
    }
    cur = rot.diagrams.back();
    rem = *goal;
  }

  std::vector<int> img(k, 0);
  for (int r = 1; r <= k; ++r)
    for (int s = 1; s <= k; ++s)
      if (same_propagator(cur.row(r), w.row(s))) img[r - 1] = s;
  rot.sigma = Permutation(img);
  return rot;
}

Subset chart_index(const WilsonLoopDiagram& a, const WilsonLoopDiagram& b) {
  const std::vector<Subset> ba = matroid_bases(a);
  if (a == b) {
    if (ba.empty()) throw ComputationError("diagram has no basis");
    return ba.front();
  }
  const auto witness = shares_boundary(a, b);
  if (!witness) throw ValidationError("diagrams share no boundary");
  const std::vector<Subset> bb = matroid_bases(b), bw = boundary_bases(witness->pattern);
  for (const Subset& j : k_subsets(a.n, a.k()))
    if (std::binary_search(ba.begin(), ba.end(), j) && std::binary_search(bb.begin(), bb.end(), j) &&
        std::binary_search(bw.begin(), bw.end(), j))
      return j;
  throw ComputationError("no common chart index");
}

namespace {

int det_sign(const Matrix& m, const Subset& cols) {
  return sgn(determinant(submatrix(m, cols)));
}

}  // namespace

MonodromyReport monodromy_sign(const WilsonLoopDiagram& w, Family f, std::uint64_t seed) {
  MonodromyReport rep;
  const AdmissibilityReport adm = is_admissible(w);
  if (!adm.admissible) {
    rep.structural_only = true;
    rep.diagrams = {w};
    rep.sigma = expected_rotation_sigma(w.k(), f);
    rep.wrap_sign = rep.total = rep.sigma.sign();
    rep.notes.push_back("diagram is inadmissible (" + adm.violations.front() +
                        "); sign taken from the family permutation only");
    return rep;
  }
  const Rotation rot = rotation_sequence(w, f);
  rep.diagrams = rot.diagrams;
  rep.sigma = rot.sigma;
  rep.used_fallback = rot.used_fallback;
  if (rot.used_fallback) rep.notes.push_back("rotation used the breadth-first fallback");
  const std::size_t r = rep.diagrams.size();
  if (r < 2) {
    rep.wrap_sign = rep.total = rep.sigma.sign();
    rep.notes.push_back("rotation has no moves");
    return rep;
  }
  for (std::size_t l = 0; l + 1 < r; ++l) rep.charts.push_back(chart_index(rep.diagrams[l], rep.diagrams[l + 1]));

  std::vector<Matrix> points;
  for (std::size_t l = 0; l < r; ++l) {
    try {
      points.push_back(positive_realization(rep.diagrams[l], seed + l).c);
    } catch (const ComputationError& e) {
      rep.structural_only = true;
      rep.notes.push_back("W_" + std::to_string(l + 1) + ": " + e.what());
    }
  }
  if (rep.structural_only) {
    rep.wrap_sign = rep.total = rep.sigma.sign();
    return rep;
  }
  int total = 1;
  for (std::size_t l = 1; l + 1 < r; ++l) {
    const int s = det_sign(points[l], rep.charts[l - 1]) * det_sign(points[l], rep.charts[l]);
    rep.step_signs.push_back(s);
    total *= s;
  }
  rep.wrap_sign = det_sign(points[0], rep.charts[0]) * rep.sigma.sign() *
                  det_sign(points[r - 1], rep.charts[r - 2]);
  rep.total = total * rep.wrap_sign;
  return rep;
}

}  // namespace deodhar
