#include "deodhar/plucker.hpp"

#include <algorithm>

namespace deodhar {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  if (t.empty()) throw ValidationError("empty rational");
  auto is_int = [](const std::string& s) {
    std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw ValidationError("bad rational: " + text);
  if (num[0] == '+') num.erase(0, 1);
  const mpz_class d{den};
  if (d == 0) throw ValidationError("zero denominator: " + text);
  Rational q{mpz_class{num}, d};
  q.canonicalize();
  return q;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

Matrix submatrix(const Matrix& m, const std::vector<int>& cols) {
  Matrix out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (int c : cols) out[r].push_back(m[r].at(c - 1));
  return out;
}

int rank(Matrix m) {
  int r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

Rational PluckerVector::at(const Subset& s) const {
  auto it = coords.find(s);
  return it == coords.end() ? Rational(0) : it->second;
}

bool PluckerVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

std::vector<Subset> PluckerVector::support() const {
  std::vector<Subset> out;
  for (const auto& [s, v] : coords)
    if (v != 0) out.push_back(s);
  return out;
}

std::vector<Subset> PluckerVector::zeros() const {
  std::vector<Subset> out;
  for (const Subset& s : k_subsets(m, k))
    if (at(s) == 0) out.push_back(s);
  return out;
}

PluckerVector PluckerVector::restrict_to(int new_m) const {
  PluckerVector out{new_m, k, {}};
  for (const auto& [s, v] : coords)
    if (s.empty() || s.back() <= new_m) out.coords[s] = v;
  return out;
}

bool projectively_equal(const PluckerVector& a, const PluckerVector& b) {
  if (a.m != b.m || a.k != b.k) return false;
  Rational scale = 0;
  for (const Subset& s : k_subsets(a.m, a.k)) {
    Rational x = a.at(s), y = b.at(s);
    if ((x == 0) != (y == 0)) return false;
    if (x == 0) continue;
    if (scale == 0)
      scale = y / x;
    else if (y != scale * x)
      return false;
  }
  return scale != 0;
}

PluckerVector minors_of_matrix(const Matrix& m) {
  const int k = static_cast<int>(m.size());
  const int cols = k ? static_cast<int>(m[0].size()) : 0;
  PluckerVector out{cols, k, {}};
  for (const Subset& s : k_subsets(cols, k)) {
    Rational d = determinant(submatrix(m, s));
    if (d != 0) out.coords[s] = d;
  }
  if (k > 0 && out.coords.empty())
    throw ComputationError("matrix is rank deficient");
  return out;
}

}  // namespace deodhar
