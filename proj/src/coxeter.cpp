#include "deodhar/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace deodhar {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x])
      throw ValidationError("not a permutation of [" + std::to_string(n) + "]");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  return Permutation(std::move(id));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> images;
  if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) {
    std::string token;
    std::stringstream in(text);
    while (std::getline(in, token, ',')) {
      std::stringstream t(token);
      int x;
      while (t >> x) images.push_back(x);
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw ValidationError("bad permutation: " + text);
      images.push_back(c - '0');
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (n() != other.n()) throw ValidationError("permutation size mismatch");
  std::vector<int> out(n());
  for (int i = 0; i < n(); ++i) out[i] = images_[other.images_[i] - 1];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(n());
  for (int i = 0; i < n(); ++i) out[images_[i] - 1] = i + 1;
  return Permutation(std::move(out));
}

Permutation Permutation::times_generator(int i) const {
  if (i < 1 || i >= n()) throw ValidationError("generator index out of range");
  Permutation out = *this;
  std::swap(out.images_[i - 1], out.images_[i]);
  return out;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

Subset Permutation::project(const Subset& positions) const {
  Subset out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back((*this)(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Permutation::one_line() const {
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (n() >= 10 && i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

void Word::validate() const {
  if (n < 1) throw ValidationError("word needs n >= 1");
  for (int l : letters)
    if (l < 1 || l >= n)
      throw ValidationError("invalid word: letter " + std::to_string(l) +
                            " outside [1," + std::to_string(n - 1) + "]");
}

Word Word::prefix(int len) const {
  return Word{n, std::vector<int>(letters.begin(), letters.begin() + len)};
}

void SubexpressionMask::validate() const {
  word.validate();
  if (selected.size() != word.letters.size())
    throw ValidationError("mask length does not match word length");
}

std::string SubexpressionMask::bits() const {
  std::string out;
  for (bool b : selected) out += b ? '1' : '0';
  return out;
}

Permutation evaluate_word(const Word& w) {
  w.validate();
  Permutation p = Permutation::identity(w.n);
  for (int l : w.letters) p = p.times_generator(l);
  return p;
}

bool is_reduced(const Word& w) {
  w.validate();
  Permutation p = Permutation::identity(w.n);
  int len = 0;
  for (int l : w.letters) {
    p = p.times_generator(l);
    if (p.length() != ++len) return false;
  }
  return true;
}

Permutation selected_product(const SubexpressionMask& m, int len) {
  m.validate();
  if (len < 0) len = static_cast<int>(m.selected.size());
  Permutation p = Permutation::identity(m.word.n);
  for (int i = 0; i < len; ++i)
    if (m.selected[i]) p = p.times_generator(m.word.letters[i]);
  return p;
}

bool is_distinguished(const SubexpressionMask& m) {
  m.validate();
  Permutation u = Permutation::identity(m.word.n);
  for (std::size_t i = 0; i < m.selected.size(); ++i) {
    Permutation t = u.times_generator(m.word.letters[i]);
    if (t.length() < u.length() && !m.selected[i]) return false;
    if (m.selected[i]) u = t;
  }
  return true;
}

bool is_positive(const SubexpressionMask& m) {
  if (!is_distinguished(m)) return false;
  Word sub{m.word.n, {}};
  for (std::size_t i = 0; i < m.selected.size(); ++i)
    if (m.selected[i]) sub.letters.push_back(m.word.letters[i]);
  return is_reduced(sub);
}

SubexpressionMask positive_subexpression(const Word& v, const Permutation& u) {
  v.validate();
  if (u.n() != v.n) throw ValidationError("permutation size does not match word");
  if (!is_reduced(v)) throw ValidationError("positive_subexpression needs a reduced word");
  SubexpressionMask m{v, std::vector<bool>(v.letters.size(), false)};
  Permutation x = u;
  for (int i = static_cast<int>(v.letters.size()) - 1; i >= 0; --i) {
    Permutation t = x.times_generator(v.letters[i]);
    if (t.length() < x.length()) {
      m.selected[i] = true;
      x = t;
    }
  }
  if (x != Permutation::identity(v.n) || !is_positive(m))
    throw ComputationError("no positive subexpression: " + u.one_line() +
                           " is not below the word's permutation");
  return m;
}

std::vector<SubexpressionMask> positive_masks_exhaustive(const Word& w,
                                                         const Permutation& u) {
  w.validate();
  std::vector<SubexpressionMask> out;
  const std::size_t len = w.letters.size();
  for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
    SubexpressionMask m{w, std::vector<bool>(len)};
    for (std::size_t i = 0; i < len; ++i) m.selected[i] = (bits >> i) & 1UL;
    if (selected_product(m) == u && is_positive(m)) out.push_back(std::move(m));
  }
  return out;
}

bool gale_leq(int n, int i, const Subset& a, const Subset& b) {
  if (a.size() != b.size()) throw ValidationError("Gale order needs equal sizes");
  auto key = [&](int x) { return ((x - i) % n + n) % n; };
  std::vector<int> ka, kb;
  for (int x : a) ka.push_back(key(x));
  for (int x : b) kb.push_back(key(x));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  for (std::size_t m = 0; m < ka.size(); ++m)
    if (ka[m] > kb[m]) return false;
  return true;
}

bool gale_less(int n, int i, const Subset& a, const Subset& b) {
  return gale_leq(n, i, a, b) && a != b;
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Subset complement(int n, const Subset& s) {
  Subset out;
  for (int x = 1; x <= n; ++x)
    if (!contains(s, x)) out.push_back(x);
  return out;
}

std::string subset_string(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

bool contains(const Subset& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

}  // namespace deodhar
