// Permutations of [n], words in the simple transpositions s_i = (i, i+1),
// subexpressions and shifted Gale orders. All indices are 1-based.
#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace deodhar {

// Bad input (malformed object, violated precondition).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A well-formed request whose computation cannot be completed.
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sorted ascending, 1-based.
using Subset = std::vector<int>;

class Permutation {
 public:
  Permutation() = default;
  // images[i-1] = p(i); throws ValidationError unless a bijection of [n].
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Parses one-line notation: "3214" for n < 10, otherwise "3,2,1,4".
  static Permutation parse(const std::string& text);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i - 1); }
  const std::vector<int>& images() const { return images_; }

  // (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  // this * s_i: swaps the entries in positions i and i+1.
  Permutation times_generator(int i) const;
  int length() const;
  int sign() const { return length() % 2 == 0 ? 1 : -1; }
  // Image of a set of positions, sorted.
  Subset project(const Subset& positions) const;
  std::string one_line() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

struct Word {
  int n = 0;
  std::vector<int> letters;

  void validate() const;
  Word prefix(int len) const;
};

struct SubexpressionMask {
  Word word;
  std::vector<bool> selected;

  void validate() const;
  std::string bits() const;
};

Permutation evaluate_word(const Word& w);
bool is_reduced(const Word& w);

// The permutation of the selected letters, prefix of length `len` (default: all).
Permutation selected_product(const SubexpressionMask& m, int len = -1);
bool is_distinguished(const SubexpressionMask& m);
bool is_positive(const SubexpressionMask& m);

// Unique positive subexpression of the reduced word v evaluating to u,
// built right to left. Throws ComputationError when u is not below v.
SubexpressionMask positive_subexpression(const Word& v, const Permutation& u);

// Every mask of w that evaluates to u and is positive (exhaustive).
std::vector<SubexpressionMask> positive_masks_exhaustive(const Word& w,
                                                         const Permutation& u);

// Shifted Gale order on k-subsets of [n] with respect to the cyclic order
// starting at i.
bool gale_leq(int n, int i, const Subset& a, const Subset& b);
bool gale_less(int n, int i, const Subset& a, const Subset& b);

// All k-subsets of [n] in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);
Subset complement(int n, const Subset& s);
std::string subset_string(const Subset& s);
bool contains(const Subset& s, int x);

}  // namespace deodhar
