// Exact rationals, point matrices and Plücker vectors.
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "deodhar/coxeter.hpp"

namespace deodhar {

using Rational = mpq_class;

// "num/den" in lowest terms, den >= 1.
std::string to_string(const Rational& q);
// Accepts "a", "a/b" (any sign), throws ValidationError otherwise.
Rational parse_rational(const std::string& text);

using Matrix = std::vector<std::vector<Rational>>;

Rational determinant(Matrix m);
// Columns listed in `cols` (1-based), in the given order.
Matrix submatrix(const Matrix& m, const std::vector<int>& cols);
int rank(Matrix m);

struct PluckerVector {
  int m = 0;
  int k = 0;
  std::map<Subset, Rational> coords;  // absent subsets are zero

  Rational at(const Subset& s) const;
  bool is_zero() const;
  // Zero set as a sorted list.
  std::vector<Subset> support() const;
  std::vector<Subset> zeros() const;
  // Drops subsets that contain any label > new_m.
  PluckerVector restrict_to(int new_m) const;
};

// Equal up to one global nonzero scalar.
bool projectively_equal(const PluckerVector& a, const PluckerVector& b);

// All k x k minors of a k x m matrix; throws ComputationError if rank < k.
PluckerVector minors_of_matrix(const Matrix& m);

}  // namespace deodhar
