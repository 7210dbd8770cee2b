// Wilson loop diagrams: admissibility, C(W), Sigma(W), boundary moves,
// rotations and the monodromy sign of the column bundle.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deodhar/diagrams.hpp"
#include "deodhar/plucker.hpp"

namespace deodhar {

// Edge e joins vertices e and e+1 (n+1 = 1). Orientation is kept as given.
struct Propagator {
  int i = 0;
  int j = 0;
  auto operator<=>(const Propagator&) const = default;
};

struct WilsonLoopDiagram {
  int n = 0;
  std::vector<Propagator> propagators;  // row order is significant

  int k() const { return static_cast<int>(propagators.size()); }
  const Propagator& row(int p) const { return propagators.at(p - 1); }
  std::string to_string() const;
  bool operator==(const WilsonLoopDiagram&) const = default;
};

// Cyclic label in [1, n].
int wrap(int x, int n);
Subset propagator_support(int n, const Propagator& p);
// Union of the supports of the given 1-based rows.
Subset support(const WilsonLoopDiagram& w, const std::vector<int>& rows);
bool crosses(int n, const Propagator& a, const Propagator& b);
bool same_propagator(const Propagator& a, const Propagator& b);

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<std::string> violations;
};

AdmissibilityReport is_admissible(const WilsonLoopDiagram& w);
// Clause (2) alone: every P with |P| >= min_size has |V(P)| >= |P| + 3.
std::optional<std::string> support_violation(int n, const std::vector<Subset>& supports,
                                             std::size_t min_size);

struct Variable {
  int p = 0;  // row, 1-based
  int q = 0;  // column, 1-based
  auto operator<=>(const Variable&) const = default;
};

std::string variable_name(const Variable& v);

class SparsePolynomial {
 public:
  using Monomial = std::vector<std::pair<Variable, int>>;  // sorted, exponents > 0

  SparsePolynomial() = default;
  static SparsePolynomial constant(const Rational& c);
  static SparsePolynomial variable(const Variable& v);

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational evaluate(const std::map<Variable, Rational>& values) const;
  std::string to_string() const;
  bool operator==(const SparsePolynomial&) const = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

struct SymbolicEntry {
  bool nonzero = false;
  int sign = 1;
};

struct SymbolicMatrix {
  int k = 0;
  int m = 0;
  std::vector<std::vector<SymbolicEntry>> entries;  // entry (p, q) is sign * c_{p,q}

  std::vector<Subset> row_supports() const;
};

SymbolicMatrix pattern_matrix(int m, const std::vector<Subset>& row_supports);
SymbolicMatrix c_matrix(const WilsonLoopDiagram& w);
// Adds column n+1, unconstrained in every row.
SymbolicMatrix c_star_matrix(const WilsonLoopDiagram& w);

SparsePolynomial symbolic_minor(const SymbolicMatrix& m, const Subset& cols);
// J with a nonzero symbolic minor of C(W).
std::vector<Subset> matroid_bases(const WilsonLoopDiagram& w);
// J admitting a matching of rows onto J inside the row supports.
std::vector<Subset> transversal_bases(int m, const std::vector<Subset>& supports);

struct SigmaCell {
  GrassmannNecklace necklace;
  GoDiagram le;
  int dimension = 0;
};

SigmaCell sigma_cell(const WilsonLoopDiagram& w);
GoDiagram d_star_diagram(const WilsonLoopDiagram& w);
// Some column of the Le-diagram of W has a Plus strictly above a WhiteStone.
bool positivity_violation(const WilsonLoopDiagram& w);

struct Realization {
  std::vector<std::vector<int>> signs;  // per row, over the sorted support
  Matrix c;                             // k x n
  bool exhaustive = false;              // found only by the exhaustive fallback
  bool from_cell = false;               // built from a positive point of Sigma(W)
};

// Signs making every Leibniz term of every minor nonnegative, then seeded
// positive magnitudes. When no such pattern exists, a positive point of the
// positroid cell is cut down to the row supports. The result is checked
// exactly; throws ComputationError when both routes fail.
Realization positive_realization(const WilsonLoopDiagram& w, std::uint64_t seed);

// Zero pattern of a boundary matrix: row supports plus an optional vanishing
// 2x2 minor on columns (edge, edge+1) of two rows.
struct BoundaryPattern {
  int n = 0;
  std::vector<Subset> supports;
  int rel_p = 0;  // 0 when there is no relation
  int rel_q = 0;
  int rel_edge = 0;

  // Row-order independent form used for comparison.
  std::string canonical() const;
};

enum class BoundaryKind { Drop, Meet };

struct BoundaryMove {
  bool accepted = false;
  std::string reason;
  BoundaryKind kind = BoundaryKind::Drop;
  int p = 0;
  int v = 0;
  int q = 0;     // Meet only
  int edge = 0;  // edge carrying the moved end
  BoundaryPattern pattern;
};

BoundaryMove boundary_move(const WilsonLoopDiagram& w, int p, int v);
// c_{p,v}, or c_{p,e}c_{q,e+1} - c_{q,e}c_{p,e+1}; throws for rejected moves.
SparsePolynomial boundary_minor(const WilsonLoopDiagram& w, int p, int v);
// Nonzero maximal minors of a generic point of the boundary pattern.
std::vector<Subset> boundary_bases(const BoundaryPattern& b, std::uint64_t seed = 7);

struct BoundaryWitness {
  int p = 0, v = 0;
  int p2 = 0, v2 = 0;
  BoundaryPattern pattern;
};

std::optional<BoundaryWitness> shares_boundary(const WilsonLoopDiagram& a,
                                               const WilsonLoopDiagram& b);

enum class End { I, J };

struct MoveResult {
  bool accepted = false;
  std::string reason;
  WilsonLoopDiagram result;
};

// Moves one end of row p one edge clockwise (both ends for short propagators).
// Accepted only if the result is admissible and shares a boundary with w.
MoveResult clockwise_move(const WilsonLoopDiagram& w, int p, End end);

enum class Family { Series, Parallel };

Family parse_family(const std::string& s);
std::string family_name(Family f);

WilsonLoopDiagram series_wld(int k, int n);
WilsonLoopDiagram parallel_wld(int k, int n);
// The row permutation a completed rotation must produce.
Permutation expected_rotation_sigma(int k, Family f);

struct Rotation {
  std::vector<WilsonLoopDiagram> diagrams;
  std::vector<int> moved_rows;  // row moved at each step
  Permutation sigma;            // final row m is initial row sigma(m)
  bool used_fallback = false;
};

Rotation rotation_sequence(const WilsonLoopDiagram& w, Family f);

Subset chart_index(const WilsonLoopDiagram& a, const WilsonLoopDiagram& b);

struct MonodromyReport {
  std::vector<WilsonLoopDiagram> diagrams;
  std::vector<Subset> charts;   // J_l for the pair (W_l, W_{l+1})
  std::vector<int> step_signs;  // l = 2 .. r-1
  Permutation sigma;
  int wrap_sign = 1;
  int total = 1;
  bool structural_only = false;
  bool used_fallback = false;
  std::vector<std::string> notes;
};

MonodromyReport monodromy_sign(const WilsonLoopDiagram& w, Family f, std::uint64_t seed = 1);

}  // namespace deodhar
