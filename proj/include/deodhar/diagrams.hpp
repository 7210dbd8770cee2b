// Ferrers shapes, Go- and Le-diagrams, the sets I_b and cell descriptions.
#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "deodhar/coxeter.hpp"
#include "deodhar/plucker.hpp"

namespace deodhar {

enum class Fill { Plus, White, Black };

char fill_char(Fill f);
Fill fill_from_char(char c);

// A box is addressed by its vertical step i (row) and horizontal step j
// (column), i < j.
struct Box {
  int i = 0;
  int j = 0;
  auto operator<=>(const Box&) const = default;
};

std::string box_string(const Box& b);

class FerrersShape {
 public:
  FerrersShape() = default;
  FerrersShape(int n, Subset vertical_steps);

  int n() const { return n_; }
  int k() const { return static_cast<int>(vertical_.size()); }
  const Subset& vertical_steps() const { return vertical_; }
  const Subset& horizontal_steps() const { return horizontal_; }
  // Column labels in left-to-right order: horizontal steps, descending.
  const std::vector<int>& column_labels() const { return columns_; }
  int row_length(int r) const { return lengths_.at(r); }
  int num_rows() const { return k(); }
  int num_columns() const { return static_cast<int>(columns_.size()); }
  // Number of rows whose length exceeds c.
  int column_height(int c) const;
  int size() const;

  bool contains(const Box& b) const;
  // 0-based (row, column) of a box; throws ValidationError if absent.
  std::pair<int, int> position(const Box& b) const;
  Box box_at(int r, int c) const;
  // Top row first, each row left to right.
  std::vector<Box> boxes() const;

  bool operator==(const FerrersShape& o) const {
    return n_ == o.n_ && vertical_ == o.vertical_;
  }

 private:
  int n_ = 0;
  Subset vertical_, horizontal_;
  std::vector<int> columns_;
  std::vector<int> lengths_;
};

// Generator index of box b: top-left is n-k, +1 per row down, -1 per column right.
int box_transposition(const FerrersShape& s, const Box& b);

// Rows bottom to top, each row right to left.
std::vector<Box> canonical_reading_order(const FerrersShape& s);
// Every box of s exactly once, each box after its right and lower neighbours.
bool is_valid_reading_order(const FerrersShape& s, const std::vector<Box>& order);
// Throws ValidationError for an invalid custom order.
Word word_of_shape(const FerrersShape& s);
Word word_of_shape(const FerrersShape& s, const std::vector<Box>& order);

// i_1..i_k j_1..j_{n-k}: the Grassmannian permutation with descent at k.
Permutation grassmannian_permutation(const FerrersShape& s);
FerrersShape shape_from_permutation(const Permutation& p, int k);

class GoDiagram {
 public:
  GoDiagram() = default;
  // rows[r] has the shape's r-th row length.
  GoDiagram(FerrersShape shape, std::vector<std::vector<Fill>> rows);
  static GoDiagram filled(const FerrersShape& shape, Fill f);

  const FerrersShape& shape() const { return shape_; }
  const std::vector<std::vector<Fill>>& rows() const { return rows_; }
  Fill at(const Box& b) const;
  Fill at(int r, int c) const { return rows_.at(r).at(c); }
  void set(const Box& b, Fill f);
  void set(int r, int c, Fill f) { rows_.at(r).at(c) = f; }

  int count(Fill f) const;
  // #Plus + #Black.
  int dimension() const { return count(Fill::Plus) + count(Fill::Black); }
  std::string render() const;

  bool operator==(const GoDiagram& o) const {
    return shape_ == o.shape_ && rows_ == o.rows_;
  }

 private:
  FerrersShape shape_;
  std::vector<std::vector<Fill>> rows_;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Box> offending;
  Permutation u;  // product of stones in reading order
  Permutation v;  // product of all boxes in reading order
};

ValidationReport validate_filling(const GoDiagram& d);
ValidationReport validate_filling(const GoDiagram& d, const std::vector<Box>& order);

// Stones are the selected letters.
SubexpressionMask subexpression_of(const GoDiagram& d);
SubexpressionMask subexpression_of(const GoDiagram& d, const std::vector<Box>& order);

// All Go-diagrams on a shape: each box is Plus/White unless a length
// decrease forces Black, so there are exactly 2^|shape| of them.
std::vector<GoDiagram> all_go_diagrams(const FerrersShape& s);
std::vector<GoDiagram> all_le_diagrams(const FerrersShape& s);

bool is_le_diagram(const GoDiagram& d);

// Boxes weakly below and weakly right of b, excluding b.
std::vector<Box> boxes_in(const FerrersShape& s, const Box& b);

// proj_{I_lambda}(u_{b^in} s_b v_{b^in}^{-1}).
Subset i_b_formula(const GoDiagram& d, const Box& b);

struct CellDescription {
  int m = 0;
  int k = 0;
  std::set<Subset> zero_set;
  std::set<Subset> nonzero_set;
  std::set<Subset> positive_set;
  std::set<Subset> nonneg_set;

  bool disjoint() const;
  bool operator==(const CellDescription&) const = default;
};

// Exact check of a point against a description. Sign classes are tested up
// to one global sign.
bool satisfies(const CellDescription& c, const PluckerVector& p);

CellDescription deodhar_description(const GoDiagram& d);

struct GrassmannNecklace {
  int n = 0;
  int k = 0;
  std::vector<Subset> sets;  // I_1..I_n

  void validate() const;
  bool operator==(const GrassmannNecklace&) const = default;
};

enum class NecklaceFlavor { Cell, Stratum };

// Cell: zero off the positroid, > 0 on it. Stratum: zero off the positroid,
// nonzero on the necklace sets, others free.
CellDescription necklace_description(const GrassmannNecklace& neck, NecklaceFlavor f);
CellDescription closure_description(const CellDescription& c);

// Bases of the positroid of a necklace: J with I_m <=_m J for all m.
std::vector<Subset> positroid_bases(const GrassmannNecklace& neck);
// I_m = <=_m-minimum of a basis list; throws ComputationError if no minimum.
GrassmannNecklace necklace_from_bases(int n, int k, const std::vector<Subset>& bases);

// {u(n-k+1), ..., u(n)} for u the stone permutation.
Subset richardson_set(const GoDiagram& d);

// Decorated permutation of a Le-diagram from its pipe dream (fixed points for
// empty rows and columns).
Permutation le_permutation(const GoDiagram& d);
GrassmannNecklace le_to_necklace(const GoDiagram& d);
GoDiagram necklace_to_le(const GrassmannNecklace& neck);

}  // namespace deodhar
