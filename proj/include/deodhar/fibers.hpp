// Fibers of the projection deleting the last column, Gr(k, n+1) -> Gr(k, n).
#pragma once

#include <utility>
#include <vector>

#include "deodhar/diagrams.hpp"
#include "deodhar/plucker.hpp"

namespace deodhar {

// Same vertical steps over [n+1]; column n+1 is the new leftmost column.
FerrersShape extend_shape(const FerrersShape& s);
// `column` lists the new boxes top to bottom.
GoDiagram extend_diagram(const GoDiagram& base, const std::vector<Fill>& column);
GoDiagram delete_leftmost_column(const GoDiagram& extended);

struct FiberComponent {
  GoDiagram base;
  GoDiagram extended;

  std::vector<Fill> new_column() const;
};

std::vector<FiberComponent> fiber_components(const GoDiagram& d);
FiberComponent top_fiber_component(const GoDiagram& d);
// The component containing a point over n+1 columns whose projection lies in
// the base component.
FiberComponent classify_fiber_point(const GoDiagram& base, const PluckerVector& point);

struct BoundaryPoset {
  std::vector<GoDiagram> nodes;
  std::vector<std::pair<int, int>> covers;  // (upper, lower)

  // Count of nodes per dimension, from the largest dimension down.
  std::vector<int> rank_profile() const;
};

BoundaryPoset fiber_poset(const GoDiagram& d);
// Le-diagram components of the fiber of a Le-diagram.
BoundaryPoset nonneg_fiber_components(const GoDiagram& d);
// Rows whose new box may hold a Plus without breaking the Le-property.
std::vector<int> le_free_rows(const GoDiagram& d);

bool is_boolean_lattice(const BoundaryPoset& p);

// Deletes the last column; throws ComputationError when the rank drops.
Matrix project_point(const Matrix& m);

}  // namespace deodhar
