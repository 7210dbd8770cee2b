// Go-networks: vertex-disjoint path families, signs and Plücker coordinates.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "deodhar/diagrams.hpp"
#include "deodhar/plucker.hpp"

namespace deodhar {

struct NetVertex {
  enum class Kind { Source, Sink, Internal };
  Kind kind = Kind::Internal;
  int label = 0;  // boundary label; 0 for internal vertices
  Box box;        // internal vertices only
  // Grid embedding: x = 1-based column from the left, y = 1-based row from
  // the top. Sources sit right of their row, sinks below their column.
  int x = 0;
  int y = 0;
};

struct NetEdge {
  int from = 0;
  int to = 0;
  bool horizontal = false;
};

struct GoNetwork {
  GoDiagram diagram;
  std::vector<NetVertex> vertices;
  std::vector<NetEdge> edges;
  std::vector<std::vector<int>> out;  // vertex -> outgoing edge ids
  std::map<int, int> boundary;        // label -> vertex id
  std::map<Box, int> internal;        // box -> vertex id
};

GoNetwork build_network(const GoDiagram& d);

struct FlowPath {
  int source = 0;  // boundary labels
  int sink = 0;
  std::vector<int> edges;  // empty when source == sink
};

using Flow = std::vector<FlowPath>;

// Families of vertex-disjoint paths from the source set onto J, in canonical
// DFS order (sources ascending, edges in construction order). `limit` > 0
// stops after that many families.
std::vector<Flow> enumerate_flows(const GoNetwork& net, const Subset& j, std::size_t limit = 0);
bool has_flow(const GoNetwork& net, const Subset& j);
int crossing_count(const GoNetwork& net, const Flow& f);
int flow_sign(const GoNetwork& net, const Flow& f);

struct WeightedGoNetwork {
  GoNetwork network;
  // Weight of the horizontal edge entering the internal vertex at a box.
  std::map<Box, Rational> weights;

  void validate() const;
  Rational edge_weight(int edge) const;
};

WeightedGoNetwork weigh(const GoNetwork& net, std::map<Box, Rational> weights);

PluckerVector plucker_of_network(const WeightedGoNetwork& wn);

// Seeded weights: distinct small rationals, nonzero on every internal vertex;
// `positive` restricts to positive values.
std::map<Box, Rational> random_weights(const GoDiagram& d, std::uint64_t seed,
                                       bool positive = false);

PluckerVector sample_point(const GoDiagram& d, const std::map<Box, Rational>& weights);
PluckerVector sample_point(const GoDiagram& d, std::uint64_t seed, bool positive = false);

// Matrix with an identity on the source columns and signed single-path sums
// on the sink columns.
Matrix realize_matrix(const WeightedGoNetwork& wn);

// The <=_1-maximal J with a flow in the network of the modified diagram.
GoDiagram i_b_test_diagram(const GoDiagram& d, const Box& b);
Subset i_b_via_network(const GoDiagram& d, const Box& b);

// Subsets with at least one flow.
std::vector<Subset> flow_subsets(const GoNetwork& net);

}  // namespace deodhar
