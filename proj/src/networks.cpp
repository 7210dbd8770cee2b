#include "deodhar/networks.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace deodhar {

GoNetwork build_network(const GoDiagram& d) {
  GoNetwork net;
  net.diagram = d;
  const FerrersShape& s = d.shape();
  auto add_vertex = [&](NetVertex v) {
    net.vertices.push_back(v);
    net.out.emplace_back();
    return static_cast<int>(net.vertices.size()) - 1;
  };
  for (int r = 0; r < s.k(); ++r) {
    const int label = s.vertical_steps()[r];
    net.boundary[label] =
        add_vertex({NetVertex::Kind::Source, label, {}, s.row_length(r) + 1, r + 1});
  }
  for (int c = 0; c < s.num_columns(); ++c) {
    const int label = s.column_labels()[c];
    net.boundary[label] =
        add_vertex({NetVertex::Kind::Sink, label, {}, c + 1, s.column_height(c) + 1});
  }
  for (int r = 0; r < s.k(); ++r)
    for (int c = 0; c < s.row_length(r); ++c)
      if (d.at(r, c) != Fill::White) {
        const Box b = s.box_at(r, c);
        net.internal[b] = add_vertex({NetVertex::Kind::Internal, 0, b, c + 1, r + 1});
      }
  auto add_edge = [&](int from, int to, bool horizontal) {
    net.edges.push_back({from, to, horizontal});
    net.out[from].push_back(static_cast<int>(net.edges.size()) - 1);
  };
  for (int r = 0; r < s.k(); ++r)
    for (int c = 0; c < s.row_length(r); ++c) {
      if (d.at(r, c) == Fill::White) continue;
      const int v = net.internal.at(s.box_at(r, c));
      int from = net.boundary.at(s.vertical_steps()[r]);
      for (int cc = c + 1; cc < s.row_length(r); ++cc)
        if (d.at(r, cc) == Fill::Plus) {
          from = net.internal.at(s.box_at(r, cc));
          break;
        }
      add_edge(from, v, true);
      int to = net.boundary.at(s.column_labels()[c]);
      for (int rr = r + 1; rr < s.column_height(c); ++rr)
        if (d.at(rr, c) == Fill::Plus) {
          to = net.internal.at(s.box_at(rr, c));
          break;
        }
      add_edge(v, to, false);
    }
  return net;
}

std::vector<Flow> enumerate_flows(const GoNetwork& net, const Subset& j, std::size_t limit) {
  const Subset& sources = net.diagram.shape().vertical_steps();
  if (j.size() != sources.size()) throw ValidationError("flow target has the wrong size");
  std::vector<int> from, targets;
  for (int i : sources)
    if (!contains(j, i)) from.push_back(i);
  for (int x : j) {
    if (x < 1 || x > net.diagram.shape().n()) throw ValidationError("flow target outside [n]");
    if (!contains(sources, x)) targets.push_back(x);
  }
  std::vector<Flow> result;
  if (from.size() != targets.size()) return result;

  std::vector<bool> used(net.vertices.size(), false);
  for (int i : sources) used[net.boundary.at(i)] = true;
  Flow current;
  bool stop = false;

  std::function<void(std::size_t)> next_source;
  std::function<void(std::size_t, int, std::vector<int>&)> extend;

  extend = [&](std::size_t idx, int v, std::vector<int>& path) {
    if (stop) return;
    const NetVertex& vx = net.vertices[v];
    if (vx.kind == NetVertex::Kind::Sink) {
      current.push_back({from[idx], vx.label, path});
      next_source(idx + 1);
      current.pop_back();
      return;
    }
    for (int e : net.out[v]) {
      const int w = net.edges[e].to;
      if (used[w]) continue;
      const NetVertex& wx = net.vertices[w];
      if (wx.kind == NetVertex::Kind::Sink && !contains(targets, wx.label)) continue;
      used[w] = true;
      path.push_back(e);
      extend(idx, w, path);
      path.pop_back();
      used[w] = false;
      if (stop) return;
    }
  };

  next_source = [&](std::size_t idx) {
    if (stop) return;
    if (idx == from.size()) {
      Flow f = current;
      for (int i : sources)
        if (contains(j, i)) f.push_back({i, i, {}});
      std::sort(f.begin(), f.end(),
                [](const FlowPath& a, const FlowPath& b) { return a.source < b.source; });
      result.push_back(std::move(f));
      if (limit && result.size() >= limit) stop = true;
      return;
    }
    std::vector<int> path;
    extend(idx, net.boundary.at(from[idx]), path);
  };

  next_source(0);
  return result;
}

bool has_flow(const GoNetwork& net, const Subset& j) { return !enumerate_flows(net, j, 1).empty(); }

int crossing_count(const GoNetwork& net, const Flow& f) {
  int count = 0;
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < f.size(); ++b) {
      if (a == b) continue;
      for (int h : f[a].edges) {
        const NetEdge& he = net.edges[h];
        if (!he.horizontal) continue;
        const int xa = net.vertices[he.from].x, xb = net.vertices[he.to].x;
        const int y = net.vertices[he.from].y;
        for (int v : f[b].edges) {
          const NetEdge& ve = net.edges[v];
          if (ve.horizontal) continue;
          const int x = net.vertices[ve.from].x;
          const int ya = net.vertices[ve.from].y, yb = net.vertices[ve.to].y;
          if (xb < x && x < xa && ya < y && y < yb) ++count;
        }
      }
    }
  return count;
}

int flow_sign(const GoNetwork& net, const Flow& f) { return crossing_count(net, f) % 2 ? -1 : 1; }

void WeightedGoNetwork::validate() const {
  for (const auto& [b, v] : weights)
    if (!network.internal.count(b))
      throw ValidationError("weight on box " + box_string(b) + " which has no internal vertex");
  for (const auto& [b, id] : network.internal) {
    auto it = weights.find(b);
    if (it == weights.end()) throw ValidationError("missing weight for box " + box_string(b));
    if (network.diagram.at(b) == Fill::Plus && it->second == 0)
      throw ValidationError("zero weight on the edge into Plus box " + box_string(b));
  }
}

Rational WeightedGoNetwork::edge_weight(int edge) const {
  const NetEdge& e = network.edges[edge];
  if (!e.horizontal) return 1;
  return weights.at(network.vertices[e.to].box);
}

WeightedGoNetwork weigh(const GoNetwork& net, std::map<Box, Rational> weights) {
  WeightedGoNetwork wn{net, std::move(weights)};
  wn.validate();
  return wn;
}

PluckerVector plucker_of_network(const WeightedGoNetwork& wn) {
  wn.validate();
  const FerrersShape& s = wn.network.diagram.shape();
  PluckerVector p{s.n(), s.k(), {}};
  for (const Subset& j : k_subsets(s.n(), s.k())) {
    Rational total = 0;
    for (const Flow& f : enumerate_flows(wn.network, j)) {
      Rational term = flow_sign(wn.network, f);
      for (const FlowPath& path : f)
        for (int e : path.edges) term *= wn.edge_weight(e);
      total += term;
    }
    if (total != 0) p.coords[j] = total;
  }
  return p;
}

std::map<Box, Rational> random_weights(const GoDiagram& d, std::uint64_t seed, bool positive) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 99991), den(1, 9973), coin(0, 1);
  std::map<Box, Rational> w;
  std::set<Rational> seen;
  for (const Box& b : d.shape().boxes()) {
    if (d.at(b) == Fill::White) continue;
    Rational q;
    do {
      q = Rational(num(rng), den(rng));
      q.canonicalize();
      if (!positive && coin(rng)) q = -q;
    } while (seen.count(q));
    seen.insert(q);
    w[b] = q;
  }
  return w;
}

PluckerVector sample_point(const GoDiagram& d, const std::map<Box, Rational>& weights) {
  if (!validate_filling(d).valid) throw ValidationError("not a Go-diagram");
  return plucker_of_network(weigh(build_network(d), weights));
}

PluckerVector sample_point(const GoDiagram& d, std::uint64_t seed, bool positive) {
  return sample_point(d, random_weights(d, seed, positive));
}

Matrix realize_matrix(const WeightedGoNetwork& wn) {
  wn.validate();
  const GoNetwork& net = wn.network;
  const FerrersShape& s = net.diagram.shape();
  const Subset& sources = s.vertical_steps();
  Matrix m(s.k(), std::vector<Rational>(s.n(), Rational(0)));
  for (int r = 0; r < s.k(); ++r) {
    m[r][sources[r] - 1] = 1;
    std::vector<Rational> reach(net.vertices.size(), Rational(0));
    // Edges only go left or down, so a DFS accumulation over simple paths is exact.
    std::function<void(int, const Rational&)> walk = [&](int v, const Rational& w) {
      if (net.vertices[v].kind == NetVertex::Kind::Sink) {
        reach[v] += w;
        return;
      }
      for (int e : net.out[v]) walk(net.edges[e].to, w * wn.edge_weight(e));
    };
    walk(net.boundary.at(sources[r]), Rational(1));
    for (int j : s.horizontal_steps()) {
      int between = 0;
      for (int i : sources)
        if ((i > sources[r] && i < j) || (i < sources[r] && i > j)) ++between;
      const Rational sum = reach[net.boundary.at(j)];
      m[r][j - 1] = between % 2 ? Rational(-sum) : sum;
    }
  }
  return m;
}

GoDiagram i_b_test_diagram(const GoDiagram& d, const Box& b) {
  const FerrersShape& s = d.shape();
  auto [r, c] = s.position(b);
  GoDiagram out = GoDiagram::filled(s, Fill::White);
  for (int rr = r + 1; rr < s.k(); ++rr)
    for (int cc = c + 1; cc < s.row_length(rr); ++cc) out.set(rr, cc, d.at(rr, cc));
  out.set(r, c, Fill::Plus);
  return out;
}

Subset i_b_via_network(const GoDiagram& d, const Box& b) {
  const GoDiagram test = i_b_test_diagram(d, b);
  const std::vector<Subset> cands = flow_subsets(build_network(test));
  const int n = d.shape().n();
  std::vector<Subset> maxima;
  for (const Subset& j : cands) {
    bool top = true;
    for (const Subset& other : cands) top = top && gale_leq(n, 1, other, j);
    if (top) maxima.push_back(j);
  }
  if (maxima.size() != 1)
    throw ComputationError("no unique <=_1-maximal flow set for box " + box_string(b));
  return maxima.front();
}

std::vector<Subset> flow_subsets(const GoNetwork& net) {
  const FerrersShape& s = net.diagram.shape();
  std::vector<Subset> out;
  for (const Subset& j : k_subsets(s.n(), s.k()))
    if (has_flow(net, j)) out.push_back(j);
  return out;
}

}  // namespace deodhar
