#include "deodhar/json_io.hpp"

namespace deodhar {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ValidationError(std::string("field '") + key + "' has the wrong type");
  }
}

Rational value_of(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ValidationError("rational values must be strings or integers");
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

GoDiagram diagram_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  const int k = field<int>(j, "k");
  const Subset steps = field<Subset>(j, "vertical_steps");
  if (static_cast<int>(steps.size()) != k) throw ValidationError("vertical_steps must have k entries");
  const FerrersShape shape(n, steps);
  const auto filling = field<std::vector<std::vector<std::string>>>(j, "filling");
  if (static_cast<int>(filling.size()) != k) throw ValidationError("filling must have k rows");
  std::vector<std::vector<Fill>> rows;
  for (const auto& row : filling) {
    std::vector<Fill> r;
    for (const std::string& cell : row) {
      if (cell.size() != 1) throw ValidationError("filling entries are single characters");
      r.push_back(fill_from_char(cell[0]));
    }
    rows.push_back(std::move(r));
  }
  return GoDiagram(shape, rows);
}

Json diagram_to_json(const GoDiagram& d) {
  Json rows = Json::array();
  for (const auto& row : d.rows()) {
    Json r = Json::array();
    for (Fill f : row) r.push_back(std::string(1, fill_char(f)));
    rows.push_back(r);
  }
  return {{"n", d.shape().n()},
          {"k", d.shape().k()},
          {"vertical_steps", d.shape().vertical_steps()},
          {"filling", rows}};
}

std::map<Box, Rational> weights_from_json(const Json& j) {
  const Json list = field<Json>(j, "weights");
  if (!list.is_array()) throw ValidationError("weights must be a list");
  std::map<Box, Rational> out;
  for (const Json& e : list) {
    const auto box = field<std::vector<int>>(e, "box");
    if (box.size() != 2) throw ValidationError("box must be [i, j]");
    if (!e.contains("value")) throw ValidationError("missing field 'value'");
    if (!out.emplace(Box{box[0], box[1]}, value_of(e["value"])).second)
      throw ValidationError("duplicate weight for box " + box_string({box[0], box[1]}));
  }
  return out;
}

Json weights_to_json(const std::map<Box, Rational>& w) {
  Json list = Json::array();
  for (const auto& [b, v] : w) list.push_back({{"box", {b.i, b.j}}, {"value", to_string(v)}});
  return {{"weights", list}};
}

Json plucker_to_json(const PluckerVector& p) {
  Json out = Json::array();
  for (const auto& [s, v] : p.coords) out.push_back({{"subset", s}, {"value", to_string(v)}});
  return out;
}

PluckerVector plucker_from_json(const Json& j, int m) {
  if (!j.is_array()) throw ValidationError("Plücker list must be an array");
  PluckerVector p{m, -1, {}};
  for (const Json& e : j) {
    Subset s = field<Subset>(e, "subset");
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ValidationError("subsets must be strictly increasing");
    if (s.empty() || s.front() < 1 || s.back() > m) throw ValidationError("subset label out of range");
    if (p.k < 0) p.k = static_cast<int>(s.size());
    if (static_cast<int>(s.size()) != p.k) throw ValidationError("subsets of different sizes");
    if (!e.contains("value")) throw ValidationError("missing field 'value'");
    const Rational v = value_of(e["value"]);
    if (v != 0) p.coords[s] = v;
  }
  if (p.k < 0) throw ValidationError("empty Plücker list");
  return p;
}

Json description_to_json(const CellDescription& c) {
  auto list = [](const std::set<Subset>& s) {
    Json out = Json::array();
    for (const Subset& x : s) out.push_back(x);
    return out;
  };
  return {{"m", c.m},
          {"k", c.k},
          {"zero", list(c.zero_set)},
          {"nonzero", list(c.nonzero_set)},
          {"positive", list(c.positive_set)},
          {"nonneg", list(c.nonneg_set)}};
}

Json network_to_json(const WeightedGoNetwork& wn) {
  const GoNetwork& net = wn.network;
  Json vertices = Json::array();
  for (std::size_t v = 0; v < net.vertices.size(); ++v) {
    const NetVertex& x = net.vertices[v];
    Json e = {{"id", v}, {"x", x.x}, {"y", x.y}};
    switch (x.kind) {
      case NetVertex::Kind::Source: e["kind"] = "source"; e["label"] = x.label; break;
      case NetVertex::Kind::Sink: e["kind"] = "sink"; e["label"] = x.label; break;
      case NetVertex::Kind::Internal: e["kind"] = "internal"; e["box"] = {x.box.i, x.box.j}; break;
    }
    vertices.push_back(e);
  }
  Json edges = Json::array();
  for (std::size_t t = 0; t < net.edges.size(); ++t) {
    const NetEdge& e = net.edges[t];
    const NetVertex &a = net.vertices[e.from], &b = net.vertices[e.to];
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"horizontal", e.horizontal},
                     {"span", {{a.x, a.y}, {b.x, b.y}}},
                     {"weight", to_string(wn.edge_weight(static_cast<int>(t)))}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

Json poset_to_json(const BoundaryPoset& p) {
  Json nodes = Json::array();
  for (const GoDiagram& d : p.nodes) nodes.push_back(diagram_to_json(d));
  Json covers = Json::array();
  for (auto [a, b] : p.covers) covers.push_back({a, b});
  return {{"nodes", nodes}, {"covers", covers}, {"rank_profile", p.rank_profile()}};
}

WilsonLoopDiagram wld_from_json(const Json& j) {
  WilsonLoopDiagram w;
  w.n = field<int>(j, "n");
  if (w.n < 1) throw ValidationError("n must be positive");
  for (const auto& p : field<std::vector<std::vector<int>>>(j, "propagators")) {
    if (p.size() != 2) throw ValidationError("propagators are pairs [i, j]");
    if (p[0] < 1 || p[0] > w.n || p[1] < 1 || p[1] > w.n)
      throw ValidationError("propagator edge outside [1, n]");
    w.propagators.push_back({p[0], p[1]});
  }
  return w;
}

Json wld_to_json(const WilsonLoopDiagram& w) {
  Json props = Json::array();
  for (const Propagator& p : w.propagators) props.push_back({p.i, p.j});
  return {{"n", w.n}, {"propagators", props}};
}

Json rotation_to_json(const Rotation& r) {
  Json steps = Json::array();
  for (const WilsonLoopDiagram& w : r.diagrams) steps.push_back(wld_to_json(w));
  return {{"diagrams", steps},
          {"moved_rows", r.moved_rows},
          {"sigma", r.sigma.one_line()},
          {"used_fallback", r.used_fallback}};
}

Json monodromy_to_json(const MonodromyReport& r) {
  Json steps = Json::array();
  for (const WilsonLoopDiagram& w : r.diagrams) steps.push_back(wld_to_json(w));
  return {{"diagrams", steps},
          {"charts", r.charts},
          {"step_signs", r.step_signs},
          {"sigma", r.sigma.one_line()},
          {"wrap_sign", r.wrap_sign},
          {"total", r.total},
          {"structural_only", r.structural_only},
          {"used_fallback", r.used_fallback},
          {"notes", r.notes}};
}

}  // namespace deodhar
