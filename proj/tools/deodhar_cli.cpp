// Command-line front end. JSON payloads go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 2 validation error, 3 computation error.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "deodhar/json_io.hpp"

using namespace deodhar;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Json load(const std::string& path) { return parse_json(read_input(path)); }

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ValidationError("expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

std::string plucker_ascii(const PluckerVector& p) {
  std::string out;
  for (const auto& [s, v] : p.coords) out += "D" + subset_string(s) + " = " + to_string(v) + "\n";
  return out;
}

struct Output {
  Json payload;
  std::string ascii;  // empty: pretty JSON in ascii mode too
  std::vector<std::string> diagnostics;
};

struct Options {
  std::string format = "json";
  std::string diagram, weights, pluckers, wld, box, col_set, family = "parallel";
  std::uint64_t seed = 0;
  bool has_seed = false;
  bool positive = false;
  bool network = false;
  bool star = false;
  int row = 0, vertex = 0, k = 0, n = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Go-diagrams, Deodhar components and Wilson loop diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or ascii")->check(CLI::IsMember({"json", "ascii"}));

  std::function<Output()> action;
  auto bind = [&](CLI::App* cmd, std::function<Output()> f) {
    cmd->callback([&action, f] { action = f; });
  };
  auto need_seed = [&](CLI::Option* opt) { o.has_seed = opt->count() > 0; };

  // diagram
  CLI::App* diagram = app.add_subcommand("diagram", "check, render or describe a Go-diagram");
  diagram->require_subcommand(1);
  for (const char* name : {"check", "render", "describe"}) {
    CLI::App* sub = diagram->add_subcommand(name);
    sub->add_option("--diagram", o.diagram)->required();
    const std::string which = name;
    bind(sub, [&o, which] {
      const GoDiagram d = diagram_from_json(load(o.diagram));
      if (which == "render") return Output{diagram_to_json(d), d.render() + "\n", {}};
      if (which == "describe") return Output{description_to_json(deodhar_description(d)), "", {}};
      const ValidationReport rep = validate_filling(d);
      Json offending = Json::array();
      for (const Box& b : rep.offending) offending.push_back({b.i, b.j});
      Json j = {{"valid", rep.valid},
                {"offending", offending},
                {"is_le", rep.valid && is_le_diagram(d)},
                {"dimension", d.dimension()},
                {"u", rep.u.one_line()},
                {"v", rep.v.one_line()}};
      std::string ascii = rep.valid ? "valid, dimension " + std::to_string(d.dimension()) + "\n"
                                    : "invalid at";
      if (!rep.valid) {
        for (const Box& b : rep.offending) ascii += " " + box_string(b);
        ascii += "\n";
      }
      return Output{j, ascii, {}};
    });
  }

  // plucker
  CLI::App* plucker = app.add_subcommand("plucker", "Plücker vector of a weighted Go-network");
  plucker->add_option("--diagram", o.diagram)->required();
  auto* weights_opt = plucker->add_option("--weights", o.weights);
  auto* seed_opt = plucker->add_option("--seed", o.seed);
  weights_opt->excludes(seed_opt);
  plucker->add_flag("--positive", o.positive, "positive random weights");
  plucker->add_flag("--network", o.network, "dump the weighted network instead");
  bind(plucker, [&o, seed_opt, need_seed] {
    need_seed(seed_opt);
    const GoDiagram d = diagram_from_json(load(o.diagram));
    if (!validate_filling(d).valid) throw ValidationError("not a Go-diagram");
    if (o.weights.empty() && !o.has_seed) throw ValidationError("give --weights or --seed");
    const auto w = o.weights.empty() ? random_weights(d, o.seed, o.positive)
                                     : weights_from_json(load(o.weights));
    const WeightedGoNetwork wn = weigh(build_network(d), w);
    if (o.network) return Output{network_to_json(wn), "", {}};
    const PluckerVector p = plucker_of_network(wn);
    return Output{plucker_to_json(p), plucker_ascii(p), {}};
  });

  // ib
  CLI::App* ib = app.add_subcommand("ib", "the set I_b of a box, by formula and by network");
  ib->add_option("--diagram", o.diagram)->required();
  ib->add_option("--box", o.box, "i,j")->required();
  bind(ib, [&o] {
    const GoDiagram d = diagram_from_json(load(o.diagram));
    if (!validate_filling(d).valid) throw ValidationError("not a Go-diagram");
    const std::vector<int> v = parse_ints(o.box);
    if (v.size() != 2) throw ValidationError("--box takes i,j");
    const Box b{v[0], v[1]};
    const Subset formula = i_b_formula(d, b), network = i_b_via_network(d, b);
    Output out{{{"box", v}, {"formula", formula}, {"network", network}, {"agree", formula == network}},
               "I" + box_string(b) + " = " + subset_string(formula) + "\n",
               {}};
    if (formula != network) out.diagnostics.push_back("formula and network disagree");
    return out;
  });

  // fiber
  CLI::App* fiber = app.add_subcommand("fiber", "fibers of the column-deletion projection");
  fiber->require_subcommand(1);
  for (const char* name : {"list", "top", "poset", "nonneg"}) {
    CLI::App* sub = fiber->add_subcommand(name);
    sub->add_option("--diagram", o.diagram)->required();
    const std::string which = name;
    bind(sub, [&o, which] {
      const GoDiagram d = diagram_from_json(load(o.diagram));
      if (which == "top") {
        const GoDiagram t = top_fiber_component(d).extended;
        return Output{diagram_to_json(t), t.render() + "\n", {}};
      }
      if (which == "list") {
        Json list = Json::array();
        std::string ascii;
        for (const FiberComponent& c : fiber_components(d)) {
          list.push_back(diagram_to_json(c.extended));
          ascii += c.extended.render() + "\n\n";
        }
        return Output{list, ascii, {}};
      }
      const BoundaryPoset p = which == "poset" ? fiber_poset(d) : nonneg_fiber_components(d);
      Json j = poset_to_json(p);
      if (which == "nonneg") j["boolean_lattice"] = is_boolean_lattice(p);
      return Output{j, "", {}};
    });
  }

  // classify
  CLI::App* classify = app.add_subcommand("classify", "fiber component of a point over n+1 columns");
  classify->add_option("--diagram", o.diagram)->required();
  classify->add_option("--pluckers", o.pluckers)->required();
  bind(classify, [&o] {
    const GoDiagram d = diagram_from_json(load(o.diagram));
    const PluckerVector p = plucker_from_json(load(o.pluckers), d.shape().n() + 1);
    const GoDiagram c = classify_fiber_point(d, p).extended;
    return Output{diagram_to_json(c), c.render() + "\n", {}};
  });

  // wld
  CLI::App* wld = app.add_subcommand("wld", "Wilson loop diagrams");
  wld->require_subcommand(1);
  auto wld_sub = [&](const char* name, std::function<Output(const WilsonLoopDiagram&)> f) {
    CLI::App* sub = wld->add_subcommand(name);
    sub->add_option("--wld", o.wld)->required();
    bind(sub, [&o, f] { return f(wld_from_json(load(o.wld))); });
    return sub;
  };
  wld_sub("admissible", [](const WilsonLoopDiagram& w) {
    const AdmissibilityReport r = is_admissible(w);
    std::string ascii = r.admissible ? "admissible\n" : "";
    for (const std::string& v : r.violations) ascii += v + "\n";
    return Output{{{"admissible", r.admissible}, {"violations", r.violations}}, ascii, {}};
  });
  wld_sub("cell", [](const WilsonLoopDiagram& w) {
    const SigmaCell c = sigma_cell(w);
    Json neck = Json::array();
    for (const Subset& s : c.necklace.sets) neck.push_back(s);
    return Output{{{"necklace", neck}, {"le", diagram_to_json(c.le)}, {"dimension", c.dimension}},
                  c.le.render() + "\ndimension " + std::to_string(c.dimension) + "\n",
                  {}};
  });
  wld_sub("dstar", [](const WilsonLoopDiagram& w) {
    const GoDiagram d = d_star_diagram(w);
    return Output{diagram_to_json(d), d.render() + "\n", {}};
  });
  wld_sub("positivity", [](const WilsonLoopDiagram& w) {
    const bool v = positivity_violation(w);
    return Output{{{"violation", v}}, v ? "violation\n" : "no violation\n", {}};
  });
  CLI::App* minor = wld_sub("minor", [&o](const WilsonLoopDiagram& w) {
    const Subset cols = parse_ints(o.col_set);
    const SparsePolynomial p = symbolic_minor(o.star ? c_star_matrix(w) : c_matrix(w), cols);
    return Output{{{"columns", cols}, {"minor", p.to_string()}}, p.to_string() + "\n", {}};
  });
  minor->add_option("--col-set", o.col_set, "e.g. 1,3")->required();
  minor->add_flag("--star", o.star, "use C_*(W) with column n+1");
  CLI::App* boundary = wld_sub("boundary", [&o](const WilsonLoopDiagram& w) {
    auto one = [&w](int p, int v) {
      const BoundaryMove mv = boundary_move(w, p, v);
      Json j = {{"row", p}, {"vertex", v}, {"accepted", mv.accepted}};
      if (!mv.accepted) {
        j["reason"] = mv.reason;
        return j;
      }
      j["kind"] = mv.kind == BoundaryKind::Drop ? "drop" : "meet";
      if (mv.kind == BoundaryKind::Meet) j["partner"] = mv.q;
      j["minor"] = boundary_minor(w, p, v).to_string();
      j["pattern"] = mv.pattern.canonical();
      return j;
    };
    if (o.row) return Output{one(o.row, o.vertex), "", {}};
    Json all = Json::array();
    for (int p = 1; p <= w.k(); ++p)
      for (int v : propagator_support(w.n, w.row(p))) all.push_back(one(p, v));
    return Output{all, "", {}};
  });
  boundary->add_option("--row", o.row);
  boundary->add_option("--vertex", o.vertex);
  CLI::App* realize = wld_sub("realize", [&o](const WilsonLoopDiagram& w) {
    const Realization r = positive_realization(w, o.seed);
    Json rows = Json::array();
    for (const auto& row : r.c) {
      Json jr = Json::array();
      for (const Rational& x : row) jr.push_back(to_string(x));
      rows.push_back(jr);
    }
    return Output{{{"signs", r.signs}, {"matrix", rows}, {"exhaustive", r.exhaustive},
                   {"from_cell", r.from_cell}},
                  "",
                  {}};
  });
  realize->add_option("--seed", o.seed)->required();
  CLI::App* rotate = wld_sub("rotate", [&o](const WilsonLoopDiagram& w) {
    const Rotation r = rotation_sequence(w, parse_family(o.family));
    std::string ascii;
    for (const WilsonLoopDiagram& d : r.diagrams) ascii += d.to_string() + "\n";
    ascii += "sigma " + r.sigma.one_line() + "\n";
    return Output{rotation_to_json(r), ascii, {}};
  });
  rotate->add_option("--family", o.family)->required();
  CLI::App* mono = wld_sub("monodromy", [&o](const WilsonLoopDiagram& w) {
    const MonodromyReport r = monodromy_sign(w, parse_family(o.family), o.has_seed ? o.seed : 1);
    std::string ascii;
    for (std::size_t l = 0; l < r.diagrams.size(); ++l) {
      ascii += "W" + std::to_string(l + 1) + " " + r.diagrams[l].to_string();
      if (l < r.charts.size()) ascii += "  J=" + subset_string(r.charts[l]);
      ascii += "\n";
    }
    ascii += "sigma " + r.sigma.one_line() + ", wrap " + std::to_string(r.wrap_sign) + ", total " +
             std::to_string(r.total) + (r.structural_only ? " (structural only)" : "") + "\n";
    return Output{monodromy_to_json(r), ascii, r.notes};
  });
  mono->add_option("--family", o.family)->required();
  auto* mono_seed = mono->add_option("--seed", o.seed);
  mono->parse_complete_callback([&o, mono_seed] { o.has_seed = mono_seed->count() > 0; });
  CLI::App* make = wld->add_subcommand("make", "series or parallel family instance");
  make->add_option("--family", o.family)->required();
  make->add_option("--k", o.k)->required();
  make->add_option("--n", o.n)->required();
  bind(make, [&o] {
    const Family f = parse_family(o.family);
    const WilsonLoopDiagram w = f == Family::Series ? series_wld(o.k, o.n) : parallel_wld(o.k, o.n);
    return Output{wld_to_json(w), w.to_string() + "\n", {}};
  });

  auto fail = [&](int code, const std::string& msg) {
    std::cerr << Json{{"status", "error"}, {"diagnostics", {msg}}}.dump() << "\n";
    return code;
  };
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, e.what());
  }
  try {
    const Output out = action();
    for (const std::string& d : out.diagnostics) std::cerr << d << "\n";
    if (o.format == "ascii" && !out.ascii.empty())
      std::cout << out.ascii;
    else
      std::cout << out.payload.dump(o.format == "ascii" ? 2 : -1) << "\n";
    return 0;
  } catch (const ValidationError& e) {
    return fail(2, e.what());
  } catch (const ComputationError& e) {
    return fail(3, e.what());
  } catch (const Json::exception& e) {
    return fail(2, std::string("schema violation: ") + e.what());
  }
}
