#include "arcflow/atl.hpp"
#include "arcflow/fibered.hpp"
#include "arcflow/fixture.hpp"
#include "arcflow/flow_graph.hpp"
#include "arcflow/frobenius.hpp"
#include "arcflow/normalized.hpp"
#include "arcflow/triangulation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace arcflow;

constexpr int kExitMismatch = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNotFibration = 3;
constexpr int kExitBoundary = 4;
constexpr int kExitInternal = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Input {
  FlowGraph graph;
  bool from_triangulation = false;
  int faces = 0;
  int tetrahedra = 0;
  int edge_classes_count = 0;
};

// The two input kinds are distinguished by their leading directive.
Input load_input(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  std::string line, first;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    if (ls >> first) break;
    first.clear();
  }
  Input inp;
  if (first == "tetrahedra") {
    TautTriangulation t = parse_triangulation(text);
    inp.graph = build_flow_graph(t);
    inp.from_triangulation = true;
    inp.tetrahedra = t.tetrahedra;
    inp.faces = static_cast<int>(face_table(t).sides.size());
    inp.edge_classes_count = static_cast<int>(edge_classes(t).size());
  } else if (first == "rank") {
    inp.graph = parse_drift_graph(text);
    validate_veering(inp.graph);
  } else {
    throw ParseError("'" + path + "': expected a triangulation (tetrahedra ...) or a "
                     "drift graph (rank ...)");
  }
  return inp;
}

std::string ray_list(const std::vector<IntVec>& rays) {
  std::string s;
  for (const IntVec& r : rays) {
    if (!s.empty()) s += " ";
    s += to_string(r);
  }
  return s;
}

std::string drift_set(const std::vector<IntVec>& drifts) {
  std::string s = "{";
  for (size_t i = 0; i < drifts.size(); ++i) {
    if (i) s += ",";
    s += to_string(drifts[i]);
  }
  return s + "}";
}

void print_cone_report(std::ostream& os, const FlowArtifacts& art) {
  os << "rank " << art.graph.rank << "\n";
  os << "B = " << drift_set(art.fibered.drifts) << "\n";
  os << "cone(B) rays = " << ray_list(art.fibered.cone_b.rays) << "\n";
  os << "fibered cone rays = " << ray_list(art.fibered.dual.rays) << "\n";
}

SliceContext load_slice(const std::string& path, const FiberedConeData& fc) {
  SliceFile sf = parse_slice_file(read_file(path));
  return make_slice(sf.basis, sf.norm, fc, sf.lattice);
}

RatVec parse_point(const SliceContext& slice, const std::string& spec) {
  if (spec.rfind("t=", 0) == 0) {
    if (slice.d != 1) throw DomainError("t= points require a 1-dimensional slice");
    return interval_point(slice, parse_rat(spec.substr(2)));
  }
  RatVec c = parse_rat_vector(spec);
  if (c.size() != slice.d + 1) throw DomainError("--point needs d+1 slice coordinates or t=VALUE");
  // g lives on the norm-one slice; scale the given ray representative onto it
  Rat nv = norm_value(slice, c);
  if (nv > 0) c /= nv;
  return c;
}

std::string witness_names(const FlowGraph& fg, const std::vector<int>& w) {
  std::string s;
  for (int v : w) {
    if (!s.empty()) s += " ";
    s += fg.vertices[v];
  }
  return s;
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << content;
  }
}

// ---------------------------------------------------------------- verify-example

struct Verifier {
  int failures = 0;
  void row(const std::string& name, const std::string& expected, const std::string& got) {
    bool ok = expected == got;
    std::cout << (ok ? "PASS  " : "FAIL  ") << name << ": expected " << expected;
    if (!ok) std::cout << ", got " << got;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS  " : "FAIL  ") << name;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

RatVec rv2(Rat a, Rat b) {
  RatVec v(2);
  v << a, b;
  return v;
}

int cmd_verify_example() {
  Verifier v;

  TautTriangulation t = parse_triangulation(fixture::kSimplestBraidTri);
  FlowGraph from_tri = build_flow_graph(t);
  FlowGraph from_drift = parse_drift_graph(fixture::kSimplestBraidDrift);
  validate_veering(from_drift);

  v.row("tetrahedra", "4", std::to_string(t.tetrahedra));
  v.row("faces", "8", std::to_string(face_table(t).sides.size()));
  v.row("edge classes", "4", std::to_string(edge_classes(t).size()));
  v.row("homology rank", "2", std::to_string(from_tri.rank));

  FlowArtifacts art_tri = make_artifacts(std::move(from_tri));
  FlowArtifacts art = make_artifacts(std::move(from_drift));
  v.row("B", "{(-2,2),(-1,1),(0,1),(1,1),(2,2)}", drift_set(art_tri.fibered.drifts));
  v.row("B agrees between input kinds", drift_set(art.fibered.drifts),
        drift_set(art_tri.fibered.drifts));
  v.row("fibered cone rays", "(-1,-1) (1,-1)", ray_list(art_tri.fibered.dual.rays));
  v.row("minimal cycles", "6", std::to_string(art.cycles.size()));
  v.row("minimal good paths", "28", std::to_string(art.paths.size()));

  SliceFile sf = parse_slice_file(fixture::kSimplestBraidSlice);
  SliceContext slice = make_slice(sf.basis, sf.norm, art.fibered, sf.lattice);

  auto ell_expected = [](long k) -> Rat {
    if (k == 1) return Rat(2, 3);
    if (k == 2) return Rat(1, 6);
    if (k == 3) return Rat(1, 9);
    if (k == 4) return Rat(1, 13);
    Rat r = (k % 2 == 1) ? Rat(2, (k + 1) * (k + 1)) : Rat(2, k * k + 2 * k - 1);
    r.canonicalize();
    return r;
  };
  for (long k = 1; k <= 21; ++k) {
    RatVec phi = (k == 1) ? rv2(0, -1) : rv2(1, Rat(-k));
    Rat expect = ell_expected(k);
    AtlResult a = atl(art, phi);
    AtlResult b = atl(art_tri, phi);
    std::string name =
        "ell(phi_{" + std::string(k == 1 ? "0,-1" : "1,-" + std::to_string(k)) + "})";
    v.row(name, to_string(expect), to_string(a.ell));
    v.row(name + " [triangulation path]", to_string(expect), to_string(b.ell));
  }

  for (long k = 2; k <= 20; ++k) {
    MuResult m = mu(art, slice, rv2(1, Rat(-k)), 1);
    Rat expect;
    if (k == 2) expect = Rat(8, 3);
    else if (k == 3) expect = 4;
    else if (k == 4) expect = Rat(64, 13);
    else if (k % 2 == 1) expect = Rat(8 * k * k, (k + 1) * (k + 1));
    else expect = Rat(8 * k * k, k * k + 2 * k - 1);
    expect.canonicalize();
    v.row("mu_1(1/" + std::to_string(k) + ")", to_string(expect), to_string(m.mu_exact));
    GValue g = g_value(slice, interval_point(slice, Rat(1, k)), 1);
    Rat gexp = Rat(8 * k * k, k * k - 1);
    gexp.canonicalize();
    v.row("g(1/" + std::to_string(k) + ")", to_string(gexp), to_string(g.value));
    v.check("mu_1(1/" + std::to_string(k) + ") < g", m.mu_exact < g.value);
  }
  {
    MuResult m = mu(art, slice, rv2(0, -1), 1);
    v.row("mu_1(0)", "8/3", to_string(m.mu_exact));
    GValue g = g_value(slice, interval_point(slice, Rat(0)), 1);
    v.row("g(0)", "8", to_string(g.value));
  }

  // a random coboundary leaves every reported value unchanged
  {
    std::vector<IntVec> c;
    long seed = 12345;
    for (size_t i = 0; i < art.graph.vertices.size(); ++i) {
      seed = (seed * 1103515245 + 12345) % 1000;
      IntVec ci(2);
      ci << Int(seed % 7 - 3), Int((seed / 7) % 7 - 3);
      c.push_back(ci);
    }
    FlowArtifacts art2 = make_artifacts(apply_coboundary(art.graph, c));
    v.row("coboundary: B", drift_set(art.fibered.drifts), drift_set(art2.fibered.drifts));
    SliceContext slice2 = make_slice(sf.basis, sf.norm, art2.fibered, sf.lattice);
    MuResult m1 = mu(art, slice, rv2(1, -6), 1);
    MuResult m2 = mu(art2, slice2, rv2(1, -6), 1);
    v.row("coboundary: mu_1(1/6)", to_string(m1.mu_exact), to_string(m2.mu_exact));
  }

  if (v.failures == 0) {
    std::cout << "verify-example: all rows match\n";
    return 0;
  }
  std::cout << "verify-example: " << v.failures << " mismatching row(s)\n";
  return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact asymptotic translation lengths in the arc complex from layered "
               "veering triangulation data"};
  app.require_subcommand(1);

  std::string input_path, slice_path, phi_spec, point_spec, out_path, format = "csv";
  std::string target_spec = "0,-1", dir_spec = "1,0";
  int depth = 8, d = 1;
  long kmin = 5, kmax = 41;
  bool with_float = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input_path, "triangulation or drift-graph file")->required();
  };

  CLI::App* c_ingest = app.add_subcommand("ingest", "validate input and report its invariants");
  add_input(c_ingest);
  CLI::App* c_graph = app.add_subcommand("graph", "print the weighted graph W(phi)");
  add_input(c_graph);
  c_graph->add_option("--phi", phi_spec, "class as comma rationals, e.g. 0,-1")->required();
  CLI::App* c_cone = app.add_subcommand("cone", "print B and the fibered cone");
  add_input(c_cone);
  CLI::App* c_atl = app.add_subcommand("atl", "asymptotic translation length of a class");
  add_input(c_atl);
  c_atl->add_option("--phi", phi_spec)->required();
  CLI::App* c_mu = app.add_subcommand("mu", "normalized translation length mu_d");
  add_input(c_mu);
  c_mu->add_option("--phi", phi_spec)->required();
  c_mu->add_option("--slice", slice_path)->required();
  c_mu->add_option("--d", d);
  c_mu->add_flag("--float", with_float);
  CLI::App* c_g = app.add_subcommand("g", "bounding function g at a point of the slice");
  add_input(c_g);
  c_g->add_option("--point", point_spec, "t=VALUE or d+1 slice coordinates")->required();
  c_g->add_option("--slice", slice_path)->required();
  c_g->add_option("--d", d);
  c_g->add_flag("--float", with_float);
  CLI::App* c_scan = app.add_subcommand("scan", "mu_d and g over the rational points of the slice");
  add_input(c_scan);
  c_scan->add_option("--slice", slice_path)->required();
  c_scan->add_option("--depth", depth);
  c_scan->add_option("--d", d);
  c_scan->add_option("--out", out_path);
  c_scan->add_option("--format", format)->check(CLI::IsMember({"csv", "tsv"}));
  c_scan->add_flag("--float", with_float);
  CLI::App* c_conv = app.add_subcommand("converge", "mu_d along k*target + dir against g");
  add_input(c_conv);
  c_conv->add_option("--slice", slice_path)->required();
  c_conv->add_option("--target", target_spec, "limit ray, comma rationals");
  c_conv->add_option("--dir", dir_spec, "transverse direction, comma rationals");
  c_conv->add_option("--kmin", kmin);
  c_conv->add_option("--kmax", kmax);
  c_conv->add_option("--d", d);
  c_conv->add_option("--out", out_path);
  c_conv->add_option("--format", format)->check(CLI::IsMember({"csv", "tsv"}));
  c_conv->add_flag("--float", with_float);
  CLI::App* c_verify =
      app.add_subcommand("verify-example", "check the shipped worked example end to end");

  CLI11_PARSE(app, argc, argv);

  try {
    char sep = format == "tsv" ? '\t' : ';';
    if (app.got_subcommand(c_verify)) return cmd_verify_example();

    if (app.got_subcommand(c_ingest)) {
      Input inp = load_input(input_path);
      if (inp.from_triangulation)
        std::cout << "input: triangulation (" << inp.tetrahedra << " tetrahedra, " << inp.faces
                  << " faces, " << inp.edge_classes_count << " edge classes)\n";
      else
        std::cout << "input: drift graph (" << inp.graph.vertices.size() << " vertices, "
                  << inp.graph.triangle_edges.size() << " triangle-edges, "
                  << inp.graph.tetrahedron_edges.size() << " tetrahedron-edges)\n";
      FlowArtifacts art = make_artifacts(std::move(inp.graph));
      std::cout << "minimal cycles: " << art.cycles.size()
                << "; minimal good paths: " << art.paths.size() << "\n";
      print_cone_report(std::cout, art);
      return 0;
    }
    if (app.got_subcommand(c_cone)) {
      FlowArtifacts art = make_artifacts(load_input(input_path).graph);
      print_cone_report(std::cout, art);
      return 0;
    }
    if (app.got_subcommand(c_graph)) {
      FlowArtifacts art = make_artifacts(load_input(input_path).graph);
      IntVec phi = primitivize(parse_rat_vector(phi_spec));
      FrobeniusEngine eng(art.graph, art.cycles, art.paths, art.fibered, phi);
      WeightedGraph w = eng.weighted_graph();
      std::cout << "W(phi_bar), phi_bar = " << to_string(phi)
                << "  (weights are gauge-dependent; cycle averages are not)\n";
      for (const WeightedEdge& e : w.edges)
        std::cout << w.vertices[e.from] << " -> " << w.vertices[e.to] << "  weight "
                  << to_string(e.gauge_dependent_weight) << "\n";
      MaxMeanResult mm = max_mean_cycle(w);
      std::cout << "max mean cycle = " << to_string(mm.mean)
                << "; witness = " << witness_names(art.graph, mm.cycle) << "\n";
      std::cout << "ell = " << to_string(Rat(Rat(1) / mm.mean)) << "\n";
      return 0;
    }
    if (app.got_subcommand(c_atl)) {
      FlowArtifacts art = make_artifacts(load_input(input_path).graph);
      AtlResult r = atl(art, parse_rat_vector(phi_spec));
      std::cout << "ell = " << to_string(r.ell)
                << "; witness = " << witness_names(art.graph, r.witness) << "\n";
      return 0;
    }
    if (app.got_subcommand(c_mu)) {
      FlowArtifacts art = make_artifacts(load_input(input_path).graph);
      SliceContext slice = load_slice(slice_path, art.fibered);
      MuResult m = mu(art, slice, parse_rat_vector(phi_spec), d);
      std::cout << "phi_bar = " << to_string(m.phi_bar) << "\n";
      std::cout << "norm = " << to_string(m.norm) << "\n";
      std::cout << "ell = " << to_string(m.ell) << "\n";
      if (m.exact) {
        std::cout << "mu = " << to_string(m.mu_exact);
        if (with_float) std::cout << " (" << m.mu_exact.get_d() << ")";
      } else {
        std::cout << "mu = (" << to_string(m.radicand) << ")^(1/" << d << ")";
        if (with_float) std::cout << " (" << m.approx << ")";
      }
      std::cout << "\n";
      return 0;
    }
    if (app.got_subcommand(c_g)) {
      FlowArtifacts art = make_artifacts(load_input(input_path).graph);
      SliceContext slice = load_slice(slice_path, art.fibered);
      RatVec point = parse_point(slice, point_spec);
      GValue g = g_value(slice, point, d);
      if (g.exact) {
        std::cout << "g = " << to_string(g.value);
        if (with_float) std::cout << " (" << g.value.get_d() << ")";
      } else {
        std::cout << "g = (" << to_string(g.radicand) << ")^(1/" << d
                  << ")  [uncertified occupancy estimate " << to_string(g.minocc_estimate)
                  << "]";
        if (with_float) std::cout << " (" << g.approx << ")";
      }
      std::cout << "\n";
      return 0;
    }
    if (app.got_subcommand(c_scan)) {
      FlowArtifacts art = make_artifacts(load_input(input_path).graph);
      SliceContext slice = load_slice(slice_path, art.fibered);
      auto rows = scan(art, slice, depth, d);
      write_output(out_path, render_scan_csv(rows, sep, with_float));
      return 0;
    }
    if (app.got_subcommand(c_conv)) {
      FlowArtifacts art = make_artifacts(load_input(input_path).graph);
      SliceContext slice = load_slice(slice_path, art.fibered);
      auto rows = convergence_scan(art, slice, parse_rat_vector(target_spec),
                                   parse_rat_vector(dir_spec), kmin, kmax, d);
      write_output(out_path, render_convergence_csv(rows, sep, with_float));
      return 0;
    }
  } catch (const NotFibrationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotFibration;
  } catch (const BoundaryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBoundary;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return std::string(e.what()).rfind("internal", 0) == 0 ? kExitInternal : kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
