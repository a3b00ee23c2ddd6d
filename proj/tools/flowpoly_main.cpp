// flowpoly: exact computations on flow polytopes of signed graphs.
//
// Subcommands: kpf, dyn-kpf, ehrhart, volume, subdivide, vertices, cry,
// morris, report, dim. All arithmetic is exact; output is byte-deterministic.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include "flowpoly/flowpoly.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using flowpoly::BigInt;
using flowpoly::BigRat;
using flowpoly::Netflow;
using flowpoly::SignedGraph;
using nlohmann::json;

std::string rat_str(const BigRat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

SignedGraph load_graph(const std::string& path) {
  if (path == "-") return flowpoly::parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw flowpoly::Error("io", "cannot open graph file: " + path);
  return flowpoly::parse_graph(in);
}

// Threads cap: parsed for forward compatibility; computations run serially.
int thread_cap() {
  const char* env = std::getenv("FLOWPOLY_THREADS");
  if (!env) return 0;
  try {
    int v = std::stoi(env);
    if (v < 1) throw flowpoly::Error("bad-threads", "FLOWPOLY_THREADS must be positive");
    return v;
  } catch (const std::exception&) {
    throw flowpoly::Error("bad-threads", "FLOWPOLY_THREADS must be a positive integer");
  }
}

struct Emitter {
  bool as_json{false};
  std::string command;
  json input = json::object();
  json result;
  std::vector<std::string> lines;        // human output
  std::vector<std::string> diagnostics;  // shown in both modes

  void flush() const {
    if (as_json) {
      json out;
      out["command"] = command;
      out["input"] = input;
      out["result"] = result;
      out["diagnostics"] = diagnostics;
      std::cout << out.dump() << "\n";
    } else {
      for (const std::string& l : lines) std::cout << l << "\n";
      for (const std::string& d : diagnostics) std::cerr << d << "\n";
    }
  }
};

flowpoly::KpfEngine parse_engine(const std::string& s) {
  if (s == "auto") return flowpoly::KpfEngine::automatic;
  if (s == "dp") return flowpoly::KpfEngine::dp;
  if (s == "series") return flowpoly::KpfEngine::series;
  throw flowpoly::Error("bad-engine", "unknown engine: " + s);
}

json flows_json(const std::vector<std::vector<long long>>& flows) {
  json arr = json::array();
  for (const auto& f : flows) arr.push_back(f);
  return arr;
}

std::string flow_line(const std::vector<long long>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i)
    s += (i ? "," : "") + std::to_string(f[i]);
  return s;
}

// ---------------------------------------------------------------------------

struct Args {
  std::string graph_path;
  std::string netflow;
  std::string engine = "auto";
  bool flows = false;
  std::size_t limit = 10000;
  // ehrhart
  long long dilate = -1;
  bool poly = false;
  std::string parity = "all";
  // volume / vertices
  std::string method = "auto";
  int max_edges = 20;
  // subdivide
  bool randomize = false;
  unsigned seed = 0;
  std::size_t trails = 0;
  // cry
  std::string family = "A";
  int n = 2;
  std::string what = "all";
  // morris
  int m = 1;
  long long a = 0, b = 0, two_c = 1, two_d = 0;
  bool ct = false, closed = false, both = false;
  // report
  int n_max = 4;
  std::string out_path;
};

void run_kpf(const Args& args, Emitter& em) {
  SignedGraph g = load_graph(args.graph_path);
  Netflow a = flowpoly::parse_netflow(args.netflow, g.nv);
  em.input = {{"graph", flowpoly::serialize_graph_string(g)},
              {"netflow", a},
              {"engine", args.engine}};
  BigInt count = flowpoly::kpf(g, a, parse_engine(args.engine));
  em.result = json{{"count", count.str()}};
  em.lines.push_back(count.str());
  if (args.flows) {
    auto en = flowpoly::enumerate_integer_flows(g, a, args.limit);
    em.result["flows"] = flows_json(en.flows);
    em.result["truncated"] = en.truncated;
    for (const auto& f : en.flows) em.lines.push_back(flow_line(f));
    if (en.truncated)
      em.diagnostics.push_back("flow list truncated at limit " +
                               std::to_string(args.limit));
  }
}

void run_dyn_kpf(const Args& args, Emitter& em, bool decompose) {
  SignedGraph g = load_graph(args.graph_path);
  Netflow a = flowpoly::parse_netflow(args.netflow, g.nv);
  em.input = {{"graph", flowpoly::serialize_graph_string(g)},
              {"netflow", a},
              {"engine", args.engine}};
  BigInt count = flowpoly::dyn_kpf(g, a, parse_engine(args.engine));
  em.result = json{{"count", count.str()}};
  em.lines.push_back(count.str());
  if (decompose) {
    auto parts = flowpoly::dyn_decompose(g, a);
    json jp = json::array();
    for (const auto& p : parts) {
      jp.push_back({{"left", p.left_flows},
                    {"netflow", p.netflow},
                    {"count", p.count.str()}});
      em.lines.push_back("left=" + flow_line(p.left_flows) +
                         " netflow=" + flow_line(p.netflow) +
                         " count=" + p.count.str());
    }
    em.result["decomposition"] = jp;
  }
  if (args.flows) {
    auto en = flowpoly::enumerate_dynamic_flows(g, a, args.limit);
    json jf = json::array();
    for (const auto& f : en.flows) {
      json one = {{"edge_flow", f.edge_flow}, {"right", json::array()}};
      for (const auto& r : f.right_flows) one["right"].push_back(r);
      jf.push_back(one);
      em.lines.push_back(flow_line(f.edge_flow));
    }
    em.result["flows"] = jf;
    em.result["truncated"] = en.truncated;
  }
}

void run_ehrhart(const Args& args, Emitter& em) {
  SignedGraph g = load_graph(args.graph_path);
  Netflow a = flowpoly::parse_netflow(args.netflow, g.nv);
  em.input = {{"graph", flowpoly::serialize_graph_string(g)},
              {"netflow", a}};
  if (args.poly) {
    auto parity = args.parity == "even" ? flowpoly::EhrhartParity::even
                                        : flowpoly::EhrhartParity::all;
    auto p = flowpoly::ehrhart_polynomial_fit(g, a, parity,
                                              parse_engine(args.engine));
    json jc = json::array();
    std::string line;
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
      jc.push_back(rat_str(p.coefficients[i]));
      line += (i ? " " : "") + rat_str(p.coefficients[i]);
    }
    em.result = json{{"coefficients", jc}, {"quasi_warning", p.quasi_warning}};
    em.lines.push_back(line);
    if (p.quasi_warning)
      em.diagnostics.push_back(
          "warning: sampled values fit only a quasi-polynomial");
  } else {
    if (args.dilate < 0)
      throw flowpoly::Error("bad-dilate", "ehrhart needs --t or --poly");
    BigInt v = flowpoly::ehrhart(g, a, args.dilate, parse_engine(args.engine));
    em.result = json{{"value", v.str()}};
    em.lines.push_back(v.str());
  }
}

void run_volume(const Args& args, Emitter& em) {
  SignedGraph g = load_graph(args.graph_path);
  Netflow a = flowpoly::parse_netflow(args.netflow, g.nv);
  em.input = {{"graph", flowpoly::serialize_graph_string(g)},
              {"netflow", a},
              {"method", args.method}};
  flowpoly::VolumeReport r;
  if (args.method == "negative") {
    r = flowpoly::volume_negative(g);
  } else if (args.method == "signed") {
    r = flowpoly::volume_signed_2e1(g);
  } else if (args.method == "ehrhart") {
    r = flowpoly::volume_via_ehrhart(g, a);
  } else if (args.method == "crosscheck") {
    r = flowpoly::volume_crosscheck(g, a);
  } else if (args.method == "auto") {
    try {
      r = flowpoly::volume_crosscheck(g, a);
    } catch (const flowpoly::Error& e) {
      if (e.code() != "wrong-theorem") throw;
      r = flowpoly::volume_via_ehrhart(g, a);
    }
  } else {
    throw flowpoly::Error("bad-method", "unknown volume method: " + args.method);
  }
  em.result = json{{"volume", r.volume.str()},
                   {"dimension", r.dimension},
                   {"method", r.method}};
  em.lines.push_back(r.volume.str());
  for (const std::string& d : r.diagnostics) em.diagnostics.push_back(d);
}

void run_subdivide(const Args& args, Emitter& em) {
  SignedGraph g = load_graph(args.graph_path);
  Netflow a;
  if (args.netflow.empty()) {
    a.assign(g.nv, 0);
    if (g.has_positive_part()) {
      a[0] = 2;
    } else {
      a[0] = 1;
      a[g.nv - 1] = -1;
    }
  } else {
    a = flowpoly::parse_netflow(args.netflow, g.nv);
  }
  em.input = {{"graph", flowpoly::serialize_graph_string(g)},
              {"netflow", a},
              {"seed", args.seed}};
  flowpoly::SubdivideOptions opts;
  opts.randomize_orders = args.randomize;
  opts.seed = args.seed;
  opts.trail_limit = args.trails;
  auto r = flowpoly::subdivide_full(g, a, opts);
  em.result = json{{"leaves", r.leaves.str()}};
  em.lines.push_back(r.leaves.str());
  if (!r.trails.empty()) {
    json jt = json::array();
    for (const auto& trail : r.trails) {
      json steps = json::array();
      for (const auto& s : trail)
        steps.push_back({{"vertex", s.vertex},
                         {"tree", s.tree.parts},
                         {"right_positive", s.tree.right_positive}});
      jt.push_back(steps);
    }
    em.result["trails"] = jt;
  }
}

void run_vertices(const Args& args, Emitter& em) {
  SignedGraph g = load_graph(args.graph_path);
  Netflow a = flowpoly::parse_netflow(args.netflow, g.nv);
  em.input = {{"graph", flowpoly::serialize_graph_string(g)},
              {"netflow", a},
              {"method", args.method}};
  bool two_e1 = a[0] == 2;
  for (int i = 1; i < g.nv; ++i) two_e1 = two_e1 && a[i] == 0;
  std::vector<flowpoly::RationalFlow> verts;
  std::string method = args.method;
  if (method == "auto") method = two_e1 ? "forms" : "general";
  if (method == "forms") {
    if (!two_e1)
      throw flowpoly::Error("wrong-netflow",
                            "structural enumeration needs netflow (2,0,...,0)");
    verts = flowpoly::enumerate_vertices_2e1(g);
  } else if (method == "general") {
    verts = flowpoly::enumerate_vertices_general(g, a, args.max_edges);
  } else {
    throw flowpoly::Error("bad-method", "unknown vertex method: " + method);
  }
  json jv = json::array();
  em.lines.push_back(std::to_string(verts.size()));
  for (const auto& v : verts) {
    json one = json::array();
    std::string line;
    for (std::size_t i = 0; i < v.size(); ++i) {
      one.push_back(rat_str(v[i]));
      line += (i ? "," : "") + rat_str(v[i]);
    }
    jv.push_back(one);
    em.lines.push_back(line);
  }
  em.result = json{{"count", verts.size()}, {"vertices", jv}};
}

void run_dim(const Args& args, Emitter& em) {
  SignedGraph g = load_graph(args.graph_path);
  Netflow a = flowpoly::parse_netflow(args.netflow, g.nv);
  em.input = {{"graph", flowpoly::serialize_graph_string(g)}, {"netflow", a}};
  auto d = flowpoly::dimension(g, a);
  if (d.is_empty) {
    em.result = json{{"empty", true}};
    em.lines.push_back("empty");
  } else {
    em.result = json{{"empty", false}, {"dimension", d.dim}};
    em.lines.push_back(std::to_string(d.dim));
  }
}

void run_cry(const Args& args, Emitter& em) {
  flowpoly::Family fam;
  if (args.family == "A") fam = flowpoly::Family::A;
  else if (args.family == "B") fam = flowpoly::Family::B;
  else if (args.family == "C") fam = flowpoly::Family::C;
  else if (args.family == "D") fam = flowpoly::Family::D;
  else throw flowpoly::Error("bad-family", "family must be A, B, C or D");
  if (args.n < 2) throw flowpoly::Error("bad-params", "--n must be at least 2");
  em.input = {{"family", args.family}, {"n", args.n}, {"what", args.what}};
  const bool type_a = fam == flowpoly::Family::A;
  SignedGraph g =
      flowpoly::family_graph({fam, type_a ? args.n + 1 : args.n});
  Netflow a(g.nv, 0);
  if (type_a) {
    a[0] = 1;
    a[g.nv - 1] = -1;
  } else {
    a[0] = 2;
  }
  em.result = json::object();
  if (args.what == "volume" || args.what == "all") {
    flowpoly::VolumeReport r;
    if (type_a)
      r = flowpoly::volume_negative(g);
    else if (fam == flowpoly::Family::D)
      r = flowpoly::volume_signed_2e1(g);
    else
      r = flowpoly::volume_via_ehrhart(g, a);
    em.result["volume"] = r.volume.str();
    em.result["volume_method"] = r.method;
    em.lines.push_back(args.what == "all" ? "volume " + r.volume.str()
                                          : r.volume.str());
  }
  if (args.what == "vertices" || args.what == "all") {
    BigInt count;
    if (type_a) {
      if (g.nv <= 5)
        count = flowpoly::enumerate_vertices_general(g, a).size();
      else
        count = flowpoly::detail::count_path_vertices(g);
    } else {
      count = flowpoly::enumerate_vertices_2e1(g).size();
    }
    em.result["vertices"] = count.str();
    em.lines.push_back(args.what == "all" ? "vertices " + count.str()
                                          : count.str());
  }
  if (args.what != "volume" && args.what != "vertices" && args.what != "all")
    throw flowpoly::Error("bad-params", "--what must be volume, vertices or all");
}

void run_morris(const Args& args, Emitter& em) {
  flowpoly::MorrisParams p;
  p.m = args.m;
  p.a = args.a;
  p.b = args.b;
  p.two_c = args.two_c;
  p.two_d = args.two_d;
  em.input = {{"m", p.m}, {"a", p.a}, {"b", p.b},
              {"two_c", p.two_c}, {"two_d", p.two_d}};
  bool want_ct = args.ct || args.both;
  bool want_closed = args.closed || args.both || (!args.ct && !args.both);
  em.result = json::object();
  if (want_closed) {
    std::string v = rat_str(flowpoly::morris_closed(p));
    em.result["closed"] = v;
    em.lines.push_back(args.both ? "closed " + v : v);
  }
  if (want_ct) {
    std::string v = rat_str(flowpoly::morris_ct(p));
    em.result["ct"] = v;
    em.lines.push_back(args.both ? "ct " + v : v);
  }
  if (args.both && em.result["closed"] != em.result["ct"])
    em.diagnostics.push_back("warning: closed form and constant term differ");
}

void run_report(const Args& args, Emitter& em) {
  em.input = {{"n_max", args.n_max}};
  auto rows = flowpoly::conjecture_report(args.n_max);
  json jr = json::array();
  for (const auto& r : rows) {
    jr.push_back({{"family", r.family},
                  {"n", r.n},
                  {"quantity", r.quantity},
                  {"method", r.method},
                  {"value", r.value},
                  {"conjectured", r.conjectured},
                  {"match", r.match}});
    std::string line = r.family + " n=" + std::to_string(r.n) + " " +
                       r.quantity + " [" + r.method + "]";
    if (!r.value.empty()) line += " value=" + r.value;
    if (!r.conjectured.empty()) line += " conjectured=" + r.conjectured;
    if (!r.match.empty()) line += " match=" + r.match;
    em.lines.push_back(line);
  }
  em.result = jr;
  if (!args.out_path.empty()) {
    std::ofstream out(args.out_path);
    if (!out)
      throw flowpoly::Error("io", "cannot write report: " + args.out_path);
    out << jr.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact flow polytopes of signed graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Args args;
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON object instead of plain text");

  auto add_graph = [&](CLI::App* c, bool need_netflow = true) {
    c->add_option("graph", args.graph_path, "graph file ('-' for stdin)")
        ->required();
    auto* o = c->add_option("--netflow", args.netflow,
                            "comma-separated netflow vector");
    if (need_netflow) o->required();
  };

  auto* c_kpf = app.add_subcommand("kpf", "Kostant partition function");
  add_graph(c_kpf);
  c_kpf->add_option("--engine", args.engine, "auto|dp|series");
  c_kpf->add_flag("--flows", args.flows, "list the integer flows");
  c_kpf->add_option("--limit", args.limit, "flow enumeration cap");

  auto* c_dyn = app.add_subcommand("dyn-kpf", "dynamic Kostant partition function");
  add_graph(c_dyn);
  c_dyn->add_option("--engine", args.engine, "auto|dp|series");
  bool decompose = false;
  c_dyn->add_flag("--decompose", decompose, "per-left-flow decomposition");
  c_dyn->add_flag("--flows", args.flows, "list the dynamic flows");
  c_dyn->add_option("--limit", args.limit, "flow enumeration cap");

  auto* c_ehr = app.add_subcommand("ehrhart", "Ehrhart counting / polynomial fit");
  add_graph(c_ehr);
  c_ehr->add_option("--t", args.dilate, "dilation factor");
  c_ehr->add_flag("--poly", args.poly, "fit the Ehrhart polynomial");
  c_ehr->add_option("--parity", args.parity, "all|even (dilations sampled)");
  c_ehr->add_option("--engine", args.engine, "auto|dp|series");

  auto* c_vol = app.add_subcommand("volume", "normalized volume");
  add_graph(c_vol);
  c_vol->add_option("--method", args.method,
                    "auto|negative|signed|ehrhart|crosscheck");

  auto* c_sub = app.add_subcommand("subdivide", "full subdivision leaf count");
  add_graph(c_sub, false);
  c_sub->add_flag("--randomize", args.randomize, "randomize elimination orders");
  c_sub->add_option("--seed", args.seed, "seed for randomized orders");
  c_sub->add_option("--trails", args.trails, "record up to N leaf trails");

  auto* c_vtx = app.add_subcommand("vertices", "vertex enumeration");
  add_graph(c_vtx);
  c_vtx->add_option("--method", args.method, "auto|forms|general");
  c_vtx->add_option("--max-edges", args.max_edges,
                    "edge cap for the support search");

  auto* c_cry = app.add_subcommand("cry", "named polytope families");
  c_cry->add_option("--family", args.family, "A|B|C|D")->required();
  c_cry->add_option("--n", args.n, "family index")->required();
  c_cry->add_option("--what", args.what, "volume|vertices|all");

  auto* c_mor = app.add_subcommand("morris", "Morris constant-term identity");
  c_mor->add_option("--m", args.m)->required();
  c_mor->add_option("--a", args.a)->required();
  c_mor->add_option("--b", args.b)->required();
  c_mor->add_option("--two-c", args.two_c, "2c (c is a half integer)")
      ->required();
  c_mor->add_option("--two-d", args.two_d, "2d for the generalized kernel");
  c_mor->add_flag("--ct", args.ct, "constant-term extraction");
  c_mor->add_flag("--closed", args.closed, "closed Gamma-product form");
  c_mor->add_flag("--both", args.both, "both, with a consistency check");

  auto* c_rep = app.add_subcommand("report", "conjecture verification report");
  c_rep->add_option("--n-max", args.n_max, "largest family index")->required();
  c_rep->add_option("--out", args.out_path, "write the JSON rows to a file");

  auto* c_dim = app.add_subcommand("dim", "dimension of the flow polytope");
  add_graph(c_dim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Emitter em;
  em.as_json = as_json;
  try {
    thread_cap();
    if (app.got_subcommand(c_kpf)) em.command = "kpf", run_kpf(args, em);
    else if (app.got_subcommand(c_dyn))
      em.command = "dyn-kpf", run_dyn_kpf(args, em, decompose);
    else if (app.got_subcommand(c_ehr)) em.command = "ehrhart", run_ehrhart(args, em);
    else if (app.got_subcommand(c_vol)) em.command = "volume", run_volume(args, em);
    else if (app.got_subcommand(c_sub)) em.command = "subdivide", run_subdivide(args, em);
    else if (app.got_subcommand(c_vtx)) em.command = "vertices", run_vertices(args, em);
    else if (app.got_subcommand(c_cry)) em.command = "cry", run_cry(args, em);
    else if (app.got_subcommand(c_mor)) em.command = "morris", run_morris(args, em);
    else if (app.got_subcommand(c_rep)) em.command = "report", run_report(args, em);
    else if (app.got_subcommand(c_dim)) em.command = "dim", run_dim(args, em);
  } catch (const flowpoly::Error& e) {
    if (as_json) {
      json out;
      out["command"] = em.command;
      out["input"] = em.input;
      out["error"] = {{"code", e.code()}, {"message", e.what()}};
      std::cout << out.dump() << "\n";
    }
    std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    return 1;
  }
  em.flush();
  return 0;
}
