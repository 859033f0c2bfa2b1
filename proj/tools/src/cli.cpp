#include "twlayout/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "twlayout/colouring.hpp"
#include "twlayout/decomposition.hpp"
#include "twlayout/drawing.hpp"
#include "twlayout/error.hpp"
#include "twlayout/generators.hpp"
#include "twlayout/json_io.hpp"
#include "twlayout/ktree_track.hpp"
#include "twlayout/oracles.hpp"
#include "twlayout/ordering.hpp"
#include "twlayout/queue_layout.hpp"
#include "twlayout/track_constructions.hpp"
#include "twlayout/track_transforms.hpp"
#include "twlayout/tree_partition.hpp"

namespace twlayout::cli {

namespace {

using io::json;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string format = "json";

  std::string family;
  int n = 0;
  int k = -1;
  int rows = 0;
  int cols = 0;
  int a = 0;
  int b = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::size_t budget = 200000;

  std::string method = "auto";
  bool wrap = false;
  std::string balance;
  bool proper = false;
  std::int64_t r = 1;
  std::string kind;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t env_limit(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(v, &end, 10);
  if (*end != '\0') throw LayoutError(ErrorKind::BadParams, std::string(name) + " must be a non-negative integer");
  return static_cast<std::size_t>(parsed);
}

OracleLimits oracle_limits() {
  OracleLimits l;
  l.queue_max_n = env_limit("TWLAYOUT_QUEUE_ORACLE_MAX_N", l.queue_max_n);
  l.track_max_n = env_limit("TWLAYOUT_TRACK_ORACLE_MAX_N", l.track_max_n);
  l.pathwidth_max_n = env_limit("TWLAYOUT_PATHWIDTH_ORACLE_MAX_N", l.pathwidth_max_n);
  l.treewidth_max_n = env_limit("TWLAYOUT_TREEWIDTH_ORACLE_MAX_N", l.treewidth_max_n);
  return l;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

json verification(const json& report) {
  return {{"ok", report.at("ok")}, {"hash", "fnv1a64:" + hex64(io::fnv1a64(report.dump()))}};
}

// Stores an artifact with its verification stamp and report; failures are
// recorded and turned into exit code 1 after the envelope is written.
struct Envelope {
  json doc = json::object();
  std::vector<std::string> failures;

  void attach(const std::string& key, json artifact, const json& report) {
    artifact["verification"] = verification(report);
    doc[key] = std::move(artifact);
    doc["reports"][key] = report;
    if (!report.at("ok").get<bool>()) failures.push_back(key + ": " + report.value("message", std::string("failed")));
  }
};

GeneratorParams generator_params(const Options& o) {
  GeneratorParams p;
  p.n = o.n;
  p.k = std::max(o.k, 0);
  p.rows = o.rows;
  p.cols = o.cols;
  p.a = o.a;
  p.b = o.b;
  p.p = o.p;
  if (o.has_seed) p.seed = o.seed;
  p.vertex_budget = o.budget;
  return p;
}

json generator_meta(const Options& o) {
  json meta = {{"family", o.family}};
  const Family f = parse_family(o.family);
  switch (f) {
    case Family::Grid:
      meta["rows"] = o.rows;
      meta["cols"] = o.cols;
      break;
    case Family::CompleteBipartite:
      meta["a"] = o.a;
      meta["b"] = o.b;
      break;
    case Family::Gk:
      meta["k"] = std::max(o.k, 0);
      break;
    case Family::RandomKTree:
      meta["k"] = std::max(o.k, 0);
      meta["n"] = o.n;
      break;
    case Family::Gnp:
      meta["n"] = o.n;
      meta["p"] = o.p;
      break;
    default:
      meta["n"] = o.n;
  }
  if (o.has_seed) meta["seed"] = o.seed;
  return meta;
}

Envelope generate_envelope(const Options& o) {
  const GeneratedGraph gen = generate(parse_family(o.family), generator_params(o));
  Envelope env;
  env.doc["meta"] = generator_meta(o);
  env.doc["graph"] = io::to_json(gen.graph);
  if (!gen.decomposition.bags.empty()) env.doc["tree_decomposition"] = io::to_json(gen.decomposition);
  return env;
}

Envelope read_envelope(const Options& o, std::istream& in) {
  if (!o.family.empty()) return generate_envelope(o);
  std::string text;
  if (o.input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(o.input);
    if (!f) throw LayoutError(ErrorKind::BadParams, "cannot open " + o.input);
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  Envelope env;
  try {
    env.doc = json::parse(text);
  } catch (const json::exception& e) {
    throw LayoutError(ErrorKind::BadParams, std::string("input is not JSON: ") + e.what());
  }
  if (!env.doc.is_object()) throw LayoutError(ErrorKind::BadParams, "input must be a JSON object");
  if (!env.doc.contains("graph")) {
    // A bare graph document is accepted as well.
    if (env.doc.contains("n") && env.doc.contains("edges")) {
      env.doc = json{{"graph", env.doc}};
    } else {
      throw LayoutError(ErrorKind::BadParams, "input has no \"graph\"");
    }
  }
  return env;
}

Graph graph_of(const Envelope& env) { return io::graph_from_json(env.doc.at("graph")); }

const json& require_artifact(const Envelope& env, const char* key) {
  if (!env.doc.contains(key)) throw LayoutError(ErrorKind::BadParams, std::string("input has no \"") + key + "\"");
  return env.doc.at(key);
}

// k for a chordal graph (max over components) together with a PEO of the
// whole graph obtained by concatenating component orders.
std::pair<int, VertexOrdering> chordal_peo(const Graph& g) {
  int k = 0;
  VertexOrdering order;
  for (const auto& comp : connected_components(g)) {
    const Subgraph sub = induced_subgraph(g, comp);
    const KTreeOrdering peo = ktree_peo(sub.graph);
    k = std::max(k, peo.k);
    for (std::size_t i = 0; i < peo.order.sequence.size(); ++i) {
      order.sequence.push_back(sub.to_parent[static_cast<std::size_t>(peo.order.sequence[i])]);
    }
  }
  return {k, order};
}

// Chordal supergraph with its k: g itself when chordal, otherwise the
// completion along a min-degree elimination.
struct ChordalCover {
  Graph graph;
  int k = 0;
};

ChordalCover chordal_cover(const Graph& g) {
  if (is_chordal(g)) return {g, chordal_peo(g).first};
  KTreeCompletion c = complete_to_ktree(g, decomposition_from_elimination(g, min_degree_elimination(g)));
  return {std::move(c.graph), c.k};
}

Colouring acyclic_colouring(const Graph& g) {
  const ChordalCover cover = chordal_cover(g);
  const auto [k, order] = chordal_peo(cover.graph);
  return acyclic_colouring_ktree(cover.graph, order, k);
}

TrackLayout track_layout_by_method(const Options& o, const Envelope& env, const Graph& g, json& info) {
  std::string method = o.method;
  if (method == "auto") method = is_forest(g) ? "tree" : "ktree";
  info["method"] = method;
  if (method == "tree") return tree_3track(g);
  if (method == "ktree") {
    if (is_chordal(g)) {
      const int k = o.k >= 0 ? o.k : chordal_peo(g).first;
      const KTreeTrackResult res = ktree_track_layout(g, k);
      info["k"] = k;
      info["t_k"] = ktree_track_bound(k);
      return res.layout;
    }
    const KTreeTrackResult res = partial_ktree_track_layout(g);
    info["k"] = res.k;
    info["t_k"] = ktree_track_bound(res.k);
    info["fill_edges"] = res.fill_edges.size();
    return res.layout;
  }
  if (method == "pathwidth") {
    const OracleLimits limits = oracle_limits();
    std::vector<Vertex> order;
    if (g.vertex_count() <= limits.pathwidth_max_n) {
      order = exact_pathwidth(g, limits.pathwidth_max_n).witness;
      info["exact"] = true;
    } else {
      order = min_degree_elimination(g);
      info["exact"] = false;
    }
    const PathDecomposition pd = path_decomposition_from_ordering(g, order);
    info["pathwidth"] = pd.width();
    return from_path_decomposition(g, pd);
  }
  if (method == "partition") {
    const int k = o.k >= 0 ? o.k : chordal_peo(g).first;
    info["k"] = k;
    return from_tree_partition(g, build_tree_partition(g, k));
  }
  if (method == "grid") {
    const json& meta = require_artifact(env, "meta");
    return grid_3track(meta.at("rows").get<int>(), meta.at("cols").get<int>());
  }
  if (method == "gk") {
    const json& meta = require_artifact(env, "meta");
    return gk_layout(meta.at("k").get<int>(), o.budget);
  }
  if (method == "queue") {
    const QueueLayout q = io::queue_layout_from_json(require_artifact(env, "queue_layout"));
    const Colouring c = acyclic_colouring(g);
    const TrackFromQueueResult res = track_from_queue(g, q, c);
    info["colours"] = res.colours;
    info["bound"] = res.bound;
    return res.layout;
  }
  throw LayoutError(ErrorKind::BadParams, "unknown track method: " + method);
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw LayoutError(ErrorKind::BadParams, "cannot write " + o.output);
  f << text;
}

int finish(const Options& o, Envelope& env, std::ostream& out, std::ostream& err) {
  emit(o, out, env.doc.dump(2) + "\n");
  for (const auto& f : env.failures) err << "verification failed: " << f << '\n';
  return env.failures.empty() ? kOk : kVerificationFailed;
}

int cmd_generate(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.family.empty()) throw LayoutError(ErrorKind::BadParams, "generate needs --family");
  Envelope env = read_envelope(o, in);
  return finish(o, env, out, err);
}

int cmd_layout_track(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Envelope env = read_envelope(o, in);
  const Graph g = graph_of(env);
  json info;
  TrackLayout layout = track_layout_by_method(o, env, g, info);
  if (o.wrap) {
    layout = wrap(g, layout);
    info["wrapped"] = true;
  }
  if (!o.balance.empty()) {
    layout = balance(layout, parse_rational(o.balance));
    info["balanced"] = o.balance;
  }
  if (o.proper) layout = improper_to_proper(layout);
  const auto report = verify_track_layout(g, layout);
  json artifact = io::to_json(layout);
  artifact["construction"] = info;
  env.attach("track_layout", artifact, io::to_json(report));
  return finish(o, env, out, err);
}

int cmd_layout_queue(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Envelope env = read_envelope(o, in);
  const Graph g = graph_of(env);
  std::string method = o.method;
  if (method == "auto") method = is_forest(g) ? "tree" : "track";
  QueueLayout q;
  if (method == "tree") {
    q = tree_1queue(g);
  } else if (method == "track") {
    TrackLayout layout;
    if (env.doc.contains("track_layout")) {
      layout = io::track_layout_from_json(env.doc.at("track_layout"));
    } else {
      Options tmp = o;
      tmp.method = "auto";
      json info;
      layout = track_layout_by_method(tmp, env, g, info);
    }
    q = queue_from_track(g, layout);
  } else if (method == "ordering") {
    std::vector<Vertex> order;
    if (g.vertex_count() > 0) {
      for (const auto& comp : connected_components(g)) {
        const Subgraph sub = induced_subgraph(g, comp);
        for (Vertex v : lex_bfs(sub.graph, min_degree_vertex(sub.graph)).sequence) {
          order.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
        }
      }
    }
    q = queues_from_ordering(g, order);
  } else {
    throw LayoutError(ErrorKind::BadParams, "unknown queue method: " + method);
  }
  json artifact = io::to_json(q);
  artifact["construction"] = {{"method", method}};
  env.attach("queue_layout", artifact, io::to_json(verify_queue_layout(g, q)));
  return finish(o, env, out, err);
}

int cmd_layout_stack(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Envelope env = read_envelope(o, in);
  const Graph g = graph_of(env);
  const StackLayout s = tree_1stack(g);
  env.attach("stack_layout", io::to_json(s), io::to_json(verify_stack_layout(g, s)));
  return finish(o, env, out, err);
}

int cmd_layout_partition(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Envelope env = read_envelope(o, in);
  const Graph g = graph_of(env);
  const int k = o.k >= 0 ? o.k : chordal_peo(g).first;
  const TreePartition tp = build_tree_partition(g, k);
  json artifact = io::to_json(tp);
  artifact["k"] = k;
  env.attach("tree_partition", artifact, io::to_json(verify_tree_partition(g, tp, k)));
  return finish(o, env, out, err);
}

int cmd_draw(const std::string& kind, const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Envelope env = read_envelope(o, in);
  const Graph g = graph_of(env);
  auto track_layout = [&] {
    if (env.doc.contains("track_layout")) return io::track_layout_from_json(env.doc.at("track_layout"));
    Options tmp = o;
    tmp.method = "auto";
    json info;
    TrackLayout l = track_layout_by_method(tmp, env, g, info);
    const auto report = verify_track_layout(g, l);
    json artifact = io::to_json(l);
    artifact["construction"] = info;
    env.attach("track_layout", artifact, io::to_json(report));
    return l;
  };
  Drawing3D d;
  if (kind == "moment") {
    d = moment_curve(g);
  } else if (kind == "cohen") {
    d = cohen_mod_p(g);
  } else if (kind == "track") {
    d = draw_from_track(g, track_layout());
  } else if (kind == "balanced") {
    d = draw_balanced(g, track_layout());
  } else if (kind == "aspect") {
    d = draw_aspect(g, track_layout(), o.r);
  } else {
    throw LayoutError(ErrorKind::BadParams, "unknown drawing kind: " + kind);
  }
  const auto report = verify_drawing(g, d);
  if (o.format == "obj" || o.format == "svg") {
    std::ostringstream text;
    if (o.format == "obj") {
      write_obj(text, g, d);
    } else {
      write_svg(text, g, d);
    }
    emit(o, out, text.str());
    if (!report.ok) {
      err << "verification failed: drawing: " << report.message << '\n';
      return kVerificationFailed;
    }
    return kOk;
  }
  if (o.format != "json") throw LayoutError(ErrorKind::BadParams, "draw supports --format json, obj or svg");
  json artifact = io::to_json(d);
  artifact["construction"] = {{"kind", kind}};
  if (kind == "aspect") artifact["construction"]["r"] = o.r;
  env.attach("drawing", artifact, io::to_json(report));
  return finish(o, env, out, err);
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Envelope env = read_envelope(o, in);
  const Graph g = graph_of(env);
  const std::string kind = o.kind;
  json result = json::object();
  auto want = [&](const char* k) { return kind == k || (kind == "all" && env.doc.contains(k)); };
  bool any = false;
  if (want("track_layout") || kind == "track") {
    result["track_layout"] = io::to_json(verify_track_layout(g, io::track_layout_from_json(require_artifact(env, "track_layout"))));
    any = true;
  }
  if (want("queue_layout") || kind == "queue") {
    result["queue_layout"] = io::to_json(verify_queue_layout(g, io::queue_layout_from_json(require_artifact(env, "queue_layout"))));
    any = true;
  }
  if (want("stack_layout") || kind == "stack") {
    result["stack_layout"] = io::to_json(verify_stack_layout(g, io::stack_layout_from_json(require_artifact(env, "stack_layout"))));
    any = true;
  }
  if (want("tree_partition") || kind == "partition") {
    const json& art = require_artifact(env, "tree_partition");
    const int k = o.k >= 0 ? o.k : art.value("k", 0);
    result["tree_partition"] = io::to_json(verify_tree_partition(g, io::tree_partition_from_json(art), k));
    any = true;
  }
  if (want("drawing") || kind == "drawing") {
    result["drawing"] = io::to_json(verify_drawing(g, io::drawing_from_json(require_artifact(env, "drawing"))));
    any = true;
  }
  if (!any && kind != "all") throw LayoutError(ErrorKind::BadParams, "unknown verify kind: " + kind);
  bool ok = true;
  for (auto& [key, report] : result.items()) {
    ok = ok && report.at("ok").get<bool>();
    report["hash"] = verification(report).at("hash");
  }
  result["ok"] = ok;
  emit(o, out, result.dump(2) + "\n");
  if (!ok) err << "verification failed\n";
  return ok ? kOk : kVerificationFailed;
}

int cmd_oracle(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Envelope env = read_envelope(o, in);
  const Graph g = graph_of(env);
  const OracleLimits limits = oracle_limits();
  json result = {{"kind", o.kind}};
  json report;
  if (o.kind == "queue-number") {
    const auto r = exact_queue_number(g, limits.queue_max_n);
    result["value"] = r.value;
    result["witness"] = io::to_json(r.witness);
    result["explored"] = r.explored;
    report = io::to_json(verify_queue_layout(g, r.witness));
  } else if (o.kind == "track-number") {
    const auto r = exact_track_number(g, limits.track_max_n);
    result["value"] = r.value;
    result["witness"] = io::to_json(r.witness);
    result["explored"] = r.explored;
    report = io::to_json(verify_track_layout(g, r.witness));
  } else if (o.kind == "pathwidth") {
    const auto r = exact_pathwidth(g, limits.pathwidth_max_n);
    const PathDecomposition pd = path_decomposition_from_ordering(g, r.witness);
    result["value"] = r.value;
    result["witness"] = {{"order", r.witness}, {"path_decomposition", io::to_json(pd)}};
    result["explored"] = r.explored;
    report = io::to_json(verify_path_decomposition(g, pd));
    report["ok"] = report["ok"].get<bool>() && pd.width() == r.value;
  } else if (o.kind == "treewidth") {
    const auto r = exact_treewidth(g, limits.treewidth_max_n);
    const TreeDecomposition td = decomposition_from_elimination(g, r.witness);
    result["value"] = r.value;
    result["witness"] = {{"elimination_order", r.witness}, {"tree_decomposition", io::to_json(td)}};
    result["explored"] = r.explored;
    report = io::to_json(verify_tree_decomposition(g, td));
    report["ok"] = report["ok"].get<bool>() && (g.vertex_count() == 0 || td.width() == r.value);
  } else {
    throw LayoutError(ErrorKind::BadParams, "unknown oracle: " + o.kind);
  }
  result["verification"] = verification(report);
  emit(o, out, result.dump(2) + "\n");
  if (!report.at("ok").get<bool>()) {
    err << "oracle witness failed verification\n";
    return kVerificationFailed;
  }
  return kOk;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

int cmd_stats(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Envelope env = read_envelope(o, in);
  const Graph g = graph_of(env);
  std::ostringstream row;
  bool verified = true;

  std::string tracks, x_crossings, span, k_col, tk, within_tk;
  std::optional<TrackLayout> layout;
  if (env.doc.contains("track_layout")) {
    layout = io::track_layout_from_json(env.doc.at("track_layout"));
    const auto r = verify_track_layout(g, *layout);
    verified = verified && r.ok;
    tracks = std::to_string(r.tracks);
    x_crossings = std::to_string(r.x_crossings);
    span = std::to_string(r.max_span);
    const json& info = env.doc.at("track_layout").value("construction", json::object());
    if (info.contains("k")) {
      const int k = info.at("k").get<int>();
      k_col = std::to_string(k);
      const std::uint64_t bound = ktree_track_bound(k);
      tk = std::to_string(bound);
      within_tk = csv_bool(r.tracks <= bound);
    }
  }

  std::string queues, queues_ok;
  std::optional<QueueLayout> q;
  if (env.doc.contains("queue_layout")) {
    q = io::queue_layout_from_json(env.doc.at("queue_layout"));
    verified = verified && verify_queue_layout(g, *q).ok;
  } else if (layout) {
    q = queue_from_track(g, *layout);
    verified = verified && verify_queue_layout(g, *q).ok;
  }
  if (q) {
    queues = std::to_string(q->queue_count());
    if (layout && layout->nonempty_track_count() > 0) {
      queues_ok = csv_bool(q->queue_count() + 1 <= layout->nonempty_track_count() || g.edge_count() == 0);
    }
  }

  std::string ex, ey, ez, bx, by, bz, volume, aspect, crossings, edge_bound_ok, box_ok;
  if (env.doc.contains("drawing")) {
    const Drawing3D d = io::drawing_from_json(env.doc.at("drawing"));
    const auto r = verify_drawing(g, d);
    verified = verified && r.ok;
    ex = std::to_string(r.extents.x);
    ey = std::to_string(r.extents.y);
    ez = std::to_string(r.extents.z);
    const Box box = d.box.value_or(r.extents);
    bx = std::to_string(box.x);
    by = std::to_string(box.y);
    bz = std::to_string(box.z);
    volume = std::to_string(static_cast<long long>(box.volume()));
    std::ostringstream a;
    a << std::setprecision(6) << box.aspect_ratio();
    aspect = a.str();
    crossings = std::to_string(r.crossings);
    edge_bound_ok = csv_bool(r.edge_bound_ok);
    box_ok = csv_bool(r.box_ok);
  }

  row << "n,m,k,tracks,t_k,tracks_within_t_k,x_crossings,max_span,queues,queues_within_tracks_minus_1,"
         "extent_x,extent_y,extent_z,box_x,box_y,box_z,volume,aspect_ratio,crossings,edge_bound_ok,box_ok,verified\n";
  row << g.vertex_count() << ',' << g.edge_count() << ',' << k_col << ',' << tracks << ',' << tk << ',' << within_tk
      << ',' << x_crossings << ',' << span << ',' << queues << ',' << queues_ok << ',' << ex << ',' << ey << ',' << ez
      << ',' << bx << ',' << by << ',' << bz << ',' << volume << ',' << aspect << ',' << crossings << ','
      << edge_bound_ok << ',' << box_ok << ',' << csv_bool(verified) << '\n';
  emit(o, out, row.str());
  if (!verified) {
    err << "verification failed\n";
    return kVerificationFailed;
  }
  return kOk;
}

void add_io(CLI::App* app, Options& o) {
  app->add_option("-i,--input", o.input, "Input envelope JSON file ('-' for stdin)");
  app->add_option("-o,--output", o.output, "Output file ('-' for stdout)");
}

void add_generator(CLI::App* app, Options& o) {
  app->add_option("--family", o.family, "path|cycle|star|complete|complete-bipartite|grid|caterpillar|tree|ktree|gnp|gk");
  app->add_option("--n", o.n, "Number of vertices");
  app->add_option("--k", o.k, "Tree-width parameter");
  app->add_option("--rows", o.rows, "Grid rows");
  app->add_option("--cols", o.cols, "Grid columns");
  app->add_option("--a", o.a, "First part size (complete-bipartite)");
  app->add_option("--b", o.b, "Second part size (complete-bipartite)");
  app->add_option("--p", o.p, "Edge probability (gnp)");
  app->add_option("--seed", o.seed, "Seed, required for randomized families")->each([&o](const std::string&) {
    o.has_seed = true;
  });
  app->add_option("--budget", o.budget, "Vertex budget for generators");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Track, queue and 3D drawing layouts for graphs of bounded tree-width", "twlayout"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "Generate a graph envelope");
  add_io(gen, o);
  add_generator(gen, o);

  auto* layout = app.add_subcommand("layout", "Add a layout to the envelope");
  layout->require_subcommand(1);
  auto* lt = layout->add_subcommand("track", "Track layout");
  lt->add_option("--method", o.method, "auto|tree|ktree|pathwidth|partition|grid|gk|queue");
  lt->add_flag("--wrap", o.wrap, "Wrap to 2s+1 tracks afterwards");
  lt->add_option("--balance", o.balance, "Balance with t' (integer, fraction or decimal)");
  lt->add_flag("--proper", o.proper, "Convert an improper layout to a proper one");
  auto* lq = layout->add_subcommand("queue", "Queue layout");
  lq->add_option("--method", o.method, "auto|tree|track|ordering");
  auto* ls = layout->add_subcommand("stack", "Stack layout (forests)");
  auto* lp = layout->add_subcommand("partition", "Tree-partition of a k-tree");
  for (auto* sub : {lt, lq, ls, lp}) {
    add_io(sub, o);
    add_generator(sub, o);
  }

  auto* draw = app.add_subcommand("draw", "Three-dimensional grid drawing");
  draw->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> draw_kinds;
  for (const char* kind : {"moment", "cohen", "track", "balanced", "aspect"}) {
    auto* d = draw->add_subcommand(kind, std::string(kind) + " drawing");
    add_io(d, o);
    add_generator(d, o);
    d->add_option("--format", o.format, "json|obj|svg");
    if (std::string(kind) == "aspect") d->add_option("--r", o.r, "Aspect parameter r, 1 <= r <= n/t")->required();
    draw_kinds.emplace_back(kind, d);
  }

  auto* verify = app.add_subcommand("verify", "Re-run verifiers on envelope artifacts");
  verify->add_option("kind", o.kind, "track|queue|stack|partition|drawing|all")->required();
  add_io(verify, o);
  verify->add_option("--k", o.k, "k for tree-partition verification");

  auto* oracle = app.add_subcommand("oracle", "Exact brute-force values for small graphs");
  oracle->add_option("kind", o.kind, "queue-number|track-number|pathwidth|treewidth")->required();
  add_io(oracle, o);
  add_generator(oracle, o);

  auto* stats = app.add_subcommand("stats", "One CSV row of measurements and bound checks");
  add_io(stats, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(o, in, out, err);
    if (lt->parsed()) return cmd_layout_track(o, in, out, err);
    if (lq->parsed()) return cmd_layout_queue(o, in, out, err);
    if (ls->parsed()) return cmd_layout_stack(o, in, out, err);
    if (lp->parsed()) return cmd_layout_partition(o, in, out, err);
    for (auto& [kind, d] : draw_kinds) {
      if (d->parsed()) return cmd_draw(kind, o, in, out, err);
    }
    if (verify->parsed()) return cmd_verify(o, in, out, err);
    if (oracle->parsed()) return cmd_oracle(o, in, out, err);
    if (stats->parsed()) return cmd_stats(o, in, out, err);
  } catch (const LayoutError& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::BadParams:
        return kUsage;
      case ErrorKind::ResourceLimit:
      case ErrorKind::TooLarge:
        return kResourceLimit;
      default:
        return kVerificationFailed;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace twlayout::cli
