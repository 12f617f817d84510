#include "flowfilter/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>

#include "flowfilter/dag_extract.hpp"
#include "flowfilter/harness.hpp"
#include "flowfilter/path_stats.hpp"
#include "flowfilter/placement.hpp"
#include "flowfilter/propagation.hpp"
#include "flowfilter/synth.hpp"
#include "flowfilter/tree_dp.hpp"
#include "manifest.hpp"

namespace flowfilter::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State shared by one invocation: streams, the manifest being assembled and
// what the error handler needs to print a useful hint.
struct Context {
  std::ostream& out;
  std::ostream& err;
  Manifest manifest;
  std::string input_path;
  bool dag_only = false;

  // "-" sends the bytes to stdout and records nothing.
  void emit(const std::string& path, const std::string& bytes, bool reproducible = true) {
    if (path == "-") {
      out << bytes;
      return;
    }
    write_file(path, bytes);
    manifest.outputs.push_back({path, bytes.size(), fnv1a_hex(bytes), reproducible});
  }

  void finish() {
    if (!manifest.outputs.empty()) write_manifests(manifest);
  }
};

struct InputOptions {
  std::string path;
  std::string source;
};

void add_input_options(CLI::App* sub, InputOptions& in, bool with_source = true) {
  sub->add_option("--input,-i", in.path, "Edge-list file (u<TAB>v per line)")->required();
  if (with_source) {
    sub->add_option("--source,-s", in.source,
                    "Source node label (default: the in-degree-0 nodes, joined under a "
                    "super-source when there are several)");
  }
}

// Parses the input, checks acyclicity for DAG-only commands and reduces the
// source set to a single node.
CGraph load_graph(Context& ctx, const InputOptions& in, bool need_single_source = true) {
  ctx.input_path = in.path;
  const std::string text = read_file(in.path);
  CGraph g = in.source.empty() ? parse_edge_list(text) : parse_edge_list(text, in.source);
  ctx.manifest.input = {{"path", in.path},
                        {"fnv1a64", fnv1a_hex(text)},
                        {"source", in.source.empty() ? json(nullptr) : json(in.source)}};
  if (ctx.dag_only) topological_order(g);
  if (need_single_source && g.sources().size() > 1) {
    const std::size_t roots = g.sources().size();
    g = add_super_source(g);
    ctx.err << "note: " << roots << " in-degree-0 nodes; added super-source '"
            << g.label(g.single_source()) << "'\n";
  }
  if (need_single_source) g.single_source();
  return g;
}

std::string join_labels(const CGraph& g, const FilterSet& f) {
  std::string s;
  for (NodeIndex v : f.members) {
    if (!s.empty()) s += ',';
    s += g.label(v);
  }
  return s;
}

void print_result(std::ostream& out, const CGraph& g, const PlacementResult& r) {
  out << "filters\t" << join_labels(g, r.filters) << '\n'
      << "phi_empty\t" << r.phi_empty << '\n'
      << "phi\t" << r.phi << '\n'
      << "F\t" << r.f << '\n'
      << "F_max\t" << r.f_max << '\n'
      << "FR\t" << r.fr.to_decimal(6) << '\n';
}

std::vector<std::string> algorithm_names(bool include_tree_dp = true) {
  std::vector<std::string> names;
  for (Algorithm a : all_algorithms()) {
    if (include_tree_dp || a != Algorithm::kTreeDp) names.emplace_back(to_string(a));
  }
  return names;
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  std::string kind = "layered";
  LayeredConfig layered;
  std::string node_count = "poisson";
  std::size_t nodes = 100;
  double p = 0.1;
  std::uint64_t seed = 0;
  std::string out;
};

void setup_generate(CLI::App& app, GenerateOptions& o) {
  auto* sub = app.add_subcommand("generate", "Generate a synthetic communication graph");
  sub->add_option("--kind", o.kind, "layered | dag | ctree")
      ->check(CLI::IsMember({"layered", "dag", "ctree"}))
      ->capture_default_str();
  sub->add_option("--levels", o.layered.levels, "Number of levels (layered)")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  sub->add_option("--width", o.layered.expected_width, "Expected nodes per level (layered)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--x", o.layered.x, "Edge probability numerator x (layered)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--y", o.layered.y, "Edge probability base y (layered)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--node-count", o.node_count, "poisson | fixed (layered)")
      ->check(CLI::IsMember({"poisson", "fixed"}))
      ->capture_default_str();
  sub->add_option("--nodes,-n", o.nodes, "Node count (dag, ctree)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--p", o.p,
                  "Forward-edge probability (dag) or extra source-edge probability (ctree)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  sub->add_option("--out,-o", o.out, "Output edge-list file ('-' for stdout)")->required();
}

int cmd_generate(Context& ctx, GenerateOptions& o) {
  CGraph g;
  json config = {{"kind", o.kind}, {"seed", o.seed}};
  std::ostringstream header;
  header << "# flowfilter generate kind=" << o.kind;
  if (o.kind == "layered") {
    o.layered.seed = o.seed;
    o.layered.node_count = o.node_count == "fixed" ? NodeCountModel::kFixed : NodeCountModel::kPoisson;
    g = layered_graph(o.layered);
    config.update({{"levels", o.layered.levels},
                   {"width", o.layered.expected_width},
                   {"x", o.layered.x},
                   {"y", o.layered.y},
                   {"node_count", o.node_count}});
    header << " levels=" << o.layered.levels << " width=" << o.layered.expected_width
           << " x=" << o.layered.x << " y=" << o.layered.y << " node-count=" << o.node_count;
  } else if (o.kind == "dag") {
    g = random_dag(o.nodes, o.p, o.seed);
    config.update({{"nodes", o.nodes}, {"p", o.p}});
    header << " nodes=" << o.nodes << " p=" << o.p;
  } else {
    g = random_ctree(o.nodes, o.p, o.seed).graph();
    config.update({{"nodes", o.nodes}, {"p", o.p}});
    header << " nodes=" << o.nodes << " p=" << o.p;
  }
  header << " seed=" << o.seed << '\n'
         << "# source=" << g.label(g.single_source()) << " nodes=" << g.node_count()
         << " edges=" << g.edge_count() << '\n';

  ctx.manifest.input = {{"generator", config}};
  ctx.emit(o.out, header.str() + serialize_edge_list(g));
  if (o.out != "-") {
    ctx.out << "wrote " << o.out << ": " << g.node_count() << " nodes, " << g.edge_count()
            << " edges, source " << g.label(g.single_source()) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------- extract-dag

struct ExtractOptions {
  InputOptions input;
  std::string root;
  bool best_root = false;
  unsigned jobs = 1;
  std::string out;
};

void setup_extract(CLI::App& app, ExtractOptions& o) {
  auto* sub = app.add_subcommand(
      "extract-dag", "Extract a maximal connected acyclic subgraph reachable from a root");
  add_input_options(sub, o.input, false);
  auto* root = sub->add_option("--root", o.root, "Root node label");
  auto* best = sub->add_flag("--best-root", o.best_root,
                             "Try every root and keep the largest DAG (nodes, then edges)");
  root->excludes(best);
  sub->add_option("--jobs,-j", o.jobs, "Worker threads for --best-root")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  sub->add_option("--out,-o", o.out, "Output edge-list file ('-' for stdout)")->required();
}

int cmd_extract(Context& ctx, const ExtractOptions& o) {
  if (o.root.empty() && !o.best_root) throw UsageError("extract-dag needs --root or --best-root");
  CGraph g = load_graph(ctx, o.input, false);
  NodeIndex root;
  CGraph dag;
  if (o.best_root) {
    BestDag best = best_dag(g, o.jobs);
    root = best.root;
    dag = std::move(best.dag);
  } else {
    root = g.find(o.root).value_or(static_cast<NodeIndex>(g.node_count()));
    dag = extract_dag(g, o.root);
  }
  const std::size_t reachable = dag.node_count();
  std::size_t reachable_edges = 0;
  {
    std::vector<std::uint8_t> in_dag(g.node_count(), 0);
    for (NodeIndex v : reachable_from(g, root)) in_dag[v] = 1;
    for (const Edge& e : g.edges()) reachable_edges += in_dag[e.from] && in_dag[e.to];
  }
  ctx.manifest.parameters = {{"root", g.label(root)}, {"best_root", o.best_root}};

  std::ostringstream header;
  header << "# flowfilter extract-dag root=" << g.label(root) << '\n'
         << "# source=" << g.label(root) << " nodes=" << reachable << " edges=" << dag.edge_count()
         << " dropped=" << reachable_edges - dag.edge_count() << '\n';
  ctx.emit(o.out, header.str() + serialize_edge_list(dag));
  if (o.out != "-") {
    ctx.out << "root\t" << g.label(root) << '\n'
            << "nodes\t" << reachable << " of " << g.node_count() << '\n'
            << "edges\t" << dag.edge_count() << " of " << reachable_edges << " reachable ("
            << g.edge_count() << " total)\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------- place

struct PlaceOptions {
  InputOptions input;
  std::string algo;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  std::string json_out;
};

void setup_place(CLI::App& app, PlaceOptions& o) {
  auto* sub = app.add_subcommand("place", "Choose k filter nodes with one algorithm");
  add_input_options(sub, o.input);
  sub->add_option("--algo,-a", o.algo, "Placement algorithm")
      ->required()
      ->check(CLI::IsMember(algorithm_names()));
  sub->add_option("--k,-k", o.k, "Filter budget (ignored by optimal-unbounded)")
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "Seed for randomized algorithms")->capture_default_str();
  sub->add_option("--json", o.json_out, "Write the full result as JSON ('-' for stdout)");
}

int cmd_place(Context& ctx, const PlaceOptions& o) {
  ctx.dag_only = true;
  CGraph g = load_graph(ctx, o.input);
  const Algorithm algo = parse_algorithm(o.algo);
  FilterSet f = place(g, algo, o.k, o.seed);
  PlacementResult r = evaluate_placement(g, f);
  ctx.manifest.parameters = {{"algorithm", o.algo}, {"k", o.k}, {"seed", o.seed}};

  ctx.out << "algorithm\t" << o.algo << '\n' << "k\t" << o.k << '\n';
  if (is_randomized(algo)) ctx.out << "seed\t" << o.seed << '\n';
  print_result(ctx.out, g, r);
  if (!o.json_out.empty()) ctx.emit(o.json_out, to_json(g, r).dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateOptions {
  InputOptions input;
  std::vector<std::string> filters;
  std::string json_out;
};

void setup_evaluate(CLI::App& app, EvaluateOptions& o) {
  auto* sub = app.add_subcommand("evaluate", "Compute Φ and F for a given filter set");
  add_input_options(sub, o.input);
  sub->add_option("--filters,-f", o.filters, "Comma-separated filter labels")->delimiter(',');
  sub->add_option("--json", o.json_out, "Write the result as JSON ('-' for stdout)");
}

int cmd_evaluate(Context& ctx, const EvaluateOptions& o) {
  ctx.dag_only = true;
  CGraph g = load_graph(ctx, o.input);
  FilterSet f = filters_from_labels(g, o.filters);
  for (NodeIndex v : f.members) {
    if (g.is_source(v)) {
      throw Error(Errc::kInvalidArgument, "'" + g.label(v) + "' is the source and cannot be a filter");
    }
  }
  PlacementResult r = evaluate_placement(g, f);
  ctx.manifest.parameters = {{"filters", o.filters}};
  print_result(ctx.out, g, r);
  if (!o.json_out.empty()) ctx.emit(o.json_out, to_json(g, r).dump(2) + "\n");
  return kExitOk;
}

// ------------------------------------------------------------------ oracle

struct OracleOptions {
  InputOptions input;
  std::size_t k = 1;
  std::uint64_t budget = kDefaultOracleBudget;
  std::string json_out;
};

void setup_oracle(CLI::App& app, OracleOptions& o) {
  auto* sub = app.add_subcommand("oracle", "Exhaustive best placement of at most k filters");
  add_input_options(sub, o.input);
  sub->add_option("--k,-k", o.k, "Filter budget")->capture_default_str();
  sub->add_option("--budget", o.budget, "Maximum number of subsets to evaluate")
      ->capture_default_str();
  sub->add_option("--json", o.json_out, "Write the result as JSON ('-' for stdout)");
}

int cmd_oracle(Context& ctx, const OracleOptions& o) {
  ctx.dag_only = true;
  CGraph g = load_graph(ctx, o.input);
  OracleResult best = oracle(g, o.k, o.budget);
  PlacementResult r = evaluate_placement(g, best.filters);
  ctx.manifest.parameters = {{"k", o.k}, {"budget", o.budget}};
  print_result(ctx.out, g, r);
  ctx.out << "subsets\t" << best.subsets_evaluated << '\n';
  if (!o.json_out.empty()) {
    json j = to_json(g, r);
    j["subsets_evaluated"] = best.subsets_evaluated;
    ctx.emit(o.json_out, j.dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------- fr-curve

struct CurveOptions {
  InputOptions input;
  std::vector<std::string> algos = algorithm_names(false);
  std::size_t k_max = 10;
  std::size_t runs = 25;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool no_timing = false;
  std::string csv_out;
  std::string json_out;
};

void setup_curve(CLI::App& app, CurveOptions& o) {
  auto* sub = app.add_subcommand("fr-curve", "Filter-ratio curve for several algorithms and k = 1..kmax");
  add_input_options(sub, o.input);
  sub->add_option("--algos", o.algos, "Comma-separated algorithms")
      ->delimiter(',')
      ->check(CLI::IsMember(algorithm_names()))
      ->capture_default_str();
  sub->add_option("--kmax", o.k_max, "Largest k")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--runs", o.runs, "Trials per randomized cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "Master seed for randomized cells")->capture_default_str();
  sub->add_option("--jobs,-j", o.jobs, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  sub->add_flag("--no-timing", o.no_timing, "Skip wall-clock measurement (wall_ms = 0)");
  sub->add_option("--csv", o.csv_out, "CSV output ('-' for stdout)");
  sub->add_option("--json", o.json_out, "JSON output with every placement ('-' for stdout)");
}

int cmd_curve(Context& ctx, const CurveOptions& o) {
  ctx.dag_only = true;
  CGraph g = load_graph(ctx, o.input);
  FRCurveOptions opt;
  for (const std::string& name : o.algos) opt.algorithms.push_back(parse_algorithm(name));
  opt.k_max = o.k_max;
  opt.runs = o.runs;
  opt.seed = o.seed;
  opt.jobs = o.jobs;
  opt.measure_time = !o.no_timing;
  FRCurve curve = fr_curve(g, opt);
  ctx.manifest.parameters = {{"algorithms", o.algos}, {"k_max", o.k_max}, {"runs", o.runs},
                             {"seed", o.seed},        {"timing", !o.no_timing}};

  const bool timed = opt.measure_time;
  if (o.csv_out.empty() && o.json_out.empty()) {
    ctx.out << to_csv(curve);
    return kExitOk;
  }
  if (!o.csv_out.empty()) ctx.emit(o.csv_out, to_csv(curve), !timed);
  if (!o.json_out.empty()) ctx.emit(o.json_out, to_json(g, curve).dump(2) + "\n", !timed);
  ctx.out << "F_max\t" << curve.f_max << '\n' << "rows\t" << curve.rows.size() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- validate

struct ValidateOptions {
  InputOptions input;
  bool require_dag = false;
};

void setup_validate(CLI::App& app, ValidateOptions& o) {
  auto* sub = app.add_subcommand("validate", "Parse an edge list and report its structure");
  add_input_options(sub, o.input);
  sub->add_flag("--require-dag", o.require_dag, "Fail when the graph has a directed cycle");
}

int cmd_validate(Context& ctx, const ValidateOptions& o) {
  ctx.dag_only = o.require_dag;
  CGraph g = load_graph(ctx, o.input, false);
  ctx.out << "nodes\t" << g.node_count() << '\n' << "edges\t" << g.edge_count() << '\n';
  ctx.out << "sources\t";
  for (std::size_t i = 0; i < g.sources().size(); ++i) {
    ctx.out << (i ? "," : "") << g.label(g.sources()[i]);
  }
  ctx.out << '\n';
  try {
    topological_order(g);
  } catch (const CycleError& e) {
    ctx.out << "acyclic\tno\n" << "cycle\t";
    for (std::size_t i = 0; i < e.cycle().size(); ++i) ctx.out << (i ? " -> " : "") << e.cycle()[i];
    ctx.out << '\n';
    return kExitOk;
  }
  ctx.out << "acyclic\tyes\n";
  CGraph single = add_super_source(g);
  bool ctree = true;
  try {
    certify_ctree(single);
  } catch (const Error&) {
    ctree = false;
  }
  ctx.out << "c-tree\t" << (ctree ? "yes" : "no") << '\n'
          << "phi_empty\t" << phi_total(single, FilterSet{}) << '\n'
          << "F_max\t" << max_objective(single) << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------ replay

struct ReplayOptions {
  std::string manifest;
};

void setup_replay(CLI::App& app, ReplayOptions& o) {
  auto* sub = app.add_subcommand(
      "replay", "Re-run the command recorded in a manifest and compare the outputs");
  sub->add_option("manifest", o.manifest, "Manifest file (<output>.manifest.json)")->required();
}

int cmd_replay(Context& ctx, const ReplayOptions& o) {
  json j;
  try {
    j = json::parse(read_file(o.manifest));
  } catch (const json::exception& e) {
    throw Error(Errc::kParse, std::string("manifest is not JSON: ") + e.what());
  }
  const Manifest recorded = Manifest::from_json(j);
  if (recorded.argv.empty() || recorded.argv.front() == "replay") {
    throw Error(Errc::kInvalidArgument, "manifest does not record a replayable command");
  }
  if (j.value("version", "") != FLOWFILTER_VERSION) {
    ctx.err << "warning: manifest was written by version " << j.value("version", "?")
            << ", this is " << FLOWFILTER_VERSION << '\n';
  }
  std::ostringstream sink;
  const int status = run(recorded.argv, sink, ctx.err);
  if (status != kExitOk) return status;

  int result = kExitOk;
  for (const OutputRecord& rec : recorded.outputs) {
    if (!rec.reproducible) {
      ctx.out << "skipped\t" << rec.path << "\t(contains wall-clock timings)\n";
      continue;
    }
    const std::string bytes = read_file(rec.path);
    if (bytes.size() == rec.bytes && fnv1a_hex(bytes) == rec.digest) {
      ctx.out << "identical\t" << rec.path << '\n';
    } else {
      ctx.out << "MISMATCH\t" << rec.path << '\n';
      result = kExitDataError;
    }
  }
  return result;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"flowfilter: filter placement for redundant information flow", "flowfilter"};
  app.set_version_flag("--version", FLOWFILTER_VERSION);
  app.require_subcommand(1);

  GenerateOptions generate;
  ExtractOptions extract;
  PlaceOptions place_opt;
  EvaluateOptions evaluate;
  OracleOptions oracle_opt;
  CurveOptions curve;
  ValidateOptions validate;
  ReplayOptions replay;
  setup_generate(app, generate);
  setup_extract(app, extract);
  setup_place(app, place_opt);
  setup_evaluate(app, evaluate);
  setup_oracle(app, oracle_opt);
  setup_curve(app, curve);
  setup_validate(app, validate);
  setup_replay(app, replay);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Context ctx{out, err, {}, {}, false};
  ctx.manifest.command = name;
  ctx.manifest.argv = args;

  try {
    int status = kExitOk;
    if (name == "generate") status = cmd_generate(ctx, generate);
    else if (name == "extract-dag") status = cmd_extract(ctx, extract);
    else if (name == "place") status = cmd_place(ctx, place_opt);
    else if (name == "evaluate") status = cmd_evaluate(ctx, evaluate);
    else if (name == "oracle") status = cmd_oracle(ctx, oracle_opt);
    else if (name == "fr-curve") status = cmd_curve(ctx, curve);
    else if (name == "validate") status = cmd_validate(ctx, validate);
    else if (name == "replay") return cmd_replay(ctx, replay);
    ctx.finish();
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << "run 'flowfilter " << name << " --help' for usage\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    if (e.code() == Errc::kCycleDetected && ctx.dag_only) {
      err << "hint: this command needs an acyclic graph; run 'flowfilter extract-dag --input "
          << ctx.input_path << " --best-root --out dag.tsv' first\n";
    }
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace flowfilter::cli
