#include "tfed/driver.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tfed/approx.hpp"
#include "tfed/arcs.hpp"
#include "tfed/decomposition.hpp"
#include "tfed/errors.hpp"
#include "tfed/hardness.hpp"
#include "tfed/instance_io.hpp"
#include "tfed/nd_ilp.hpp"
#include "tfed/oracle.hpp"
#include "tfed/path_dp.hpp"
#include "tfed/preprocess.hpp"
#include "tfed/split.hpp"
#include "tfed/structure.hpp"
#include "tfed/vdc_iqp.hpp"

namespace tfed {

void RunReport::add(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
}

void RunReport::add(const std::string& key, long long value) { add(key, std::to_string(value)); }

std::string RunReport::get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return {};
}

bool RunReport::has(const std::string& key) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == key; });
}

std::string RunReport::text() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
  return out;
}

namespace {

/// Raised for unreadable or invalid input files.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("cannot write '" + path + "'");
}

std::string join_ints(const std::vector<int>& values, char sep = ',') {
  if (values.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string edges_text(const EdgeSet& edges) {
  if (edges.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v);
  }
  return out;
}

std::string arcs_text(const std::vector<Arc>& arcs) {
  if (arcs.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(arcs[i].tail) + ">" + std::to_string(arcs[i].head);
  }
  return out;
}

std::string partition_text(const VertexPartition& p) {
  if (p.parts.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += " | ";
    out += join_ints(p.parts[i], ' ');
  }
  return out;
}

std::vector<int> component_sizes(const Graph& g) {
  std::vector<int> sizes;
  for (const auto& part : connected_components(g).parts) sizes.push_back(static_cast<int>(part.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::vector<int> parse_int_list(const std::string& text, char sep = ',') {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("not an integer list: '" + text + "'");
    }
  }
  return out;
}

/// Outcome of one solver inside `solve`.
struct SolveOutcome {
  std::string algorithm;
  Answer decision = Answer::unknown;
  std::optional<long long> optimum;
  std::optional<EdgeSet> deleted;
  std::vector<RuleRecord> trace;
  std::string warning;
};

struct SolveSettings {
  std::string algo = "auto";
  std::string intervals;
  int cvd_budget = 2;
  int nd_max = 4;
  int oracle_max = 14;
  long long nd_type_limit = 20000;
};

void finish(SolveOutcome& o, const Instance& inst, const PartitionSolution& s, bool exact) {
  o.deleted = s.deleted_edges;
  if (exact) o.optimum = s.cost;
  if (s.cost <= inst.k) {
    o.decision = Answer::yes;
  } else if (exact) {
    o.decision = Answer::no;
  }
}

std::optional<SolveOutcome> try_trivial(const Instance& inst) {
  const Graph& g = inst.graph;
  SolveOutcome o;
  if (inst.h == 1) {
    o.algorithm = "trivial-h1";
    finish(o, inst, solution_from_deletion(g, g.edges()), true);
    return o;
  }
  if (inst.h >= max_component_size(g)) {
    o.algorithm = "trivial-fits";
    finish(o, inst, solution_from_deletion(g, {}), true);
    return o;
  }
  if (inst.h == 2 && g.vertex_count() <= MatchingOptions{}.max_vertices) {
    o.algorithm = "trivial-h2";
    const EdgeSet matching = maximum_matching(g);
    EdgeSet deleted;
    std::set_difference(g.edges().begin(), g.edges().end(), matching.begin(), matching.end(),
                        std::back_inserter(deleted));
    finish(o, inst, solution_from_deletion(g, deleted), true);
    return o;
  }
  return std::nullopt;
}

std::optional<SolveOutcome> try_split(const Instance& inst) {
  try {
    recognize_split(inst.graph);
  } catch (const NotSplit&) {
    return std::nullopt;
  }
  const SplitResult r = solve_split(inst.graph, inst.k, inst.h);
  SolveOutcome o;
  o.algorithm = r.which == SplitCase::large_clique ? "split-greedy" : "split-cover";
  o.decision = r.yes ? Answer::yes : Answer::no;
  o.optimum = r.cost;
  if (r.certificate) o.deleted = r.certificate->deleted_edges;
  return o;
}

SolveOutcome run_interval(const Instance& inst, const std::string& path) {
  std::istringstream in(read_file(path));
  const std::vector<Interval> intervals = read_intervals(in);
  const IntervalModel model = interval_clique_path(intervals);
  if (!(model.graph == inst.graph)) {
    throw InputError("interval model does not induce the instance graph");
  }
  SolveOutcome o;
  o.algorithm = "interval-dp";
  const auto solved = inst.h > inst.k + 1
                          ? dp_solve_interval(inst.graph, model.decomposition, inst.k, inst.h)
                          : dp_solve(inst.graph, model.decomposition, inst.h, inst.k);
  if (solved) {
    finish(o, inst, *solved, true);
  } else {
    o.decision = Answer::no;
  }
  return o;
}

/// Rule reduction around a cluster deletion set, then the DP on bags X ∪ C.
SolveOutcome run_cvd(const Instance& inst, const VertexSet& X) {
  SolveOutcome o;
  o.algorithm = "cvd-dp";
  const auto reduced = rule1_apply(inst.graph, X, inst.k, inst.h);
  if (!reduced) {
    o.decision = Answer::no;
    return o;
  }
  o.trace = reduced->trace;
  const PathDecomposition pd = build_cvd_path_decomposition(reduced->graph, reduced->X);
  const auto solved = dp_solve(reduced->graph, pd, inst.h, reduced->k);
  if (!solved) {
    o.decision = Answer::no;
    return o;
  }
  VertexPartition partition;
  for (const auto& part : solved->partition.parts) {
    VertexSet mapped;
    for (Vertex v : part) mapped.push_back(reduced->original_id[v]);
    partition.parts.push_back(make_vertex_set(std::move(mapped)));
  }
  for (const auto& record : reduced->trace) partition.parts.push_back(record.removed);
  partition.normalize();
  finish(o, inst, solution_from_partition(inst.graph, std::move(partition)), true);
  return o;
}

SolveOutcome run_nd(const Instance& inst) {
  const NdResult r = solve_nd(inst.graph, inst.k, inst.h);
  SolveOutcome o;
  o.algorithm = "nd-ilp";
  finish(o, inst, r.solution, true);
  return o;
}

SolveOutcome run_vdc(const Instance& inst, const VertexSet& X) {
  const VdcResult r = solve_vdc(inst.graph, X, inst.k, inst.h);
  SolveOutcome o;
  o.algorithm = "vdc-iqp";
  finish(o, inst, r.solution, true);
  return o;
}

SolveOutcome run_oracle(const Instance& inst) {
  SolveOutcome o;
  o.algorithm = "oracle";
  finish(o, inst, opt_partition(inst.graph, inst.h), true);
  return o;
}

SolveOutcome run_approx(const Instance& inst) {
  SolveOutcome o;
  o.algorithm = "approx";
  const ApproxReport r = approx_solve(inst.graph, inst.k, inst.h);
  if (r.outcome == ApproxOutcome::no_instance) {
    o.decision = Answer::no;
    return o;
  }
  finish(o, inst, solution_from_deletion(inst.graph, r.deleted_edges), false);
  if (o.decision != Answer::yes) o.warning = "approximate solution exceeds k; the instance may still be yes";
  return o;
}

long long binomial_capped(long long n, long long r, long long cap) {
  long long result = 1;
  for (long long i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

SolveOutcome select_and_solve(const Instance& inst, const SolveSettings& s, int nd,
                              const std::optional<VertexSet>& cvd) {
  const std::string& algo = s.algo;
  if (algo == "trivial") {
    if (auto o = try_trivial(inst)) return *o;
    throw MalformedInput("no trivial case applies");
  }
  if (algo == "split") {
    if (auto o = try_split(inst)) return *o;
    throw NotSplit("graph is not a split graph");
  }
  if (algo == "interval") {
    if (s.intervals.empty()) throw InputError("--algo interval needs --intervals");
    return run_interval(inst, s.intervals);
  }
  if (algo == "cvd") {
    if (!cvd) throw MalformedInput("no cluster deletion set within --cvd-budget");
    return run_cvd(inst, *cvd);
  }
  if (algo == "vdc") {
    if (!cvd) throw MalformedInput("no cluster deletion set within --cvd-budget");
    return run_vdc(inst, *cvd);
  }
  if (algo == "nd") return run_nd(inst);
  if (algo == "oracle") return run_oracle(inst);
  if (algo == "approx") return run_approx(inst);

  if (auto o = try_trivial(inst)) return *o;
  try {
    if (auto o = try_split(inst)) return *o;
  } catch (const CapExceeded&) {
  }
  if (!s.intervals.empty()) return run_interval(inst, s.intervals);
  if (cvd) return run_cvd(inst, *cvd);
  if (nd <= s.nd_max && binomial_capped(inst.h + nd, nd, s.nd_type_limit) <= s.nd_type_limit) {
    return run_nd(inst);
  }
  if (inst.graph.vertex_count() <= s.oracle_max) return run_oracle(inst);
  return run_approx(inst);
}

void add_instance_summary(RunReport& report, const Instance& inst) {
  report.add("n", inst.graph.vertex_count());
  report.add("m", inst.graph.edge_count());
  report.add("k", inst.k);
  report.add("h", inst.h);
}

void add_solution(RunReport& report, const Instance& inst, const std::optional<EdgeSet>& deleted) {
  if (!deleted) {
    report.add("solution_size", "none");
    report.add("deleted", "none");
    report.add("components_after", "none");
    return;
  }
  report.add("solution_size", static_cast<long long>(deleted->size()));
  report.add("deleted", edges_text(*deleted));
  report.add("components_after", join_ints(component_sizes(inst.graph.without_edges(*deleted))));
}

std::string trace_text(const std::vector<RuleRecord>& trace) {
  if (trace.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) out += "; ";
    out += trace[i].rule + " removed=" + join_ints(trace[i].removed) +
           " delta=" + std::to_string(trace[i].budget_delta);
  }
  return out;
}

class Driver {
 public:
  Driver(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Bounded-component edge deletion solvers and instance generators", "tfed"};
    app.require_subcommand(1);
    app.fallthrough();
    bool timings = false;
    app.add_flag("--timings", timings, "Append wall-clock time to the report");

    std::string instance_path;
    SolveSettings settings;
    auto* solve = app.add_subcommand("solve", "Decide an instance with automatic algorithm selection");
    solve->add_option("instance", instance_path, "Instance file")->required();
    solve->add_option("--algo", settings.algo, "Solver to use")
        ->check(CLI::IsMember({"auto", "trivial", "split", "interval", "cvd", "vdc", "nd", "oracle",
                               "approx"}));
    solve->add_option("--intervals", settings.intervals, "Interval model file ('low high' per vertex)");
    solve->add_option("--cvd-budget", settings.cvd_budget, "Largest cluster deletion set searched")
        ->check(CLI::Range(0, 12));
    solve->add_option("--nd-max", settings.nd_max, "Largest neighborhood diversity for the ILP")
        ->check(CLI::Range(0, 64));
    solve->add_option("--oracle-max", settings.oracle_max, "Largest vertex count for the exact oracle")
        ->check(CLI::Range(0, 18));

    auto* oracle = app.add_subcommand("oracle", "Exact optimum by exhaustive partition search");
    oracle->add_option("instance", instance_path, "Instance file")->required();

    auto* approx = app.add_subcommand("approx", "Bicriteria approximation");
    approx->add_option("instance", instance_path, "Instance file")->required();

    bool paired = false;
    auto* arcs = app.add_subcommand("arcs", "Exact arc deletion on a directed instance");
    arcs->add_option("instance", instance_path, "Directed instance file")->required();
    arcs->add_flag("--paired", paired, "Delete each arc together with its reverse");

    std::string sizes_text, output;
    int bins = 1, capacity = 1;
    std::string family = "clique";
    auto* gen_bp = app.add_subcommand("gen-binpack", "Instance from a bin packing instance");
    gen_bp->add_option("--sizes", sizes_text, "Item sizes, comma separated")->required();
    gen_bp->add_option("--bins", bins, "Number of bins")->required()->check(CLI::PositiveNumber);
    gen_bp->add_option("--capacity", capacity, "Bin capacity")->required()->check(CLI::PositiveNumber);
    gen_bp->add_option("--family", family, "Gadget family")
        ->check(CLI::IsMember({"clique", "path", "star"}));
    gen_bp->add_option("-o,--output", output, "Instance file to write")->required();

    long long alpha = 0;
    auto* gen_sp = app.add_subcommand("gen-split", "Split-graph instance from a bin packing instance");
    gen_sp->add_option("--sizes", sizes_text, "Item sizes, comma separated")->required();
    gen_sp->add_option("--bins", bins, "Number of bins")->required()->check(CLI::PositiveNumber);
    gen_sp->add_option("--capacity", capacity, "Bin capacity")->required()->check(CLI::PositiveNumber);
    gen_sp->add_option("--alpha", alpha, "Override for the scaling factor (at least 2N^2)")
        ->check(CLI::PositiveNumber);
    gen_sp->add_option("-o,--output", output, "Instance file to write")->required();

    int universe = 0, hs_k = 0, c = 0;
    std::string sets_text;
    auto* gen_hs = app.add_subcommand("gen-hsdag", "Directed acyclic instance from a hitting set instance");
    gen_hs->add_option("--universe", universe, "Universe size")->required()->check(CLI::Range(0, 16));
    gen_hs->add_option("--sets", sets_text, "Family, sets separated by ';', elements by ','");
    gen_hs->add_option("--k", hs_k, "Hitting set budget")->required()->check(CLI::NonNegativeNumber);
    gen_hs->add_option("--c", c, "Exponent of h = n^c (default: smallest validated)")
        ->check(CLI::Range(2, 12));
    gen_hs->add_option("-o,--output", output, "Instance file to write")->required();

    int analyze_budget = 2;
    auto* analyze = app.add_subcommand("analyze", "Structural statistics of an instance");
    analyze->add_option("instance", instance_path, "Instance file")->required();
    analyze->add_option("--cvd-budget", analyze_budget, "Largest cluster deletion set searched")
        ->check(CLI::Range(0, 12));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      out_ << app.help();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      err_ << app.help();
      return kExitUsage;
    }

    RunReport report;
    const auto start = std::chrono::steady_clock::now();
    int status = kExitOk;
    auto guarded = [&](const std::string& command, const std::function<void()>& body) {
      report.add("command", command);
      try {
        body();
      } catch (const InputError& e) {
        report.add("error", e.what());
        status = kExitInputError;
      } catch (const ParseError& e) {
        report.add("error", std::string("parse error: ") + e.what());
        status = kExitInputError;
      } catch (const SemanticError& e) {
        report.add("error", std::string("invalid instance: ") + e.what());
        status = kExitInputError;
      } catch (const Error& e) {
        report.add("error", e.what());
      }
    };

    if (*solve) {
      guarded("solve", [&] { cmd_solve(report, instance_path, settings); });
    } else if (*oracle) {
      guarded("oracle", [&] { cmd_oracle(report, instance_path); });
    } else if (*approx) {
      guarded("approx", [&] { cmd_approx(report, instance_path); });
    } else if (*arcs) {
      guarded("arcs", [&] { cmd_arcs(report, instance_path, paired); });
    } else if (*gen_bp) {
      guarded("gen-binpack", [&] {
        BinPackingInstance bp{parse_int_list(sizes_text), bins, capacity};
        const GeneratedInstance g = gen_binpack(bp, parse_gadget_family(family));
        emit_generated(report, output, serialize_instance(g.instance), g.metadata);
      });
    } else if (*gen_sp) {
      guarded("gen-split", [&] {
        BinPackingInstance bp{parse_int_list(sizes_text), bins, capacity};
        const GeneratedInstance g =
            gen_split(bp, alpha > 0 ? std::optional<long long>(alpha) : std::nullopt);
        emit_generated(report, output, serialize_instance(g.instance), g.metadata);
      });
    } else if (*gen_hs) {
      guarded("gen-hsdag", [&] {
        HittingSetInstance hs;
        hs.universe = universe;
        hs.k = hs_k;
        std::istringstream in(sets_text);
        std::string set;
        while (std::getline(in, set, ';')) {
          if (!set.empty()) hs.family.push_back(make_vertex_set(parse_int_list(set)));
        }
        int chosen = c;
        if (chosen == 0) {
          const auto found = smallest_valid_c(hs);
          if (!found) throw ParameterTooSmall("no exponent c up to 8 gives a faithful instance");
          chosen = *found;
        }
        const GeneratedDiInstance g = gen_hitting_dag(hs, chosen);
        emit_generated(report, output, serialize_instance(g.instance), g.metadata);
      });
    } else if (*analyze) {
      guarded("analyze", [&] { cmd_analyze(report, instance_path, analyze_budget); });
    }

    if (timings) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      report.add("time_ms",
                 std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    }
    out_ << report.text();
    return status;
  }

 private:
  static Instance load(const std::string& path) { return parse_undirected_instance(read_file(path)); }

  void cmd_solve(RunReport& report, const std::string& path, const SolveSettings& s) {
    report.add("instance", path);
    const Instance inst = load(path);
    add_instance_summary(report, inst);
    const Graph& g = inst.graph;
    const int nd = neighborhood_diversity(g).t;
    std::optional<VertexSet> cvd;
    if (s.algo == "auto" || s.algo == "cvd" || s.algo == "vdc") {
      cvd = find_cluster_deletion_set(g, s.cvd_budget);
    }
    report.add("components_before", join_ints(component_sizes(g)));
    report.add("nd", nd);
    report.add("cvd_size", cvd ? std::to_string(cvd->size()) : "none");
    SolveOutcome o;
    try {
      o = select_and_solve(inst, s, nd, cvd);
    } catch (const CapExceeded& e) {
      o.algorithm = s.algo;
      o.warning = std::string("solver limit: ") + e.what();
    } catch (const MalformedInput& e) {
      o.algorithm = s.algo;
      o.warning = std::string("not applicable: ") + e.what();
    }
    report.add("algorithm", o.algorithm);
    report.add("decision", to_string(o.decision));
    report.add("cost", o.optimum ? std::to_string(*o.optimum) : "unknown");
    add_solution(report, inst, o.deleted);
    report.add("trace", trace_text(o.trace));
    if (!o.warning.empty()) report.add("warning", o.warning);
  }

  void cmd_oracle(RunReport& report, const std::string& path) {
    report.add("instance", path);
    const Instance inst = load(path);
    add_instance_summary(report, inst);
    const PartitionSolution s = opt_partition(inst.graph, inst.h);
    report.add("algorithm", "oracle");
    report.add("decision", s.cost <= inst.k ? "yes" : "no");
    report.add("cost", s.cost);
    add_solution(report, inst, s.deleted_edges);
    report.add("partition", partition_text(s.partition));
  }

  void cmd_approx(RunReport& report, const std::string& path) {
    report.add("instance", path);
    const Instance inst = load(path);
    add_instance_summary(report, inst);
    const ApproxReport r = approx_solve(inst.graph, inst.k, inst.h);
    report.add("algorithm", "approx");
    report.add("outcome", to_string(r.outcome));
    report.add("iterations", r.iterations);
    if (r.outcome == ApproxOutcome::no_instance) {
      report.add("decision", "no");
      add_solution(report, inst, std::nullopt);
    } else {
      const long long size = static_cast<long long>(r.deleted_edges.size());
      report.add("decision", size <= inst.k ? "yes" : "unknown");
      report.add("bound", 4 * inst.k * inst.k);
      add_solution(report, inst, r.deleted_edges);
    }
    for (std::size_t i = 0; i < r.records.size(); ++i) {
      const ApproxRecord& rec = r.records[i];
      report.add("record_" + std::to_string(i + 1),
                 "component=" + join_ints(rec.component, ' ') + " extracted=" +
                     join_ints(rec.extracted, ' ') + " cut=" + std::to_string(rec.cut));
    }
  }

  void cmd_arcs(RunReport& report, const std::string& path, bool paired) {
    report.add("instance", path);
    const DiInstance inst = parse_directed_instance(read_file(path));
    report.add("n", inst.digraph.vertex_count());
    report.add("m", inst.digraph.arc_count());
    report.add("k", inst.k);
    report.add("h", inst.h);
    const auto before = reach_counts(inst.digraph);
    report.add("max_reach_before", before.empty() ? 0 : *std::max_element(before.begin(), before.end()));
    ArcOptions options;
    options.paired = paired;
    const ArcResult r = solve_arcs(inst, options);
    report.add("algorithm", paired ? "arc-search-paired" : "arc-search");
    report.add("decision", r.yes ? "yes" : "no");
    report.add("deleted", r.yes ? arcs_text(r.deleted) : "none");
    if (r.yes) {
      const auto after = reach_counts(inst.digraph.without_arcs(r.deleted));
      report.add("max_reach_after", after.empty() ? 0 : *std::max_element(after.begin(), after.end()));
    }
    report.add("nodes", r.nodes);
  }

  void cmd_analyze(RunReport& report, const std::string& path, int budget) {
    report.add("instance", path);
    const Instance inst = load(path);
    add_instance_summary(report, inst);
    const Graph& g = inst.graph;
    const auto sizes = component_sizes(g);
    report.add("components", static_cast<long long>(sizes.size()));
    report.add("component_sizes", join_ints(sizes));
    report.add("max_component", sizes.empty() ? 0 : sizes.front());
    int max_degree = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
    report.add("max_degree", max_degree);
    report.add("nd", neighborhood_diversity(g).t);
    report.add("cluster_graph", is_cluster_graph(g) ? "yes" : "no");
    try {
      const SplitPartitionView view = recognize_split(g);
      report.add("split", "yes");
      report.add("split_clique_size", static_cast<long long>(view.clique_side.size()));
    } catch (const NotSplit&) {
      report.add("split", "no");
    }
    const auto cvd = find_cluster_deletion_set(g, budget);
    report.add("cvd_size", cvd ? std::to_string(cvd->size()) : "none");
    report.add("cvd_set", cvd ? join_ints(*cvd) : "none");
    report.add("trivial", to_string(trivial_answer(g, inst.k, inst.h)));
    report.add("vertex_bound",
               to_string(yes_instance_vertex_bound(drop_small_components(g, inst.h), inst.k, inst.h)));
  }

  void emit_generated(RunReport& report, const std::string& output, const std::string& text,
                      const Metadata& meta) {
    write_file(output, text);
    std::string meta_text;
    for (const auto& [k, v] : meta) meta_text += k + ": " + v + "\n";
    write_file(output + ".meta", meta_text);
    report.add("output", output);
    for (const auto& [k, v] : meta) report.add(k, v);
  }

  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Driver(out, err).run(args);
}

}  // namespace tfed
