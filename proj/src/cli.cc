// Copyright 2026 The snc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "snc/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "snc/degenerate.h"
#include "snc/errors.h"
#include "snc/generators.h"
#include "snc/matching.h"
#include "snc/median_order.h"
#include "snc/oracle.h"
#include "snc/witness.h"

namespace snc {
namespace {

using nlohmann::json;

struct Common {
  std::string format = "text";
  bool verbose = false;
  std::string labels_path;
  std::size_t limit_n = SolverOptions{}.exact_limit;
};

class Context {
 public:
  Context(const Common& common, std::istream& in, std::ostream& out)
      : common_(common), in_(in), out_(out) {}

  bool json_lines() const { return common_.format == "json-lines"; }
  bool verbose() const { return common_.verbose; }
  std::ostream& out() { return out_; }

  SolverOptions solver() const {
    if (common_.limit_n > kMaxExactLimit)
      throw InputError("--limit-n is at most " + std::to_string(kMaxExactLimit));
    SolverOptions s;
    s.exact_limit = common_.limit_n;
    return s;
  }
  WitnessOptions witness_options() const {
    WitnessOptions w;
    w.solver = solver();
    return w;
  }

  OrientedGraph read_graph(const std::string& path) {
    OrientedGraph g = path == "-" ? parse_edge_list(in_) : read_edge_list_file(path);
    labels_ = common_.labels_path.empty() ? LabelTable()
                                          : LabelTable::ReadFile(common_.labels_path);
    if (labels_.size() > g.size())
      throw InputError("labels file names more vertices than the graph has");
    return g;
  }

  const LabelTable& labels() const { return labels_; }
  std::string name(VertexId v) const { return labels_.name(v); }
  json names(const VertexSet& s) const {
    json a = json::array();
    for (VertexId v : s) a.push_back(name(v));
    return a;
  }
  json names(std::span<const VertexId> s) const {
    json a = json::array();
    for (VertexId v : s) a.push_back(name(v));
    return a;
  }
  std::string set(const VertexSet& s) const { return format_vertex_set(s, labels_); }
  std::string seq(const std::vector<VertexId>& s) const {
    return format_sequence(s, labels_);
  }

  void emit(const json& record) { out_ << record.dump() << '\n'; }

 private:
  const Common& common_;
  std::istream& in_;
  std::ostream& out_;
  LabelTable labels_;
};

std::string StructureName(const MissingStructure& s) {
  if (std::holds_alternative<PureMatching>(s)) return "pure-matching";
  if (std::holds_alternative<MatchingPlusStar>(s)) return "matching-plus-star";
  return "other";
}

std::string Bits(const std::vector<bool>& choices) {
  std::string s;
  for (bool b : choices) s += b ? '1' : '0';
  return s;
}

std::vector<bool> ParseBits(const std::string& text) {
  std::vector<bool> out;
  for (char c : text) {
    if (c != '0' && c != '1') throw InputError("--choices takes a string of 0 and 1");
    out.push_back(c == '1');
  }
  return out;
}

// "0 1;2;3 4" -> blocks {0,1}, {2}, {3,4}.
ModulePartition ParseBlocks(const std::string& text, std::size_t n) {
  std::vector<std::vector<VertexId>> blocks;
  std::stringstream all(text);
  std::string part;
  while (std::getline(all, part, ';')) blocks.push_back(parse_sequence(part));
  return ModulePartition(std::move(blocks), n);
}

PartitionSpec ReadPartition(const std::string& path, std::size_t n) {
  return read_partition_file(path, n);
}

void EmitWitness(Context& ctx, const WitnessReport& r) {
  if (!ctx.json_lines()) {
    ctx.out() << format_witness(r, ctx.labels(), ctx.verbose());
    return;
  }
  json j = {{"type", "witness"},
            {"vertex", ctx.name(r.vertex)},
            {"out", r.out_size},
            {"second", r.second_size},
            {"path", proof_path_name(r.proof_path)},
            {"verified", r.verified}};
  if (ctx.verbose()) j["trace"] = r.trace;
  ctx.emit(j);
}

void Analyze(Context& ctx, const std::string& path) {
  const OrientedGraph g = ctx.read_graph(path);
  const MissingStructure s = classify_missing_structure(g);
  const VertexSet witnesses = oracle_all_witnesses(g);
  const VertexSet sinks = find_sinks(g);
  if (ctx.json_lines()) {
    json head = {{"type", "graph"}, {"n", g.size()}, {"arcs", g.arc_count()},
                 {"structure", StructureName(s)}};
    if (const auto* star = std::get_if<MatchingPlusStar>(&s))
      head["center"] = ctx.name(star->center);
    ctx.emit(head);
    for (VertexId v = 0; v < g.size(); ++v) {
      const NeighborhoodReport r = neighborhood_report(g, v);
      ctx.emit({{"type", "vertex"}, {"vertex", ctx.name(v)}, {"out", ctx.names(r.out)},
                {"second", ctx.names(r.second_out)}, {"witness", r.is_witness}});
    }
    ctx.emit({{"type", "summary"}, {"sinks", ctx.names(sinks)},
              {"witnesses", ctx.names(witnesses)}});
    return;
  }
  std::ostream& out = ctx.out();
  out << "n=" << g.size() << " arcs=" << g.arc_count() << '\n';
  out << "structure=" << StructureName(s);
  if (const auto* star = std::get_if<MatchingPlusStar>(&s))
    out << " center=" << ctx.name(star->center);
  out << '\n';
  for (VertexId v = 0; v < g.size(); ++v) {
    const NeighborhoodReport r = neighborhood_report(g, v);
    out << "vertex " << ctx.name(v) << " out=" << ctx.set(r.out)
        << " second=" << ctx.set(r.second_out) << " |N+|=" << r.out.size()
        << " |N++|=" << r.second_out.size() << " witness=" << (r.is_witness ? "yes" : "no")
        << '\n';
  }
  out << "sinks=" << ctx.set(sinks) << '\n';
  out << "witnesses=" << ctx.set(witnesses) << '\n';
}

void Witness(Context& ctx, const std::string& path, const std::string& partition) {
  const OrientedGraph g = ctx.read_graph(path);
  const WitnessOptions opts = ctx.witness_options();
  if (!partition.empty()) {
    const PartitionSpec p = ReadPartition(partition, g.size());
    EmitWitness(ctx, witness_degenerate(g, p.a_set, p.b_set));
    return;
  }
  const MissingStructure s = classify_missing_structure(g);
  if (std::holds_alternative<PureMatching>(s)) {
    std::vector<WitnessReport> reports = witness_matching(g, opts);
    if (find_sinks(g).empty() && g.size() > 0) {
      WitnessReport second = two_witnesses_matching(g, opts).second;
      const bool listed = std::any_of(reports.begin(), reports.end(),
          [&](const WitnessReport& r) { return r.vertex == second.vertex; });
      if (!listed) reports.push_back(std::move(second));
    }
    for (const WitnessReport& r : reports) EmitWitness(ctx, r);
    return;
  }
  if (std::holds_alternative<MatchingPlusStar>(s)) {
    EmitWitness(ctx, witness_matching_plus_star(g, std::nullopt, opts));
    return;
  }
  const std::optional<PartitionSpec> found = find_partition(g);
  if (!found)
    throw InputError(
        "missing edges are neither a matching nor a matching plus a star, and "
        "no partition into a 2-degenerate part and an independent set exists");
  EmitWitness(ctx, witness_degenerate(g, found->a_set, found->b_set));
}

void MedianOrderCmd(Context& ctx, const std::string& path) {
  const OrientedGraph t = ctx.read_graph(path);
  const MedianOrder m = compute_median_order(t, ctx.solver());
  const std::vector<VertexId>& seq = m.ordering().sequence();
  if (ctx.json_lines()) {
    ctx.emit({{"type", "median-order"}, {"order", ctx.names(seq)}, {"value", m.value()},
              {"feed", ctx.name(m.feed())}});
    return;
  }
  ctx.out() << "order=" << ctx.seq(seq) << "\nvalue=" << m.value()
            << "\nfeed=" << ctx.name(m.feed()) << '\n';
}

void Delta(Context& ctx, const std::string& path) {
  const OrientedGraph g = ctx.read_graph(path);
  const DeltaDecomposition d = build_delta(g);
  if (!ctx.json_lines()) {
    ctx.out() << format_delta(d, ctx.labels());
    return;
  }
  const auto pair = [&](std::size_t node) {
    return json::array({ctx.name(d.nodes[node].lo), ctx.name(d.nodes[node].hi)});
  };
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    ctx.emit({{"type", "node"}, {"edge", pair(i)},
              {"forced", forced_status(g, d.nodes[i]).kind == ForcedStatus::Kind::kUnforced
                             ? "unforced"
                             : forced_status(g, d.nodes[i]).singly() ? "singly" : "dual"}});
  for (const DeltaArc& a : d.arcs)
    ctx.emit({{"type", "arc"}, {"from", pair(a.from)}, {"to", pair(a.to)}});
  for (const auto& p : d.paths) {
    json nodes = json::array();
    for (std::size_t k : p) nodes.push_back(pair(k));
    ctx.emit({{"type", "path"}, {"nodes", nodes}});
  }
  for (const auto& c : d.cycles) {
    json nodes = json::array();
    for (std::size_t k : c) nodes.push_back(pair(k));
    ctx.emit({{"type", "cycle"}, {"nodes", nodes},
              {"gamma", ctx.names(gamma(g, d, c.front()).vertices)}});
  }
}

void Complete(Context& ctx, const std::string& path, bool max, const std::string& bits) {
  const OrientedGraph g = ctx.read_graph(path);
  std::vector<bool> choices;
  std::optional<Completion> t;
  std::optional<std::int64_t> value;
  if (max) {
    if (!bits.empty()) throw InputError("--max and --choices are exclusive");
    MaxSafeCompletionOptions opts;
    opts.solver = ctx.solver();
    SafeCompletionChoice best = max_value_safe_completion(g, opts);
    choices = best.choices;
    value = best.value;
    t.emplace(std::move(best.completion));
  } else {
    const std::size_t k = free_choice_edges(build_delta(g), g).size();
    choices = bits.empty() ? std::vector<bool>(k, false) : ParseBits(bits);
    t.emplace(safe_completion(g, choices));
  }
  if (ctx.json_lines()) {
    json arcs = json::array();
    for (const Arc& a : t->dashed())
      arcs.push_back(json::array({ctx.name(a.from), ctx.name(a.to)}));
    json j = {{"type", "completion"}, {"choices", Bits(choices)}, {"dashed", arcs}};
    if (value) j["value"] = *value;
    ctx.emit(j);
    return;
  }
  ctx.out() << "choices=" << Bits(choices) << '\n';
  for (const Arc& a : t->dashed())
    ctx.out() << "dashed " << ctx.name(a.from) << "->" << ctx.name(a.to) << '\n';
  if (value) ctx.out() << "value=" << *value << '\n';
  if (ctx.verbose()) ctx.out() << format_edge_list(t->tournament());
}

void Sediment(Context& ctx, const std::string& path, std::size_t steps,
              const std::string& blocks, const std::string& order) {
  const OrientedGraph g = ctx.read_graph(path);
  const SolverOptions solver = ctx.solver();
  OrientedGraph t;
  std::optional<ModulePartition> p;
  if (g.is_tournament()) {
    t = g;
    p.emplace(blocks.empty() ? ModulePartition::Singletons(g.size())
                             : ParseBlocks(blocks, g.size()));
  } else {
    if (!blocks.empty())
      throw InputError("--blocks applies to tournaments; graphs missing a matching "
                       "use the partition into I(u)");
    require_matching(g);
    MaxSafeCompletionOptions opts;
    opts.solver = solver;
    t = max_value_safe_completion(g, opts).completion.tournament();
    p.emplace(home_partition(g, build_delta(g)));
  }
  p->check_modules(t);

  std::optional<MedianOrder> start;
  if (order.empty()) {
    start.emplace(good_median_order(t, *p, compute_median_order(t, solver)));
  } else {
    const Ordering l(parse_sequence(order), t.size());
    const std::int64_t optimum = median_value(t, solver);
    if (order_value(t, l) != optimum)
      throw InputError("--order has value " + std::to_string(order_value(t, l)) +
                       ", not the optimum " + std::to_string(optimum));
    start.emplace(MedianOrder::Certify(t, l, optimum));
  }
  const SedimentOutcome s = sediment_iterate(t, *p, *start, steps);
  if (ctx.json_lines()) {
    json history = json::array();
    for (const MedianOrder& m : s.history) history.push_back(ctx.names(m.ordering().sequence()));
    json j = {{"type", "sediment"}, {"outcome", s.stable() ? "stable" : "periodic"},
              {"history", history}, {"value", start->value()}};
    if (s.stable())
      j["steps"] = s.steps();
    else
      j["period_start"] = s.period_start;
    ctx.emit(j);
    return;
  }
  std::ostream& out = ctx.out();
  out << "outcome=" << (s.stable() ? "stable" : "periodic") << '\n';
  if (s.stable())
    out << "steps=" << s.steps() << '\n';
  else
    out << "period_start=" << s.period_start
        << "\nperiod_length=" << s.history.size() - s.period_start << '\n';
  for (std::size_t q = 0; q < s.history.size(); ++q)
    out << "step=" << q << " feed=" << ctx.name(s.history[q].feed())
        << " order=" << ctx.seq(s.history[q].ordering().sequence()) << '\n';
  out << "value=" << start->value() << '\n';
}

void Degenerate(Context& ctx, const std::string& path, const std::string& partition) {
  const OrientedGraph g = ctx.read_graph(path);
  const DegeneracyResult d = two_degeneracy_certificate(g);
  json j = {{"type", "degenerate"}};
  std::ostringstream text;
  if (const auto* c = std::get_if<DegeneracyCertificate>(&d)) {
    text << "two-degenerate=yes order=" << ctx.seq(c->ordering) << '\n';
    j["two_degenerate"] = true;
    j["order"] = ctx.names(c->ordering);
    if (g.size() > 0) {
      const EdgeBoundReport r = check_edge_bound(g);
      text << "arcs=" << r.arcs << " bound=" << r.bound
           << " low-out=" << ctx.name(r.low_out_vertex) << '\n';
      j["arcs"] = r.arcs;
      j["bound"] = r.bound;
      j["low_out"] = ctx.name(r.low_out_vertex);
    }
  } else {
    const VertexSet& stuck = std::get<DegeneracyRefusal>(d).stuck;
    text << "two-degenerate=no stuck=" << ctx.set(stuck) << '\n';
    j["two_degenerate"] = false;
    j["stuck"] = ctx.names(stuck);
  }
  std::optional<PartitionSpec> p;
  if (!partition.empty())
    p = ReadPartition(partition, g.size());
  else
    p = find_partition(g);
  std::optional<WitnessReport> w;
  if (p) {
    const PartitionInstance inst = validate_partition(g, p->a_set, p->b_set);
    text << "A=" << ctx.set(p->a_set) << " B=" << ctx.set(p->b_set)
         << " min-outdegree=" << inst.min_outdegree << '\n';
    j["A"] = ctx.names(p->a_set);
    j["B"] = ctx.names(p->b_set);
    j["min_outdegree"] = inst.min_outdegree;
    w = witness_degenerate(g, p->a_set, p->b_set);
  } else {
    text << "partition=none\n";
    j["partition"] = nullptr;
  }
  if (ctx.json_lines()) {
    ctx.emit(j);
  } else {
    ctx.out() << text.str();
  }
  if (w) EmitWitness(ctx, *w);
}

int Fuzz(Context& ctx, FuzzConfig config, const std::vector<std::string>& classes) {
  config.classes.clear();
  for (const std::string& name : classes) {
    if (name == "all") {
      config.classes.insert(config.classes.end(), all_classes().begin(), all_classes().end());
    } else {
      config.classes.push_back(parse_class(name));
    }
  }
  if (config.classes.empty())
    config.classes.assign(all_classes().begin(), all_classes().end());
  config.witness = ctx.witness_options();
  const FuzzReport r = fuzz(config);
  if (!ctx.json_lines()) {
    ctx.out() << format_fuzz_report(r);
    return fuzz_exit_code(r);
  }
  ctx.emit({{"type", "fuzz"}, {"trials", r.trials_run}, {"violations", r.violations.size()},
            {"coverage", r.branch_coverage}, {"checked", r.property_checks}});
  for (const FuzzViolation& v : r.violations)
    ctx.emit({{"type", "violation"}, {"trial", v.trial}, {"seed", v.seed},
              {"class", class_name(v.cls)}, {"property", v.property},
              {"detail", v.detail}, {"potential_refutation", v.potential_refutation},
              {"instance", v.instance}, {"partition", v.partition}, {"shrunk", v.shrunk}});
  return fuzz_exit_code(r);
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void Gen(Context& ctx, const std::string& cls_name, std::size_t n, std::uint64_t seed,
         std::optional<std::size_t> n_b, const std::string& partition_out) {
  const InstanceClass cls = parse_class(cls_name);
  GeneratedInstance inst{cls, OrientedGraph(), std::nullopt};
  if (n_b) {
    if (cls != InstanceClass::kDegeneratePartition)
      throw InputError("--nb applies to the degenerate-partition class");
    if (*n_b > n) throw InputError("--nb exceeds --n");
    inst = generate_degenerate(n - *n_b, *n_b, seed);
  } else {
    inst = generate(cls, n, seed);
  }
  if (!partition_out.empty()) {
    if (!inst.partition) throw InputError("--partition-out needs the degenerate-partition class");
    WriteFile(partition_out, format_partition(*inst.partition));
  }
  if (!ctx.json_lines()) {
    ctx.out() << format_edge_list(inst.graph);
    return;
  }
  json arcs = json::array();
  for (const Arc& a : inst.graph.arcs()) arcs.push_back(json::array({a.from, a.to}));
  json j = {{"type", "graph"}, {"class", class_name(cls)}, {"n", inst.graph.size()},
            {"arcs", arcs}};
  if (inst.partition)
    j["partition"] = {{"A", inst.partition->a_set.to_vector()},
                      {"B", inst.partition->b_set.to_vector()}};
  ctx.emit(j);
}

void Figure2Cmd(Context& ctx, bool dot, const std::string& labels_out) {
  const OrientedGraph g = figure2_instance();
  const LabelTable labels = figure2_labels();
  if (!labels_out.empty()) {
    std::string text;
    for (VertexId v = 0; v < g.size(); ++v) text += labels.name(v) + "\n";
    WriteFile(labels_out, text);
  }
  if (dot) {
    ctx.out() << format_dot(g, labels);
  } else if (ctx.json_lines()) {
    json arcs = json::array();
    for (const Arc& a : g.arcs())
      arcs.push_back(json::array({labels.name(a.from), labels.name(a.to)}));
    ctx.emit({{"type", "graph"}, {"n", g.size()}, {"arcs", arcs}});
  } else {
    ctx.out() << format_edge_list(g);
  }
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const CounterexampleFound*>(&e)) return kExitRefutation;
  if (dynamic_cast<const InvariantViolation*>(&e)) return kExitInvariant;
  if (dynamic_cast<const CapabilityError*>(&e)) return kExitCapability;
  if (dynamic_cast<const std::bad_alloc*>(&e)) return kExitCapability;
  return kExitInput;
}

int fuzz_exit_code(const FuzzReport& report) {
  if (report.potential_refutation()) return kExitRefutation;
  return report.ok() ? kExitOk : kExitInvariant;
}

int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Constructive witnesses for the second neighbourhood conjecture", "snc"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}));
  app.add_flag("-v,--verbose", common.verbose, "Print proof traces");
  app.add_option("--labels", common.labels_path, "Vertex names, one per line");
  app.add_option("--limit-n", common.limit_n, "Largest n for exact median orders");

  std::string input;
  const auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Edge-list file, or - for stdin")->required();
    return sub;
  };
  CLI::App* analyze = with_input(app.add_subcommand("analyze", "Per-vertex neighbourhoods"));
  CLI::App* witness = with_input(app.add_subcommand("witness", "Find verified witnesses"));
  CLI::App* median = with_input(app.add_subcommand("median-order", "Exact median order"));
  CLI::App* delta = with_input(app.add_subcommand("delta", "The digraph on missing edges"));
  CLI::App* complete = with_input(app.add_subcommand("complete", "A safe completion"));
  CLI::App* sediment = with_input(app.add_subcommand("sediment", "Iterate sedimentation"));
  CLI::App* degenerate =
      with_input(app.add_subcommand("degenerate", "2-degeneracy and (A, B) partitions"));
  CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "Property fuzzing");
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
  CLI::App* figure2 = app.add_subcommand("figure2", "The built-in six-vertex instance");

  std::string partition;
  witness->add_option("--partition", partition, "Partition file (A:/B: lines)");
  degenerate->add_option("--partition", partition, "Partition file (A:/B: lines)");

  bool max = false;
  std::string choices;
  complete->add_flag("--max", max, "Maximum-value safe completion");
  complete->add_option("--choices", choices, "Free-choice bits, e.g. 010");

  std::size_t steps = WitnessOptions{}.sediment_steps;
  std::string blocks, order;
  sediment->add_option("--steps", steps, "Iteration cap");
  sediment->add_option("--blocks", blocks, "Module blocks, e.g. \"0 1;2;3\"");
  sediment->add_option("--order", order, "Starting median order");

  FuzzConfig fuzz_config;
  fuzz_config.trials = 1000;
  std::vector<std::string> classes;
  bool no_shrink = false;
  fuzz_cmd->add_option("--trials", fuzz_config.trials, "Number of trials");
  fuzz_cmd->add_option("--seed", fuzz_config.master_seed, "Master seed");
  fuzz_cmd->add_option("--class", classes, "Instance class (repeatable, or all)");
  fuzz_cmd->add_option("--jobs", fuzz_config.jobs, "Worker threads");
  fuzz_cmd->add_option("--n-min", fuzz_config.n_min, "Smallest instance");
  fuzz_cmd->add_option("--n-max", fuzz_config.n_max, "Largest instance");
  fuzz_cmd->add_flag("--no-shrink", no_shrink, "Keep violations unshrunk only");

  std::string gen_class;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = kDefaultSeed;
  std::optional<std::size_t> gen_nb;
  std::string partition_out;
  gen->add_option("--class", gen_class, "Instance class")->required();
  gen->add_option("--n", gen_n, "Number of vertices")->required();
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--nb", gen_nb, "Size of B (degenerate-partition)");
  gen->add_option("--partition-out", partition_out, "Write the partition here");

  bool dot = false;
  std::string labels_out;
  figure2->add_flag("--dot", dot, "Graphviz output");
  figure2->add_option("--labels-out", labels_out, "Write vertex names here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  Context ctx(common, in, out);
  try {
    if (analyze->parsed()) Analyze(ctx, input);
    if (witness->parsed()) Witness(ctx, input, partition);
    if (median->parsed()) MedianOrderCmd(ctx, input);
    if (delta->parsed()) Delta(ctx, input);
    if (complete->parsed()) Complete(ctx, input, max, choices);
    if (sediment->parsed()) Sediment(ctx, input, steps, blocks, order);
    if (degenerate->parsed()) Degenerate(ctx, input, partition);
    if (fuzz_cmd->parsed()) {
      fuzz_config.shrink = !no_shrink;
      return Fuzz(ctx, fuzz_config, classes);
    }
    if (gen->parsed()) Gen(ctx, gen_class, gen_n, gen_seed, gen_nb, partition_out);
    if (figure2->parsed()) Figure2Cmd(ctx, dot, labels_out);
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    err << "error: " << e.what() << '\n';
    if (const auto* iv = dynamic_cast<const InvariantViolation*>(&e);
        iv && !iv->instance().empty())
      err << "instance:\n" << iv->instance();
    return code;
  }
  return kExitOk;
}

}  // namespace snc
