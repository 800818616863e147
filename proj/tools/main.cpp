#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyskel/box.hpp"
#include "polyskel/flip_engine.hpp"
#include "polyskel/graph.hpp"
#include "polyskel/hardness.hpp"
#include "polyskel/hypergraph.hpp"
#include "polyskel/io.hpp"
#include "polyskel/special_cases.hpp"
#include "polyskel/submodular.hpp"

namespace {

using nlohmann::ordered_json;
using namespace polyskel;

// Raised after FAIL lines have been printed; main turns it into exit code 1.
struct CheckFailed : std::exception {
  const char* what() const noexcept override { return "check failed"; }
};

std::uint64_t default_max_states() {
  const char* env = std::getenv("POLYSKEL_MAX_STATES");
  if (!env) return 50'000'000;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || parsed == 0)
    throw ValidationError("POLYSKEL_MAX_STATES must be a positive integer");
  return parsed;
}

ordered_json flips_to_json(const std::vector<Flip>& flips) {
  ordered_json arr = ordered_json::array();
  for (const Flip& f : flips) arr.push_back({f.from, f.to});
  return arr;
}

void print_flips(const std::vector<Flip>& flips) {
  for (const Flip& f : flips)
    std::cout << "flip: " << f.from << " -> " << f.to << "\n";
}

void emit(const ordered_json& doc, bool as_json) {
  if (as_json) std::cout << doc.dump(2) << "\n";
}

struct DistArgs {
  std::string hypergraph_path, from_path, to_path;
  std::vector<int> forbidden;
  std::uint64_t max_states = 0;  // 0 = use default
  bool show_sequence = false;
  std::string format = "text";
};

void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

void run_dist(const std::string& mode, const DistArgs& args) {
  NamedHypergraph named = load_hypergraph(args.hypergraph_path);
  const Hypergraph& h = named.h;
  Orientation from = load_orientation(args.from_path);
  Orientation to = load_orientation(args.to_path);
  const bool as_json = args.format == "json";

  DistanceBounds bounds = distance_bounds(h, from, to);
  ordered_json out;
  out["command"] = "dist " + mode;
  out["max_codegree"] = h.max_codegree();
  out["diff_count"] = bounds.upper;
  out["lower_bound"] = bounds.lower;

  if (mode == "bounds") {
    out["upper_bound"] = bounds.upper;
    if (as_json) {
      emit(out, true);
    } else {
      std::cout << "diff_count: " << bounds.upper << "\n"
                << "max_codegree: " << h.max_codegree() << "\n"
                << "lower_bound: " << bounds.lower << "\n"
                << "upper_bound: " << bounds.upper << "\n";
    }
    return;
  }

  if (mode == "approx") {
    FlipSequence seq = approx_flip_sequence(h, from, to);
    out["length"] = seq.length();
    if (args.show_sequence) out["sequence"] = flips_to_json(seq.flips);
    if (as_json) {
      emit(out, true);
    } else {
      std::cout << "length: " << seq.length() << "\n"
                << "diff_count: " << bounds.upper << "\n"
                << "max_codegree: " << h.max_codegree() << "\n"
                << "lower_bound: " << bounds.lower << "\n";
      if (args.show_sequence) print_flips(seq.flips);
    }
    return;
  }

  SearchOptions options;
  options.forbidden_vertices = args.forbidden;
  options.max_states = args.max_states ? args.max_states : default_max_states();
  bool reachable = true;
  DistanceReport report;
  try {
    report = exact_distance(h, from, to, options);
  } catch (const UnreachableError&) {
    reachable = false;
  }
  out["reachable"] = reachable;
  if (!reachable) {
    if (as_json) {
      out["length"] = nullptr;
      emit(out, true);
    } else {
      std::cout << "length: unreachable\n";
    }
    return;
  }
  out["length"] = report.length;
  out["states_explored"] = report.states_explored;
  if (args.show_sequence) out["sequence"] = flips_to_json(report.sequence.flips);
  if (as_json) {
    emit(out, true);
  } else {
    std::cout << "length: " << report.length << "\n"
              << "diff_count: " << bounds.upper << "\n"
              << "max_codegree: " << h.max_codegree() << "\n"
              << "lower_bound: " << bounds.lower << "\n"
              << "states_explored: " << report.states_explored << "\n";
    if (args.show_sequence) print_flips(report.sequence.flips);
  }
}

struct BoxArgs {
  std::string instance_path;
  bool verify = false;
  std::uint64_t max_states = 0;
  std::string format = "text";
};

void run_box_path(const BoxArgs& args) {
  BoxInstance inst = load_box(args.instance_path);
  SameSumPartition part = max_same_sum_partition(inst.pcfct());
  BoxPath path = shortest_box_path(inst, part);
  const bool as_json = args.format == "json";

  ordered_json out;
  out["command"] = "box path";
  out["length"] = path.length();
  out["blocks"] = part.blocks.size();
  ordered_json moves = ordered_json::array();
  for (const BoxMove& mv : path.moves)
    moves.push_back({{"from", mv.from}, {"to", mv.to}, {"amount", mv.amount}});
  out["moves"] = std::move(moves);
  out["vertices"] = path.vertices;

  bool ok = true;
  std::string verify_note;
  if (args.verify) {
    std::uint64_t cap = args.max_states ? args.max_states : 10'000'000;
    BoxPath reference = box_shortest_path_bfs(inst, cap);
    SameSumPartition recovered = partition_from_path(inst, path);
    if (reference.length() != path.length()) {
      ok = false;
      verify_note = "constructed length " + std::to_string(path.length()) +
                    " differs from search distance " +
                    std::to_string(reference.length());
    } else if (recovered.blocks.size() != part.blocks.size()) {
      ok = false;
      verify_note = "recovered partition has a different block count";
    }
    out["verified"] = ok;
    if (!ok) out["verify_error"] = verify_note;
  }

  if (as_json) {
    emit(out, true);
  } else {
    std::cout << "length: " << path.length() << "\n"
              << "blocks: " << part.blocks.size() << "\n";
    for (const auto& v : path.vertices) {
      std::cout << "vertex:";
      for (long long c : v) std::cout << " " << c;
      std::cout << "\n";
    }
    for (const BoxMove& mv : path.moves)
      std::cout << "move: " << mv.from << " -> " << mv.to << " amount "
                << mv.amount << "\n";
    if (args.verify)
      std::cout << "verified: " << (ok ? "yes" : verify_note) << "\n";
  }
  if (args.verify && !ok) throw CheckFailed{};
}

void run_pcfct_solve(const BoxArgs& args) {
  PcfctInstance p = load_pcfct(args.instance_path);
  SameSumPartition part = max_same_sum_partition(p);
  auto plan = transport_plan_from_partition(p, part);
  long long value = nonzero_count(plan);
  const bool as_json = args.format == "json";

  ordered_json out;
  out["command"] = "pcfct solve";
  out["value"] = value;
  out["blocks"] = part.blocks.size();
  ordered_json blocks = ordered_json::array();
  for (const auto& blk : part.blocks)
    blocks.push_back({{"supplies", blk.supply}, {"demands", blk.demand}});
  out["partition"] = std::move(blocks);
  out["plan"] = plan;

  bool ok = true;
  std::string verify_note;
  if (args.verify) {
    if (!is_transport_plan(p, plan)) {
      ok = false;
      verify_note = "plan does not satisfy the marginals";
    } else if (value + static_cast<long long>(part.blocks.size()) !=
               p.supply_count() + p.demand_count()) {
      ok = false;
      verify_note = "support size does not match the partition";
    }
    out["verified"] = ok;
    if (!ok) out["verify_error"] = verify_note;
  }

  if (as_json) {
    emit(out, true);
  } else {
    std::cout << "value: " << value << "\n"
              << "blocks: " << part.blocks.size() << "\n";
    for (const auto& blk : part.blocks) {
      std::cout << "block: supplies";
      for (int k : blk.supply) std::cout << " " << k;
      std::cout << " demands";
      for (int k : blk.demand) std::cout << " " << k;
      std::cout << "\n";
    }
    for (const auto& row : plan) {
      std::cout << "plan:";
      for (long long v : row) std::cout << " " << v;
      std::cout << "\n";
    }
    if (args.verify)
      std::cout << "verified: " << (ok ? "yes" : verify_note) << "\n";
  }
  if (args.verify && !ok) throw CheckFailed{};
}

struct MatroidArgs {
  std::string instance_path;
  std::string format = "text";
};

void run_matroid_path(const MatroidArgs& args) {
  MatroidTest test = load_matroid_test(args.instance_path);
  auto path = matroid_exchange_path(test.oracle, test.base_a, test.base_b);
  const bool as_json = args.format == "json";

  auto mask_elements = [](std::uint64_t mask) {
    std::vector<int> out;
    for (int e = 0; e < 64; ++e)
      if (mask >> e & 1) out.push_back(e);
    return out;
  };

  ordered_json out;
  out["command"] = "matroid path";
  out["oracle"] = test.oracle.label;
  out["length"] = path.size() - 1;
  ordered_json bases = ordered_json::array();
  for (std::uint64_t base : path) bases.push_back(mask_elements(base));
  out["bases"] = std::move(bases);

  if (as_json) {
    emit(out, true);
  } else {
    std::cout << "oracle: " << test.oracle.label << "\n"
              << "length: " << path.size() - 1 << "\n";
    for (std::uint64_t base : path) {
      std::cout << "base:";
      for (int e : mask_elements(base)) std::cout << " " << e;
      std::cout << "\n";
    }
  }
}

struct GenArgs {
  std::string graph_path;
  std::string out_prefix;
  int interval_n = 0;
};

void write_generated(const std::string& prefix, const Hypergraph& h,
                     const Orientation& h1, const Orientation& h2,
                     const std::vector<std::string>& names,
                     ordered_json meta) {
  save_hypergraph(prefix + ".hypergraph.json", h, names);
  save_orientation(prefix + ".h1.json", h1);
  save_orientation(prefix + ".h2.json", h2);
  std::ofstream meta_out(prefix + ".meta.json");
  if (!meta_out)
    throw ParseError(prefix + ".meta.json: cannot write file");
  meta_out << meta.dump(2) << "\n";
  std::cout << "wrote: " << prefix << ".hypergraph.json\n"
            << "wrote: " << prefix << ".h1.json\n"
            << "wrote: " << prefix << ".h2.json\n"
            << "wrote: " << prefix << ".meta.json\n";
}

// Heads at each edge's smallest vertex, and at its largest; both acyclic for
// any hypergraph since the vertex order itself is a topological order.
Orientation min_heads(const Hypergraph& h) {
  Orientation o;
  for (const auto& e : h.edges()) o.heads.push_back(e.front());
  return o;
}

Orientation max_heads(const Hypergraph& h) {
  Orientation o;
  for (const auto& e : h.edges()) o.heads.push_back(e.back());
  return o;
}

void run_gen_hardness(const GenArgs& args) {
  Graph g = load_graph(args.graph_path);
  ReductionInstance inst = build_reduction(g);
  ordered_json meta;
  meta["generator"] = "hardness";
  meta["graph_n"] = g.vertex_count();
  meta["graph_m"] = g.edge_count();
  meta["n"] = inst.h.vertex_count();
  meta["hyperedges"] = inst.h.edge_count();
  try {
    ReductionBound bound = reduction_distance(g);
    meta["cover_size"] = bound.cover.size();
    meta["predicted_distance"] = bound.distance;
  } catch (const CapacityError& e) {
    std::cerr << "warning: " << e.what() << "; prediction omitted\n";
  }
  write_generated(args.out_prefix, inst.h, inst.start, inst.goal,
                  inst.vertex_names(), std::move(meta));
}

void run_gen_star_gadget(const GenArgs& args) {
  StarGadget gadget = build_star_gadget();
  ordered_json meta;
  meta["generator"] = "star-gadget";
  meta["n"] = gadget.h.vertex_count();
  meta["hyperedges"] = gadget.h.edge_count();
  meta["predicted_distance"] = star_gadget_schedule().size();
  write_generated(args.out_prefix, gadget.h, gadget.min_heads,
                  gadget.max_heads, {}, std::move(meta));
}

void run_gen_interval(const GenArgs& args) {
  Hypergraph h = interval_hypergraph(args.interval_n);
  ordered_json meta;
  meta["generator"] = "interval";
  meta["n"] = h.vertex_count();
  meta["hyperedges"] = h.edge_count();
  write_generated(args.out_prefix, h, min_heads(h), max_heads(h), {},
                  std::move(meta));
}

void run_gen_building_set(const GenArgs& args) {
  Graph g = load_graph(args.graph_path);
  Hypergraph h = building_set_hypergraph(g);
  ordered_json meta;
  meta["generator"] = "building-set";
  meta["graph_n"] = g.vertex_count();
  meta["graph_m"] = g.edge_count();
  meta["n"] = h.vertex_count();
  meta["hyperedges"] = h.edge_count();
  write_generated(args.out_prefix, h, min_heads(h), max_heads(h), {},
                  std::move(meta));
}

struct CheckArgs {
  std::string instance_path;
  std::string hypergraph_path;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string format = "text";
};

struct CheckLog {
  ordered_json lines = ordered_json::array();
  bool any_fail = false;

  void pass(const std::string& name, const std::string& note = "") {
    lines.push_back({{"check", name}, {"result", "PASS"}, {"note", note}});
    std::cout << name << ": PASS" << (note.empty() ? "" : " (" + note + ")")
              << "\n";
  }
  void fail(const std::string& name, const std::string& witness) {
    any_fail = true;
    lines.push_back({{"check", name}, {"result", "FAIL"}, {"note", witness}});
    std::cout << name << ": FAIL " << witness << "\n";
  }
  void skip(const std::string& name, const std::string& why) {
    lines.push_back({{"check", name}, {"result", "SKIP"}, {"note", why}});
    std::cout << name << ": SKIP (" << why << ")\n";
  }
};

std::string mask_to_string(std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (int e = 0; e < 64; ++e)
    if (mask >> e & 1) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
  return s + "}";
}

void check_oracle_submodular(CheckLog& log, const SubmodularOracle& oracle,
                             const CheckArgs& args) {
  if (!is_normalized(oracle)) {
    log.fail("normalized", "f(empty set) != 0");
    return;
  }
  log.pass("normalized");
  std::optional<SubmodularityViolation> violation;
  std::string note;
  if (oracle.n <= 12) {
    violation = check_submodular(oracle);
    note = "exhaustive";
  } else {
    if (!args.seed_set)
      throw ValidationError(
          "check: ground set too large for the exhaustive test; pass "
          "--samples and --seed");
    std::uint64_t samples = args.samples ? args.samples : 100'000;
    violation = check_submodular_sampled(oracle, samples, args.seed);
    note = std::to_string(samples) + " samples, seed " +
           std::to_string(args.seed);
  }
  if (violation)
    log.fail("submodular", "A=" + mask_to_string(violation->set_a) +
                               " B=" + mask_to_string(violation->set_b) +
                               " f(A)+f(B)=" + std::to_string(violation->lhs) +
                               " < " + std::to_string(violation->rhs));
  else
    log.pass("submodular", note);
}

void run_check(const CheckArgs& args) {
  std::ifstream probe(args.instance_path);
  if (!probe) throw ParseError(args.instance_path + ": cannot open file");
  ordered_json doc;
  try {
    doc = ordered_json::parse(probe);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(args.instance_path + ": " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError(args.instance_path + ": missing kind");
  std::string kind = doc["kind"].get<std::string>();

  CheckLog log;
  if (kind == "hypergraph") {
    NamedHypergraph named = load_hypergraph(args.instance_path);
    check_oracle_submodular(log, hypergraph_cut_count_oracle(named.h), args);
    std::uint64_t combos = 1;
    bool small = named.h.vertex_count() <= 8;
    for (const auto& e : named.h.edges()) {
      combos *= e.size();
      if (combos > 1'000'000) {
        small = false;
        break;
      }
    }
    if (small) {
      CorrespondenceReport rep = check_vertex_correspondence(named.h);
      if (rep.ok)
        log.pass("vertex-correspondence",
                 std::to_string(rep.orientation_count) + " orientations");
      else
        log.fail("vertex-correspondence", rep.detail);
    } else {
      log.skip("vertex-correspondence", "instance too large");
    }
  } else if (kind == "orientation") {
    if (args.hypergraph_path.empty())
      throw ValidationError(
          "check: orientation instances need --hypergraph");
    NamedHypergraph named = load_hypergraph(args.hypergraph_path);
    Orientation o = load_orientation(args.instance_path);
    try {
      validate_orientation(named.h, o);
      if (is_acyclic(named.h, o))
        log.pass("acyclic");
      else
        log.fail("acyclic", "the induced digraph has a directed cycle");
    } catch (const ValidationError& e) {
      log.fail("well-formed", e.what());
    }
  } else if (kind == "graph") {
    Graph g = load_graph(args.instance_path);
    SubmodularOracle oracle = hypergraph_cut_count_oracle(g.to_hypergraph());
    check_oracle_submodular(log, oracle, args);
    Graph rebuilt = reconstruct_graph(oracle);
    auto sorted_edges = [](const Graph& gr) {
      auto e = gr.edges();
      std::sort(e.begin(), e.end());
      return e;
    };
    if (sorted_edges(rebuilt) == sorted_edges(g))
      log.pass("reconstruction");
    else
      log.fail("reconstruction", "oracle round-trip changed the edge set");
  } else if (kind == "box") {
    BoxInstance inst = load_box(args.instance_path);
    check_oracle_submodular(log, box_submodular_oracle(inst), args);
  } else if (kind == "pcfct") {
    PcfctInstance p = load_pcfct(args.instance_path);
    SameSumPartition part = max_same_sum_partition(p);
    auto plan = transport_plan_from_partition(p, part);
    if (is_transport_plan(p, plan))
      log.pass("transport-plan", "value " + std::to_string(nonzero_count(plan)));
    else
      log.fail("transport-plan", "northwest filling broke the marginals");
  } else if (kind == "matroid-test") {
    MatroidTest test = load_matroid_test(args.instance_path);
    check_oracle_submodular(log, test.oracle, args);
    auto axiom = check_rank_axioms(test.oracle, args.samples,
                                   args.seed_set ? &args.seed : nullptr);
    if (axiom)
      log.fail("rank-axioms", axiom->what + " at " +
                                  mask_to_string(axiom->set) + " element " +
                                  std::to_string(axiom->element));
    else
      log.pass("rank-axioms");
    if (!log.any_fail) {
      if (!is_base(test.oracle, test.base_a) ||
          !is_base(test.oracle, test.base_b)) {
        log.fail("bases", "an endpoint is not a base");
      } else {
        auto path = matroid_exchange_path(test.oracle, test.base_a,
                                          test.base_b);
        std::uint64_t moved = test.base_a & ~test.base_b;
        if (path.size() == std::size_t(std::popcount(moved)) + 1)
          log.pass("exchange-path",
                   "length " + std::to_string(path.size() - 1));
        else
          log.fail("exchange-path", "wrong length");
      }
    }
  } else {
    throw ParseError(args.instance_path + ": unknown kind \"" + kind + "\"");
  }

  if (args.format == "json") {
    ordered_json out;
    out["command"] = "check";
    out["kind"] = kind;
    out["checks"] = log.lines;
    out["ok"] = !log.any_fail;
    emit(out, true);
  }
  if (log.any_fail) throw CheckFailed{};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "flip distances for hypergraph orientations, box transport walks, and "
      "matroid base exchanges"};
  app.require_subcommand(1);

  DistArgs dist_args;
  auto* dist = app.add_subcommand(
      "dist", "flip distance between acyclic orientations");
  dist->require_subcommand(1);
  std::vector<CLI::App*> dist_modes;
  const std::map<std::string, std::string> dist_help = {
      {"exact", "breadth-first search for the true distance"},
      {"approx", "greedy walk, at most max-codegree times optimal"},
      {"bounds", "difference count and the derived bounds only"}};
  for (const char* mode : {"exact", "approx", "bounds"}) {
    auto* sub = dist->add_subcommand(mode, dist_help.at(mode));
    sub->add_option("--hypergraph", dist_args.hypergraph_path)->required();
    sub->add_option("--from", dist_args.from_path)->required();
    sub->add_option("--to", dist_args.to_path)->required();
    add_format_flag(sub, dist_args.format);
    dist_modes.push_back(sub);
  }
  dist_modes[0]->add_option("--forbid-vertex", dist_args.forbidden,
                            "exclude flips touching this vertex");
  dist_modes[0]->add_option("--max-states", dist_args.max_states,
                            "search state cap");
  dist_modes[0]->add_flag("--sequence", dist_args.show_sequence,
                          "print the witness flips");
  dist_modes[1]->add_flag("--sequence", dist_args.show_sequence,
                          "print the flips");
  dist_modes[0]->callback([&] { run_dist("exact", dist_args); });
  dist_modes[1]->callback([&] { run_dist("approx", dist_args); });
  dist_modes[2]->callback([&] { run_dist("bounds", dist_args); });

  BoxArgs box_args;
  auto* box = app.add_subcommand("box", "shortest paths between box vertices");
  box->require_subcommand(1);
  auto* box_path = box->add_subcommand("path", "edge walk between two vertices of a box polytope");
  box_path->add_option("--instance", box_args.instance_path)->required();
  box_path->add_flag("--verify", box_args.verify,
                     "cross-check against breadth-first search");
  box_path->add_option("--max-states", box_args.max_states,
                       "state cap for --verify");
  add_format_flag(box_path, box_args.format);
  box_path->callback([&] { run_box_path(box_args); });

  BoxArgs pcfct_args;
  auto* pcfct = app.add_subcommand("pcfct", "sparse transport plans");
  pcfct->require_subcommand(1);
  auto* pcfct_solve = pcfct->add_subcommand("solve", "sparsest feasible plan via a maximum same-sum partition");
  pcfct_solve->add_option("--instance", pcfct_args.instance_path)->required();
  pcfct_solve->add_flag("--verify", pcfct_args.verify,
                        "validate the plan marginals and support size");
  add_format_flag(pcfct_solve, pcfct_args.format);
  pcfct_solve->callback([&] { run_pcfct_solve(pcfct_args); });

  MatroidArgs matroid_args;
  auto* matroid = app.add_subcommand("matroid", "base exchange walks");
  matroid->require_subcommand(1);
  auto* matroid_path = matroid->add_subcommand("path", "shortest base exchange walk between two bases");
  matroid_path->add_option("--instance", matroid_args.instance_path)
      ->required();
  add_format_flag(matroid_path, matroid_args.format);
  matroid_path->callback([&] { run_matroid_path(matroid_args); });

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  auto* gen_hardness = gen->add_subcommand("hardness", "orientation pair whose distance encodes a minimum vertex cover");
  gen_hardness->add_option("--graph", gen_args.graph_path)->required();
  gen_hardness->add_option("--out", gen_args.out_prefix)->required();
  gen_hardness->callback([&] { run_gen_hardness(gen_args); });
  auto* gen_star = gen->add_subcommand("star-gadget", "7-vertex instance whose distance drops below the difference count");
  gen_star->add_option("--out", gen_args.out_prefix)->required();
  gen_star->callback([&] { run_gen_star_gadget(gen_args); });
  auto* gen_interval = gen->add_subcommand("interval", "all intervals of 0..n-1 as hyperedges");
  gen_interval->add_option("--n", gen_args.interval_n)->required();
  gen_interval->add_option("--out", gen_args.out_prefix)->required();
  gen_interval->callback([&] { run_gen_interval(gen_args); });
  auto* gen_building = gen->add_subcommand("building-set", "connected vertex sets of a graph as hyperedges");
  gen_building->add_option("--graph", gen_args.graph_path)->required();
  gen_building->add_option("--out", gen_args.out_prefix)->required();
  gen_building->callback([&] { run_gen_building_set(gen_args); });

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "instance self-checks");
  check->add_option("--instance", check_args.instance_path)->required();
  check->add_option("--hypergraph", check_args.hypergraph_path,
                    "hypergraph file for orientation instances");
  check->add_option("--samples", check_args.samples,
                    "sample count for large oracles");
  auto* seed_opt =
      check->add_option("--seed", check_args.seed, "seed for sampled checks");
  add_format_flag(check, check_args.format);
  check->callback([&] {
    check_args.seed_set = seed_opt->count() > 0;
    run_check(check_args);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
