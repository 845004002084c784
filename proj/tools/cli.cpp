#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "hamtsp/bounds.hpp"
#include "hamtsp/core.hpp"
#include "hamtsp/cutset.hpp"
#include "hamtsp/error.hpp"
#include "hamtsp/exact.hpp"
#include "hamtsp/heuristics.hpp"
#include "hamtsp/instance_io.hpp"
#include "hamtsp/search.hpp"

namespace hamtsp::cli {

namespace {

using json = nlohmann::ordered_json;

// Weights carry six decimals; drop the noise that summing them adds.
std::string num(double x) { return format_number(std::round(x * 1e6) / 1e6); }

constexpr int kSchemaVersion = 1;

struct Options {
  std::string input;
  std::string algo;
  std::string mode;
  std::uint64_t seed = 0;
  std::int64_t budget = 10'000'000;
  bool json = false;
  std::string tree;
  std::string bag;
  std::int64_t target = 0;
  int n = 0;
  std::string out;
  int start = 1;
  std::string policy = "include_first";
  std::string tour;
  int p = 0;
  std::string kind = "uniform";
  std::string compare_kind = "both";
  double range = 100.0;
  int p_min = 4;
  int p_max = 9;
  int seeds = 20;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json labels(const std::vector<Vertex>& order) {
  json out = json::array();
  for (Vertex v : order) out.push_back(v + 1);
  return out;
}

std::string join_labels(const std::vector<Vertex>& order, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(order[i] + 1);
  }
  return s;
}

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + ")";
}

json edge_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u + 1, e.v + 1});
  return out;
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::string norm = text;
  for (char& c : norm) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(norm);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error(ErrorCode::kParseError, "not an integer: '" + tok + "'");
    values.push_back(v);
  }
  return values;
}

std::vector<Vertex> parse_order(const std::string& text) {
  std::vector<Vertex> order;
  for (std::int64_t v : parse_list(text)) order.push_back(static_cast<Vertex>(v - 1));
  return order;
}

Mode parse_mode(const std::string& text) {
  if (text == "circuit") return Mode::kCircuit;
  if (text == "path") return Mode::kPath;
  throw Error(ErrorCode::kBadParameter, "mode must be 'circuit' or 'path'");
}

InstanceKind parse_kind(const std::string& text) {
  if (text == "uniform") return InstanceKind::kUniform;
  if (text == "euclidean") return InstanceKind::kEuclidean;
  throw Error(ErrorCode::kBadParameter, "kind must be 'uniform' or 'euclidean'");
}

MnnPolicy parse_policy(const std::string& text) {
  if (text == "include_first") return MnnPolicy::kIncludeFirst;
  if (text == "exclude_first") return MnnPolicy::kExcludeFirst;
  throw Error(ErrorCode::kBadParameter, "policy must be 'include_first' or 'exclude_first'");
}

json report_header(const std::string& command) {
  return json{{"schema", kSchemaVersion}, {"command", command}};
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// Labels of the original instance along a path on the relabeled copy.
std::vector<Vertex> original_labels(int p, const std::vector<Transposition>& applied) {
  std::vector<Vertex> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  for (const Transposition& t : applied) std::swap(perm[t.a], perm[t.b]);
  return perm;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Instance inst = read_instance_file(o.input);
  const std::string& algo = o.algo;
  const bool path_only = algo == "tpv1" || algo == "tpv2";
  const bool both = algo == "owal-exact" || algo == "brute";
  const Mode mode = o.mode.empty() ? (path_only ? Mode::kPath : Mode::kCircuit)
                                   : parse_mode(o.mode);
  if (path_only && mode != Mode::kPath) {
    throw Error(ErrorCode::kBadParameter, algo + " builds Hamiltonian paths only");
  }
  if (!path_only && !both && mode != Mode::kCircuit) {
    throw Error(ErrorCode::kBadParameter, algo + " builds circuits only");
  }
  const Vertex start = o.start - 1;

  Stopwatch clock;
  json j = report_header("solve");
  j["instance"] = inst.name();
  j["p"] = inst.size();
  j["algorithm"] = algo;
  j["mode"] = std::string(mode_name(mode));
  j["seed"] = o.seed;
  std::vector<Vertex> order;
  double weight = 0.0;
  std::vector<std::string> extra;
  int code = kExitOk;

  if (algo == "nn" || algo == "mnn" || algo == "contract" || algo == "sweep") {
    Tour t;
    if (algo == "nn") {
      t = nearest_neighbor(inst, start);
    } else if (algo == "mnn") {
      t = modified_nn(inst, parse_policy(o.policy), start);
      j["policy"] = o.policy;
    } else if (algo == "contract") {
      t = contraction_tour(inst);
    } else {
      t = angular_sweep(inst);
      const double turning = turning_sum(inst, t.order, Mode::kCircuit);
      j["turning_sum"] = turning;
      extra.push_back("turning_sum: " + num(turning));
    }
    order = t.order;
    weight = t.weight;
  } else if (algo == "cutset") {
    const SimpleGraph g = SimpleGraph::complete(inst);
    const SpanningTree tree = o.tree.empty() ? default_tree(g) : read_tree_file(o.tree, g);
    const CutsetTour ct = cutset_tsp(inst, tree, o.budget);
    order = ct.tour.order;
    weight = ct.tour.weight;
    j["chords"] = edge_json(ct.chords);
    j["branches"] = edge_json(ct.branches);
    j["used_fallback"] = ct.used_fallback;
    j["nodes"] = ct.fallback_nodes;
    std::string chords;
    for (const Edge& e : ct.chords) chords += edge_text(e);
    std::string branches;
    for (const Edge& e : ct.branches) branches += edge_text(e);
    extra.push_back("chords: " + chords);
    extra.push_back("branches: " + branches);
    if (ct.used_fallback) extra.push_back("greedy stuck; fallback nodes: " +
                                          std::to_string(ct.fallback_nodes));
  } else if (path_only) {
    const RelabeledPath r =
        algo == "tpv1" ? transposition_approx_v1(inst) : transposition_approx_v2(inst);
    order = original_labels(inst.size(), r.applied);
    weight = r.path.weight;
    json ts = json::array();
    std::string text;
    for (const Transposition& t : r.applied) {
      ts.push_back({t.a + 1, t.b + 1});
      text += "(" + std::to_string(t.a + 1) + "," + std::to_string(t.b + 1) + ")";
    }
    const double tri = triangular_sum(r.instance);
    j["transpositions"] = ts;
    j["triangular_sum"] = tri;
    extra.push_back("transpositions: " + (text.empty() ? std::string("none") : text));
    extra.push_back("triangular_sum: " + num(tri));
  } else if (both) {
    const SolveReport r = algo == "brute" ? brute_force(inst, mode)
                                          : owal_exact(inst, mode, o.budget);
    j["candidates_checked"] = r.candidates_checked;
    j["exhausted_budget"] = r.exhausted_budget;
    extra.push_back("candidates_checked: " + std::to_string(r.candidates_checked));
    if (r.exhausted_budget) {
      j["last_weight"] = r.last_weight;
      j["wall_ms"] = clock.ms();
      if (o.json) {
        emit(out, j);
      } else {
        out << "BUDGET exhausted after " << r.candidates_checked
            << " candidates; every sublist lighter than " << num(r.last_weight)
            << " is infeasible\n";
      }
      return kExitBudget;
    }
    order = r.order;
    weight = r.weight;
  } else {
    throw Error(ErrorCode::kBadParameter, "unknown algorithm '" + algo + "'");
  }

  j["order"] = labels(order);
  j["weight"] = weight;
  if (mode == Mode::kCircuit) {
    const SortedWeightArrays swa = build_swa(inst);
    const double lb = first_array_lower_bound(swa);
    const double gap = gap_bound(swa, make_tour(inst, order));
    j["lower_bound"] = lb;
    j["gap_bound"] = gap;
    extra.push_back("lower_bound: " + num(lb));
    extra.push_back("gap_bound: " + num(gap));
  }
  j["wall_ms"] = clock.ms();
  if (o.json) {
    emit(out, j);
    return code;
  }
  out << "instance: " << inst.name() << " (p=" << inst.size() << ")\n"
      << "algorithm: " << algo << '\n'
      << "mode: " << mode_name(mode) << '\n'
      << "order: " << join_labels(order) << '\n'
      << "weight: " << num(weight) << '\n';
  for (const std::string& line : extra) out << line << '\n';
  return code;
}

int cmd_bound(const Options& o, std::ostream& out) {
  const Instance inst = read_instance_file(o.input);
  const SortedWeightArrays swa = build_swa(inst);
  const double lb = first_array_lower_bound(swa);
  json j = report_header("bound");
  j["instance"] = inst.name();
  j["p"] = inst.size();
  j["lower_bound"] = lb;
  std::optional<double> gap;
  std::vector<double> terms;
  if (!o.tour.empty()) {
    const auto order = parse_order(o.tour);
    if (!is_permutation_of(order, inst.size())) {
      throw Error(ErrorCode::kTourInstanceMismatch,
                  "tour is not a permutation of 1.." + std::to_string(inst.size()));
    }
    const Tour t = make_tour(inst, order);
    terms = gap_terms(swa, t);
    gap = std::accumulate(terms.begin(), terms.end(), 0.0);
    j["tour"] = labels(order);
    j["tour_weight"] = t.weight;
    j["gap_terms"] = terms;
    j["gap_bound"] = *gap;
  }
  if (o.json) {
    emit(out, j);
    return kExitOk;
  }
  out << "instance: " << inst.name() << " (p=" << inst.size() << ")\n"
      << "lower_bound: " << num(lb) << '\n';
  if (gap) {
    std::string sum;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) sum += "+";
      sum += num(terms[i]);
    }
    out << "gap_bound: " << num(*gap) << " = " << sum << '\n';
  }
  return kExitOk;
}

int cmd_hamiltonian(const Options& o, std::ostream& out) {
  const SimpleGraph g = read_graph_file(o.input);
  if (!g.connected()) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  const SpanningTree tree = o.tree.empty() ? SpanningTree::bfs(g) : read_tree_file(o.tree, g);
  DecideOptions opts;
  opts.budget = o.budget;
  Stopwatch clock;
  const HamiltonianResult r = decide_hamiltonian(g, tree, opts);
  const char* verdict = r.status == DecideStatus::kFound      ? "YES"
                        : r.status == DecideStatus::kNotFound ? "NO"
                                                              : "BUDGET";
  json j = report_header("hamiltonian");
  j["p"] = g.order();
  j["q"] = g.size();
  j["result"] = verdict;
  j["nodes"] = r.nodes;
  std::vector<std::string> chords;
  std::vector<std::string> along;
  if (r.selection) {
    const FCutsetMatrix m = build_fcutset_matrix(g, tree);
    for (int c : r.selection->chords) chords.push_back(g.edge_name(m.chords[c]));
    along = circuit_edge_names(g, selection_edge_ids(m, *r.selection), r.circuit);
    j["circuit"] = labels(r.circuit);
    j["chords"] = chords;
    j["edges"] = along;
  }
  j["wall_ms"] = clock.ms();
  if (o.json) {
    emit(out, j);
  } else {
    out << verdict << '\n';
    if (r.selection) {
      std::string c;
      for (const auto& s : chords) c += (c.empty() ? "" : ",") + s;
      std::string e;
      for (const auto& s : along) e += (e.empty() ? "" : " ") + s;
      out << "chords: {" << c << "}\n"
          << "circuit: " << join_labels(r.circuit) << '\n'
          << "edges: " << e << '\n';
    }
    out << "nodes: " << r.nodes << '\n';
  }
  return r.status == DecideStatus::kBudgetExhausted ? kExitBudget : kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  json j = report_header("search");
  j["mode"] = o.mode;
  if (o.mode == "classical") {
    const auto bag = parse_list(o.bag);
    const BagSearchResult r = classical_bag_search(bag, o.target);
    json splits = json::array();
    for (const BagSplit& s : r.splits) {
      splits.push_back({{"first_half", s.first_half}, {"inner_product", s.indicator}});
    }
    j["target"] = r.target;
    j["splits"] = splits;
    if (o.json) {
      emit(out, j);
      return kExitOk;
    }
    for (std::size_t k = 0; k < r.splits.size(); ++k) {
      std::string items;
      for (auto x : r.splits[k].first_half) items += (items.empty() ? "" : ",") + std::to_string(x);
      out << k + 1 << " {" << items << "} " << r.splits[k].indicator << '\n';
    }
    out << "target: " << r.target << " splits: " << r.splits.size() << '\n';
    return kExitOk;
  }
  if (o.target < 0) throw Error(ErrorCode::kTargetAbsent, "target must be nonnegative");
  const SearchOracle oracle{static_cast<std::uint64_t>(o.target)};
  if (o.mode == "q1") {
    const BitwiseResult r = qsearch_bitwise(o.n, oracle);
    json trace = json::array();
    for (const BitwiseStep& s : r.trace) {
      trace.push_back({{"k", s.k}, {"prefix", s.prefix}, {"inner_product", s.inner_product}});
    }
    j["n"] = o.n;
    j["target"] = r.target;
    j["trace"] = trace;
    j["inner_products"] = r.inner_products;
    if (o.json) {
      emit(out, j);
      return kExitOk;
    }
    for (const BitwiseStep& s : r.trace) {
      out << s.k << ' ' << s.prefix << ' ' << num(s.inner_product) << '\n';
    }
    out << "target: " << r.target << '\n';
    return kExitOk;
  }
  if (o.mode == "q2" || o.mode == "q3") {
    const AmplitudeState s =
        o.mode == "q2" ? qsearch_one_step(o.n, oracle) : qsearch_nonunitary(o.n, oracle);
    const std::uint64_t found = argmax_amplitude(s);
    std::string bits;
    for (int b = o.n - 1; b >= 0; --b) bits += ((found >> b) & 1U) ? '1' : '0';
    double off = 0.0;
    const auto amps = s.to_dense();
    for (std::uint64_t x = 0; x < amps.size(); ++x) {
      if (x != oracle.target) off = std::max(off, std::abs(amps[x]));
    }
    j["n"] = o.n;
    j["target"] = found;
    j["bits"] = bits;
    j["amplitude"] = s.amplitude(found);
    j["max_off_target"] = off;
    j["norm"] = s.norm();
    if (o.json) {
      emit(out, j);
      return kExitOk;
    }
    out << "target: " << found << " (" << bits << ")\n"
        << "amplitude: " << num(s.amplitude(found)) << '\n'
        << "max_off_target: " << num(off) << '\n'
        << "norm: " << num(s.norm()) << '\n';
    return kExitOk;
  }
  throw Error(ErrorCode::kBadParameter, "search mode must be classical, q1, q2 or q3");
}

int cmd_gen(const Options& o, std::ostream& out) {
  const Instance inst = gen_random_instance(o.seed, o.p, parse_kind(o.kind), o.range);
  if (o.out.empty()) {
    write_instance(out, inst);
  } else {
    write_instance_file(o.out, inst);
    if (o.json) {
      json j = report_header("gen");
      j["instance"] = inst.name();
      j["p"] = inst.size();
      j["kind"] = o.kind;
      j["seed"] = o.seed;
      j["out"] = o.out;
      emit(out, j);
    } else {
      out << "wrote " << o.out << '\n';
    }
  }
  return kExitOk;
}

// One CSV row per (kind, p, seed).
int cmd_compare(const Options& o, std::ostream& out) {
  if (o.p_min < 4 || o.p_max > kBruteForceMaxVertices || o.p_min > o.p_max || o.seeds < 1) {
    throw Error(ErrorCode::kBadParameter, "compare needs 4 <= p-min <= p-max <= 12 and seeds >= 1");
  }
  std::vector<InstanceKind> kinds;
  if (o.compare_kind == "both") {
    kinds = {InstanceKind::kUniform, InstanceKind::kEuclidean};
  } else {
    kinds = {parse_kind(o.compare_kind)};
  }
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw Error(ErrorCode::kIoError, "cannot write '" + o.out + "'");
  }
  std::ostream& csv = o.out.empty() ? out : file;
  csv << "kind,p,seed,brute_circuit,owal_circuit,owal_circuit_candidates,brute_path,"
         "owal_path,owal_path_candidates,nn,mnn_include,mnn_exclude,contract,cutset,sweep,"
         "tpv1,tpv2,lower_bound,nn_gap_bound,nn_excess,gap_violation\n";
  int rows = 0;
  int owal_mismatch = 0;
  int lb_violations = 0;
  int gap_violations = 0;
  int budget_hits = 0;
  std::int64_t max_candidates = 0;
  for (InstanceKind kind : kinds) {
    for (int p = o.p_min; p <= o.p_max; ++p) {
      for (int s = 0; s < o.seeds; ++s) {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(s);
        const Instance inst = gen_random_instance(seed, p, kind, o.range);
        const SolveReport bc = brute_force(inst, Mode::kCircuit);
        const SolveReport bp = brute_force(inst, Mode::kPath);
        const SolveReport oc = owal_exact(inst, Mode::kCircuit, o.budget);
        const SolveReport op = owal_exact(inst, Mode::kPath, o.budget);
        budget_hits += oc.exhausted_budget + op.exhausted_budget;
        if (oc.exhausted_budget || op.exhausted_budget || oc.weight != bc.weight ||
            op.weight != bp.weight) {
          ++owal_mismatch;
        }
        max_candidates = std::max({max_candidates, oc.candidates_checked, op.candidates_checked});
        const Tour nn = nearest_neighbor(inst, 0);
        const SortedWeightArrays swa = build_swa(inst);
        const double lb = first_array_lower_bound(swa);
        const double gap = gap_bound(swa, nn);
        const double excess = nn.weight - bc.weight;
        const bool violated = excess > gap + 1e-9;
        gap_violations += violated;
        lb_violations += lb > bc.weight + 1e-9;
        const std::string sweep =
            inst.has_coords() ? num(angular_sweep(inst).weight) : "";
        csv << instance_kind_name(kind) << ',' << p << ',' << seed << ','
            << num(bc.weight) << ','
            << (oc.exhausted_budget ? "" : num(oc.weight)) << ','
            << oc.candidates_checked << ',' << num(bp.weight) << ','
            << (op.exhausted_budget ? "" : num(op.weight)) << ','
            << op.candidates_checked << ',' << num(nn.weight) << ','
            << num(modified_nn(inst, MnnPolicy::kIncludeFirst).weight) << ','
            << num(modified_nn(inst, MnnPolicy::kExcludeFirst).weight) << ','
            << num(contraction_tour(inst).weight) << ','
            << num(cutset_tsp(inst, default_tree(SimpleGraph::complete(inst)),
                                        o.budget)
                                 .tour.weight)
            << ',' << sweep << ','
            << num(transposition_approx_v1(inst).path.weight) << ','
            << num(transposition_approx_v2(inst).path.weight) << ','
            << num(lb) << ',' << num(gap) << ',' << num(excess)
            << ',' << (violated ? 1 : 0) << '\n';
        ++rows;
      }
    }
  }
  const double rate = rows ? static_cast<double>(gap_violations) / rows : 0.0;
  csv << "# summary rows=" << rows << " owal_mismatches=" << owal_mismatch
      << " budget_exhausted=" << budget_hits << " max_candidates=" << max_candidates << '\n'
      << "# summary lower_bound_violations=" << lb_violations
      << " gap_violations=" << gap_violations << " gap_violation_rate=" << num(rate)
      << '\n';
  if (!o.out.empty()) {
    json j = report_header("compare");
    j["rows"] = rows;
    j["owal_mismatches"] = owal_mismatch;
    j["lower_bound_violations"] = lb_violations;
    j["gap_violation_rate"] = rate;
    j["max_candidates"] = max_candidates;
    j["out"] = o.out;
    if (o.json) {
      emit(out, j);
    } else {
      out << "rows: " << rows << "\nowal_mismatches: " << owal_mismatch
          << "\nlower_bound_violations: " << lb_violations
          << "\ngap_violation_rate: " << num(rate) << "\nwrote " << o.out << '\n';
    }
  }
  return owal_mismatch == 0 ? kExitOk : kExitInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted complete graph TSP workbench"};
  app.name("hamtsp");
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Build a tour or path with one algorithm");
  solve->add_option("--input", o.input, "Instance file")->required();
  solve->add_option("--algo", o.algo,
                    "nn|mnn|contract|sweep|cutset|tpv1|tpv2|owal-exact|brute")
      ->required()
      ->check(CLI::IsMember(
          {"nn", "mnn", "contract", "sweep", "cutset", "tpv1", "tpv2", "owal-exact", "brute"}));
  solve->add_option("--mode", o.mode, "circuit|path")
      ->check(CLI::IsMember({"circuit", "path"}));
  solve->add_option("--budget", o.budget, "Candidate or node limit");
  solve->add_option("--tree", o.tree, "Spanning tree file for cutset");
  solve->add_option("--start", o.start, "Start vertex for nn and mnn");
  solve->add_option("--policy", o.policy, "include_first|exclude_first")
      ->check(CLI::IsMember({"include_first", "exclude_first"}));
  solve->add_option("--seed", o.seed, "Recorded in the report");

  auto* bound = app.add_subcommand("bound", "Lower bound and gap bound");
  bound->add_option("--input", o.input, "Instance file")->required();
  bound->add_option("--tour", o.tour, "Tour as 1-based labels, e.g. 1,6,5,2,3,4");

  auto* ham = app.add_subcommand("hamiltonian", "Decide Hamiltonicity of a graph file");
  ham->add_option("--input", o.input, "Graph file")->required();
  ham->add_option("--tree", o.tree, "Spanning tree file");
  ham->add_option("--budget", o.budget, "Chord subsets to examine");

  auto* search = app.add_subcommand("search", "Classical and simulated quantum search");
  search->add_option("--mode", o.mode, "classical|q1|q2|q3")
      ->required()
      ->check(CLI::IsMember({"classical", "q1", "q2", "q3"}));
  search->add_option("--n", o.n, "Qubits");
  search->add_option("--bag", o.bag, "Comma separated bag for classical mode");
  search->add_option("--target", o.target, "Target value or index")->required();

  auto* gen = app.add_subcommand("gen", "Write a seeded random instance");
  gen->add_option("--seed", o.seed, "Seed");
  gen->add_option("--p", o.p, "Vertex count")->required();
  gen->add_option("--kind", o.kind, "uniform|euclidean")
      ->check(CLI::IsMember({"uniform", "euclidean"}));
  gen->add_option("--range", o.range, "Weight or coordinate bound");
  gen->add_option("--out", o.out, "Output file (default stdout)");

  auto* compare = app.add_subcommand("compare", "Seeded batch against the oracles, as CSV");
  compare->add_option("--p-min", o.p_min, "Smallest p");
  compare->add_option("--p-max", o.p_max, "Largest p");
  compare->add_option("--seeds", o.seeds, "Seeds per (kind, p)");
  compare->add_option("--seed", o.seed, "First seed");
  compare->add_option("--kind", o.compare_kind, "uniform|euclidean|both")
      ->check(CLI::IsMember({"uniform", "euclidean", "both"}));
  compare->add_option("--range", o.range, "Weight or coordinate bound");
  compare->add_option("--budget", o.budget, "owal-exact candidate limit");
  compare->add_option("--out", o.out, "CSV file (default stdout)");

  for (auto* sub : {solve, bound, ham, search, gen, compare}) {
    sub->add_flag("--json", o.json, "Emit one JSON object");
  }

  std::vector<std::string> argv_store{"hamtsp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (bound->parsed()) return cmd_bound(o, out);
    if (ham->parsed()) return cmd_hamiltonian(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kBudgetExhausted ? kExitBudget : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace hamtsp::cli
