#include "hamtsp/cutset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "hamtsp/error.hpp"
#include "hamtsp/heuristics.hpp"

namespace hamtsp {

namespace {

std::string vertex_pair_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
}

// Edge ids of the tree path from `from` to `to`.
std::vector<int> tree_path(const SimpleGraph& g, const std::vector<int>& branches,
                           Vertex from, Vertex to) {
  const int p = g.order();
  std::vector<std::vector<std::pair<Vertex, int>>> adj(static_cast<std::size_t>(p));
  for (int id : branches) {
    const GraphEdge& e = g.edge(id);
    adj[e.u].push_back({e.v, id});
    adj[e.v].push_back({e.u, id});
  }
  std::vector<int> via(static_cast<std::size_t>(p), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(p), -1);
  std::vector<char> seen(static_cast<std::size_t>(p), 0);
  std::queue<Vertex> queue;
  queue.push(from);
  seen[from] = 1;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    if (x == to) break;
    for (auto [y, id] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = x;
      via[y] = id;
      queue.push(y);
    }
  }
  std::vector<int> path;
  for (Vertex x = to; x != from; x = parent[x]) path.push_back(via[x]);
  return path;
}

void check_tree(const SimpleGraph& g, const std::vector<int>& ids) {
  const int p = g.order();
  if (static_cast<int>(ids.size()) != p - 1) {
    throw Error(ErrorCode::kNotASpanningTree,
                "a spanning tree on " + std::to_string(p) + " vertices needs " +
                    std::to_string(p - 1) + " edges, got " + std::to_string(ids.size()));
  }
  DisjointSets dsu(p);
  for (int id : ids) {
    if (id < 0 || id >= g.size()) {
      throw Error(ErrorCode::kNotASpanningTree, "edge id out of range");
    }
    const GraphEdge& e = g.edge(id);
    if (!dsu.unite(e.u, e.v)) {
      throw Error(ErrorCode::kNotASpanningTree,
                  "edge " + g.edge_name(id) + " closes a cycle in the tree");
    }
  }
}

bool is_number(const std::string& tok) {
  double x = 0.0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, x);
  return ec == std::errc() && ptr == end;
}

int parse_int(const std::string& tok, const char* what) {
  int x = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, x);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kParseError, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return x;
}

// Non-empty, non-comment lines split into tokens.
std::vector<std::vector<std::string>> token_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    lines.push_back(std::move(toks));
  }
  return lines;
}

// Vertex order of a Hamiltonian circuit given by graph edge ids.
std::vector<Vertex> circuit_order(const SimpleGraph& g, const std::vector<int>& ids) {
  std::vector<Edge> edges;
  edges.reserve(ids.size());
  for (int id : ids) edges.emplace_back(g.edge(id).u, g.edge(id).v);
  return sublist_to_order(g.order(), edges, Mode::kCircuit);
}

CutsetTour make_cutset_tour(const Instance& inst, const SimpleGraph& g,
                            const FCutsetMatrix& m, const ChordSelection& sel) {
  CutsetTour out;
  for (int c : sel.chords) {
    const GraphEdge& e = g.edge(m.chords[c]);
    out.chords.emplace_back(e.u, e.v);
  }
  for (int r : sel.branches) {
    const GraphEdge& e = g.edge(m.branches[r]);
    out.branches.emplace_back(e.u, e.v);
  }
  out.tour = make_tour(inst, circuit_order(g, selection_edge_ids(m, sel)));
  return out;
}

}  // namespace

SimpleGraph::SimpleGraph(int p, std::vector<GraphEdge> edges) : p_(p), edges_(std::move(edges)) {
  if (p < 1) throw Error(ErrorCode::kBadParameter, "graph needs at least one vertex");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    GraphEdge& e = edges_[i];
    if (e.u < 0 || e.u >= p || e.v < 0 || e.v >= p) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge " + vertex_pair_name(e.u, e.v) + " outside 1.." + std::to_string(p));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kBadParameter, "self-loop at vertex " + std::to_string(e.u + 1));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    for (std::size_t j = 0; j < i; ++j) {
      const GraphEdge& f = edges_[j];
      if (f.u != e.u || f.v != e.v) continue;
      if (e.label.empty() || f.label.empty() || e.label == f.label) {
        throw Error(ErrorCode::kBadParameter,
                    "duplicate edge " + vertex_pair_name(e.u, e.v) +
                        " (parallel edges need distinct labels)");
      }
    }
  }
}

SimpleGraph SimpleGraph::complete(const Instance& inst) {
  const int p = inst.size();
  std::vector<GraphEdge> edges;
  edges.reserve(static_cast<std::size_t>(p) * (p - 1) / 2);
  for (Vertex u = 0; u < p; ++u) {
    for (Vertex v = u + 1; v < p; ++v) edges.push_back({u, v, inst.weight(u, v), {}});
  }
  return SimpleGraph(p, std::move(edges));
}

bool SimpleGraph::connected() const {
  DisjointSets dsu(p_);
  for (const GraphEdge& e : edges_) dsu.unite(e.u, e.v);
  return dsu.components() == 1;
}

std::optional<int> SimpleGraph::find_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  for (int id = 0; id < size(); ++id) {
    if (edges_[id].u == u && edges_[id].v == v) return id;
  }
  return std::nullopt;
}

std::optional<int> SimpleGraph::find_label(const std::string& label) const {
  for (int id = 0; id < size(); ++id) {
    if (!label.empty() && edges_[id].label == label) return id;
  }
  return std::nullopt;
}

std::string SimpleGraph::edge_name(int id) const {
  const GraphEdge& e = edge(id);
  return e.label.empty() ? vertex_pair_name(e.u, e.v) : e.label;
}

SpanningTree SpanningTree::from_edge_ids(const SimpleGraph& g, std::vector<int> ids) {
  check_tree(g, ids);
  return SpanningTree{std::move(ids)};
}

SpanningTree SpanningTree::from_pairs(const SimpleGraph& g, const std::vector<Edge>& pairs) {
  std::vector<int> ids;
  ids.reserve(pairs.size());
  for (const Edge& e : pairs) {
    const auto id = g.find_edge(e.u, e.v);
    if (!id) {
      throw Error(ErrorCode::kNotASpanningTree,
                  "tree edge " + vertex_pair_name(e.u, e.v) + " is not in the graph");
    }
    ids.push_back(*id);
  }
  return from_edge_ids(g, std::move(ids));
}

SpanningTree SpanningTree::bfs(const SimpleGraph& g, Vertex root) {
  const int p = g.order();
  if (root < 0 || root >= p) throw Error(ErrorCode::kIndexOutOfRange, "tree root out of range");
  std::vector<std::vector<std::pair<Vertex, int>>> adj(static_cast<std::size_t>(p));
  for (int id = 0; id < g.size(); ++id) {
    const GraphEdge& e = g.edge(id);
    adj[e.u].push_back({e.v, id});
    adj[e.v].push_back({e.u, id});
  }
  std::vector<char> seen(static_cast<std::size_t>(p), 0);
  std::vector<int> ids;
  std::queue<Vertex> queue;
  queue.push(root);
  seen[root] = 1;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (auto [y, id] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      ids.push_back(id);
      queue.push(y);
    }
  }
  if (static_cast<int>(ids.size()) != p - 1) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  return SpanningTree{std::move(ids)};
}

std::vector<int> FCutsetMatrix::chord_rows(int c) const {
  std::vector<int> out;
  for (int r = 0; r < rows(); ++r) {
    if (entries[r][c]) out.push_back(r);
  }
  return out;
}

FCutsetMatrix build_fcutset_matrix(const SimpleGraph& g, const SpanningTree& t) {
  check_tree(g, t.branches);
  FCutsetMatrix m;
  m.branches = t.branches;
  std::vector<int> row_of(static_cast<std::size_t>(g.size()), -1);
  for (int r = 0; r < m.rows(); ++r) row_of[m.branches[r]] = r;
  for (int id = 0; id < g.size(); ++id) {
    if (row_of[id] < 0) m.chords.push_back(id);
  }
  const int nc = m.chord_count();
  m.entries.assign(static_cast<std::size_t>(m.rows()),
                   std::vector<std::uint8_t>(static_cast<std::size_t>(m.cols()), 0));
  for (int c = 0; c < nc; ++c) {
    const GraphEdge& e = g.edge(m.chords[c]);
    for (int id : tree_path(g, m.branches, e.u, e.v)) m.entries[row_of[id]][c] = 1;
  }
  for (int r = 0; r < m.rows(); ++r) m.entries[r][nc + r] = 1;
  return m;
}

std::optional<int> LatticeGraph::vertex_at(int row, int col) const {
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (vertices[i].row == row && vertices[i].col == col) return i;
  }
  return std::nullopt;
}

LatticeGraph build_lattice_graph(const FCutsetMatrix& m) {
  LatticeGraph lg;
  std::vector<std::vector<int>> id(static_cast<std::size_t>(m.rows()),
                                   std::vector<int>(static_cast<std::size_t>(m.cols()), -1));
  for (int r = 0; r < m.rows(); ++r) {
    int prev = -1;
    for (int c = 0; c < m.cols(); ++c) {
      if (!m.at(r, c)) continue;
      id[r][c] = static_cast<int>(lg.vertices.size());
      lg.vertices.push_back({r, c});
      if (prev >= 0) lg.horizontal_edges.push_back({prev, id[r][c]});
      prev = id[r][c];
    }
  }
  for (int c = 0; c < m.cols(); ++c) {
    int prev = -1;
    for (int r = 0; r < m.rows(); ++r) {
      if (id[r][c] < 0) continue;
      if (prev >= 0) lg.vertical_edges.push_back({prev, id[r][c]});
      prev = id[r][c];
    }
  }
  return lg;
}

bool chord_columns_connected(const FCutsetMatrix& m, const std::vector<int>& chord_cols) {
  const int k = static_cast<int>(chord_cols.size());
  if (k == 0) return false;
  DisjointSets dsu(k);
  for (int r = 0; r < m.rows(); ++r) {
    int first = -1;
    for (int i = 0; i < k; ++i) {
      if (!m.at(r, chord_cols[i])) continue;
      if (first < 0) {
        first = i;
      } else {
        dsu.unite(first, i);
      }
    }
  }
  return dsu.components() == 1;
}

ChordSelection induce_selection(const FCutsetMatrix& m, std::vector<int> chord_cols) {
  std::sort(chord_cols.begin(), chord_cols.end());
  ChordSelection sel;
  for (int r = 0; r < m.rows(); ++r) {
    int count = 0;
    for (int c : chord_cols) count += m.entries[r][c];
    if (count % 2 == 1) sel.branches.push_back(r);
  }
  sel.chords = std::move(chord_cols);
  return sel;
}

std::vector<int> selection_edge_ids(const FCutsetMatrix& m, const ChordSelection& sel) {
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(sel.total()));
  for (int c : sel.chords) ids.push_back(m.chords.at(static_cast<std::size_t>(c)));
  for (int r : sel.branches) ids.push_back(m.branches.at(static_cast<std::size_t>(r)));
  return ids;
}

SelectionCheck check_selection(const SimpleGraph& g, const FCutsetMatrix& m,
                               const ChordSelection& sel) {
  SelectionCheck out;
  const int p = g.order();
  for (int c : sel.chords) {
    if (c < 0 || c >= m.chord_count()) return out;
  }
  for (int r : sel.branches) {
    if (r < 0 || r >= m.rows()) return out;
  }
  std::vector<int> in_branch(static_cast<std::size_t>(m.rows()), 0);
  for (int r : sel.branches) ++in_branch[r];
  out.rows_even_at_least_two = true;
  out.chord_on_every_row = true;
  for (int r = 0; r < m.rows(); ++r) {
    int chords = 0;
    for (int c : sel.chords) chords += m.entries[r][c];
    const int total = chords + in_branch[r];
    if (total % 2 != 0 || total < 2 || in_branch[r] > 1) out.rows_even_at_least_two = false;
    if (chords == 0) out.chord_on_every_row = false;
  }
  out.count_is_p = sel.total() == p;

  const auto ids = selection_edge_ids(m, sel);
  if (ids.empty()) return out;
  DisjointSets dsu(p);
  std::vector<int> degree(static_cast<std::size_t>(p), 0);
  std::vector<char> touched(static_cast<std::size_t>(p), 0);
  for (int id : ids) {
    const GraphEdge& e = g.edge(id);
    dsu.unite(e.u, e.v);
    ++degree[e.u];
    ++degree[e.v];
    touched[e.u] = touched[e.v] = 1;
  }
  const int untouched = static_cast<int>(std::count(touched.begin(), touched.end(), 0));
  out.connected = dsu.components() - untouched == 1;
  out.degree_two = static_cast<int>(ids.size()) == p &&
                   std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; }) &&
                   dsu.components() == 1;
  return out;
}

bool verify_selection(const SimpleGraph& g, const SpanningTree& t, const ChordSelection& sel) {
  return check_selection(g, build_fcutset_matrix(g, t), sel).all();
}

HamiltonianResult decide_hamiltonian(const SimpleGraph& g, const SpanningTree& t,
                                     const DecideOptions& options) {
  if (!g.connected()) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  const FCutsetMatrix m = build_fcutset_matrix(g, t);
  const int p = g.order();
  const int nc = m.chord_count();

  std::vector<int> required = options.required_chords;
  std::sort(required.begin(), required.end());
  required.erase(std::unique(required.begin(), required.end()), required.end());
  for (int c : required) {
    if (c < 0 || c >= nc) throw Error(ErrorCode::kIndexOutOfRange, "required chord out of range");
  }
  std::vector<int> free_cols;
  for (int c = 0; c < nc; ++c) {
    if (!std::binary_search(required.begin(), required.end(), c)) free_cols.push_back(c);
  }

  HamiltonianResult result;
  const int nreq = static_cast<int>(required.size());
  const int nfree = static_cast<int>(free_cols.size());
  for (int size = std::max(1, nreq); size <= std::min(p, nc); ++size) {
    const int k = size - nreq;
    if (k > nfree) break;
    // Lexicographic k-combinations of the free columns.
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (result.nodes >= options.budget) {
        result.status = DecideStatus::kBudgetExhausted;
        return result;
      }
      ++result.nodes;
      std::vector<int> cols = required;
      for (int i : pick) cols.push_back(free_cols[i]);
      ChordSelection sel = induce_selection(m, std::move(cols));
      if (sel.total() == p && check_selection(g, m, sel).all()) {
        result.status = DecideStatus::kFound;
        result.circuit = circuit_order(g, selection_edge_ids(m, sel));
        result.selection = std::move(sel);
        return result;
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == nfree - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  result.status = DecideStatus::kNotFound;
  return result;
}

std::vector<std::string> circuit_edge_names(const SimpleGraph& g,
                                            const std::vector<int>& edge_ids,
                                            const std::vector<Vertex>& circuit) {
  std::vector<std::string> names;
  const std::size_t n = circuit.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Edge want(circuit[i], circuit[(i + 1) % n]);
    for (int id : edge_ids) {
      if (Edge(g.edge(id).u, g.edge(id).v) == want) {
        names.push_back(g.edge_name(id));
        break;
      }
    }
  }
  return names;
}

SpanningTree default_tree(const SimpleGraph& complete_graph) {
  return SpanningTree::bfs(complete_graph, 0);
}

CutsetTour cutset_tsp_greedy(const Instance& inst, const SpanningTree& t) {
  const SimpleGraph g = SimpleGraph::complete(inst);
  const FCutsetMatrix m = build_fcutset_matrix(g, t);
  const int nc = m.chord_count();
  const int rows = m.rows();
  auto chord_weight = [&](int c) { return g.edge(m.chords[c]).weight; };

  std::vector<int> count(static_cast<std::size_t>(rows), 0);
  std::vector<char> taken(static_cast<std::size_t>(nc), 0);
  std::vector<int> chosen;
  auto add = [&](int c) {
    taken[c] = 1;
    chosen.push_back(c);
    for (int r = 0; r < rows; ++r) count[r] += m.entries[r][c];
  };
  auto all_covered = [&] {
    return std::all_of(count.begin(), count.end(), [](int x) { return x > 0; });
  };

  if (nc == 0) throw Error(ErrorCode::kGreedyStuck, "tree leaves no chords");
  int first = 0;
  for (int c = 1; c < nc; ++c) {
    if (chord_weight(c) < chord_weight(first)) first = c;
  }
  add(first);

  while (!all_covered()) {
    int best = -1;
    for (int c = 0; c < nc; ++c) {
      if (taken[c]) continue;
      bool touches = false;
      int even_rows = 0;
      for (int r = 0; r < rows; ++r) {
        const int after = count[r] + m.entries[r][c];
        if (m.entries[r][c] && count[r] > 0) touches = true;
        if (after > 0 && after % 2 == 0) ++even_rows;
      }
      // Each added chord closes exactly one overlap row with the selection.
      if (!touches || even_rows != static_cast<int>(chosen.size())) continue;
      if (best < 0 || chord_weight(c) < chord_weight(best)) best = c;
    }
    if (best < 0) throw Error(ErrorCode::kGreedyStuck, "no chord column extends the selection");
    add(best);
  }

  const ChordSelection sel = induce_selection(m, chosen);
  if (!check_selection(g, m, sel).all()) {
    throw Error(ErrorCode::kGreedyStuck, "greedy selection is not a Hamiltonian circuit");
  }
  return make_cutset_tour(inst, g, m, sel);
}

CutsetTour cutset_tsp(const Instance& inst, const SpanningTree& t, std::int64_t budget) {
  try {
    return cutset_tsp_greedy(inst, t);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kGreedyStuck) throw;
  }

  // Depth-first search over chord sets in weight order, pruned on the chord
  // weight alone (branch weights are nonnegative). Seeded with the chord set
  // of the nearest-neighbour tour.
  const SimpleGraph g = SimpleGraph::complete(inst);
  const FCutsetMatrix m = build_fcutset_matrix(g, t);
  const int p = inst.size();
  const int nc = m.chord_count();
  std::vector<int> by_weight(static_cast<std::size_t>(nc));
  std::iota(by_weight.begin(), by_weight.end(), 0);
  std::stable_sort(by_weight.begin(), by_weight.end(), [&](int a, int b) {
    return g.edge(m.chords[a]).weight < g.edge(m.chords[b]).weight;
  });

  ChordSelection best_sel;
  {
    const Tour seed = nearest_neighbor(inst, 0);
    std::vector<char> on_tour(static_cast<std::size_t>(g.size()), 0);
    for (const Edge& e : order_to_edges(seed.order, Mode::kCircuit)) {
      on_tour[*g.find_edge(e.u, e.v)] = 1;
    }
    std::vector<int> cols;
    for (int c = 0; c < nc; ++c) {
      if (on_tour[m.chords[c]]) cols.push_back(c);
    }
    best_sel = induce_selection(m, cols);
  }
  double best = make_cutset_tour(inst, g, m, best_sel).tour.weight;

  std::int64_t nodes = 0;
  std::vector<int> cols;
  auto dfs = [&](auto&& self, int from, double chord_sum) -> void {
    for (int i = from; i < nc && nodes < budget; ++i) {
      const int c = by_weight[i];
      const double w = chord_sum + g.edge(m.chords[c]).weight;
      if (w >= best) break;
      ++nodes;
      cols.push_back(c);
      const ChordSelection sel = induce_selection(m, cols);
      if (sel.total() == p && check_selection(g, m, sel).all()) {
        double total = w;
        for (int r : sel.branches) total += g.edge(m.branches[r]).weight;
        if (total < best) {
          best = total;
          best_sel = sel;
        }
      }
      if (static_cast<int>(cols.size()) < p) self(self, i + 1, w);
      cols.pop_back();
    }
  };
  dfs(dfs, 0, 0.0);

  CutsetTour out = make_cutset_tour(inst, g, m, best_sel);
  out.used_fallback = true;
  out.fallback_nodes = nodes;
  return out;
}

SimpleGraph parse_graph(std::istream& in) {
  const auto lines = token_lines(in);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "GRAPH") {
    throw Error(ErrorCode::kParseError, "graph file must start with 'GRAPH p q'");
  }
  const int p = parse_int(lines[0][1], "vertex count");
  const int q = parse_int(lines[0][2], "edge count");
  if (static_cast<int>(lines.size()) - 1 != q) {
    throw Error(ErrorCode::kParseError, "expected " + std::to_string(q) + " edge lines, got " +
                                            std::to_string(lines.size() - 1));
  }
  std::vector<GraphEdge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& toks = lines[i];
    if (toks.size() < 2 || toks.size() > 4) {
      throw Error(ErrorCode::kParseError, "edge line must be 'i j [weight] [label]'");
    }
    GraphEdge e;
    e.u = parse_int(toks[0], "vertex") - 1;
    e.v = parse_int(toks[1], "vertex") - 1;
    std::size_t next = 2;
    if (next < toks.size() && is_number(toks[next])) {
      e.weight = std::stod(toks[next]);
      ++next;
    }
    if (next < toks.size()) e.label = toks[next++];
    if (next != toks.size()) throw Error(ErrorCode::kParseError, "trailing tokens on edge line");
    edges.push_back(std::move(e));
  }
  return SimpleGraph(p, std::move(edges));
}

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  return parse_graph(in);
}

SpanningTree parse_tree(std::istream& in, const SimpleGraph& g) {
  std::vector<int> ids;
  for (const auto& toks : token_lines(in)) {
    std::optional<int> id;
    if (toks.size() == 1) {
      id = g.find_label(toks[0]);
      if (!id) throw Error(ErrorCode::kNotASpanningTree, "no edge labelled '" + toks[0] + "'");
    } else if (toks.size() == 2) {
      const Vertex u = parse_int(toks[0], "vertex") - 1;
      const Vertex v = parse_int(toks[1], "vertex") - 1;
      id = g.find_edge(u, v);
      if (!id) {
        throw Error(ErrorCode::kNotASpanningTree,
                    "tree edge " + vertex_pair_name(u, v) + " is not in the graph");
      }
    } else {
      throw Error(ErrorCode::kParseError, "tree line must be 'i j' or an edge label");
    }
    ids.push_back(*id);
  }
  return SpanningTree::from_edge_ids(g, std::move(ids));
}

SpanningTree read_tree_file(const std::string& path, const SimpleGraph& g) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  return parse_tree(in, g);
}

}  // namespace hamtsp
