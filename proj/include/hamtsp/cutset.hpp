#pragma once

// Spanning trees, fundamental cutset matrices C_f = [C_c : I], the
// lattice-cutset-graph, the chord-selection Hamiltonicity test and the
// cutset-based tour construction.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamtsp/core.hpp"

namespace hamtsp {

struct GraphEdge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 1.0;
  std::string label;
};

// Undirected graph without self-loops. Parallel edges are allowed only when
// their labels differ.
class SimpleGraph {
 public:
  SimpleGraph(int p, std::vector<GraphEdge> edges);

  static SimpleGraph complete(const Instance& inst);

  int order() const { return p_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const GraphEdge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  bool connected() const;

  // First edge joining u and v, in file order.
  std::optional<int> find_edge(Vertex u, Vertex v) const;
  std::optional<int> find_label(const std::string& label) const;
  // The label when present, otherwise "(u,v)" with 1-based vertices.
  std::string edge_name(int id) const;

 private:
  int p_;
  std::vector<GraphEdge> edges_;
};

// Branches are edge ids of the host graph, in row order.
struct SpanningTree {
  std::vector<int> branches;

  // Throws kNotASpanningTree.
  static SpanningTree from_edge_ids(const SimpleGraph& g, std::vector<int> ids);
  static SpanningTree from_pairs(const SimpleGraph& g, const std::vector<Edge>& pairs);
  // Breadth-first tree from `root`; the star at `root` for complete graphs.
  // Throws kDisconnected.
  static SpanningTree bfs(const SimpleGraph& g, Vertex root = 0);
};

struct FCutsetMatrix {
  std::vector<int> chords;    // edge ids, one per C_c column
  std::vector<int> branches;  // edge ids, one per row / identity column
  // rows() x (chords + branches), entries 0/1.
  std::vector<std::vector<std::uint8_t>> entries;

  int rows() const { return static_cast<int>(branches.size()); }
  int chord_count() const { return static_cast<int>(chords.size()); }
  int cols() const { return chord_count() + rows(); }
  bool at(int row, int col) const { return entries[row][col] != 0; }
  // Rows crossed by chord column c.
  std::vector<int> chord_rows(int c) const;
};

// Throws kNotASpanningTree when t does not span g.
FCutsetMatrix build_fcutset_matrix(const SimpleGraph& g, const SpanningTree& t);

struct LatticeVertex {
  int row = 0;
  int col = 0;
};

// One vertex per 1-entry; vertical paths down each column, horizontal edges
// between consecutive 1-entries of each row. Edges index into `vertices`.
struct LatticeGraph {
  std::vector<LatticeVertex> vertices;
  std::vector<std::pair<int, int>> vertical_edges;
  std::vector<std::pair<int, int>> horizontal_edges;

  std::optional<int> vertex_at(int row, int col) const;
};

LatticeGraph build_lattice_graph(const FCutsetMatrix& m);

// True when the chosen chord columns form one connected piece of the
// lattice graph (columns linked through shared rows).
bool chord_columns_connected(const FCutsetMatrix& m, const std::vector<int>& chord_cols);

// Chords are C_c column indices, branches are row indices.
struct ChordSelection {
  std::vector<int> chords;
  std::vector<int> branches;
  int total() const { return static_cast<int>(chords.size() + branches.size()); }
};

// Keeps the branch of every row crossed by an odd number of chosen chords.
ChordSelection induce_selection(const FCutsetMatrix& m, std::vector<int> chord_cols);

struct SelectionCheck {
  bool rows_even_at_least_two = false;  // every row: chords + branch even, >= 2
  bool chord_on_every_row = false;
  bool count_is_p = false;
  bool connected = false;
  bool degree_two = false;  // independent Hamiltonian-circuit test

  bool cutset_conditions() const {
    return rows_even_at_least_two && chord_on_every_row && count_is_p && connected;
  }
  bool all() const { return cutset_conditions() && degree_two; }
};

SelectionCheck check_selection(const SimpleGraph& g, const FCutsetMatrix& m,
                               const ChordSelection& sel);
bool verify_selection(const SimpleGraph& g, const SpanningTree& t,
                      const ChordSelection& sel);

// Graph edge ids selected by `sel`.
std::vector<int> selection_edge_ids(const FCutsetMatrix& m, const ChordSelection& sel);

struct DecideOptions {
  std::int64_t budget = 10'000'000;  // chord subsets examined
  std::vector<int> required_chords;  // C_c columns every candidate must contain
};

enum class DecideStatus { kFound, kNotFound, kBudgetExhausted };

struct HamiltonianResult {
  DecideStatus status = DecideStatus::kNotFound;
  std::optional<ChordSelection> selection;
  std::vector<Vertex> circuit;  // canonical order when found
  std::int64_t nodes = 0;
};

// Scans chord subsets by increasing size, lexicographic within a size, and
// returns the first whose induced selection passes check_selection().all().
HamiltonianResult decide_hamiltonian(const SimpleGraph& g, const SpanningTree& t,
                                     const DecideOptions& options = {});

// Edge names along a circuit given as a vertex order.
std::vector<std::string> circuit_edge_names(const SimpleGraph& g,
                                            const std::vector<int>& edge_ids,
                                            const std::vector<Vertex>& circuit);

struct CutsetTour {
  Tour tour;
  std::vector<Edge> chords;
  std::vector<Edge> branches;
  bool used_fallback = false;
  std::int64_t fallback_nodes = 0;
};

// Star at vertex 0 over the complete graph of `inst`.
SpanningTree default_tree(const SimpleGraph& complete_graph);

// Greedy column selection: cheapest chord first, then the cheapest chord
// column sharing a row with the selection that keeps exactly one even
// ("overlap") row per added chord, until every row is covered. Throws
// kGreedyStuck when no column qualifies or the result is not a circuit.
CutsetTour cutset_tsp_greedy(const Instance& inst, const SpanningTree& t);

// cutset_tsp_greedy, falling back to a weight-bounded search over chord sets
// when the greedy gets stuck.
CutsetTour cutset_tsp(const Instance& inst, const SpanningTree& t,
                      std::int64_t budget = 10'000'000);

// Graph file: "GRAPH p q" then q lines "i j [weight] [label]".
SimpleGraph parse_graph(std::istream& in);
SimpleGraph read_graph_file(const std::string& path);
// Tree file: p-1 lines, each "i j" or an edge label.
SpanningTree parse_tree(std::istream& in, const SimpleGraph& g);
SpanningTree read_tree_file(const std::string& path, const SimpleGraph& g);

}  // namespace hamtsp
