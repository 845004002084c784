#pragma once

// Weighted complete graphs, tours, and the edge-sublist feasibility checks
// shared by every solver. Vertices are 0-based here; files and the CLI use
// 1-based labels.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hamtsp {

using Vertex = int;

enum class Mode { kCircuit, kPath };

std::string_view mode_name(Mode mode);

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Symmetric, zero-diagonal, nonnegative weight matrix over p >= 3 vertices.
// Immutable after construction.
class Instance {
 public:
  static constexpr double kSymmetryTolerance = 1e-9;

  // Throws kSymmetryViolation / kBadParameter on invalid input.
  static Instance from_rows(const std::vector<std::vector<double>>& rows,
                            std::string name = {});
  static Instance from_matrix(int p, std::vector<double> row_major,
                              std::string name = {},
                              std::optional<std::vector<Point>> coords = {});
  // Weights are Euclidean distances rounded to 6 decimals.
  static Instance from_points(std::vector<Point> points, std::string name = {});

  int size() const { return p_; }
  double weight(Vertex a, Vertex b) const { return w_[index(a, b)]; }
  std::span<const double> row(Vertex a) const {
    return {w_.data() + static_cast<std::size_t>(a) * p_,
            static_cast<std::size_t>(p_)};
  }
  const std::vector<double>& matrix() const { return w_; }
  bool has_coords() const { return coords_.has_value(); }
  const std::vector<Point>& coords() const;
  const std::string& name() const { return name_; }

  // Same instance under a different name.
  Instance renamed(std::string name) const;

  bool operator==(const Instance& other) const {
    return p_ == other.p_ && w_ == other.w_ && coords_ == other.coords_;
  }

 private:
  Instance(int p, std::vector<double> w, std::optional<std::vector<Point>> coords,
           std::string name);
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * p_ + b;
  }

  int p_ = 0;
  std::vector<double> w_;
  std::optional<std::vector<Point>> coords_;
  std::string name_;
};

struct Tour {
  std::vector<Vertex> order;
  double weight = 0.0;
};

struct HamPath {
  std::vector<Vertex> order;
  double weight = 0.0;
};

struct EdgeSubList {
  std::vector<Edge> edges;
  double weight = 0.0;
};

struct OwalEntry {
  double weight = 0.0;
  Edge edge;
};

// Ordered weighted adjacency list: every edge once, nondecreasing weight,
// equal weights in lexicographic (u, v) order.
using Owal = std::vector<OwalEntry>;

bool is_permutation_of(std::span<const Vertex> order, int p);

// Throws kNotAPermutation.
double tour_weight(const Instance& inst, std::span<const Vertex> order, Mode mode);

Tour make_tour(const Instance& inst, std::vector<Vertex> order);
HamPath make_path(const Instance& inst, std::vector<Vertex> order);

// Rotate so vertex 0 leads, then orient so the second vertex is the smaller
// of vertex 0's two neighbours.
std::vector<Vertex> canonical_circuit(std::span<const Vertex> order);
// Orient so the smaller endpoint comes first.
std::vector<Vertex> canonical_path(std::span<const Vertex> order);

// Swaps labels a and b (rows, columns and coordinates). Throws kIndexOutOfRange.
Instance apply_transposition(const Instance& inst, Vertex a, Vertex b);

// new vertex i is old vertex perm[i].
Instance relabel(const Instance& inst, std::span<const Vertex> perm);

Owal build_owal(const Instance& inst);

double sublist_weight(const Instance& inst, std::span<const Edge> edges);
EdgeSubList make_sublist(const Instance& inst, std::vector<Edge> edges);

// Check (A) for paths, check (B) for circuits. Malformed input returns false.
bool validate_sublist(int p, std::span<const Edge> edges, Mode mode);
inline bool validate_sublist(const Instance& inst, const EdgeSubList& s, Mode mode) {
  return validate_sublist(inst.size(), s.edges, mode);
}

// Traversal realizing a feasible sublist, in canonical form.
// Throws kInfeasibleSublist.
std::vector<Vertex> sublist_to_order(int p, std::span<const Edge> edges, Mode mode);

std::vector<Edge> order_to_edges(std::span<const Vertex> order, Mode mode);

enum class InstanceKind { kUniform, kEuclidean };

std::string_view instance_kind_name(InstanceKind kind);

// Deterministic in seed. Uniform: integer weights in [1, range]. Euclidean:
// points uniform in [0, range]^2. Throws kBadParameter for p < 3.
Instance gen_random_instance(std::uint64_t seed, int p, InstanceKind kind,
                             double range);

// Sum of w[i][j] over j >= i + 2.
double triangular_sum(const Instance& inst);

// Union-find over 0..n-1.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int x);
  bool unite(int a, int b);
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int components_;
};

}  // namespace hamtsp
