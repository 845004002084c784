#include "hamtsp/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "hamtsp/error.hpp"

namespace hamtsp {

namespace {

double round6(double x) { return std::round(x * 1e6) / 1e6; }

}  // namespace

std::string_view mode_name(Mode mode) {
  return mode == Mode::kCircuit ? "circuit" : "path";
}

std::string_view instance_kind_name(InstanceKind kind) {
  return kind == InstanceKind::kUniform ? "uniform" : "euclidean";
}

Instance::Instance(int p, std::vector<double> w,
                   std::optional<std::vector<Point>> coords, std::string name)
    : p_(p), w_(std::move(w)), coords_(std::move(coords)), name_(std::move(name)) {}

Instance Instance::from_matrix(int p, std::vector<double> w, std::string name,
                               std::optional<std::vector<Point>> coords) {
  if (p < 3) {
    throw Error(ErrorCode::kBadParameter,
                "instance needs at least 3 vertices, got " + std::to_string(p));
  }
  if (w.size() != static_cast<std::size_t>(p) * p) {
    throw Error(ErrorCode::kBadParameter, "weight matrix is not p x p");
  }
  if (coords && coords->size() != static_cast<std::size_t>(p)) {
    throw Error(ErrorCode::kBadParameter, "coordinate count differs from p");
  }
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      const double x = w[static_cast<std::size_t>(i) * p + j];
      if (!std::isfinite(x) || x < 0.0) {
        throw Error(ErrorCode::kBadParameter,
                    "weights must be finite and nonnegative");
      }
    }
    if (w[static_cast<std::size_t>(i) * p + i] != 0.0) {
      throw Error(ErrorCode::kBadParameter, "diagonal weight must be zero");
    }
  }
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const double a = w[static_cast<std::size_t>(i) * p + j];
      double& b = w[static_cast<std::size_t>(j) * p + i];
      if (std::abs(a - b) > kSymmetryTolerance) {
        throw Error(ErrorCode::kSymmetryViolation,
                    "w[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                        "] != w[" + std::to_string(j + 1) + "][" +
                        std::to_string(i + 1) + "]");
      }
      b = a;
    }
  }
  return Instance(p, std::move(w), std::move(coords), std::move(name));
}

Instance Instance::from_rows(const std::vector<std::vector<double>>& rows,
                             std::string name) {
  const int p = static_cast<int>(rows.size());
  std::vector<double> w;
  w.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows.size()) {
      throw Error(ErrorCode::kBadParameter, "weight matrix is not square");
    }
    w.insert(w.end(), r.begin(), r.end());
  }
  return from_matrix(p, std::move(w), std::move(name));
}

Instance Instance::from_points(std::vector<Point> points, std::string name) {
  const int p = static_cast<int>(points.size());
  std::vector<double> w(points.size() * points.size(), 0.0);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i == j) continue;
      const double dx = points[i].x - points[j].x;
      const double dy = points[i].y - points[j].y;
      w[static_cast<std::size_t>(i) * p + j] = round6(std::hypot(dx, dy));
    }
  }
  return from_matrix(p, std::move(w), std::move(name), std::move(points));
}

const std::vector<Point>& Instance::coords() const {
  if (!coords_) throw Error(ErrorCode::kNoCoordinates, "instance has no coordinates");
  return *coords_;
}

Instance Instance::renamed(std::string name) const {
  return Instance(p_, w_, coords_, std::move(name));
}

bool is_permutation_of(std::span<const Vertex> order, int p) {
  if (order.size() != static_cast<std::size_t>(p)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  for (Vertex v : order) {
    if (v < 0 || v >= p || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

double tour_weight(const Instance& inst, std::span<const Vertex> order, Mode mode) {
  if (!is_permutation_of(order, inst.size())) {
    throw Error(ErrorCode::kNotAPermutation,
                "order must list each of the " + std::to_string(inst.size()) +
                    " vertices exactly once");
  }
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    total += inst.weight(order[k], order[k + 1]);
  }
  if (mode == Mode::kCircuit) total += inst.weight(order.back(), order.front());
  return total;
}

Tour make_tour(const Instance& inst, std::vector<Vertex> order) {
  const double w = tour_weight(inst, order, Mode::kCircuit);
  return Tour{std::move(order), w};
}

HamPath make_path(const Instance& inst, std::vector<Vertex> order) {
  const double w = tour_weight(inst, order, Mode::kPath);
  return HamPath{std::move(order), w};
}

std::vector<Vertex> canonical_circuit(std::span<const Vertex> order) {
  std::vector<Vertex> out(order.begin(), order.end());
  if (out.size() < 3) return out;
  auto it = std::find(out.begin(), out.end(), *std::min_element(out.begin(), out.end()));
  std::rotate(out.begin(), it, out.end());
  if (out[1] > out.back()) std::reverse(out.begin() + 1, out.end());
  return out;
}

std::vector<Vertex> canonical_path(std::span<const Vertex> order) {
  std::vector<Vertex> out(order.begin(), order.end());
  if (!out.empty() && out.front() > out.back()) std::reverse(out.begin(), out.end());
  return out;
}

Instance apply_transposition(const Instance& inst, Vertex a, Vertex b) {
  const int p = inst.size();
  if (a < 0 || a >= p || b < 0 || b >= p) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "transposition (" + std::to_string(a + 1) + "," +
                    std::to_string(b + 1) + ") outside 1.." + std::to_string(p));
  }
  std::vector<Vertex> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[a], perm[b]);
  return relabel(inst, perm);
}

Instance relabel(const Instance& inst, std::span<const Vertex> perm) {
  const int p = inst.size();
  if (!is_permutation_of(perm, p)) {
    throw Error(ErrorCode::kNotAPermutation, "relabeling is not a permutation");
  }
  std::vector<double> w(static_cast<std::size_t>(p) * p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      w[static_cast<std::size_t>(i) * p + j] = inst.weight(perm[i], perm[j]);
    }
  }
  std::optional<std::vector<Point>> coords;
  if (inst.has_coords()) {
    coords.emplace(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) (*coords)[i] = inst.coords()[perm[i]];
  }
  return Instance::from_matrix(p, std::move(w), inst.name(), std::move(coords));
}

Owal build_owal(const Instance& inst) {
  const int p = inst.size();
  Owal owal;
  owal.reserve(static_cast<std::size_t>(p) * (p - 1) / 2);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) owal.push_back({inst.weight(i, j), Edge(i, j)});
  }
  std::stable_sort(owal.begin(), owal.end(), [](const OwalEntry& a, const OwalEntry& b) {
    return a.weight < b.weight;
  });
  return owal;
}

double sublist_weight(const Instance& inst, std::span<const Edge> edges) {
  double total = 0.0;
  for (const Edge& e : edges) total += inst.weight(e.u, e.v);
  return total;
}

EdgeSubList make_sublist(const Instance& inst, std::vector<Edge> edges) {
  const double w = sublist_weight(inst, edges);
  return EdgeSubList{std::move(edges), w};
}

bool validate_sublist(int p, std::span<const Edge> edges, Mode mode) {
  const std::size_t want = mode == Mode::kCircuit ? p : p - 1;
  if (p < 2 || edges.size() != want) return false;
  std::vector<int> degree(static_cast<std::size_t>(p), 0);
  DisjointSets sets(p);
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const Edge& e : edges) {
    if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= p || e.v >= p) return false;
    if (++degree[e.u] > 2 || ++degree[e.v] > 2) return false;
    sets.unite(e.u, e.v);
  }
  int ones = 0;
  for (int d : degree) {
    if (d == 0) return false;
    if (d == 1) ++ones;
  }
  if (mode == Mode::kCircuit ? ones != 0 : ones != 2) return false;
  return sets.components() == 1;
}

std::vector<Vertex> sublist_to_order(int p, std::span<const Edge> edges, Mode mode) {
  if (!validate_sublist(p, edges, mode)) {
    throw Error(ErrorCode::kInfeasibleSublist,
                std::string("edge set is not a Hamiltonian ") +
                    std::string(mode_name(mode)));
  }
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(p));
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  Vertex start = 0;
  if (mode == Mode::kPath) {
    start = p;
    for (Vertex v = 0; v < p; ++v) {
      if (adj[v].size() == 1) {
        start = v;
        break;
      }
    }
  }
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(p));
  Vertex prev = -1;
  Vertex cur = start;
  if (mode == Mode::kCircuit) {
    order.push_back(cur);
    prev = cur;
    cur = std::min(adj[start][0], adj[start][1]);
  }
  while (static_cast<int>(order.size()) < p) {
    order.push_back(cur);
    Vertex next = -1;
    for (Vertex n : adj[cur]) {
      if (n != prev) {
        next = n;
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  return order;
}

std::vector<Edge> order_to_edges(std::span<const Vertex> order, Mode mode) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) edges.emplace_back(order[k], order[k + 1]);
  if (mode == Mode::kCircuit && order.size() > 2) edges.emplace_back(order.back(), order.front());
  return edges;
}

Instance gen_random_instance(std::uint64_t seed, int p, InstanceKind kind, double range) {
  if (p < 3) {
    throw Error(ErrorCode::kBadParameter, "p must be at least 3");
  }
  if (!(range > 0.0)) {
    throw Error(ErrorCode::kBadParameter, "range must be positive");
  }
  std::mt19937_64 rng(seed);
  const std::string name = std::string(instance_kind_name(kind)) + "-p" +
                           std::to_string(p) + "-s" + std::to_string(seed);
  if (kind == InstanceKind::kUniform) {
    const auto hi = static_cast<long long>(std::max(1.0, std::floor(range)));
    std::uniform_int_distribution<long long> dist(1, hi);
    std::vector<double> w(static_cast<std::size_t>(p) * p, 0.0);
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) {
        const auto x = static_cast<double>(dist(rng));
        w[static_cast<std::size_t>(i) * p + j] = x;
        w[static_cast<std::size_t>(j) * p + i] = x;
      }
    }
    return Instance::from_matrix(p, std::move(w), name);
  }
  std::uniform_real_distribution<double> dist(0.0, range);
  std::vector<Point> points(static_cast<std::size_t>(p));
  for (Point& pt : points) {
    pt.x = dist(rng);
    pt.y = dist(rng);
  }
  return Instance::from_points(std::move(points), name);
}

double triangular_sum(const Instance& inst) {
  const int p = inst.size();
  double total = 0.0;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 2; j < p; ++j) total += inst.weight(i, j);
  }
  return total;
}

DisjointSets::DisjointSets(int n)
    : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0),
      components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --components_;
  return true;
}

}  // namespace hamtsp
