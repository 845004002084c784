#include "hamtsp/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hamtsp/error.hpp"

namespace hamtsp {

namespace {

void check_start(const Instance& inst, Vertex start) {
  if (start < 0 || start >= inst.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "start vertex " + std::to_string(start + 1) + " outside 1.." +
                    std::to_string(inst.size()));
  }
}

double diagonal_weight(const Instance& inst) {
  double total = 0.0;
  for (Vertex i = 0; i + 1 < inst.size(); ++i) total += inst.weight(i, i + 1);
  return total;
}

HamPath identity_path(const Instance& inst) {
  std::vector<Vertex> order(static_cast<std::size_t>(inst.size()));
  std::iota(order.begin(), order.end(), 0);
  return make_path(inst, std::move(order));
}

}  // namespace

Tour nearest_neighbor(const Instance& inst, Vertex start) {
  check_start(inst, start);
  const int p = inst.size();
  std::vector<char> visited(static_cast<std::size_t>(p), 0);
  std::vector<Vertex> order{start};
  visited[start] = 1;
  Vertex cur = start;
  while (static_cast<int>(order.size()) < p) {
    Vertex next = -1;
    for (Vertex v = 0; v < p; ++v) {
      if (visited[v]) continue;
      if (next < 0 || inst.weight(cur, v) < inst.weight(cur, next)) next = v;
    }
    visited[next] = 1;
    order.push_back(next);
    cur = next;
  }
  return make_tour(inst, std::move(order));
}

ExclusionMatrices build_wea(const Instance& inst) {
  const int p = inst.size();
  ExclusionMatrices m;
  m.p = p;
  m.wia = inst.matrix();
  std::vector<double> row_sum(static_cast<std::size_t>(p), 0.0);
  for (Vertex j = 0; j < p; ++j) {
    for (Vertex k = 0; k < p; ++k) row_sum[j] += inst.weight(j, k);
  }
  // Symmetric weights: column sums equal row sums.
  m.wea.assign(static_cast<std::size_t>(p) * p, 0.0);
  for (Vertex j = 0; j < p; ++j) {
    for (Vertex k = 0; k < p; ++k) {
      if (j == k) continue;
      m.wea[static_cast<std::size_t>(j) * p + k] =
          (row_sum[k] - inst.weight(j, k)) + (row_sum[j] - inst.weight(j, k));
    }
  }
  return m;
}

std::string_view mnn_policy_name(MnnPolicy policy) {
  return policy == MnnPolicy::kIncludeFirst ? "include_first" : "exclude_first";
}

Tour modified_nn(const Instance& inst, MnnPolicy policy, Vertex start) {
  check_start(inst, start);
  const int p = inst.size();
  const ExclusionMatrices m = build_wea(inst);
  std::vector<char> visited(static_cast<std::size_t>(p), 0);
  std::vector<Vertex> order{start};
  visited[start] = 1;
  Vertex cur = start;
  // Lower key is better; the secondary criterion only sees primary ties.
  auto key = [&](Vertex v) {
    const double inc = m.inclusion(cur, v);
    const double exc = -m.exclusion(cur, v);
    return policy == MnnPolicy::kIncludeFirst ? std::pair{inc, exc} : std::pair{exc, inc};
  };
  while (static_cast<int>(order.size()) < p) {
    Vertex next = -1;
    for (Vertex v = 0; v < p; ++v) {
      if (visited[v]) continue;
      if (next < 0 || key(v) < key(next)) next = v;
    }
    visited[next] = 1;
    order.push_back(next);
    cur = next;
  }
  return make_tour(inst, std::move(order));
}

Tour contraction_tour(const Instance& inst) {
  const int p = inst.size();
  std::vector<int> degree(static_cast<std::size_t>(p), 0);
  DisjointSets fragments(p);
  std::vector<Edge> chosen;
  for (const OwalEntry& entry : build_owal(inst)) {
    if (static_cast<int>(chosen.size()) == p - 1) break;
    const Edge e = entry.edge;
    if (degree[e.u] >= 2 || degree[e.v] >= 2) continue;
    if (!fragments.unite(e.u, e.v)) continue;
    ++degree[e.u];
    ++degree[e.v];
    chosen.push_back(e);
  }
  std::vector<Vertex> ends;
  for (Vertex v = 0; v < p; ++v) {
    if (degree[v] < 2) ends.push_back(v);
  }
  chosen.emplace_back(ends.front(), ends.back());
  return make_tour(inst, sublist_to_order(p, chosen, Mode::kCircuit));
}

RelabeledPath transposition_approx_v1(const Instance& inst) {
  const int p = inst.size();
  RelabeledPath out{inst, {}, {}};
  for (Vertex i = 0; i + 2 < p; ++i) {
    const Instance& cur = out.instance;
    Vertex best = i + 1;
    for (Vertex j = i + 2; j < p; ++j) {
      if (cur.weight(i, j) < cur.weight(i, best)) best = j;
    }
    if (best == i + 1) continue;
    out.instance = apply_transposition(cur, i + 1, best);
    out.applied.push_back({i + 1, best});
  }
  out.path = identity_path(out.instance);
  return out;
}

RelabeledPath transposition_approx_v2(const Instance& inst) {
  const int p = inst.size();
  if (p < 4) throw Error(ErrorCode::kBadParameter, "transposition_approx_v2 needs p >= 4");
  RelabeledPath out{inst, {}, {}};
  auto swap = [&](Vertex a, Vertex b) {
    if (a == b) return;
    out.instance = apply_transposition(out.instance, a, b);
    out.applied.push_back({std::min(a, b), std::max(a, b)});
  };

  // Step 1: largest edge to the corner.
  Edge big(0, 1);
  for (Vertex i = 0; i < p; ++i) {
    for (Vertex j = i + 1; j < p; ++j) {
      if (inst.weight(i, j) > inst.weight(big.u, big.v)) big = Edge(i, j);
    }
  }
  swap(0, big.u);
  swap(big.v, p - 1);

  // Steps 2-4: grow the diagonal inward from both ends over free labels.
  Vertex left = 0;
  Vertex right = p - 1;
  auto cheapest = [&](Vertex from) {
    Vertex best = left + 1;
    for (Vertex j = left + 2; j < right; ++j) {
      if (out.instance.weight(from, j) < out.instance.weight(from, best)) best = j;
    }
    return best;
  };
  while (right - left > 2) {
    swap(left + 1, cheapest(left));
    ++left;
    if (right - left <= 2) break;
    const Vertex j = cheapest(right);
    swap(right - 1, j);
    --right;
  }

  // Step 5: (i, i+2) passes while they strictly shorten the path.
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex i = 0; i + 2 < p; ++i) {
      const Instance trial = apply_transposition(out.instance, i, i + 2);
      if (diagonal_weight(trial) < diagonal_weight(out.instance)) {
        out.instance = trial;
        out.applied.push_back({i, i + 2});
        improved = true;
      }
    }
  }
  out.path = identity_path(out.instance);
  return out;
}

SweepFrame sweep_frame(const Instance& inst) {
  const auto& pts = inst.coords();
  SweepFrame f;
  for (const Point& pt : pts) {
    f.center.x += pt.x;
    f.center.y += pt.y;
  }
  f.center.x /= static_cast<double>(pts.size());
  f.center.y /= static_cast<double>(pts.size());
  for (const Point& pt : pts) {
    const double dx = pt.x - f.center.x;
    const double dy = pt.y - f.center.y;
    f.radius = std::max(f.radius, std::hypot(dx, dy));
    double a = std::atan2(dy, dx);
    if (a < 0) a += 2 * std::numbers::pi;
    f.angles.push_back(a);
  }
  return f;
}

Tour angular_sweep(const Instance& inst) {
  const SweepFrame f = sweep_frame(inst);
  const auto& pts = inst.coords();
  std::vector<Vertex> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  auto dist = [&](Vertex v) {
    return std::hypot(pts[v].x - f.center.x, pts[v].y - f.center.y);
  };
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (f.angles[a] != f.angles[b]) return f.angles[a] < f.angles[b];
    if (dist(a) != dist(b)) return dist(a) < dist(b);
    return a < b;
  });
  return make_tour(inst, canonical_circuit(order));
}

double turning_sum(const Instance& inst, const std::vector<Vertex>& order, Mode mode) {
  const auto& pts = inst.coords();
  const int p = inst.size();
  if (!is_permutation_of(order, p)) {
    throw Error(ErrorCode::kNotAPermutation, "order is not a permutation of 1..p");
  }
  auto segment = [&](Vertex a, Vertex b) {
    const Point d{pts[b].x - pts[a].x, pts[b].y - pts[a].y};
    if (d.x == 0.0 && d.y == 0.0) {
      throw Error(ErrorCode::kZeroLengthSegment,
                  "vertices " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                      " coincide");
    }
    return d;
  };
  const int n = static_cast<int>(order.size());
  double total = 0.0;
  const int first = mode == Mode::kCircuit ? 0 : 1;
  const int last = mode == Mode::kCircuit ? n : n - 1;
  for (int i = first; i < last; ++i) {
    const Vertex prev = order[(i + n - 1) % n];
    const Vertex cur = order[i];
    const Vertex next = order[(i + 1) % n];
    const Point a = segment(prev, cur);
    const Point b = segment(cur, next);
    const double c = (a.x * b.x + a.y * b.y) / (std::hypot(a.x, a.y) * std::hypot(b.x, b.y));
    total += std::acos(std::clamp(c, -1.0, 1.0));
  }
  return total;
}

}  // namespace hamtsp
