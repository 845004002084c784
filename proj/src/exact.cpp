#include "hamtsp/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hamtsp/error.hpp"

namespace hamtsp {

SublistEnumerator::SublistEnumerator(const Owal& owal, int k)
    : k_(k), heap_(Later{this}) {
  const int m = static_cast<int>(owal.size());
  if (k < 1 || k > m) {
    throw Error(ErrorCode::kBadParameter,
                "sublist size " + std::to_string(k) + " outside 1.." + std::to_string(m));
  }
  if (m > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::kTooLarge, "ordered adjacency list too long to enumerate");
  }
  weights_.reserve(owal.size());
  for (const OwalEntry& e : owal) weights_.push_back(e.weight);
  const std::uint32_t root = alloc();
  std::iota(pool_.begin() + static_cast<std::ptrdiff_t>(root) * k_,
            pool_.begin() + static_cast<std::ptrdiff_t>(root + 1) * k_, std::uint16_t{0});
  push(root);
}

bool SublistEnumerator::before(const Key& a, const Key& b) const {
  if (a.weight != b.weight) return a.weight < b.weight;
  const std::uint16_t* x = tokens(a.node);
  const std::uint16_t* y = tokens(b.node);
  return std::lexicographical_compare(x, x + k_, y, y + k_);
}

std::uint32_t SublistEnumerator::alloc() {
  if (!free_.empty()) {
    const std::uint32_t node = free_.back();
    free_.pop_back();
    return node;
  }
  const auto node = static_cast<std::uint32_t>(pool_.size() / static_cast<std::size_t>(k_));
  pool_.resize(pool_.size() + static_cast<std::size_t>(k_));
  return node;
}

double SublistEnumerator::sum(std::uint32_t node) const {
  // Always summed in position order, so a child never sums below its parent.
  const std::uint16_t* t = tokens(node);
  double total = 0.0;
  for (int i = 0; i < k_; ++i) total += weights_[t[i]];
  return total;
}

void SublistEnumerator::push(std::uint32_t node) { heap_.push(Key{sum(node), node}); }

std::optional<SublistEnumerator::Candidate> SublistEnumerator::next() {
  if (heap_.empty()) return std::nullopt;
  const Key top = heap_.top();
  heap_.pop();
  const int m = static_cast<int>(weights_.size());
  Candidate out;
  out.weight = top.weight;
  out.positions.assign(tokens(top.node), tokens(top.node) + k_);
  free_.push_back(top.node);
  ++emitted_;

  const std::vector<int>& a = out.positions;
  int j = 0;
  while (j < k_ && a[j] == j) ++j;
  auto spawn = [&](int t) {
    const int limit = t + 1 < k_ ? a[t + 1] : m;
    if (a[t] + 1 >= limit) return;
    const std::uint32_t node = alloc();
    std::uint16_t* dst = pool_.data() + static_cast<std::size_t>(node) * k_;
    for (int i = 0; i < k_; ++i) dst[i] = static_cast<std::uint16_t>(a[i]);
    ++dst[t];
    push(node);
  };
  if (j < k_) spawn(j);
  if (j >= 1) spawn(j - 1);
  return out;
}

std::vector<EdgeSubList> enumerate_sublists_by_weight(const Owal& owal, int k,
                                                      std::int64_t limit) {
  std::vector<EdgeSubList> out;
  SublistEnumerator en(owal, k);
  while (static_cast<std::int64_t>(out.size()) < limit) {
    auto c = en.next();
    if (!c) break;
    EdgeSubList s;
    s.weight = c->weight;
    for (int pos : c->positions) s.edges.push_back(owal[pos].edge);
    out.push_back(std::move(s));
  }
  return out;
}

SolveReport owal_exact(const Instance& inst, Mode mode, std::int64_t budget) {
  const int p = inst.size();
  const Owal owal = build_owal(inst);
  const int k = mode == Mode::kCircuit ? p : p - 1;
  SublistEnumerator en(owal, k);
  SolveReport report;
  report.mode = mode;
  std::vector<Edge> edges(static_cast<std::size_t>(k));
  while (report.candidates_checked < budget) {
    auto c = en.next();
    if (!c) break;
    ++report.candidates_checked;
    report.last_weight = c->weight;
    for (int i = 0; i < k; ++i) edges[i] = owal[c->positions[i]].edge;
    if (!validate_sublist(p, edges, mode)) continue;
    report.edges = edges;
    report.order = sublist_to_order(p, edges, mode);
    report.weight = tour_weight(inst, report.order, mode);
    return report;
  }
  report.exhausted_budget = true;
  return report;
}

SolveReport brute_force(const Instance& inst, Mode mode) {
  const int p = inst.size();
  if (p > kBruteForceMaxVertices) {
    throw Error(ErrorCode::kTooLarge, "brute force is limited to p <= " +
                                          std::to_string(kBruteForceMaxVertices));
  }
  SolveReport report;
  report.mode = mode;
  std::vector<Vertex> order(static_cast<std::size_t>(p));
  std::iota(order.begin(), order.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  // Circuits keep vertex 0 in front; both kinds skip reversed duplicates.
  const auto first = mode == Mode::kCircuit ? order.begin() + 1 : order.begin();
  do {
    if (order.front() > order.back() && mode == Mode::kPath) continue;
    if (mode == Mode::kCircuit && order[1] > order.back()) continue;
    ++report.candidates_checked;
    const double w = tour_weight(inst, order, mode);
    if (w < best) {
      best = w;
      report.order = order;
    }
  } while (std::next_permutation(first, order.end()));
  report.weight = best;
  report.last_weight = best;
  report.edges = order_to_edges(report.order, mode);
  std::sort(report.edges.begin(), report.edges.end());
  return report;
}

TriangularRelabeling max_triangular_relabeling(const Instance& inst) {
  const int p = inst.size();
  if (p > kRelabelingMaxVertices) {
    throw Error(ErrorCode::kTooLarge, "relabeling scan is limited to p <= " +
                                          std::to_string(kRelabelingMaxVertices));
  }
  std::vector<Vertex> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Vertex> best_perm = perm;
  double best = -std::numeric_limits<double>::infinity();
  do {
    double s = 0.0;
    for (int i = 0; i < p; ++i) {
      for (int j = i + 2; j < p; ++j) s += inst.weight(perm[i], perm[j]);
    }
    if (s > best) {
      best = s;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  Instance relabeled = relabel(inst, best_perm);
  double diagonal = 0.0;
  for (int i = 0; i + 1 < p; ++i) diagonal += relabeled.weight(i, i + 1);
  const double tri = triangular_sum(relabeled);
  return {std::move(relabeled), std::move(best_perm), tri, diagonal};
}

}  // namespace hamtsp
