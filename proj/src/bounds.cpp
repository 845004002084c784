#include "hamtsp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hamtsp/error.hpp"

namespace hamtsp {

double SortedWeightArrays::weight(Vertex i, Vertex j) const {
  for (const auto& array : rows[i]) {
    for (const SwaEntry& e : array) {
      if (e.neighbor == j) return e.weight;
    }
  }
  throw Error(ErrorCode::kIndexOutOfRange,
              "no entry for edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

SortedWeightArrays build_swa(const Instance& inst) {
  const int p = inst.size();
  SortedWeightArrays swa;
  swa.p = p;
  swa.rows.resize(static_cast<std::size_t>(p));
  for (Vertex i = 0; i < p; ++i) {
    std::vector<SwaEntry> row;
    for (Vertex j = 0; j < p; ++j) {
      if (j != i) row.push_back({j, inst.weight(i, j)});
    }
    std::stable_sort(row.begin(), row.end(),
                     [](const SwaEntry& a, const SwaEntry& b) { return a.weight < b.weight; });
    for (const SwaEntry& e : row) {
      auto& arrays = swa.rows[i];
      if (arrays.empty() || arrays.back().front().weight != e.weight) arrays.emplace_back();
      arrays.back().push_back(e);
    }
  }
  return swa;
}

double first_array_lower_bound(const SortedWeightArrays& swa) {
  double total = 0.0;
  for (Vertex i = 0; i < swa.p; ++i) total += swa.row_min(i);
  return total;
}

std::vector<Edge> first_array_edges(const SortedWeightArrays& swa) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < swa.p; ++i) {
    for (const SwaEntry& e : swa.rows[i].front()) edges.emplace_back(i, e.neighbor);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<double> gap_terms(const SortedWeightArrays& swa, const Tour& tour) {
  const int p = swa.p;
  if (!is_permutation_of(tour.order, p)) {
    throw Error(ErrorCode::kTourInstanceMismatch,
                "tour is not a permutation of 1.." + std::to_string(p));
  }
  std::vector<double> terms;
  double recomputed = 0.0;
  for (int i = 0; i < p; ++i) {
    const Vertex a = tour.order[i];
    const Vertex b = tour.order[(i + 1) % p];
    const double w = swa.weight(a, b);
    recomputed += w;
    terms.push_back(w - swa.row_min(a));
  }
  if (std::abs(recomputed - tour.weight) > 1e-9 * std::max(1.0, std::abs(recomputed))) {
    throw Error(ErrorCode::kTourInstanceMismatch, "tour weight does not match the instance");
  }
  return terms;
}

double gap_bound(const SortedWeightArrays& swa, const Tour& tour) {
  const auto terms = gap_terms(swa, tour);
  return std::accumulate(terms.begin(), terms.end(), 0.0);
}

}  // namespace hamtsp
