#pragma once

// Per-vertex sorted weight arrays, the row-minimum lower bound, and the gap
// bound for grading a given tour.

#include <vector>

#include "hamtsp/core.hpp"

namespace hamtsp {

struct SwaEntry {
  Vertex neighbor = 0;
  double weight = 0.0;
};

// rows[i][k] is array k of vertex i: all neighbours sharing the k-th
// smallest distinct weight, in index order.
struct SortedWeightArrays {
  int p = 0;
  std::vector<std::vector<std::vector<SwaEntry>>> rows;

  double row_min(Vertex i) const { return rows[i].front().front().weight; }
  // Weight of edge (i, j) as recorded in row i.
  double weight(Vertex i, Vertex j) const;
};

SortedWeightArrays build_swa(const Instance& inst);

double first_array_lower_bound(const SortedWeightArrays& swa);

// Edges (i, j) with j in array 1 of row i, deduplicated.
std::vector<Edge> first_array_edges(const SortedWeightArrays& swa);

// Per-vertex excess of the charged tour edge over the row minimum. Vertex
// order[i] is charged the edge to its successor order[i+1] (cyclically).
std::vector<double> gap_terms(const SortedWeightArrays& swa, const Tour& tour);

// Sum of gap_terms(). Throws kTourInstanceMismatch when the tour is not a
// permutation of the instance's vertices or its weight disagrees.
double gap_bound(const SortedWeightArrays& swa, const Tour& tour);

}  // namespace hamtsp
