#pragma once

// Tour-construction heuristics and the planar turning-angle metric.

#include <utility>
#include <vector>

#include "hamtsp/core.hpp"

namespace hamtsp {

// Greedy walk from `start` to the cheapest unvisited vertex (ties to the
// smaller index), closed at the end. The order is the walk order.
Tour nearest_neighbor(const Instance& inst, Vertex start = 0);

// wia is the weight matrix itself; wea[j][k] is the weight ruled out by
// taking j -> k: every other edge into k plus every other edge out of j.
struct ExclusionMatrices {
  int p = 0;
  std::vector<double> wia;  // row-major p x p
  std::vector<double> wea;  // row-major p x p, diagonal unused

  double inclusion(Vertex j, Vertex k) const { return wia[static_cast<std::size_t>(j) * p + k]; }
  double exclusion(Vertex j, Vertex k) const { return wea[static_cast<std::size_t>(j) * p + k]; }
};

ExclusionMatrices build_wea(const Instance& inst);

enum class MnnPolicy { kIncludeFirst, kExcludeFirst };

std::string_view mnn_policy_name(MnnPolicy policy);

// Nearest neighbour with two criteria: minimum inclusion weight and maximum
// exclusion weight. The policy picks which one filters first; the other
// breaks ties, then the smaller index.
Tour modified_nn(const Instance& inst, MnnPolicy policy, Vertex start = 0);

// Greedy fragment merging: take the globally cheapest edge joining two
// fragment endpoints (ties lexicographic) until one path remains, then close.
Tour contraction_tour(const Instance& inst);

struct Transposition {
  Vertex a = 0;
  Vertex b = 0;
};

struct RelabeledPath {
  Instance instance;  // relabeled copy of the input
  HamPath path;       // 0,1,...,p-1 on `instance`
  std::vector<Transposition> applied;
};

// Row by row, swap the row minimum onto the superdiagonal. p >= 3.
RelabeledPath transposition_approx_v1(const Instance& inst);

// Largest edge to the corner (1,p), then grow the diagonal from both ends
// with the cheapest available neighbour, then repeated passes of (i, i+2)
// swaps that strictly shorten the diagonal path. p >= 4.
RelabeledPath transposition_approx_v2(const Instance& inst);

struct SweepFrame {
  Point center;
  double radius = 0.0;
  std::vector<double> angles;  // [0, 2*pi) about `center`
};

// Throws kNoCoordinates.
SweepFrame sweep_frame(const Instance& inst);

// Counterclockwise order about the centroid; equal angles go nearer-first,
// then by index. Throws kNoCoordinates.
Tour angular_sweep(const Instance& inst);

// Sum of absolute exterior angles, each in [0, pi], at interior vertices
// (every vertex for circuits). Throws kNoCoordinates, kZeroLengthSegment,
// kNotAPermutation.
double turning_sum(const Instance& inst, const std::vector<Vertex>& order, Mode mode);

}  // namespace hamtsp
