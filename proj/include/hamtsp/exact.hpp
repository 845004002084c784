#pragma once

// Exact solvers: edge sublists of the ordered adjacency list visited in
// nondecreasing total weight, and the permutation brute force used as the
// reference oracle.

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "hamtsp/core.hpp"

namespace hamtsp {

// Lazily yields every k-subset of OWAL positions in nondecreasing total
// weight, ties in lexicographic position order. Each subset has one parent
// (its leftmost displaced position moved back by one), so every subset is
// generated exactly once and the frontier stays small.
class SublistEnumerator {
 public:
  struct Candidate {
    std::vector<int> positions;  // ascending indices into the OWAL
    double weight = 0.0;
  };

  SublistEnumerator(const Owal& owal, int k);

  std::optional<Candidate> next();
  std::int64_t emitted() const { return emitted_; }
  std::size_t frontier_size() const { return heap_.size(); }

 private:
  struct Key {
    double weight;
    std::uint32_t node;
  };
  struct Later {
    const SublistEnumerator* self;
    bool operator()(const Key& a, const Key& b) const { return self->before(b, a); }
  };

  bool before(const Key& a, const Key& b) const;
  const std::uint16_t* tokens(std::uint32_t node) const {
    return pool_.data() + static_cast<std::size_t>(node) * k_;
  }
  std::uint32_t alloc();
  void push(std::uint32_t node);
  double sum(std::uint32_t node) const;

  std::vector<double> weights_;
  int k_;
  std::vector<std::uint16_t> pool_;
  std::vector<std::uint32_t> free_;
  std::priority_queue<Key, std::vector<Key>, Later> heap_;
  std::int64_t emitted_ = 0;
};

// The first `limit` sublists in enumeration order.
std::vector<EdgeSubList> enumerate_sublists_by_weight(const Owal& owal, int k,
                                                      std::int64_t limit);

struct SolveReport {
  Mode mode = Mode::kCircuit;
  std::vector<Vertex> order;  // canonical; empty when the budget ran out
  std::vector<Edge> edges;
  double weight = 0.0;
  std::int64_t candidates_checked = 0;
  bool exhausted_budget = false;
  double last_weight = 0.0;  // weight of the last candidate examined
};

// First feasible sublist of size p-1 (path) or p (circuit). The budget caps
// the candidates examined; hitting it sets exhausted_budget.
SolveReport owal_exact(const Instance& inst, Mode mode, std::int64_t budget = 10'000'000);

constexpr int kBruteForceMaxVertices = 12;

// Scan of all canonical orders, keeping the first strict minimum.
// Throws kTooLarge above kBruteForceMaxVertices.
SolveReport brute_force(const Instance& inst, Mode mode);

constexpr int kRelabelingMaxVertices = 9;

struct TriangularRelabeling {
  Instance instance;          // relabeled so the diagonal is the chosen path
  std::vector<Vertex> perm;   // new vertex i is old vertex perm[i]
  double triangular_sum = 0.0;
  double diagonal_weight = 0.0;
};

// Relabeling maximizing triangular_sum(), first maximum in lexicographic
// permutation order. Throws kTooLarge above kRelabelingMaxVertices.
TriangularRelabeling max_triangular_relabeling(const Instance& inst);

}  // namespace hamtsp
