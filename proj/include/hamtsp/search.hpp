#pragma once

// Classical bag-splitting search and a real-amplitude state-vector
// simulator for the prefix-bisection, one-step and non-unitary searches.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hamtsp {

// Amplitudes below this are treated as zero.
constexpr double kZeroTolerance = 1e-9;

constexpr int kMaxDenseQubits = 24;
constexpr int kMaxQubits = 62;

// Real amplitudes over N = 2^n basis indices. Stored densely, sparsely, or
// implicitly as a uniform superposition over one index prefix.
class AmplitudeState {
 public:
  enum class Form { kDense, kSparse, kPrefix };

  // Throws kBadParameter when n exceeds kMaxDenseQubits or amps.size() != 2^n.
  static AmplitudeState dense(int n, std::vector<double> amps);
  static AmplitudeState sparse(int n, std::map<std::uint64_t, double> amps);
  static AmplitudeState basis(int n, std::uint64_t index);
  // Uniform amplitude over indices whose top `k` bits equal `prefix`.
  static AmplitudeState prefix(int n, std::uint64_t prefix, int k);

  int qubits() const { return n_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << n_; }
  Form form() const { return form_; }
  double amplitude(std::uint64_t x) const;
  double norm() const;
  // Dense copy. Throws kTooLarge above kMaxDenseQubits.
  std::vector<double> to_dense() const;
  // Indices with |amplitude| > kZeroTolerance, ascending.
  std::vector<std::uint64_t> support() const;

  std::uint64_t prefix_bits() const { return prefix_; }
  int prefix_length() const { return k_; }

  friend double inner_product(const AmplitudeState& a, const AmplitudeState& b);

 private:
  AmplitudeState(int n, Form form) : n_(n), form_(form) {}
  double prefix_amplitude() const;
  bool in_prefix(std::uint64_t x) const { return (x >> (n_ - k_)) == prefix_; }

  int n_;
  Form form_;
  std::vector<double> dense_;
  std::map<std::uint64_t, double> sparse_;
  std::uint64_t prefix_ = 0;
  int k_ = 0;
};

// Sum of a(x) b(x). Throws kDimensionMismatch for different qubit counts.
double inner_product(const AmplitudeState& a, const AmplitudeState& b);

struct SearchOracle {
  std::uint64_t target = 0;
  bool marks(std::uint64_t x) const { return x == target; }
};

AmplitudeState make_uniform_state(int n);
// `bits` is a string of '0'/'1', most significant first. Throws kBadPrefix.
AmplitudeState make_prefix_state(int n, const std::string& bits);

// Flips the sign of the target amplitude. Throws kDimensionMismatch when the
// target lies outside the state's dimension.
AmplitudeState apply_oracle(const AmplitudeState& state, const SearchOracle& oracle);

// 2^k <psi|state> psi - (2^k - 1) state. Throws kDimensionMismatch.
AmplitudeState apply_mk(const AmplitudeState& state, const AmplitudeState& psi, int k);

struct BitwiseStep {
  int k = 0;
  std::string prefix;  // bits fixed so far
  double inner_product = 0.0;
};

struct BitwiseResult {
  std::uint64_t target = 0;
  std::vector<BitwiseStep> trace;
  int inner_products = 0;  // evaluations made, including rejected halves
};

// Fixes one bit per iteration by testing which half-prefix state overlaps
// the target. Throws kBadParameter for n outside 1..kMaxQubits and
// kDimensionMismatch for an out-of-range target.
BitwiseResult qsearch_bitwise(int n, const SearchOracle& oracle);

// 2(2^(n-1) - 1) / sqrt(2^n).
double one_step_coefficient(int n);

// M_(n-1) O applied once to the uniform state.
AmplitudeState qsearch_one_step(int n, const SearchOracle& oracle);

// (sqrt(N)/2)(I - O) applied to the uniform state.
AmplitudeState qsearch_nonunitary(int n, const SearchOracle& oracle);

// Smallest index of maximal |amplitude|.
std::uint64_t argmax_amplitude(const AmplitudeState& state);

struct BagSplit {
  std::vector<std::int64_t> first_half;
  int indicator = 0;  // <t|first_half> as a 0/1 inner product
};

struct BagSearchResult {
  std::int64_t target = 0;
  std::vector<BagSplit> splits;
};

// Halves the bag (first ceil(|B|/2) items in stored order) and keeps the
// half whose indicator vector overlaps the target. Throws kTargetAbsent.
BagSearchResult classical_bag_search(const std::vector<std::int64_t>& items,
                                     std::int64_t target);

}  // namespace hamtsp
