#include "hamtsp/search.hpp"

#include <algorithm>
#include <cmath>

#include "hamtsp/error.hpp"

namespace hamtsp {

namespace {

void check_qubits(int n, int max) {
  if (n < 1 || n > max) {
    throw Error(ErrorCode::kBadParameter,
                "qubit count " + std::to_string(n) + " outside 1.." + std::to_string(max));
  }
}

void check_same_dimension(const AmplitudeState& a, const AmplitudeState& b) {
  if (a.qubits() != b.qubits()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "states on " + std::to_string(a.qubits()) + " and " +
                    std::to_string(b.qubits()) + " qubits");
  }
}

void check_target(const AmplitudeState& s, const SearchOracle& oracle) {
  if (oracle.target >= s.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "target " + std::to_string(oracle.target) + " outside a " +
                    std::to_string(s.qubits()) + "-qubit register");
  }
}

}  // namespace

AmplitudeState AmplitudeState::dense(int n, std::vector<double> amps) {
  check_qubits(n, kMaxDenseQubits);
  if (amps.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kDimensionMismatch, "amplitude vector length is not 2^n");
  }
  if (!std::all_of(amps.begin(), amps.end(), [](double x) { return std::isfinite(x); })) {
    throw Error(ErrorCode::kBadParameter, "amplitudes must be finite");
  }
  AmplitudeState s(n, Form::kDense);
  s.dense_ = std::move(amps);
  return s;
}

AmplitudeState AmplitudeState::sparse(int n, std::map<std::uint64_t, double> amps) {
  check_qubits(n, kMaxQubits);
  AmplitudeState s(n, Form::kSparse);
  for (const auto& [x, a] : amps) {
    if (x >= s.dimension()) throw Error(ErrorCode::kDimensionMismatch, "basis index out of range");
    if (!std::isfinite(a)) throw Error(ErrorCode::kBadParameter, "amplitudes must be finite");
  }
  s.sparse_ = std::move(amps);
  return s;
}

AmplitudeState AmplitudeState::basis(int n, std::uint64_t index) {
  return sparse(n, {{index, 1.0}});
}

AmplitudeState AmplitudeState::prefix(int n, std::uint64_t prefix, int k) {
  check_qubits(n, kMaxQubits);
  if (k < 0 || k > n || (k < 64 && prefix >> k != 0)) {
    throw Error(ErrorCode::kBadPrefix, "prefix does not fit in " + std::to_string(k) + " bits");
  }
  AmplitudeState s(n, Form::kPrefix);
  s.prefix_ = prefix;
  s.k_ = k;
  return s;
}

double AmplitudeState::prefix_amplitude() const {
  return std::pow(2.0, -0.5 * static_cast<double>(n_ - k_));
}

double AmplitudeState::amplitude(std::uint64_t x) const {
  if (x >= dimension()) throw Error(ErrorCode::kIndexOutOfRange, "basis index out of range");
  switch (form_) {
    case Form::kDense: return dense_[x];
    case Form::kSparse: {
      const auto it = sparse_.find(x);
      return it == sparse_.end() ? 0.0 : it->second;
    }
    case Form::kPrefix: return in_prefix(x) ? prefix_amplitude() : 0.0;
  }
  return 0.0;
}

double AmplitudeState::norm() const {
  double sq = 0.0;
  switch (form_) {
    case Form::kDense:
      for (double a : dense_) sq += a * a;
      break;
    case Form::kSparse:
      for (const auto& [x, a] : sparse_) sq += a * a;
      break;
    case Form::kPrefix: return 1.0;
  }
  return std::sqrt(sq);
}

std::vector<double> AmplitudeState::to_dense() const {
  if (n_ > kMaxDenseQubits) {
    throw Error(ErrorCode::kTooLarge, "dense states are limited to " +
                                          std::to_string(kMaxDenseQubits) + " qubits");
  }
  if (form_ == Form::kDense) return dense_;
  std::vector<double> out(dimension(), 0.0);
  if (form_ == Form::kSparse) {
    for (const auto& [x, a] : sparse_) out[x] = a;
  } else {
    const std::uint64_t lo = prefix_ << (n_ - k_);
    const std::uint64_t hi = (prefix_ + 1) << (n_ - k_);
    std::fill(out.begin() + static_cast<std::ptrdiff_t>(lo),
              out.begin() + static_cast<std::ptrdiff_t>(hi), prefix_amplitude());
  }
  return out;
}

std::vector<std::uint64_t> AmplitudeState::support() const {
  std::vector<std::uint64_t> out;
  if (form_ == Form::kSparse) {
    for (const auto& [x, a] : sparse_) {
      if (std::abs(a) > kZeroTolerance) out.push_back(x);
    }
    return out;
  }
  const auto amps = to_dense();
  for (std::uint64_t x = 0; x < amps.size(); ++x) {
    if (std::abs(amps[x]) > kZeroTolerance) out.push_back(x);
  }
  return out;
}

double inner_product(const AmplitudeState& a, const AmplitudeState& b) {
  using Form = AmplitudeState::Form;
  check_same_dimension(a, b);
  if (b.form_ == Form::kSparse && a.form_ != Form::kSparse) return inner_product(b, a);
  if (a.form_ == Form::kSparse) {
    double s = 0.0;
    for (const auto& [x, amp] : a.sparse_) s += amp * b.amplitude(x);
    return s;
  }
  if (a.form_ == Form::kPrefix && b.form_ == Form::kPrefix) {
    const AmplitudeState& shorter = a.k_ <= b.k_ ? a : b;
    const AmplitudeState& longer = a.k_ <= b.k_ ? b : a;
    if ((longer.prefix_ >> (longer.k_ - shorter.k_)) != shorter.prefix_) return 0.0;
    const double count = std::pow(2.0, static_cast<double>(a.n_ - longer.k_));
    return count * a.prefix_amplitude() * b.prefix_amplitude();
  }
  if (b.form_ == Form::kPrefix) return inner_product(b, a);
  if (a.form_ == Form::kPrefix) {
    const std::uint64_t lo = a.prefix_ << (a.n_ - a.k_);
    const std::uint64_t hi = (a.prefix_ + 1) << (a.n_ - a.k_);
    double s = 0.0;
    for (std::uint64_t x = lo; x < hi; ++x) s += b.dense_[x];
    return s * a.prefix_amplitude();
  }
  double s = 0.0;
  for (std::size_t x = 0; x < a.dense_.size(); ++x) s += a.dense_[x] * b.dense_[x];
  return s;
}

AmplitudeState make_uniform_state(int n) { return AmplitudeState::prefix(n, 0, 0); }

AmplitudeState make_prefix_state(int n, const std::string& bits) {
  const int k = static_cast<int>(bits.size());
  if (k > n) {
    throw Error(ErrorCode::kBadPrefix,
                "prefix of " + std::to_string(k) + " bits on " + std::to_string(n) + " qubits");
  }
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error(ErrorCode::kBadPrefix, "prefix must be a bit string");
    value = (value << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return AmplitudeState::prefix(n, value, k);
}

AmplitudeState apply_oracle(const AmplitudeState& state, const SearchOracle& oracle) {
  check_target(state, oracle);
  if (state.form() == AmplitudeState::Form::kSparse) {
    std::map<std::uint64_t, double> amps;
    for (std::uint64_t x : state.support()) amps[x] = state.amplitude(x);
    if (auto it = amps.find(oracle.target); it != amps.end()) it->second = -it->second;
    return AmplitudeState::sparse(state.qubits(), std::move(amps));
  }
  auto amps = state.to_dense();
  amps[oracle.target] = -amps[oracle.target];
  return AmplitudeState::dense(state.qubits(), std::move(amps));
}

AmplitudeState apply_mk(const AmplitudeState& state, const AmplitudeState& psi, int k) {
  check_same_dimension(state, psi);
  if (k < 0 || k > 62) throw Error(ErrorCode::kBadParameter, "M_k needs 0 <= k <= 62");
  const double scale = std::ldexp(1.0, k);
  const double overlap = scale * inner_product(psi, state);
  auto out = state.to_dense();
  const auto p = psi.to_dense();
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = overlap * p[x] - (scale - 1.0) * out[x];
  return AmplitudeState::dense(state.qubits(), std::move(out));
}

BitwiseResult qsearch_bitwise(int n, const SearchOracle& oracle) {
  check_qubits(n, kMaxQubits);
  const AmplitudeState t = AmplitudeState::basis(n, 0);
  check_target(t, oracle);
  const AmplitudeState target = AmplitudeState::basis(n, oracle.target);
  BitwiseResult out;
  std::string bits;
  for (int k = 1; k <= n; ++k) {
    double ip = inner_product(target, make_prefix_state(n, bits + '0'));
    ++out.inner_products;
    if (std::abs(ip) > kZeroTolerance) {
      bits += '0';
    } else {
      bits += '1';
      ip = inner_product(target, make_prefix_state(n, bits));
      ++out.inner_products;
    }
    out.trace.push_back({k, bits, ip});
  }
  out.target = make_prefix_state(n, bits).prefix_bits();
  return out;
}

double one_step_coefficient(int n) {
  return 2.0 * (std::ldexp(1.0, n - 1) - 1.0) / std::sqrt(std::ldexp(1.0, n));
}

AmplitudeState qsearch_one_step(int n, const SearchOracle& oracle) {
  check_qubits(n, kMaxDenseQubits);
  const AmplitudeState psi = make_uniform_state(n);
  return apply_mk(apply_oracle(psi, oracle), psi, n - 1);
}

AmplitudeState qsearch_nonunitary(int n, const SearchOracle& oracle) {
  check_qubits(n, kMaxDenseQubits);
  const AmplitudeState psi = make_uniform_state(n);
  const auto flipped = apply_oracle(psi, oracle).to_dense();
  auto out = psi.to_dense();
  const double scale = std::sqrt(std::ldexp(1.0, n)) / 2.0;
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = scale * (out[x] - flipped[x]);
  return AmplitudeState::dense(n, std::move(out));
}

std::uint64_t argmax_amplitude(const AmplitudeState& state) {
  const auto amps = state.to_dense();
  std::uint64_t best = 0;
  for (std::uint64_t x = 1; x < amps.size(); ++x) {
    if (std::abs(amps[x]) > std::abs(amps[best])) best = x;
  }
  return best;
}

BagSearchResult classical_bag_search(const std::vector<std::int64_t>& items,
                                     std::int64_t target) {
  // Indicator-vector inner product <e_t | 1_B>: 1 when t is in B.
  auto indicator = [target](const std::vector<std::int64_t>& bag) {
    return static_cast<int>(std::count(bag.begin(), bag.end(), target) > 0);
  };
  if (indicator(items) == 0) {
    throw Error(ErrorCode::kTargetAbsent, "target " + std::to_string(target) + " is not in the bag");
  }
  BagSearchResult out;
  std::vector<std::int64_t> bag = items;
  while (bag.size() > 1) {
    const auto half = static_cast<std::ptrdiff_t>((bag.size() + 1) / 2);
    std::vector<std::int64_t> first(bag.begin(), bag.begin() + half);
    std::vector<std::int64_t> second(bag.begin() + half, bag.end());
    const int hit = indicator(first);
    out.splits.push_back({first, hit});
    bag = hit ? std::move(first) : std::move(second);
  }
  out.target = bag.front();
  return out;
}

}  // namespace hamtsp
