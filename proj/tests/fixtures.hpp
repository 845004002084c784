#pragma once

#include <string>
#include <vector>

#include "hamtsp/core.hpp"
#include "oracles.hpp"

namespace fixtures {

inline std::string data_path(const std::string& file) {
  return std::string(HAMTSP_DATA_DIR) + "/" + file;
}

inline hamtsp::Instance k6() {
  return hamtsp::Instance::from_rows({{0, 2, 3, 4, 1, 1},
                                      {2, 0, 1, 3, 2, 3},
                                      {3, 1, 0, 4, 3, 4},
                                      {4, 3, 4, 0, 4, 3},
                                      {1, 2, 3, 4, 0, 2},
                                      {1, 3, 4, 3, 2, 0}},
                                     "k6");
}

inline hamtsp::Instance five_a() {
  return hamtsp::Instance::from_rows({{0, 1, 6, 8, 4},
                                      {1, 0, 8, 5, 6},
                                      {6, 8, 0, 9, 7},
                                      {8, 5, 9, 0, 8},
                                      {4, 6, 7, 8, 0}},
                                     "p5a");
}

inline hamtsp::Instance five_b() {
  return hamtsp::Instance::from_rows({{0, 11, 2, 5, 3},
                                      {11, 0, 1, 6, 3},
                                      {2, 1, 0, 12, 4},
                                      {5, 6, 12, 0, 8},
                                      {3, 3, 4, 8, 0}},
                                     "p5b");
}

inline hamtsp::Instance unit(int p) {
  std::vector<std::vector<double>> rows(p, std::vector<double>(p, 1.0));
  for (int i = 0; i < p; ++i) rows[i][i] = 0.0;
  return hamtsp::Instance::from_rows(rows);
}

inline oracle::Matrix matrix(const hamtsp::Instance& inst) {
  const int p = inst.size();
  oracle::Matrix w(p, std::vector<double>(p));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) w[i][j] = inst.weight(i, j);
  }
  return w;
}

// 1-based labels to 0-based vertices.
inline std::vector<hamtsp::Vertex> zero_based(std::vector<int> labels) {
  for (int& v : labels) --v;
  return labels;
}

inline std::vector<hamtsp::Edge> edges1(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<hamtsp::Edge> out;
  for (auto [a, b] : pairs) out.emplace_back(a - 1, b - 1);
  return out;
}

}  // namespace fixtures
