#include "hamtsp/core.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hamtsp/error.hpp"
#include "hamtsp/instance_io.hpp"
#include "oracles.hpp"

namespace hamtsp {
namespace {

using fixtures::zero_based;

std::vector<double> off_diagonal_multiset(const Instance& inst) {
  std::vector<double> out;
  for (int i = 0; i < inst.size(); ++i) {
    for (int j = i + 1; j < inst.size(); ++j) out.push_back(inst.weight(i, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(TourWeightTest, KnownTours) {
  EXPECT_EQ(tour_weight(fixtures::k6(), zero_based({1, 2, 3, 4, 6, 5}), Mode::kCircuit), 13);
  EXPECT_EQ(tour_weight(fixtures::unit(3), zero_based({2, 3, 1}), Mode::kCircuit), 3);
  EXPECT_EQ(tour_weight(fixtures::five_a(), zero_based({1, 2, 4, 5, 3}), Mode::kPath), 21);
  EXPECT_EQ(tour_weight(fixtures::five_a(), zero_based({1, 2, 3, 4, 5}), Mode::kPath), 26);
}

TEST(TourWeightTest, RejectsNonPermutations) {
  const Instance inst = fixtures::five_a();
  for (const auto& order : {zero_based({1, 2, 2, 4, 5}), zero_based({1, 2, 3, 4}),
                            zero_based({1, 2, 3, 4, 6})}) {
    try {
      tour_weight(inst, order, Mode::kCircuit);
      FAIL() << "expected NotAPermutation";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotAPermutation);
    }
  }
}

TEST(TourWeightTest, CircuitIsPathPlusClosingEdge) {
  const Instance inst = gen_random_instance(7, 7, InstanceKind::kUniform, 50);
  std::vector<Vertex> order = {0, 1, 2, 3, 4, 5, 6};
  do {
    const double path = tour_weight(inst, order, Mode::kPath);
    EXPECT_EQ(tour_weight(inst, order, Mode::kCircuit), path + inst.weight(order.back(), order[0]));
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(TranspositionTest, IdentityAndInvolution) {
  const Instance inst = gen_random_instance(3, 6, InstanceKind::kEuclidean, 100);
  EXPECT_EQ(apply_transposition(inst, 2, 2), inst);
  EXPECT_EQ(apply_transposition(apply_transposition(inst, 1, 4), 1, 4), inst);
  EXPECT_EQ(apply_transposition(inst, 1, 4).coords()[1], inst.coords()[4]);
}

TEST(TranspositionTest, SwapsRowsAndColumns) {
  const Instance swapped = apply_transposition(fixtures::five_a(), 2, 3);
  const Instance want = Instance::from_rows({{0, 1, 8, 6, 4},
                                             {1, 0, 5, 8, 6},
                                             {8, 5, 0, 9, 8},
                                             {6, 8, 9, 0, 7},
                                             {4, 6, 8, 7, 0}});
  EXPECT_EQ(swapped, want);
}

TEST(TranspositionTest, OutOfRange) {
  try {
    apply_transposition(fixtures::five_a(), 0, 5);
    FAIL() << "expected IndexOutOfRange";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
}

TEST(TranspositionTest, PreservesWeightsAndOptimum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = 4 + trial % 4;
    Instance inst = gen_random_instance(100 + trial, p, InstanceKind::kUniform, 30);
    const auto weights = off_diagonal_multiset(inst);
    const double best = oracle::best_circuit(fixtures::matrix(inst));
    std::uniform_int_distribution<int> pick(0, p - 1);
    for (int step = 0; step < 5; ++step) {
      inst = apply_transposition(inst, pick(rng), pick(rng));
      EXPECT_EQ(off_diagonal_multiset(inst), weights);
      EXPECT_EQ(oracle::best_circuit(fixtures::matrix(inst)), best);
    }
  }
}

TEST(OwalTest, FiveVertexEnds) {
  const Owal owal = build_owal(fixtures::five_a());
  ASSERT_EQ(owal.size(), 10u);
  EXPECT_EQ(owal.front().weight, 1);
  EXPECT_EQ(owal.front().edge, Edge(0, 1));
  EXPECT_EQ(owal.back().weight, 9);
  EXPECT_EQ(owal.back().edge, Edge(2, 3));
}

TEST(OwalTest, TiesAreLexicographic) {
  const Owal owal = build_owal(fixtures::unit(3));
  ASSERT_EQ(owal.size(), 3u);
  EXPECT_EQ(owal[0].edge, Edge(0, 1));
  EXPECT_EQ(owal[1].edge, Edge(0, 2));
  EXPECT_EQ(owal[2].edge, Edge(1, 2));
}

TEST(OwalTest, K6UnitWeightEdges) {
  const Owal owal = build_owal(fixtures::k6());
  ASSERT_EQ(owal.size(), 15u);
  std::vector<Edge> ones;
  for (const auto& e : owal) {
    if (e.weight == 1) ones.push_back(e.edge);
  }
  EXPECT_EQ(ones, fixtures::edges1({{1, 5}, {1, 6}, {2, 3}}));
}

TEST(OwalTest, SortedAndComplete) {
  for (int seed = 0; seed < 20; ++seed) {
    const Instance inst = gen_random_instance(seed, 8, InstanceKind::kUniform, 10);
    const Owal owal = build_owal(inst);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < owal.size(); ++i) {
      if (i) EXPECT_LE(owal[i - 1].weight, owal[i].weight);
      EXPECT_EQ(owal[i].weight, inst.weight(owal[i].edge.u, owal[i].edge.v));
      edges.push_back(owal[i].edge);
    }
    std::sort(edges.begin(), edges.end());
    EXPECT_EQ(std::adjacent_find(edges.begin(), edges.end()), edges.end());
    EXPECT_EQ(edges.size(), 28u);
  }
}

TEST(ValidateSublistTest, Examples) {
  EXPECT_TRUE(validate_sublist(5, fixtures::edges1({{1, 2}, {1, 5}, {2, 4}, {3, 5}}), Mode::kPath));
  EXPECT_TRUE(validate_sublist(5, fixtures::edges1({{1, 2}, {1, 5}, {2, 4}, {3, 5}, {3, 4}}),
                               Mode::kCircuit));
  EXPECT_FALSE(validate_sublist(5, fixtures::edges1({{1, 2}, {2, 3}, {1, 3}, {4, 5}}), Mode::kPath));
  EXPECT_FALSE(validate_sublist(5, {}, Mode::kCircuit));
  EXPECT_FALSE(validate_sublist(4, fixtures::edges1({{1, 2}, {1, 2}, {3, 4}}), Mode::kPath));
  EXPECT_FALSE(validate_sublist(4, fixtures::edges1({{1, 2}, {2, 3}, {3, 9}}), Mode::kPath));
}

TEST(ValidateSublistTest, AgreesWithCycleEnumerationOnK5) {
  std::vector<Edge> all;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) all.emplace_back(a, b);
  }
  int cycles = 0;
  for (int mask = 0; mask < (1 << 10); ++mask) {
    if (__builtin_popcount(mask) != 5) continue;
    std::vector<Edge> pick;
    std::vector<oracle::Pair> pairs;
    for (int i = 0; i < 10; ++i) {
      if (mask >> i & 1) {
        pick.push_back(all[i]);
        pairs.push_back({all[i].u, all[i].v});
      }
    }
    const bool want = oracle::is_cycle_edge_set(5, pairs);
    EXPECT_EQ(validate_sublist(5, pick, Mode::kCircuit), want);
    cycles += want;
  }
  EXPECT_EQ(cycles, 12);  // (5-1)!/2 distinct circuits
}

TEST(SublistToOrderTest, Examples) {
  EXPECT_EQ(sublist_to_order(5, fixtures::edges1({{1, 2}, {1, 5}, {2, 4}, {3, 5}}), Mode::kPath),
            zero_based({3, 5, 1, 2, 4}));
  EXPECT_EQ(sublist_to_order(5, fixtures::edges1({{1, 2}, {1, 5}, {2, 4}, {3, 5}, {3, 4}}),
                             Mode::kCircuit),
            zero_based({1, 2, 4, 3, 5}));
  EXPECT_EQ(sublist_to_order(3, fixtures::edges1({{1, 2}, {2, 3}, {1, 3}}), Mode::kCircuit),
            zero_based({1, 2, 3}));
}

TEST(SublistToOrderTest, Infeasible) {
  try {
    sublist_to_order(5, fixtures::edges1({{1, 2}, {2, 3}, {1, 3}, {4, 5}}), Mode::kPath);
    FAIL() << "expected InfeasibleSublist";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleSublist);
  }
}

TEST(CanonicalTest, CircuitAndPath) {
  EXPECT_EQ(canonical_circuit(zero_based({3, 4, 1, 5, 2})), zero_based({1, 4, 3, 2, 5}));
  EXPECT_EQ(canonical_path(zero_based({4, 2, 1, 5, 3})), zero_based({3, 5, 1, 2, 4}));
}

TEST(GenerateTest, DeterministicInSeed) {
  for (auto kind : {InstanceKind::kUniform, InstanceKind::kEuclidean}) {
    EXPECT_EQ(gen_random_instance(42, 8, kind, 100), gen_random_instance(42, 8, kind, 100));
    EXPECT_NE(gen_random_instance(42, 8, kind, 100), gen_random_instance(43, 8, kind, 100));
  }
}

TEST(GenerateTest, EuclideanIsMetric) {
  for (int seed = 0; seed < 10; ++seed) {
    const Instance inst = gen_random_instance(seed, 9, InstanceKind::kEuclidean, 100);
    for (int i = 0; i < 9; ++i) {
      for (int j = 0; j < 9; ++j) {
        for (int k = 0; k < 9; ++k) {
          EXPECT_LE(inst.weight(i, k), inst.weight(i, j) + inst.weight(j, k) + 1e-5);
        }
      }
    }
  }
}

TEST(GenerateTest, UniformIsSymmetricIntegral) {
  const Instance inst = gen_random_instance(5, 9, InstanceKind::kUniform, 20);
  for (int i = 0; i < 9; ++i) {
    EXPECT_EQ(inst.weight(i, i), 0);
    for (int j = 0; j < 9; ++j) {
      EXPECT_EQ(inst.weight(i, j), inst.weight(j, i));
      if (i != j) {
        EXPECT_GE(inst.weight(i, j), 1);
        EXPECT_LE(inst.weight(i, j), 20);
        EXPECT_EQ(inst.weight(i, j), std::floor(inst.weight(i, j)));
      }
    }
  }
}

TEST(GenerateTest, RejectsTinyP) {
  try {
    gen_random_instance(1, 2, InstanceKind::kUniform, 10);
    FAIL() << "expected BadParameter";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadParameter);
  }
}

TEST(TriangularSumTest, Examples) {
  EXPECT_EQ(triangular_sum(Instance::from_rows({{0, 1, 8, 4, 6},
                                                {1, 0, 5, 6, 8},
                                                {8, 5, 0, 8, 9},
                                                {4, 6, 8, 0, 7},
                                                {6, 8, 9, 7, 0}})),
            41);
  EXPECT_EQ(triangular_sum(Instance::from_rows({{0, 5, 8, 8, 9},
                                                {5, 0, 1, 6, 8},
                                                {8, 1, 0, 4, 6},
                                                {8, 6, 4, 0, 7},
                                                {9, 8, 6, 7, 0}})),
            45);
  EXPECT_EQ(triangular_sum(Instance::from_rows({{0, 2, 7}, {2, 0, 3}, {7, 3, 0}})), 7);
}

TEST(InstanceTest, RejectsAsymmetryAndBadDiagonal) {
  try {
    Instance::from_rows({{0, 1, 2}, {1, 0, 3}, {2, 3.5, 0}});
    FAIL() << "expected SymmetryViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSymmetryViolation);
  }
  EXPECT_THROW(Instance::from_rows({{1, 1, 2}, {1, 0, 3}, {2, 3, 0}}), Error);
  EXPECT_THROW(Instance::from_rows({{0, -1, 2}, {-1, 0, 3}, {2, 3, 0}}), Error);
  EXPECT_NO_THROW(Instance::from_rows({{0, 1, 2}, {1 + 1e-12, 0, 3}, {2, 3, 0}}));
}

TEST(InstanceIoTest, ParsesMatrixAndEuclidean) {
  std::istringstream matrix("# comment\n3\n0 1 2\n1 0 3\n2 3 0\n");
  const Instance a = parse_instance(matrix);
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.weight(1, 2), 3);
  std::istringstream euc("EUC2D\n4\n0 0\n1 0\n1 1\n0 1\n");
  const Instance b = parse_instance(euc);
  EXPECT_TRUE(b.has_coords());
  EXPECT_EQ(b.weight(0, 2), std::round(std::sqrt(2.0) * 1e6) / 1e6);
}

TEST(InstanceIoTest, RejectsMalformed) {
  for (const char* text : {"", "3\n0 1\n", "x\n", "3\n0 1 2\n1 0 3\n2 4 0\n", "EUC2D\n3\n0 0\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_instance(in), Error) << text;
  }
  std::istringstream asym("3\n0 1 2\n1 0 3\n2 4 0\n");
  try {
    parse_instance(asym);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSymmetryViolation);
  }
}

TEST(InstanceIoTest, RoundTrips) {
  for (auto kind : {InstanceKind::kUniform, InstanceKind::kEuclidean}) {
    const Instance inst = gen_random_instance(9, 7, kind, 100);
    std::stringstream buf;
    write_instance(buf, inst);
    EXPECT_EQ(parse_instance(buf), inst);
  }
}

TEST(InstanceIoTest, ReadsDataFiles) {
  EXPECT_EQ(read_instance_file(fixtures::data_path("k6.txt")), fixtures::k6());
  EXPECT_EQ(read_instance_file(fixtures::data_path("p5a.txt")), fixtures::five_a());
  EXPECT_EQ(read_instance_file(fixtures::data_path("p5b.txt")), fixtures::five_b());
  EXPECT_EQ(read_instance_file(fixtures::data_path("k6.txt")).name(), "k6");
  try {
    read_instance_file(fixtures::data_path("missing.txt"));
    FAIL() << "expected IoError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
}

}  // namespace
}  // namespace hamtsp
