#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "phyres/consistent_orders.hpp"
#include "phyres/kalmanson.hpp"
#include "phyres/min_path.hpp"
#include "phyres/resistance.hpp"

using namespace phyres;

namespace {

DistanceVector<Rational> rational_vector(int n, const std::vector<std::string>& text) {
  std::vector<Rational> v;
  for (const auto& t : text) v.push_back(parse_rational(t));
  return DistanceVector<Rational>(n, v);
}

const std::vector<std::string> kSevenLeafKalmanson = {"4", "5", "6.5", "6.5", "7", "4", "3", "4.5", "4.5", "5", "4",
                                        "3.5", "3.5", "4", "5", "1", "3.5", "6.5", "3.5", "6.5", "7"};

}  // namespace

TEST(DistanceVectorTest, LexicographicIndex) {
  EXPECT_EQ(DistanceVector<double>::index(4, 1, 2), 0);
  EXPECT_EQ(DistanceVector<double>::index(4, 3, 4), 5);
  EXPECT_EQ(DistanceVector<double>::index(4, 4, 2), 4);
  EXPECT_THROW(DistanceVector<double>(4, {1, 2, 3}), Error);
}

TEST(Resistance, SeriesParallelSquare) {
  // pendants 1, the two 2-paths in parallel give 1: 1 + 1 + 1
  auto d = resistance_vector<Rational>(fixtures::unit_square());
  EXPECT_EQ(d(1, 3), 3);
  EXPECT_EQ(d(2, 4), 3);
  // adjacent corners: 1 in parallel with 3 is 3/4
  EXPECT_EQ(d(1, 2), Rational(11, 4));
}

TEST(Resistance, SingleEdge) {
  auto net = NetworkBuilder().leaf(1, "a").leaf(2, "b").edge("a", "b", Rational(7, 3)).build();
  EXPECT_EQ(resistance_vector<Rational>(net)(1, 2), Rational(7, 3));
  EXPECT_NEAR(resistance_vector<double>(net)(1, 2), 7.0 / 3.0, 1e-12);
}

TEST(Resistance, K33Values) {
  auto d = resistance_vector<Rational>(fixtures::k33());
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      bool same = (i <= 3) == (j <= 3);
      EXPECT_EQ(d(i, j), same ? Rational(8, 3) : Rational(23, 9)) << i << "," << j;
    }
  }
}

TEST(Resistance, ZeroWeightRejected) {
  auto net = fixtures::ring({1, 0, 1, 1});
  try {
    resistance_vector<double>(net);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroWeightEdge);
  }
}

TEST(Resistance, FloatMatchesExact) {
  auto net = fixtures::heavy_ring_network();
  auto exact = resistance_vector<Rational>(net);
  auto approx = resistance_vector<double>(net);
  EXPECT_LT(max_abs_difference(convert<double>(exact), approx), 1e-9);
}

TEST(Reduction, AgreesWithLaplacian) {
  for (const auto& net : {fixtures::unit_square(), fixtures::chorded_square(), fixtures::binary_theta(),
                          fixtures::heavy_ring_network(), fixtures::ring({2, 3, 5, 7, 11}, Rational(1, 3))}) {
    auto d = resistance_vector<Rational>(net);
    for (int i = 1; i <= net.leaf_count(); ++i) {
      for (int j = i + 1; j <= net.leaf_count(); ++j) {
        EXPECT_EQ(resistance_by_reduction<Rational>(net, i, j), d(i, j));
      }
    }
  }
}

TEST(Reduction, K33IsOutsideTheRules) {
  // level > 2: every step that applies is taken, and the same-part pairs get
  // stuck rather than guessed
  auto net = fixtures::k33();
  auto d = resistance_vector<Rational>(net);
  int stuck = 0;
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      try {
        EXPECT_EQ(resistance_by_reduction<Rational>(net, i, j), d(i, j));
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ReductionStuck);
        ++stuck;
      }
    }
  }
  EXPECT_GT(stuck, 0);
}

TEST(Reduction, SquareOppositeCorners) {
  EXPECT_EQ(resistance_by_reduction<Rational>(fixtures::unit_square(), 1, 3), 3);
  EXPECT_DOUBLE_EQ(resistance_by_reduction<double>(fixtures::unit_square(), 1, 3), 3.0);
}

TEST(Reduction, RoundedRingVector) {
  // the resistance vector rounded to two decimals
  const std::vector<double> rounded = {3.99, 4.96, 6.41, 6.41, 6.84, 3.99, 2.99, 4.46, 4.46, 4.91, 3.96,
                                       3.49, 3.49, 3.96, 4.91, 1,    3.49, 6.34, 3.49, 6.34, 6.75};
  auto d = resistance_vector<double>(fixtures::heavy_ring_network());
  for (std::size_t i = 0; i < rounded.size(); ++i) EXPECT_NEAR(d.entries()[i], rounded[i], 0.0051) << i;
}

TEST(PairwiseCircuit, TreeIsPath) {
  auto net = fixtures::quartet();
  auto c = pairwise_circuit(net, 1, 3);
  EXPECT_EQ(c.edges.size(), 3u);
  EXPECT_EQ(c.blocks.size(), 3u);
  auto same = pairwise_circuit(net, 1, 2);
  EXPECT_EQ(same.edges.size(), 2u);
}

TEST(PairwiseCircuit, CycleIncluded) {
  auto net = fixtures::heavy_ring_network();
  auto c = pairwise_circuit(net, 4, 1);
  // pendant 4, bridge, whole 6-cycle, pendant 1
  EXPECT_EQ(c.edges.size(), 9u);
  EXPECT_EQ(pairwise_circuit(net, 4, 5).edges.size(), 2u);
}

TEST(MinPath, SquareSides) {
  auto net = fixtures::ring({2, 3, 4, 9}, 0);
  auto d = min_path_vector<Rational>(net);
  EXPECT_EQ(d(1, 3), 5);   // min(2+3, 4+9)
  EXPECT_EQ(d(1, 4), 9);   // min(9, 2+3+4)
  EXPECT_EQ(d(2, 4), 7);   // min(3+4, 2+9)
}

TEST(MinPath, EqualsResistanceOnTrees) {
  auto net = fixtures::quartet(Rational(5, 2));
  EXPECT_EQ(min_path_vector<Rational>(net), resistance_vector<Rational>(net));
}

TEST(Kalmanson, StarMetricAllEqualities) {
  DistanceVector<Rational> d(5, std::vector<Rational>(10, Rational(2)));
  auto r = is_kalmanson(d, CircularOrder::identity(5));
  EXPECT_TRUE(r.kalmanson());
  EXPECT_EQ(r.equalities, 5);
}

TEST(Kalmanson, SevenLeafVector) {
  auto r = is_kalmanson(rational_vector(7, kSevenLeafKalmanson), CircularOrder::identity(7));
  EXPECT_TRUE(r.kalmanson());
  EXPECT_EQ(r.equalities, 35);
}

TEST(Kalmanson, VacuousBelowFour) {
  DistanceVector<double> d(3, {1, 5, 1});
  EXPECT_TRUE(is_kalmanson(d, CircularOrder::identity(3)).kalmanson());
  EXPECT_THROW(is_kalmanson(d, CircularOrder::identity(4)), Error);
}

TEST(Kalmanson, K33HasNoOrder) {
  auto d = resistance_vector<Rational>(fixtures::k33());
  for (const auto& o : all_circular_orders(6)) {
    auto r = is_kalmanson(d, o);
    EXPECT_FALSE(r.kalmanson());
    EXPECT_EQ(r.max_violation, Rational(2, 9));
  }
  auto search = find_kalmanson_order(d, OrderSearch::Exact);
  EXPECT_FALSE(search.order.has_value());
  EXPECT_EQ(search.orders_examined, 60);
  EXPECT_EQ(search.best_max_violation, Rational(2, 9));
  try {
    require_kalmanson_order(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFound);
  }
}

TEST(Kalmanson, FloatTolerance) {
  DistanceVector<double> d(4, {2, 2 + 1e-12, 2, 2, 2, 2});
  // d13 + d24 is the bound; nudging d12 + d34 above it by 1e-12
  EXPECT_TRUE(is_kalmanson(d, CircularOrder::identity(4)).kalmanson());
  DistanceVector<double> e(4, {2 + 1e-12, 2, 2, 2, 2, 2});
  EXPECT_TRUE(is_kalmanson(e, CircularOrder::identity(4)).kalmanson());
  EXPECT_FALSE(is_kalmanson(e, CircularOrder::identity(4), 1e-14).kalmanson());
}

TEST(OrderSearch, FindsConsistentOrder) {
  auto net = fixtures::heavy_ring_network();
  auto d = resistance_vector<Rational>(net);
  auto orders = consistent_orders(net);
  for (auto mode : {OrderSearch::Exact, OrderSearch::Heuristic}) {
    auto res = find_kalmanson_order(d, mode);
    ASSERT_TRUE(res.order.has_value());
    EXPECT_TRUE(std::find(orders.begin(), orders.end(), *res.order) != orders.end()) << res.order->str();
  }
}

TEST(OrderSearch, SmallAndLarge) {
  DistanceVector<double> d3(3, {1, 2, 3});
  auto r = find_kalmanson_order(d3, OrderSearch::Exact);
  ASSERT_TRUE(r.order);
  EXPECT_EQ(r.order->str(), "1,2,3");
  DistanceVector<double> d10(10);
  EXPECT_THROW(find_kalmanson_order(d10, OrderSearch::Exact), Error);
  EXPECT_TRUE(find_kalmanson_order(d10, OrderSearch::Heuristic).order.has_value());
}

TEST(OrderSearch, HeuristicRecoversRingOrder) {
  // 10 leaves: exact search is out of range, the heuristic must find the ring
  std::vector<Rational> sides = {1, 2, 3, 1, 2, 3, 1, 2, 3, 4};
  auto net = fixtures::ring(sides);
  auto d = resistance_vector<double>(net);
  auto res = find_kalmanson_order(d, OrderSearch::Heuristic);
  ASSERT_TRUE(res.order.has_value());
  EXPECT_EQ(res.order->str(), "1,2,3,4,5,6,7,8,9,10");
}
