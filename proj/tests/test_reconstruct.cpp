#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "phyres/random.hpp"
#include "phyres/reconstruct.hpp"
#include "phyres/wye_delta.hpp"

using namespace phyres;

namespace {

Split sp(int n, std::vector<int> side) { return Split::from_side(n, side); }

const std::vector<double> kRoundedRing = {3.99, 4.96, 6.41, 6.41, 6.84, 3.99, 2.99, 4.46, 4.46, 4.91, 3.96,
                                   3.49, 3.49, 3.96, 4.91, 1,    3.49, 6.34, 3.49, 6.34, 6.75};

}  // namespace

TEST(Decomposition, StarMetric) {
  // d(i,j) = w_i + w_j
  std::vector<Rational> w = {0, 1, Rational(5, 2), 3, 7, 2};
  DistanceVector<Rational> d(5);
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) d.set(i, j, w[i] + w[j]);
  }
  auto res = circular_decomposition(d, CircularOrder::identity(5));
  EXPECT_EQ(res.residual, 0);
  ASSERT_EQ(res.system.system.weights.size(), 5u);
  for (int l = 1; l <= 5; ++l) EXPECT_EQ(res.system.system.weights.at(Split::trivial(5, l)), w[l]);
}

TEST(Decomposition, QuartetTree) {
  auto net = fixtures::quartet(5);
  auto res = circular_decomposition(resistance_vector<Rational>(net), CircularOrder::identity(4));
  EXPECT_EQ(res.system.system.weights.size(), 5u);
  EXPECT_EQ(res.system.system.weights.at(sp(4, {1, 2})), 5);
  EXPECT_EQ(res.residual, 0);
}

TEST(Decomposition, RoundedRingVector) {
  DistanceVector<double> d(7, kRoundedRing);
  auto res = circular_decomposition(d, CircularOrder::identity(7));
  auto w = res.system.system.weights;
  ASSERT_TRUE(w.count(sp(7, {1, 2, 3, 7})));
  EXPECT_NEAR(w.at(sp(7, {4, 5, 6})), 0.95, 0.02);
  EXPECT_LT(res.residual, 1e-9);
}

TEST(Decomposition, RejectsNonKalmanson) {
  auto d = resistance_vector<Rational>(fixtures::k33());
  try {
    circular_decomposition(d, CircularOrder::identity(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotKalmanson);
  }
  auto clamped = circular_decomposition(convert<double>(d), CircularOrder::identity(6), {1e-9, true});
  EXPECT_GT(clamped.residual, 0.0);
}

TEST(RW, TreeIsIdentity) {
  auto net = fixtures::quartet(Rational(3, 2));
  auto s = r_w<Rational>(net);
  EXPECT_EQ(s.system.weights.at(sp(4, {1, 2})), Rational(3, 2));
  EXPECT_EQ(s.system.weights.at(Split::trivial(4, 3)), 1);
  EXPECT_EQ(s.system, s_w<Rational>(net).system);
}

TEST(RW, UnitSquare) {
  auto s = r_w<Rational>(fixtures::unit_square());
  EXPECT_EQ(s.system.weights.size(), 6u);
  EXPECT_EQ(s.system.weights.at(sp(4, {1, 2})), Rational(1, 4));
  EXPECT_EQ(s.system.weights.at(sp(4, {1, 4})), Rational(1, 4));
  // pendant 1 plus the adjacent cycle pair 1*1/4
  for (int l = 1; l <= 4; ++l) EXPECT_EQ(s.system.weights.at(Split::trivial(4, l)), Rational(5, 4));
  EXPECT_TRUE(is_faithfully_phylogenetic(s));
}

TEST(RW, DirectFormulaOnHeavyRing) {
  // 6-cycle (95,1,1,1,1,1): the pair 95 / 1 cutting off {4,5,6} gives 95/100
  auto net = fixtures::ring({1, 1, 95, 1, 1, 1});
  auto direct = r_w_direct<Rational>(net);
  EXPECT_EQ(direct.system.weights.at(sp(6, {4, 5, 6})), Rational(95, 100));
  EXPECT_EQ(direct.system, r_w<Rational>(net).system);
}

TEST(RW, BridgeAndCyclePairShareASplit) {
  // cherry {4,5} hangs from the ring by a bridge: its split is displayed by the
  // bridge and by the adjacent ring pair
  auto net = fixtures::heavy_ring_network();
  auto direct = r_w_direct<Rational>(net);
  // bridge 1 + 1*1/100
  EXPECT_EQ(direct.system.weights.at(sp(7, {4, 5})), Rational(101, 100));
  EXPECT_EQ(direct.system, r_w<Rational>(net).system);
}

TEST(RW, HeavyEdgeDropsFromMinPath) {
  auto net = fixtures::ring({1, 1, 95, 1, 1, 1});
  auto r = r_w<Rational>(net).system;
  auto s = s_w<Rational>(net).system;
  // shortest paths never use the 95 edge: the ring acts as the path 4-5-6-1-2-3,
  // so {1,2} (cut by edges 6-1 and 2-3) is lost
  EXPECT_TRUE(r.weights.count(sp(6, {1, 2})));
  EXPECT_FALSE(s.weights.count(sp(6, {1, 2})));
  EXPECT_EQ(s.weights.at(sp(6, {4, 5, 6})), 1);
  EXPECT_GT(r.weights.size(), s.weights.size());
}

TEST(RW, UniqueAcrossOrders) {
  Random rng(3);
  for (int t = 0; t < 20; ++t) {
    auto net = random_one_nested(rng, rng.uniform(4, 7));
    auto d = resistance_vector<Rational>(net);
    auto first = circular_decomposition(d, consistent_orders(net).front()).system.system;
    for (const auto& o : consistent_orders(net)) EXPECT_EQ(circular_decomposition(d, o).system.system, first);
  }
}

TEST(RW, WyeDeltaPairIsIndistinguishable) {
  auto star = NetworkBuilder()
                  .pendant(1, "a").pendant(2, "a").pendant(3, "b").pendant(4, "b").pendant(5, "c").pendant(6, "c")
                  .edge("a", "y", 2).edge("b", "y", 3).edge("c", "y", 5)
                  .build();
  auto tri = y_to_delta(star, "y");
  EXPECT_EQ(r_w<Rational>(star).system, r_w<Rational>(tri).system);
}

TEST(SW, OuterPathOnImages) {
  Random rng(9);
  for (int t = 0; t < 30; ++t) {
    auto net = random_one_nested(rng, rng.uniform(4, 8));
    auto s = s_w<Rational>(net);
    EXPECT_TRUE(is_outer_path(s));
    EXPECT_EQ(s_w<Rational>(weighted_exterior_network(s)).system, s.system);
  }
}

TEST(Invert, Tree) {
  auto net = fixtures::quartet(Rational(7, 3));
  auto back = invert_to_network(r_w<Rational>(net));
  EXPECT_EQ(resistance_vector<Rational>(back), resistance_vector<Rational>(net));
}

TEST(Invert, UnitSquare) {
  auto back = invert_to_network(r_w<Rational>(fixtures::unit_square()));
  for (const auto& e : back.edges()) EXPECT_EQ(e.weight, 1);
  EXPECT_EQ(back.edge_count(), 8);
}

TEST(Invert, HeavyRingExact) {
  auto net = fixtures::ring({1, 1, 95, 1, 1, 1});
  auto back = invert_to_network(r_w_direct<Rational>(net));
  EXPECT_EQ(resistance_vector<Rational>(back), resistance_vector<Rational>(net));
  std::multiset<Rational> w;
  for (const auto& e : back.edges()) w.insert(e.weight);
  EXPECT_EQ(w, (std::multiset<Rational>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 95}));
}

TEST(Invert, HeavyRingNetworkFloat) {
  auto net = fixtures::heavy_ring_network();
  auto back = invert_to_network(r_w<double>(net));
  EXPECT_LT(max_abs_difference(resistance_vector<double>(back), resistance_vector<double>(net)), 1e-9);
}

TEST(Invert, RandomRoundTrips) {
  Random rng(21);
  int exact = 0;
  for (int t = 0; t < 40; ++t) {
    auto net = random_one_nested(rng, rng.uniform(4, 8));
    auto s = r_w<double>(net);
    // float mode reproduces the split system; a 4-cycle may come back with a
    // different (equally valid) weighting
    try {
      auto back = invert_to_network(s);
      EXPECT_LT(max_abs_difference(resistance_vector<double>(back), resistance_vector<double>(net)), 1e-7);
      ++exact;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
    }
  }
  EXPECT_GT(exact, 20);
}

TEST(Invert, NotFaithful) {
  CircularSplitSystem<Rational> s;
  s.order = CircularOrder::identity(5);
  s.system.n = 5;
  for (int l = 1; l <= 5; ++l) s.system.weights[Split::trivial(5, l)] = 1;
  s.system.weights[sp(5, {1, 2})] = 1;
  s.system.weights[sp(5, {2, 3})] = 1;
  s.system.weights[sp(5, {3, 4})] = 1;
  try {
    invert_to_network(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
  }
}
