#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "phyres/blocks.hpp"
#include "phyres/consistent_orders.hpp"
#include "phyres/resistance.hpp"
#include "phyres/wye_delta.hpp"

using namespace phyres;

namespace {

ErrorCode error_of(const NetworkBuilder& b) {
  try {
    b.build();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a validation error";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Validate, StarIsValid) {
  auto net = fixtures::star(4);
  EXPECT_EQ(net.leaf_count(), 4);
  EXPECT_EQ(net.node_count(), 5);
  EXPECT_EQ(net.edge_count(), 4);
}

TEST(Validate, Rejections) {
  // two internal nodes of degree 2
  EXPECT_EQ(error_of(NetworkBuilder().pendant(1, "u").pendant(2, "v").edge("u", "v")), ErrorCode::InternalDegreeTooLow);
  EXPECT_EQ(error_of(NetworkBuilder().pendant(1, "c").pendant(2, "c").pendant(3, "c").edge("c", "L1")),
            ErrorCode::MultiEdge);
  EXPECT_EQ(error_of(NetworkBuilder().pendant(1, "c").pendant(2, "c").pendant(3, "c", -1)), ErrorCode::NegativeWeight);
  EXPECT_EQ(error_of(NetworkBuilder().pendant(1, "c").pendant(2, "c").pendant(3, "c").pendant(4, "d").pendant(5, "d")
                         .pendant(6, "d")),
            ErrorCode::Disconnected);
  EXPECT_EQ(error_of(NetworkBuilder().pendant(1, "c").pendant(2, "c").pendant(4, "c")), ErrorCode::BadLeafLabels);
  EXPECT_EQ(error_of(NetworkBuilder().pendant(1, "c").pendant(2, "c").pendant(3, "c").edge("c", "x")),
            ErrorCode::BadLeafDegree);
  EXPECT_EQ(error_of(NetworkBuilder().pendant(1, "c").pendant(2, "c").pendant(3, "c").edge("c", "c")),
            ErrorCode::SelfLoop);
}

TEST(Validate, TwoLeavesOneEdge) {
  auto net = NetworkBuilder().leaf(1, "a").leaf(2, "b").edge("a", "b", 3).build();
  EXPECT_EQ(net.edge_count(), 1);
}

TEST(Classify, Levels) {
  auto tree = classify(fixtures::quartet());
  EXPECT_EQ(tree.level, 0);
  EXPECT_TRUE(tree.triangle_free);

  auto square = classify(fixtures::unit_square());
  EXPECT_EQ(square.level, 1);
  EXPECT_TRUE(square.triangle_free);

  auto theta = classify(fixtures::chorded_square());
  EXPECT_EQ(theta.level, 2);
  EXPECT_FALSE(theta.triangle_free);

  auto binary = classify(fixtures::binary_theta());
  EXPECT_EQ(binary.level, 2);
  EXPECT_TRUE(binary.triangle_free);

  EXPECT_EQ(classify(fixtures::k33()).level, kLevelHigher);
}

TEST(Classify, ThetaPaths) {
  auto c = classify(fixtures::binary_theta());
  auto it = std::find_if(c.blocks.blocks.begin(), c.blocks.blocks.end(),
                         [](const Block& b) { return b.kind == BlockKind::Theta; });
  ASSERT_NE(it, c.blocks.blocks.end());
  ASSERT_EQ(it->paths.size(), 3u);
  std::multiset<std::size_t> lengths;
  for (const auto& p : it->paths) lengths.insert(p.size());
  EXPECT_EQ(lengths, (std::multiset<std::size_t>{2, 4, 4}));
}

TEST(Classify, BlocksPartitionEdges) {
  for (const auto& net : {fixtures::quartet(), fixtures::unit_square(), fixtures::k33(), fixtures::heavy_ring_network()}) {
    auto bd = decompose_blocks(net);
    std::vector<int> count(net.edge_count(), 0);
    for (const auto& b : bd.blocks) {
      for (int e : b.edges) ++count[e];
    }
    EXPECT_TRUE(std::all_of(count.begin(), count.end(), [](int c) { return c == 1; }));
  }
}

TEST(Bridges, Counts) {
  auto q = bridges(fixtures::quartet());
  EXPECT_EQ(q.trivial.size(), 4u);
  EXPECT_EQ(q.nontrivial.size(), 1u);
  auto s = bridges(fixtures::unit_square());
  EXPECT_EQ(s.trivial.size(), 4u);
  EXPECT_EQ(s.nontrivial.size(), 0u);
  EXPECT_EQ(bridges(fixtures::heavy_ring_network()).nontrivial.size(), 1u);
}

TEST(Binary, Predicate) {
  EXPECT_TRUE(is_binary(fixtures::quartet()));
  EXPECT_FALSE(is_binary(fixtures::star(5)));
  EXPECT_TRUE(is_binary(fixtures::unit_square()));
}

TEST(CircularOrderTest, CanonicalUnderRotationAndReflection) {
  CircularOrder a({3, 4, 1, 2});
  CircularOrder b({2, 1, 4, 3});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.str(), "1,2,3,4");
  EXPECT_EQ(parse_order("(1 3 2 4)"), CircularOrder({4, 2, 3, 1}));
  EXPECT_EQ(all_circular_orders(5).size(), 12u);
  EXPECT_EQ(all_circular_orders(6).size(), 60u);
  EXPECT_THROW(CircularOrder({1, 1, 2}), Error);
}

TEST(ConsistentOrders, Examples) {
  auto q = consistent_orders(fixtures::quartet());
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q[0].str(), "1,2,3,4");
  EXPECT_EQ(q[1].str(), "1,2,4,3");

  auto s = consistent_orders(fixtures::unit_square());
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].str(), "1,2,3,4");

  EXPECT_EQ(consistent_orders(fixtures::star(5)).size(), 12u);
  EXPECT_EQ(consistent_orders(NetworkBuilder().leaf(1, "a").leaf(2, "b").edge("a", "b").build()).size(), 1u);
  EXPECT_THROW(consistent_orders(fixtures::k33()), Error);
}

TEST(ConsistentOrders, HeavyRingNetworkHasTwo) {
  auto orders = consistent_orders(fixtures::heavy_ring_network());
  ASSERT_EQ(orders.size(), 2u);  // one nontrivial bridge, one twist
  EXPECT_EQ(orders[0].str(), "1,2,3,4,5,6,7");
}

TEST(WyeDelta, TriangleToStarAndBack) {
  auto tri = NetworkBuilder()
                 .pendant(1, "a").pendant(2, "a").pendant(3, "b").pendant(4, "b").pendant(5, "c").pendant(6, "c")
                 .edge("a", "b", 3).edge("b", "c", 3).edge("c", "a", 3)
                 .build();
  auto star = delta_to_y(tri, "a", "b", "c");
  auto y = *star.find_node("y0");
  ASSERT_EQ(star.degree(y), 3);
  for (const auto& inc : star.incident(y)) EXPECT_EQ(star.edge(inc.edge).weight, 1);
  auto back = y_to_delta(star, "y0");
  for (const auto& e : back.edges()) {
    bool pendant = back.is_leaf(e.u) || back.is_leaf(e.v);
    EXPECT_EQ(e.weight, pendant ? Rational(1) : Rational(3));
  }
  EXPECT_EQ(resistance_vector<Rational>(tri), resistance_vector<Rational>(star));
}

TEST(WyeDelta, DegreeTwoCornersAreSmoothed) {
  auto tri = NetworkBuilder()
                 .pendant(1, "a").pendant(2, "b").pendant(3, "c")
                 .edge("a", "b", 3).edge("b", "c", 3).edge("c", "a", 3)
                 .build();
  auto star = delta_to_y(tri, "a", "b", "c");
  EXPECT_EQ(star.node_count(), 4);
  for (const auto& e : star.edges()) EXPECT_EQ(e.weight, 2);
  EXPECT_EQ(resistance_vector<Rational>(tri), resistance_vector<Rational>(star));
}

TEST(WyeDelta, Errors) {
  auto sq = fixtures::unit_square();
  try {
    delta_to_y(sq, "c0", "c1", "c2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotATriangle);
  }
  try {
    y_to_delta(sq, "L1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotADegree3Node);
  }
  try {
    y_delta(sq, {"c0", "c1"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
}

TEST(WyeDelta, PreservesResistanceOnSquare) {
  auto net = NetworkBuilder()
                 .pendant(1, "a").pendant(2, "a").pendant(3, "b").pendant(4, "b").pendant(5, "c").pendant(6, "c")
                 .edge("a", "y", 2).edge("b", "y", 3).edge("c", "y", 5)
                 .build();
  auto tri = y_to_delta(net, "y");
  EXPECT_EQ(classify(tri).level, 1);
  EXPECT_EQ(resistance_vector<Rational>(net), resistance_vector<Rational>(tri));
}
