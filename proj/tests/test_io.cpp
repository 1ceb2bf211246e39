#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "phyres/canonical.hpp"
#include "phyres/io.hpp"
#include "phyres/resistance.hpp"

using namespace phyres;

namespace {

std::string data(const std::string& name) { return std::string(PHYRES_DATA_DIR) + "/" + name; }

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST(NetworkText, RoundTrip) {
  auto net = fixtures::heavy_ring_network();
  auto again = parse_network(format_network(net));
  EXPECT_EQ(canonical_form(again), canonical_form(net));
  EXPECT_EQ(resistance_vector<Rational>(again), resistance_vector<Rational>(net));
}

TEST(NetworkText, CommentsAndDefaultWeight) {
  auto net = parse_network("# a quartet\nleaf 1 a\nleaf 2 b\nleaf 3 c\nleaf 4 d\n"
                           "edge a u\nedge b u # pendant\nedge c v 2\nedge d v\nedge u v 1/2\n");
  EXPECT_EQ(net.leaf_count(), 4);
  EXPECT_EQ(net.total_weight(), Rational(11, 2));
}

TEST(NetworkText, FixtureFileMatchesBuilder) {
  auto net = parse_network(read_file(data("heavy_ring.net")));
  EXPECT_EQ(canonical_form(net), canonical_form(fixtures::heavy_ring_network()));
  EXPECT_EQ(resistance_vector<Rational>(net), resistance_vector<Rational>(fixtures::heavy_ring_network()));
}

TEST(NetworkJson, ParsesAndRoundTrips) {
  auto net = parse_network(read_file(data("quartet.json")));
  EXPECT_EQ(canonical_form(net), canonical_form(fixtures::quartet(Rational(3, 2))));
  auto again = parse_network(network_json(net).dump());
  EXPECT_EQ(resistance_vector<Rational>(again), resistance_vector<Rational>(net));
}

TEST(NetworkText, Errors) {
  EXPECT_EQ(code_of([] { parse_network("leaf one a\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_network("edge a\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_network("{\"leaves\": 3}"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_network("leaf 1 a\nleaf 2 b\nedge a b x\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { read_file(data("missing.net")); }), ErrorCode::ParseError);
}

TEST(NetworkText, FloatPrecision) {
  auto net = parse_network("leaf 1 a\nleaf 2 b\nleaf 3 c\nedge a u 1/3\nedge b u\nedge c u\n");
  EXPECT_NE(format_network(net).find("1/3"), std::string::npos);
  EXPECT_NE(format_network(net, 4).find("0.3333"), std::string::npos);
}

TEST(DistanceText, PairListAndMatrixAgree) {
  auto a = parse_distance("n 3\n1 2 1.5\n3 1 2\n2 3 5/2\n");
  auto b = parse_distance("3\nx 0 1.5 2\ny 1.5 0 5/2\nz 2 5/2 0\n");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a(1, 2), Rational(3, 2));
  EXPECT_EQ(parse_distance(format_distance(a)), a);
}

TEST(DistanceText, Errors) {
  EXPECT_EQ(code_of([] { parse_distance(""); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_distance("n 3\n1 2 1\n2 3 1\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_distance("n 3\n1 2 1\n2 1 1\n2 3 1\n1 3 1\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_distance("n 3\n1 4 1\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_distance("2\n0 1\n2 0\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_distance("2\n1 1\n1 0\n"); }), ErrorCode::ParseError);
}

TEST(DistanceText, FixtureFiles) {
  auto d = parse_distance(read_file(data("heavy_ring_rounded.dist")));
  EXPECT_EQ(d.size(), 7);
  EXPECT_EQ(d(1, 2), Rational(399, 100));
  EXPECT_EQ(d(6, 7), Rational(675, 100));
}

TEST(SplitText, RoundTrip) {
  auto f = parse_splits("n 4 order 1,2,3,4\n5/4 | 1 | 2,3,4\n1/4 | 1,2 | 3,4\n");
  EXPECT_TRUE(f.weighted);
  ASSERT_TRUE(f.order);
  EXPECT_EQ(f.system.weights.at(Split::from_side(4, {3, 4})), Rational(1, 4));
  auto again = parse_splits(format_splits(f.system, f.order));
  EXPECT_EQ(again.system, f.system);
  EXPECT_EQ(again.order, f.order);
}

TEST(SplitText, Unweighted) {
  auto f = parse_splits("n 4 order -\n- | 1,2 | 3,4\n- | 1 | 2,3,4\n");
  EXPECT_FALSE(f.weighted);
  EXPECT_FALSE(f.order);
  EXPECT_EQ(f.system.weights.size(), 2u);
}

TEST(SplitText, Errors) {
  EXPECT_EQ(code_of([] { parse_splits("n 4\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_splits("n 4 order 1,2,3\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_splits("n 4 order 1,2,2,3\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_splits("n 4 order -\n1 | 1,2 | 3\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_splits("n 4 order -\n1 | 1,2 | 2,3,4\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_splits("n 4 order -\n1 | 1,2 | 3,4\n- | 1 | 2,3,4\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_splits("n 4 order -\n1 | 1,2 | 3,4\n2 | 3,4 | 1,2\n"); }), ErrorCode::ParseError);
}
