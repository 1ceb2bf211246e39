#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "phyres/io.hpp"
#include "phyres/random.hpp"
#include "phyres/reconstruct.hpp"
#include "phyres/two_nested.hpp"

using namespace phyres;

namespace {

std::multiset<std::size_t> row_counts(const TwoNestedEnumeration& e) {
  std::multiset<std::size_t> out;
  for (const auto& r : e.breakdown) out.insert(r.count);
  return out;
}

}  // namespace

TEST(TwoNested, FourLeaves) {
  auto e = enumerate_binary_2nested(4);
  EXPECT_EQ(e.count(), 6u);
  ASSERT_EQ(e.breakdown.size(), 1u);
}

TEST(TwoNested, FiveLeaves) {
  auto e = enumerate_binary_2nested(5);
  EXPECT_EQ(e.count(), 120u);
  EXPECT_EQ(row_counts(e), (std::multiset<std::size_t>{60, 60}));
}

TEST(TwoNested, SixLeavesBreakdown) {
  auto e = enumerate_binary_2nested(6);
  EXPECT_EQ(e.count(), 2790u);
  EXPECT_EQ(row_counts(e), (std::multiset<std::size_t>{540, 720, 90, 900, 180, 360}));
  std::map<std::string, std::size_t> by_summary;
  for (const auto& r : e.breakdown) by_summary[r.summary] = r.count;
  EXPECT_EQ(by_summary.at("6[1,1,1,1,1,1] k=0"), 540u);
  EXPECT_EQ(by_summary.at("4[1,1,1,3] + 4[1,1,1,3] k=1"), 720u);
  EXPECT_EQ(by_summary.at("4[1,2,1,2] k=2"), 90u);
  EXPECT_EQ(by_summary.at("5[1,1,1,1,2] k=1"), 900u);
  EXPECT_EQ(by_summary.at("4[1,1,2,2] k=2"), 180u);
  EXPECT_EQ(by_summary.at("4[1,1,1,3] k=2"), 360u);
}

TEST(TwoNested, NetworksAreBinaryTriangleFreeLevelTwo) {
  auto e = enumerate_binary_2nested(5);
  for (const auto& net : e.networks) {
    auto c = classify(net);
    EXPECT_EQ(c.level, 2);
    EXPECT_TRUE(c.triangle_free);
    EXPECT_TRUE(is_binary(net));
  }
}

TEST(TwoNested, IdsSurviveRelabelingInternalNodes) {
  auto e = enumerate_binary_2nested(5);
  Random rng(5);
  for (std::size_t i = 0; i < e.networks.size(); i += 7) {
    auto d = describe(e.networks[i]);
    rng.shuffle(d.edges);
    for (auto& ed : d.edges) {
      for (auto* id : {&ed.u, &ed.v}) {
        if ((*id)[0] != 'L') *id = "x" + *id;
      }
      if (rng.chance(50)) std::swap(ed.u, ed.v);
    }
    EXPECT_EQ(canonical_form(validate(d)), e.ids[i]);
  }
}

TEST(TwoNested, OutOfRange) {
  EXPECT_THROW(enumerate_binary_2nested(3), Error);
  EXPECT_THROW(enumerate_binary_2nested(7), Error);
  EXPECT_THROW(skeleton_census(7), Error);
}

TEST(SkeletonCensus, MatchesExteriorStructures) {
  EXPECT_EQ(skeleton_census(4), 1u);
  EXPECT_EQ(skeleton_census(5), 2u);
  EXPECT_EQ(skeleton_census(6), 6u);
}

TEST(HeavyChord, UnitSquareKeepsMinPath) {
  auto sq = fixtures::unit_square();
  auto bd = decompose_blocks(sq);
  auto chorded = heavy_chord(sq, 0, "c0", "c2", 100);
  EXPECT_EQ(classify(chorded).level, 2);
  EXPECT_EQ(min_path_vector<Rational>(chorded), min_path_vector<Rational>(sq));
  EXPECT_EQ(s_w<Rational>(chorded).system, s_w<Rational>(sq).system);
}

TEST(HeavyChord, LightChordRejected) {
  auto sq = fixtures::unit_square();
  try {
    heavy_chord(sq, 0, "c0", "c2", Rational(1, 10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
  // the light chord really would change the distances
  auto d = describe(sq);
  d.edges.push_back({"c0", "c2", Rational(1, 10)});
  EXPECT_NE(min_path_vector<Rational>(validate(d)), min_path_vector<Rational>(sq));
}

TEST(HeavyChord, Errors) {
  auto sq = fixtures::unit_square();
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code([&] { heavy_chord(sq, 0, "c0", "c1", 100); }), ErrorCode::BadChord);
  EXPECT_EQ(code([&] { heavy_chord(sq, 0, "c0", "c0", 100); }), ErrorCode::BadChord);
  EXPECT_EQ(code([&] { heavy_chord(sq, 0, "c0", "L1", 100); }), ErrorCode::BadChord);
  EXPECT_EQ(code([&] { heavy_chord(sq, 1, "c0", "c2", 100); }), ErrorCode::NotOneCycle);
  EXPECT_EQ(code([&] { heavy_chord(fixtures::quartet(), 0, "a", "b", 100); }), ErrorCode::NotOneCycle);
  EXPECT_EQ(code([&] { heavy_chord(sq, 0, "c0", "zz", 100); }), ErrorCode::UnknownNode);
}

TEST(HeavyChord, RandomNetworksKeepDecomposition) {
  Random rng(21);
  int done = 0;
  for (int t = 0; t < 40 && done < 10; ++t) {
    auto net = random_one_nested(rng, rng.uniform(4, 7));
    auto bd = decompose_blocks(net);
    int cyc = -1, idx = 0;
    for (const auto& b : bd.blocks) {
      if (b.kind != BlockKind::Cycle) continue;
      if (b.ring.size() >= 4) {
        cyc = idx;
        auto heavy = heavy_chord(net, cyc, net.node_id(b.ring[0]), net.node_id(b.ring[2]), net.total_weight() + 1);
        EXPECT_EQ(min_path_vector<Rational>(heavy), min_path_vector<Rational>(net));
        EXPECT_EQ(s_w<Rational>(heavy).system, s_w<Rational>(net).system);
        ++done;
        break;
      }
      ++idx;
    }
  }
  EXPECT_GE(done, 5);
}

TEST(TwoNestedResistance, ThetaWithOneNestedTwin) {
  auto net = parse_network(read_file(std::string(PHYRES_DATA_DIR) + "/theta.net"));
  auto d = resistance_vector<double>(net);
  auto order = require_kalmanson_order(d);
  auto twin = invert_to_network(circular_decomposition(d, order).system);
  EXPECT_EQ(classify(twin).level, 1);
  EXPECT_LT(max_abs_difference(resistance_vector<double>(twin), d), 1e-9);
}

TEST(TwoNestedResistance, KalmansonThetaWithoutOneNestedTwin) {
  // a 5-cycle and a 4-cycle sharing the chord; the decomposition is a single
  // 7-cycle whose chord splits do not factor as a_p a_q / z
  auto net = parse_network(read_file(std::string(PHYRES_DATA_DIR) + "/theta_no_twin.net"));
  EXPECT_EQ(classify(net).level, 2);
  auto d = resistance_vector<Rational>(net);
  auto order = require_kalmanson_order(d);
  auto s = circular_decomposition(d, order).system;
  EXPECT_TRUE(is_faithfully_phylogenetic(s));
  try {
    invert_to_network(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
  }
}
