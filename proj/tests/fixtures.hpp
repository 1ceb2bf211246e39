#pragma once

#include <string>

#include "phyres/network.hpp"

namespace fixtures {

using phyres::NetworkBuilder;
using phyres::PhyloNetwork;
using phyres::Rational;

/// Quartet tree 12|34: internal edge `mid`, pendant edges of weight 1.
inline PhyloNetwork quartet(Rational mid = 1) {
  return NetworkBuilder()
      .pendant(1, "u").pendant(2, "u").pendant(3, "v").pendant(4, "v")
      .edge("u", "v", mid)
      .build();
}

/// Star with n unit pendant edges around one centre.
inline PhyloNetwork star(int n) {
  NetworkBuilder b;
  for (int i = 1; i <= n; ++i) b.pendant(i, "c");
  return b.build();
}

/// Ring of m nodes c0..c(m-1) with leaf i+1 pendant on c_i.
/// sides[i] is the weight of c_i - c_(i+1).
inline PhyloNetwork ring(const std::vector<Rational>& sides, Rational pendant = 1) {
  const int m = static_cast<int>(sides.size());
  NetworkBuilder b;
  for (int i = 0; i < m; ++i) b.pendant(i + 1, "c" + std::to_string(i), pendant);
  for (int i = 0; i < m; ++i) b.edge("c" + std::to_string(i), "c" + std::to_string((i + 1) % m), sides[i]);
  return b.build();
}

inline PhyloNetwork unit_square() { return ring({1, 1, 1, 1}); }

/// K3,3 on {a0,a1,a2} x {b0,b1,b2} with leaves 1-3 on the a side, 4-6 on the b side.
inline PhyloNetwork k33() {
  NetworkBuilder b;
  for (int i = 0; i < 3; ++i) {
    b.pendant(i + 1, "a" + std::to_string(i));
    b.pendant(i + 4, "b" + std::to_string(i));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) b.edge("a" + std::to_string(i), "b" + std::to_string(j));
  }
  return b.build();
}

/// Square c0..c3 with chord c0-c2 and a leaf on every corner (a theta block).
inline PhyloNetwork chorded_square() {
  return NetworkBuilder()
      .pendant(1, "c0").pendant(2, "c1").pendant(3, "c2").pendant(4, "c3")
      .edge("c0", "c1").edge("c1", "c2").edge("c2", "c3").edge("c3", "c0").edge("c0", "c2", 2)
      .build();
}

/// Binary theta: ring c0..c5 with chord c0-c3 (two 4-cycles), leaves on the
/// four non-chord nodes.
inline PhyloNetwork binary_theta() {
  return NetworkBuilder()
      .pendant(1, "c1").pendant(2, "c2").pendant(3, "c4").pendant(4, "c5")
      .edge("c0", "c1").edge("c1", "c2").edge("c2", "c3").edge("c3", "c4").edge("c4", "c5").edge("c5", "c0")
      .edge("c0", "c3", 3)
      .build();
}

/// 7-leaf network whose resistance vector, rounded to two decimals, is kRoundedRing:
/// a 6-cycle with side weights 1,1,1,1,95,1, five pendant leaves and a bridge
/// to the cherry {4,5}.
inline PhyloNetwork heavy_ring_network() {
  return NetworkBuilder()
      .edge("c0", "c1", 1).edge("c1", "c2", 1).edge("c2", "c3", 1)
      .edge("c3", "c4", 1).edge("c4", "c5", 95).edge("c5", "c0", 1)
      .pendant(1, "c0", 2).pendant(2, "c1", 1).pendant(3, "c2", 1)
      .edge("c3", "t", 1).pendant(4, "t", Rational(1, 2)).pendant(5, "t", Rational(1, 2))
      .pendant(6, "c4", 1).pendant(7, "c5", 1)
      .build();
}

}  // namespace fixtures
