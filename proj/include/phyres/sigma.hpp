#pragma once

#include <queue>
#include <vector>

#include "phyres/blocks.hpp"
#include "phyres/split.hpp"

namespace phyres {

/// One way a 1-nested network displays a split: a bridge, or a pair of edges
/// of one cycle.
struct SplitDisplay {
  Split split;
  int block = -1;
  std::vector<int> edges;  ///< one bridge edge, or two cycle edges
};

namespace detail {

/// Leaf bit set reachable from `start` without crossing `blocked` edges.
inline std::uint64_t reachable_leaves(const PhyloNetwork& net, int start, const std::vector<char>& blocked) {
  std::vector<char> seen(net.node_count(), 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  std::uint64_t mask = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (net.is_leaf(v)) mask |= std::uint64_t{1} << v;
    for (const auto& inc : net.incident(v)) {
      if (blocked[inc.edge] || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      q.push(inc.neighbor);
    }
  }
  return mask;
}

}  // namespace detail

/// Every display of every split, in block order; cycle pairs (i, j) with i < j
/// index the ring edges r_i r_(i+1).
inline std::vector<SplitDisplay> displays(const PhyloNetwork& net, const BlockDecomposition& bd) {
  const int n = net.leaf_count();
  std::vector<SplitDisplay> out;
  std::vector<char> blocked(net.edge_count(), 0);
  for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b) {
    const Block& block = bd.blocks[b];
    if (block.kind == BlockKind::Bridge) {
      const int e = block.edges.front();
      blocked[e] = 1;
      auto mask = detail::reachable_leaves(net, net.edge(e).u, blocked);
      blocked[e] = 0;
      out.push_back({Split(n, mask), b, {e}});
    } else if (block.kind == BlockKind::Cycle) {
      const auto& ring = block.ring;
      const int m = static_cast<int>(ring.size());
      for (int e : block.edges) blocked[e] = 1;
      std::vector<std::uint64_t> hang(m);
      for (int i = 0; i < m; ++i) hang[i] = detail::reachable_leaves(net, ring[i], blocked);
      for (int e : block.edges) blocked[e] = 0;
      std::vector<int> ring_edge(m);
      for (int i = 0; i < m; ++i) ring_edge[i] = *net.edge_between(ring[i], ring[(i + 1) % m]);
      for (int i = 0; i < m; ++i) {
        std::uint64_t side = 0;
        for (int j = i + 1; j < m; ++j) {
          side |= hang[j];
          out.push_back({Split(n, side), b, {ring_edge[i], ring_edge[j]}});
        }
      }
    } else {
      throw Error(ErrorCode::NotOneNested, "network has a block that is neither a bridge nor a cycle");
    }
  }
  return out;
}

/// The set of splits displayed by a 1-nested network.
inline SplitSet sigma(const PhyloNetwork& net) {
  auto bd = decompose_blocks(net);
  SplitSet s;
  for (const auto& d : displays(net, bd)) s.insert(d.split);
  return s;
}

}  // namespace phyres
