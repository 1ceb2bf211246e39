#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "phyres/blocks.hpp"
#include "phyres/circular_order.hpp"

namespace phyres {

namespace detail {

using LeafSequences = std::set<std::vector<int>>;

class OrderGenerator {
 public:
  OrderGenerator(const PhyloNetwork& net, const BlockDecomposition& blocks) : net_(net), blocks_(blocks) {}

  /// Leaf sequences of everything hanging at `v`, away from block `via`.
  LeafSequences hanging(int v, int via) const {
    if (net_.is_leaf(v)) return {{net_.leaf_label(v)}};
    std::vector<int> children;
    for (int b : blocks_.blocks_of_node[v]) {
      if (b != via) children.push_back(b);
    }
    std::vector<LeafSequences> parts;
    for (int b : children) parts.push_back(through_block(b, v));

    LeafSequences out;
    std::vector<int> perm(parts.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      LeafSequences acc{{}};
      for (int idx : perm) acc = concat(acc, parts[idx]);
      out.insert(acc.begin(), acc.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

 private:
  LeafSequences through_block(int b, int v) const {
    const Block& block = blocks_.blocks[b];
    if (block.kind == BlockKind::Bridge) {
      return hanging(net_.edge(block.edges.front()).other(v), b);
    }
    const auto& ring = block.ring;
    const int len = static_cast<int>(ring.size());
    const int start = static_cast<int>(std::find(ring.begin(), ring.end(), v) - ring.begin());
    LeafSequences out;
    for (int dir : {1, -1}) {
      LeafSequences acc{{}};
      for (int step = 1; step < len; ++step) {
        int node = ring[((start + dir * step) % len + len) % len];
        acc = concat(acc, hanging(node, b));
      }
      out.insert(acc.begin(), acc.end());
    }
    return out;
  }

  static LeafSequences concat(const LeafSequences& left, const LeafSequences& right) {
    LeafSequences out;
    for (const auto& a : left) {
      for (const auto& b : right) {
        std::vector<int> joined = a;
        joined.insert(joined.end(), b.begin(), b.end());
        out.insert(std::move(joined));
      }
    }
    return out;
  }

  const PhyloNetwork& net_;
  const BlockDecomposition& blocks_;
};

}  // namespace detail

/// Leaf orders readable around the exterior of some outer-planar drawing:
/// every cut vertex may permute its attached pieces and every cycle may be
/// reflected independently. Sorted, deduplicated canonical orders.
inline std::vector<CircularOrder> consistent_orders(const PhyloNetwork& net) {
  auto cls = classify(net);
  if (cls.level > 1) throw Error(ErrorCode::NotOneNested, "consistent orders need a network of level <= 1");
  const auto& blocks = cls.blocks;
  detail::OrderGenerator gen(net, blocks);
  const int root = net.leaf_node(1);
  const int via = blocks.blocks_of_node[root].front();
  const int first = net.edge(blocks.blocks[via].edges.front()).other(root);
  std::set<CircularOrder> orders;
  for (const auto& seq : gen.hanging(first, via)) {
    std::vector<int> labels{1};
    labels.insert(labels.end(), seq.begin(), seq.end());
    orders.insert(CircularOrder(std::move(labels)));
  }
  return {orders.begin(), orders.end()};
}

}  // namespace phyres
