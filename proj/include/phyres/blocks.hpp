#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "phyres/network.hpp"

namespace phyres {

enum class BlockKind { Bridge, Cycle, Theta, Other };

constexpr std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Bridge: return "bridge";
    case BlockKind::Cycle: return "cycle";
    case BlockKind::Theta: return "theta";
    case BlockKind::Other: return "other";
  }
  return "?";
}

/// One biconnected component.
///
/// For cycles `ring` lists the nodes in cyclic order starting at the smallest
/// index. For thetas `paths` holds the three internally disjoint paths between
/// the two branch nodes, each as a node sequence from `paths[i].front()` to
/// `paths[i].back()`.
struct Block {
  BlockKind kind = BlockKind::Other;
  std::vector<int> edges;
  std::vector<int> nodes;
  std::vector<int> ring;
  std::vector<std::vector<int>> paths;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<int> cut_vertices;
  std::vector<int> block_of_edge;
  std::vector<std::vector<int>> blocks_of_node;
};

namespace detail {

inline void classify_block(const PhyloNetwork& net, Block& block) {
  if (block.edges.size() == 1) {
    block.kind = BlockKind::Bridge;
    return;
  }
  std::map<int, std::vector<int>> local;  // node -> neighbors within block
  for (int e : block.edges) {
    const auto& ed = net.edge(e);
    local[ed.u].push_back(ed.v);
    local[ed.v].push_back(ed.u);
  }
  std::vector<int> branch;
  bool only_2_or_3 = true;
  for (const auto& [v, nb] : local) {
    if (nb.size() == 3) {
      branch.push_back(v);
    } else if (nb.size() != 2) {
      only_2_or_3 = false;
    }
  }
  if (!only_2_or_3) {
    block.kind = BlockKind::Other;
    return;
  }
  if (branch.empty()) {
    block.kind = BlockKind::Cycle;
    int start = local.begin()->first;
    int prev = -1;
    int cur = start;
    do {
      block.ring.push_back(cur);
      const auto& nb = local[cur];
      int next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    } while (cur != start);
    return;
  }
  if (branch.size() != 2) {
    block.kind = BlockKind::Other;
    return;
  }
  block.kind = BlockKind::Theta;
  for (int first : local[branch[0]]) {
    std::vector<int> path{branch[0]};
    int prev = branch[0];
    int cur = first;
    while (cur != branch[1]) {
      path.push_back(cur);
      const auto& nb = local[cur];
      if (nb.size() != 2) {
        block.kind = BlockKind::Other;
        block.paths.clear();
        return;
      }
      int next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    }
    path.push_back(branch[1]);
    block.paths.push_back(std::move(path));
  }
  std::sort(block.paths.begin(), block.paths.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
}

}  // namespace detail

/// Biconnected-component decomposition (Hopcroft-Tarjan, edge stack).
inline BlockDecomposition decompose_blocks(const PhyloNetwork& net) {
  const int nv = net.node_count();
  BlockDecomposition result;
  result.block_of_edge.assign(net.edge_count(), -1);
  result.blocks_of_node.assign(nv, {});

  std::vector<int> disc(nv, -1);
  std::vector<int> low(nv, 0);
  std::vector<int> edge_stack;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    for (const auto& inc : net.incident(v)) {
      if (inc.edge == parent_edge) continue;
      int w = inc.neighbor;
      if (disc[w] == -1) {
        edge_stack.push_back(inc.edge);
        dfs(w, inc.edge);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          Block block;
          while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            block.edges.push_back(e);
            if (e == inc.edge) break;
          }
          result.blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(inc.edge);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  dfs(0, -1);

  // Deterministic block order: by smallest edge index.
  for (auto& b : result.blocks) std::sort(b.edges.begin(), b.edges.end());
  std::sort(result.blocks.begin(), result.blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });

  for (int bi = 0; bi < static_cast<int>(result.blocks.size()); ++bi) {
    auto& block = result.blocks[bi];
    std::set<int> nodes;
    for (int e : block.edges) {
      result.block_of_edge[e] = bi;
      nodes.insert(net.edge(e).u);
      nodes.insert(net.edge(e).v);
    }
    block.nodes.assign(nodes.begin(), nodes.end());
    for (int v : block.nodes) result.blocks_of_node[v].push_back(bi);
    detail::classify_block(net, block);
  }
  for (int v = 0; v < nv; ++v) {
    if (result.blocks_of_node[v].size() > 1) result.cut_vertices.push_back(v);
  }
  return result;
}

struct Classification {
  int level = 0;  ///< 0, 1, 2, or 3 meaning "higher"
  bool triangle_free = true;
  BlockDecomposition blocks;
};

inline constexpr int kLevelHigher = 3;

inline bool has_triangle(const PhyloNetwork& net) {
  for (const auto& e : net.edges()) {
    for (const auto& inc : net.incident(e.u)) {
      if (inc.neighbor != e.v && net.edge_between(inc.neighbor, e.v)) return true;
    }
  }
  return false;
}

inline Classification classify(const PhyloNetwork& net) {
  Classification c;
  c.blocks = decompose_blocks(net);
  c.level = 0;
  for (const auto& b : c.blocks.blocks) {
    switch (b.kind) {
      case BlockKind::Bridge: break;
      case BlockKind::Cycle: c.level = std::max(c.level, 1); break;
      case BlockKind::Theta: c.level = std::max(c.level, 2); break;
      case BlockKind::Other: c.level = kLevelHigher; break;
    }
  }
  c.triangle_free = !has_triangle(net);
  return c;
}

/// Level <= 1: every block is a bridge or a cycle. Triangles are not rejected here.
inline bool is_one_nested(const PhyloNetwork& net) { return classify(net).level <= 1; }

inline void require_one_nested(const PhyloNetwork& net) {
  if (!is_one_nested(net)) throw Error(ErrorCode::NotOneNested, "network has a block that is neither a bridge nor a cycle");
}

struct BridgeSets {
  std::vector<int> trivial;
  std::vector<int> nontrivial;
};

/// Cut edges, split into pendant (trivial) and the rest.
inline BridgeSets bridges(const PhyloNetwork& net) {
  BridgeSets out;
  auto blocks = decompose_blocks(net);
  for (const auto& b : blocks.blocks) {
    if (b.kind != BlockKind::Bridge) continue;
    int e = b.edges.front();
    const auto& ed = net.edge(e);
    if (net.is_leaf(ed.u) || net.is_leaf(ed.v)) {
      out.trivial.push_back(e);
    } else {
      out.nontrivial.push_back(e);
    }
  }
  return out;
}

inline bool is_binary(const PhyloNetwork& net) {
  for (int v = net.leaf_count(); v < net.node_count(); ++v) {
    if (net.degree(v) != 3) return false;
  }
  return true;
}

}  // namespace phyres
