#pragma once

#include <map>
#include <queue>
#include <set>
#include <vector>

#include "phyres/blocks.hpp"
#include "phyres/distance.hpp"
#include "phyres/linalg.hpp"

namespace phyres {

/// Edges (and their endpoints) lying on some simple path between two leaves.
struct PairwiseCircuit {
  std::vector<int> edges;
  std::vector<int> nodes;
  std::vector<int> blocks;  ///< in block-cut-tree path order from leaf i to leaf j
};

/// The union of all simple i-j paths: every block on the block-cut-tree path
/// between the blocks of leaves i and j.
inline PairwiseCircuit pairwise_circuit(const PhyloNetwork& net, const BlockDecomposition& bd, int i, int j) {
  PairwiseCircuit out;
  if (i == j) return out;
  const int nb = static_cast<int>(bd.blocks.size());
  std::map<int, int> cut_index;
  for (int c : bd.cut_vertices) cut_index.emplace(c, nb + static_cast<int>(cut_index.size()));
  const int total = nb + static_cast<int>(cut_index.size());
  std::vector<std::vector<int>> tree(total);
  for (const auto& [v, idx] : cut_index) {
    for (int b : bd.blocks_of_node[v]) {
      tree[idx].push_back(b);
      tree[b].push_back(idx);
    }
  }
  const int src = bd.blocks_of_node[net.leaf_node(i)].front();
  const int dst = bd.blocks_of_node[net.leaf_node(j)].front();
  std::vector<int> parent(total, -2);
  std::queue<int> q;
  q.push(src);
  parent[src] = -1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == dst) break;
    for (int y : tree[x]) {
      if (parent[y] == -2) {
        parent[y] = x;
        q.push(y);
      }
    }
  }
  std::vector<int> path;
  for (int x = dst; x != -1; x = parent[x]) {
    if (x < nb) path.push_back(x);
  }
  std::reverse(path.begin(), path.end());
  std::set<int> nodes;
  for (int b : path) {
    out.blocks.push_back(b);
    for (int e : bd.blocks[b].edges) {
      out.edges.push_back(e);
      nodes.insert(net.edge(e).u);
      nodes.insert(net.edge(e).v);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.nodes.assign(nodes.begin(), nodes.end());
  return out;
}

inline PairwiseCircuit pairwise_circuit(const PhyloNetwork& net, int i, int j) {
  return pairwise_circuit(net, decompose_blocks(net), i, j);
}

inline void require_positive_weights(const PhyloNetwork& net) {
  for (const auto& e : net.edges()) {
    if (e.weight <= 0) {
      throw Error(ErrorCode::ZeroWeightEdge,
                  "edge " + net.node_id(e.u) + " - " + net.node_id(e.v) + " has no finite conductance");
    }
  }
}

/// Effective resistance between all leaf pairs from Omega_ij = G_ii + G_jj - 2 G_ij,
/// G the inverse of (Laplacian + J/N) over all N nodes, conductance = 1/weight.
template <Scalar T>
DistanceVector<T> resistance_vector(const PhyloNetwork& net) {
  require_positive_weights(net);
  const int nv = net.node_count();
  const int n = net.leaf_count();
  const T shift = T(1) / T(nv);
  Matrix<T> gamma(nv, std::vector<T>(nv, shift));
  for (const auto& e : net.edges()) {
    T c = T(1) / from_rational<T>(e.weight);
    gamma[e.u][e.u] += c;
    gamma[e.v][e.v] += c;
    gamma[e.u][e.v] -= c;
    gamma[e.v][e.u] -= c;
  }
  Matrix<T> rhs(nv, std::vector<T>(n, T(0)));
  for (int leaf = 0; leaf < n; ++leaf) rhs[leaf][leaf] = T(1);
  Matrix<T> inv = solve(gamma, rhs);  // inv[node][leaf] = (Gamma^-1)[node][leaf]
  DistanceVector<T> d(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int a = i - 1;
      const int b = j - 1;
      d.set(i, j, inv[a][a] + inv[b][b] - inv[a][b] - inv[b][a]);
    }
  }
  return d;
}

namespace detail {

template <Scalar T>
struct ReductionEdge {
  int a;
  int b;
  T w;
};

}  // namespace detail

/// Effective resistance by repeated circuit reduction: dangling removal,
/// series merge, parallel merge and Y-Delta elimination of degree-3 nodes.
/// Independent of the Laplacian route.
template <Scalar T>
T resistance_by_reduction(const PhyloNetwork& net, int i, int j) {
  require_positive_weights(net);
  if (i == j) return T(0);
  const int s = net.leaf_node(i);
  const int t = net.leaf_node(j);
  auto circuit = pairwise_circuit(net, i, j);
  std::vector<detail::ReductionEdge<T>> edges;
  for (int e : circuit.edges) {
    const auto& ed = net.edge(e);
    edges.push_back({ed.u, ed.v, from_rational<T>(ed.weight)});
  }

  auto terminal = [&](int v) { return v == s || v == t; };
  while (true) {
    // Parallel merge (and drop self-loops).
    std::map<std::pair<int, int>, T> merged;
    for (const auto& e : edges) {
      if (e.a == e.b) continue;
      auto key = std::make_pair(std::min(e.a, e.b), std::max(e.a, e.b));
      auto it = merged.find(key);
      if (it == merged.end()) {
        merged.emplace(key, e.w);
      } else {
        it->second = it->second * e.w / (it->second + e.w);
      }
    }
    edges.clear();
    std::map<int, std::vector<int>> incident;
    for (const auto& [key, w] : merged) {
      incident[key.first].push_back(static_cast<int>(edges.size()));
      incident[key.second].push_back(static_cast<int>(edges.size()));
      edges.push_back({key.first, key.second, w});
    }
    if (edges.size() == 1 && terminal(edges[0].a) && terminal(edges[0].b)) return edges[0].w;

    int target = -1;
    int target_degree = 0;
    for (const auto& [v, inc] : incident) {
      if (terminal(v)) continue;
      const int deg = static_cast<int>(inc.size());
      if (deg <= 3 && (target < 0 || deg < target_degree)) {
        target = v;
        target_degree = deg;
      }
    }
    if (target < 0) throw Error(ErrorCode::ReductionStuck, "no series, parallel or Y-Delta step applies");

    const auto& inc = incident[target];
    std::vector<detail::ReductionEdge<T>> next;
    std::vector<char> drop(edges.size(), 0);
    for (int e : inc) drop[e] = 1;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (!drop[k]) next.push_back(edges[k]);
    }
    auto far = [&](int e) { return edges[e].a == target ? edges[e].b : edges[e].a; };
    if (target_degree == 2) {
      next.push_back({far(inc[0]), far(inc[1]), edges[inc[0]].w + edges[inc[1]].w});
    } else if (target_degree == 3) {
      const int x = far(inc[0]);
      const int y = far(inc[1]);
      const int z = far(inc[2]);
      const T& rx = edges[inc[0]].w;
      const T& ry = edges[inc[1]].w;
      const T& rz = edges[inc[2]].w;
      const T num = rx * ry + ry * rz + rz * rx;
      next.push_back({x, y, num / rz});
      next.push_back({y, z, num / rx});
      next.push_back({z, x, num / ry});
    }
    // degree <= 1: dangling, simply dropped
    edges = std::move(next);
  }
}

}  // namespace phyres
