#pragma once

#include <optional>
#include <vector>

#include "phyres/distance.hpp"
#include "phyres/network.hpp"

namespace phyres {

/// Shortest-path weight between every pair of leaves (Dijkstra from each leaf).
template <Scalar T>
DistanceVector<T> min_path_vector(const PhyloNetwork& net) {
  const int n = net.leaf_count();
  const int nv = net.node_count();
  std::vector<T> weight;
  weight.reserve(net.edge_count());
  for (const auto& e : net.edges()) weight.push_back(from_rational<T>(e.weight));

  DistanceVector<T> d(n);
  for (int src = 0; src < n; ++src) {
    std::vector<std::optional<T>> dist(nv);
    std::vector<char> done(nv, 0);
    dist[src] = T(0);
    for (int round = 0; round < nv; ++round) {
      int best = -1;
      for (int v = 0; v < nv; ++v) {
        if (!done[v] && dist[v] && (best < 0 || *dist[v] < *dist[best])) best = v;
      }
      if (best < 0) break;
      done[best] = 1;
      for (const auto& inc : net.incident(best)) {
        T cand = *dist[best] + weight[inc.edge];
        auto& slot = dist[inc.neighbor];
        if (!slot || cand < *slot) slot = cand;
      }
    }
    for (int dst = src + 1; dst < n; ++dst) d.set(src + 1, dst + 1, *dist[dst]);
  }
  return d;
}

}  // namespace phyres
