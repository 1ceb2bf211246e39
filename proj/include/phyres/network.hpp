#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "phyres/error.hpp"
#include "phyres/scalar.hpp"

namespace phyres {

struct EdgeDescription {
  std::string u;
  std::string v;
  Rational weight{1};
};

struct LeafDescription {
  int label = 0;
  std::string node;
};

/// Raw, unchecked input as read from a file or assembled by a builder.
struct NetworkDescription {
  std::vector<LeafDescription> leaves;
  std::vector<EdgeDescription> edges;
};

struct Edge {
  int u = 0;
  int v = 0;
  Rational weight{1};

  int other(int x) const { return x == u ? v : u; }
};

struct Incidence {
  int neighbor = 0;
  int edge = 0;
};

/// A validated, immutable unrooted phylogenetic network.
///
/// Node indices are dense. Leaf with label `l` (1-based) is node `l - 1`;
/// unlabeled nodes follow in order of first appearance in the edge list.
class PhyloNetwork {
 public:
  int node_count() const { return static_cast<int>(ids_.size()); }
  int leaf_count() const { return leaf_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& node_id(int v) const { return ids_[v]; }
  std::optional<int> find_node(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool is_leaf(int v) const { return v < leaf_count_; }
  int leaf_node(int label) const { return label - 1; }
  int leaf_label(int v) const { return is_leaf(v) ? v + 1 : 0; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Incidence>& incident(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  std::optional<int> edge_between(int a, int b) const {
    for (const auto& inc : adjacency_[a]) {
      if (inc.neighbor == b) return inc.edge;
    }
    return std::nullopt;
  }

  Rational total_weight() const {
    Rational sum = 0;
    for (const auto& e : edges_) sum += e.weight;
    return sum;
  }

  friend PhyloNetwork validate(const NetworkDescription& description);

 private:
  int leaf_count_ = 0;
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Checks every structural invariant and returns the validated network.
inline PhyloNetwork validate(const NetworkDescription& description) {
  PhyloNetwork net;

  std::map<int, std::string> by_label;
  std::map<std::string, int> label_of;
  for (const auto& leaf : description.leaves) {
    if (leaf.label < 1) {
      throw Error(ErrorCode::BadLeafLabels, "leaf label " + std::to_string(leaf.label) + " is not positive");
    }
    if (!by_label.emplace(leaf.label, leaf.node).second) {
      throw Error(ErrorCode::BadLeafLabels, "leaf label " + std::to_string(leaf.label) + " used twice");
    }
    if (!label_of.emplace(leaf.node, leaf.label).second) {
      throw Error(ErrorCode::BadLeafLabels, "node '" + leaf.node + "' carries two labels");
    }
  }
  const int n = static_cast<int>(by_label.size());
  if (n < 2) throw Error(ErrorCode::BadLeafLabels, "need at least two labeled leaves");
  if (by_label.rbegin()->first != n) {
    throw Error(ErrorCode::BadLeafLabels, "leaf labels must be exactly 1.." + std::to_string(n));
  }

  net.leaf_count_ = n;
  for (const auto& [label, node] : by_label) {
    net.index_.emplace(node, static_cast<int>(net.ids_.size()));
    net.ids_.push_back(node);
  }
  auto intern = [&](const std::string& id) {
    auto [it, inserted] = net.index_.emplace(id, static_cast<int>(net.ids_.size()));
    if (inserted) net.ids_.push_back(id);
    return it->second;
  };

  std::set<std::pair<int, int>> seen;
  for (const auto& e : description.edges) {
    if (e.weight < 0) {
      throw Error(ErrorCode::NegativeWeight, "edge " + e.u + " - " + e.v + " has negative weight");
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at '" + e.u + "'");
    int a = intern(e.u);
    int b = intern(e.v);
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw Error(ErrorCode::MultiEdge, "repeated edge " + e.u + " - " + e.v);
    }
    net.edges_.push_back(Edge{a, b, e.weight});
  }

  net.adjacency_.assign(net.ids_.size(), {});
  for (int i = 0; i < net.edge_count(); ++i) {
    const auto& e = net.edges_[i];
    net.adjacency_[e.u].push_back({e.v, i});
    net.adjacency_[e.v].push_back({e.u, i});
  }

  for (int v = 0; v < net.node_count(); ++v) {
    const int deg = net.degree(v);
    if (net.is_leaf(v)) {
      if (deg != 1) {
        throw Error(ErrorCode::BadLeafDegree, "leaf " + std::to_string(v + 1) + " ('" + net.ids_[v] + "') has degree " +
                                                  std::to_string(deg));
      }
    } else if (deg == 1) {
      throw Error(ErrorCode::BadLeafDegree, "unlabeled node '" + net.ids_[v] + "' has degree 1");
    } else if (deg < 3) {
      throw Error(ErrorCode::InternalDegreeTooLow, "unlabeled node '" + net.ids_[v] + "' has degree " + std::to_string(deg));
    }
  }

  std::vector<char> reached(net.node_count(), 0);
  std::queue<int> frontier;
  frontier.push(0);
  reached[0] = 1;
  int count = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (const auto& inc : net.adjacency_[v]) {
      if (!reached[inc.neighbor]) {
        reached[inc.neighbor] = 1;
        ++count;
        frontier.push(inc.neighbor);
      }
    }
  }
  if (count != net.node_count()) throw Error(ErrorCode::Disconnected, "network is not connected");

  return net;
}

/// Inverse of validate: the description a network was (or could have been) built from.
inline NetworkDescription describe(const PhyloNetwork& net) {
  NetworkDescription d;
  for (int label = 1; label <= net.leaf_count(); ++label) {
    d.leaves.push_back({label, net.node_id(net.leaf_node(label))});
  }
  for (const auto& e : net.edges()) {
    d.edges.push_back({net.node_id(e.u), net.node_id(e.v), e.weight});
  }
  return d;
}

/// Suppresses unlabeled degree-2 nodes, merging their two edges in series.
/// A node is kept when merging would create a loop or a repeated edge.
inline NetworkDescription smooth_degree_two(NetworkDescription d) {
  std::set<std::string> labeled;
  for (const auto& l : d.leaves) labeled.insert(l.node);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::string, std::vector<int>> at;
    for (int i = 0; i < static_cast<int>(d.edges.size()); ++i) {
      at[d.edges[i].u].push_back(i);
      at[d.edges[i].v].push_back(i);
    }
    for (const auto& [node, inc] : at) {
      if (labeled.count(node) || inc.size() != 2) continue;
      const auto& e1 = d.edges[inc[0]];
      const auto& e2 = d.edges[inc[1]];
      std::string a = e1.u == node ? e1.v : e1.u;
      std::string b = e2.u == node ? e2.v : e2.u;
      if (a == b) continue;
      bool joined = std::any_of(d.edges.begin(), d.edges.end(), [&](const EdgeDescription& e) {
        return (e.u == a && e.v == b) || (e.u == b && e.v == a);
      });
      if (joined) continue;
      EdgeDescription merged{a, b, e1.weight + e2.weight};
      int hi = std::max(inc[0], inc[1]);
      int lo = std::min(inc[0], inc[1]);
      d.edges.erase(d.edges.begin() + hi);
      d.edges[lo] = merged;
      changed = true;
      break;
    }
  }
  return d;
}

/// Same graph with every edge weight replaced by 1 (the unweighted class).
inline PhyloNetwork unweighted(const PhyloNetwork& net) {
  NetworkDescription d = describe(net);
  for (auto& e : d.edges) e.weight = 1;
  return validate(d);
}

/// Fluent helper for assembling networks in code.
class NetworkBuilder {
 public:
  NetworkBuilder& leaf(int label, std::string node) {
    desc_.leaves.push_back({label, std::move(node)});
    return *this;
  }
  NetworkBuilder& edge(std::string u, std::string v, Rational weight = 1) {
    desc_.edges.push_back({std::move(u), std::move(v), std::move(weight)});
    return *this;
  }
  /// Pendant edge from a fresh leaf node "L<label>" to `attach`.
  NetworkBuilder& pendant(int label, const std::string& attach, Rational weight = 1) {
    std::string id = "L" + std::to_string(label);
    leaf(label, id);
    return edge(id, attach, std::move(weight));
  }

  const NetworkDescription& description() const { return desc_; }
  PhyloNetwork build() const { return validate(desc_); }

 private:
  NetworkDescription desc_;
};

}  // namespace phyres
