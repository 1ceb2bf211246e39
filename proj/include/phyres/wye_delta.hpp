#pragma once

#include <string>
#include <vector>

#include "phyres/network.hpp"

namespace phyres {

namespace detail {

inline std::string fresh_node_id(const PhyloNetwork& net, const std::string& stem) {
  for (int k = 0;; ++k) {
    std::string id = stem + std::to_string(k);
    if (!net.find_node(id)) return id;
  }
}

inline int require_node(const PhyloNetwork& net, const std::string& id) {
  auto v = net.find_node(id);
  if (!v) throw Error(ErrorCode::UnknownNode, "no node '" + id + "'");
  return *v;
}

}  // namespace detail

/// Replaces the triangle a-b-c by a star on a new centre node. The arm at a
/// corner is the product of the two triangle sides meeting there over the sum
/// of all three sides. Corners that drop to degree 2 are smoothed away.
inline PhyloNetwork delta_to_y(const PhyloNetwork& net, const std::string& a, const std::string& b, const std::string& c) {
  const int va = detail::require_node(net, a);
  const int vb = detail::require_node(net, b);
  const int vc = detail::require_node(net, c);
  auto ab = net.edge_between(va, vb);
  auto bc = net.edge_between(vb, vc);
  auto ca = net.edge_between(vc, va);
  if (!ab || !bc || !ca) throw Error(ErrorCode::NotATriangle, a + ", " + b + ", " + c + " do not form a triangle");
  const Rational& r_ab = net.edge(*ab).weight;
  const Rational& r_bc = net.edge(*bc).weight;
  const Rational& r_ca = net.edge(*ca).weight;
  const Rational total = r_ab + r_bc + r_ca;
  if (total == 0) throw Error(ErrorCode::DegenerateWeights, "triangle has zero total weight");

  const std::string centre = detail::fresh_node_id(net, "y");
  NetworkDescription d = describe(net);
  std::vector<EdgeDescription> kept;
  for (int e = 0; e < net.edge_count(); ++e) {
    if (e != *ab && e != *bc && e != *ca) kept.push_back(d.edges[e]);
  }
  kept.push_back({a, centre, r_ab * r_ca / total});
  kept.push_back({b, centre, r_ab * r_bc / total});
  kept.push_back({c, centre, r_bc * r_ca / total});
  d.edges = std::move(kept);
  // a corner left with two edges is merged in series, which keeps resistances
  return validate(smooth_degree_two(d));
}

/// Replaces the degree-3 node `centre` and its three arms by a triangle on
/// its neighbours. A side that duplicates an existing edge is combined with
/// it in parallel, which keeps all other resistances unchanged.
inline PhyloNetwork y_to_delta(const PhyloNetwork& net, const std::string& centre) {
  const int v = detail::require_node(net, centre);
  if (net.is_leaf(v) || net.degree(v) != 3) throw Error(ErrorCode::NotADegree3Node, "'" + centre + "' is not an unlabeled degree-3 node");
  const auto& inc = net.incident(v);
  std::vector<int> nb;
  std::vector<Rational> arm;
  for (const auto& i : inc) {
    nb.push_back(i.neighbor);
    arm.push_back(net.edge(i.edge).weight);
  }
  for (const auto& r : arm) {
    if (r == 0) throw Error(ErrorCode::DegenerateWeights, "zero-weight arm at '" + centre + "'");
  }
  const Rational num = arm[0] * arm[1] + arm[1] * arm[2] + arm[2] * arm[0];
  // side opposite arm k joins the other two neighbours
  std::map<std::pair<int, int>, Rational> sides;
  for (int k = 0; k < 3; ++k) {
    int x = nb[(k + 1) % 3];
    int y = nb[(k + 2) % 3];
    sides[{std::min(x, y), std::max(x, y)}] = num / arm[k];
  }

  NetworkDescription d;
  for (int label = 1; label <= net.leaf_count(); ++label) d.leaves.push_back({label, net.node_id(net.leaf_node(label))});
  for (const auto& e : net.edges()) {
    if (e.u == v || e.v == v) continue;
    auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    Rational w = e.weight;
    if (auto it = sides.find(key); it != sides.end()) {
      w = (w == 0 || it->second == 0) ? Rational(0) : w * it->second / (w + it->second);
      sides.erase(it);
    }
    d.edges.push_back({net.node_id(e.u), net.node_id(e.v), w});
  }
  for (const auto& [key, w] : sides) d.edges.push_back({net.node_id(key.first), net.node_id(key.second), w});
  return validate(d);
}

/// One node id: Y to Delta at that centre. Three ids: Delta to Y on that triangle.
inline PhyloNetwork y_delta(const PhyloNetwork& net, const std::vector<std::string>& site) {
  if (site.size() == 1) return y_to_delta(net, site[0]);
  if (site.size() == 3) return delta_to_y(net, site[0], site[1], site[2]);
  throw Error(ErrorCode::PreconditionViolated, "y_delta needs one centre node or three triangle nodes");
}

}  // namespace phyres
