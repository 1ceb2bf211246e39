#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "phyres/canonical.hpp"
#include "phyres/enumerate.hpp"
#include "phyres/sigma.hpp"

namespace phyres {

inline constexpr int kMaxTwoNestedLeaves = 6;

/// One unlabeled exterior structure (the 1-nested network left when every
/// chord is removed) and what it contributes to the 2-nested count.
struct SkeletonCount {
  std::string skeleton;   ///< unlabeled canonical form
  std::string summary;    ///< e.g. "4[2,1,2,1] k=2": cycle lengths, leaves hanging per cycle node, bridges
  std::size_t exterior_networks = 0;  ///< leaf-labeled 1-nested networks of this shape
  std::size_t count = 0;              ///< 2-nested networks built on them
};

struct TwoNestedEnumeration {
  std::vector<std::string> ids;  ///< sorted canonical forms
  std::vector<PhyloNetwork> networks;
  std::vector<SkeletonCount> breakdown;  ///< sorted by skeleton

  std::size_t count() const { return ids.size(); }
};

namespace detail {

/// Cycle lengths, with the number of leaves hanging from each cycle node read
/// in the least rotation/reflection, plus the nontrivial bridge count.
inline std::string skeleton_summary(const PhyloNetwork& net) {
  const auto bd = decompose_blocks(net);
  std::vector<std::string> cycles;
  for (const auto& b : bd.blocks) {
    if (b.kind != BlockKind::Cycle) continue;
    std::vector<char> blocked(net.edge_count(), 0);
    for (int e : b.edges) blocked[e] = 1;
    std::vector<int> hang;
    for (int v : b.ring) hang.push_back(std::popcount(reachable_leaves(net, v, blocked)));
    std::vector<int> best = hang;
    for (int flip = 0; flip < 2; ++flip) {
      for (std::size_t r = 0; r < hang.size(); ++r) {
        std::rotate(hang.begin(), hang.begin() + 1, hang.end());
        best = std::min(best, hang);
      }
      std::reverse(hang.begin(), hang.end());
    }
    std::string s = std::to_string(best.size()) + "[";
    for (std::size_t i = 0; i < best.size(); ++i) s += (i ? "," : "") + std::to_string(best[i]);
    cycles.push_back(s + "]");
  }
  std::sort(cycles.begin(), cycles.end());
  std::string out;
  for (const auto& c : cycles) out += (out.empty() ? "" : " + ") + c;
  return out + " k=" + std::to_string(bridges(net).nontrivial.size());
}

/// Pairs of non-adjacent ring edges (positions i < j) of an m-cycle.
inline std::vector<std::pair<int, int>> chord_positions(int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 2; j < m; ++j) {
      if (!(i == 0 && j == m - 1)) out.emplace_back(i, j);
    }
  }
  return out;
}

/// Subdivide ring edges (r_i r_i+1) and (r_j r_j+1) of each chosen cycle and
/// join the two new nodes.
inline PhyloNetwork add_chords(const PhyloNetwork& net, const std::vector<const Block*>& cycles,
                               const std::vector<std::pair<int, int>>& where) {
  auto d = describe(net);
  std::set<std::pair<std::string, std::string>> drop;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& ring = cycles[c]->ring;
    const int m = static_cast<int>(ring.size());
    const std::string s = "h" + std::to_string(c) + "a", t = "h" + std::to_string(c) + "b";
    for (auto [pos, mid] : {std::pair{where[c].first, s}, std::pair{where[c].second, t}}) {
      const std::string u = net.node_id(ring[pos]), v = net.node_id(ring[(pos + 1) % m]);
      drop.insert({u, v});
      drop.insert({v, u});
      d.edges.push_back({u, mid, Rational(1)});
      d.edges.push_back({mid, v, Rational(1)});
    }
    d.edges.push_back({s, t, Rational(1)});
  }
  std::erase_if(d.edges, [&](const auto& e) { return drop.count({e.u, e.v}) > 0; });
  return validate(d);
}

}  // namespace detail

/// Binary triangle-free networks on n leaves whose blocks are bridges, cycles
/// and at least one theta (a cycle with one chord), up to isomorphisms fixing
/// leaf labels, with a per-skeleton breakdown.
inline TwoNestedEnumeration enumerate_binary_2nested(int n) {
  detail::require_enumeration_range(n, kMinEnumerationLeaves, kMaxTwoNestedLeaves);
  std::map<std::string, PhyloNetwork> found;
  std::map<std::string, SkeletonCount> rows;
  for (const auto& e : enumerate_binary_1nested_all(n)) {
    const auto bd = decompose_blocks(e.network);
    std::vector<const Block*> cycles;
    for (const auto& b : bd.blocks) {
      if (b.kind == BlockKind::Cycle) cycles.push_back(&b);
    }
    if (cycles.empty()) continue;
    const auto key = unlabeled_canonical_form(e.network);
    auto& row = rows[key];
    if (row.skeleton.empty()) {
      row.skeleton = key;
      row.summary = detail::skeleton_summary(e.network);
    }
    ++row.exterior_networks;
    const int c = static_cast<int>(cycles.size());
    for (int subset = 1; subset < (1 << c); ++subset) {
      std::vector<const Block*> chosen;
      std::vector<std::vector<std::pair<int, int>>> options;
      for (int i = 0; i < c; ++i) {
        if (subset >> i & 1) {
          chosen.push_back(cycles[i]);
          options.push_back(detail::chord_positions(static_cast<int>(cycles[i]->ring.size())));
        }
      }
      std::vector<std::size_t> pick(chosen.size(), 0);
      while (true) {
        std::vector<std::pair<int, int>> where;
        for (std::size_t i = 0; i < chosen.size(); ++i) where.push_back(options[i][pick[i]]);
        auto net = detail::add_chords(e.network, chosen, where);
        if (found.emplace(canonical_form(net), net).second) ++row.count;
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }
  }
  TwoNestedEnumeration out;
  for (auto& [id, net] : found) {
    out.ids.push_back(id);
    out.networks.push_back(std::move(net));
  }
  for (auto& [key, row] : rows) out.breakdown.push_back(std::move(row));
  return out;
}

/// Number of unlabeled exterior structures (1-nested skeletons with at least
/// one cycle) for binary 2-nested networks on n leaves.
inline std::size_t skeleton_census(int n) {
  detail::require_enumeration_range(n, kMinEnumerationLeaves, kMaxTwoNestedLeaves);
  std::set<std::string> shapes;
  for (const auto& e : enumerate_binary_1nested_all(n)) {
    if (classify(e.network).level == 1) shapes.insert(unlabeled_canonical_form(e.network));
  }
  return shapes.size();
}

/// Adds a chord of weight `weight` between nodes `a` and `b` of the
/// `cycle`-th cycle block. With a chord heavier than the whole network no
/// shortest path uses it, so the minimum path vector is unchanged.
inline PhyloNetwork heavy_chord(const PhyloNetwork& net, int cycle, const std::string& a, const std::string& b,
                                const Rational& weight) {
  require_one_nested(net);
  const auto bd = decompose_blocks(net);
  std::vector<const Block*> cycles;
  for (const auto& blk : bd.blocks) {
    if (blk.kind == BlockKind::Cycle) cycles.push_back(&blk);
  }
  if (cycle < 0 || cycle >= static_cast<int>(cycles.size())) {
    throw Error(ErrorCode::NotOneCycle, "network has " + std::to_string(cycles.size()) + " cycles; no cycle " + std::to_string(cycle));
  }
  const auto u = net.find_node(a), v = net.find_node(b);
  if (!u) throw Error(ErrorCode::UnknownNode, "no node '" + a + "'");
  if (!v) throw Error(ErrorCode::UnknownNode, "no node '" + b + "'");
  const auto& ring = cycles[cycle]->ring;
  auto on_ring = [&](int x) { return std::find(ring.begin(), ring.end(), x) != ring.end(); };
  if (!on_ring(*u) || !on_ring(*v)) throw Error(ErrorCode::BadChord, "chord endpoints must lie on the cycle");
  if (*u == *v || net.edge_between(*u, *v)) throw Error(ErrorCode::BadChord, "chord endpoints must be distinct and non-adjacent");
  if (weight <= net.total_weight()) {
    throw Error(ErrorCode::PreconditionViolated, "chord weight must exceed the total network weight " + format_rational(net.total_weight()));
  }
  auto d = describe(net);
  d.edges.push_back({a, b, weight});
  return validate(d);
}

}  // namespace phyres
