#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "phyres/blocks.hpp"
#include "phyres/network.hpp"

namespace phyres {

/// Seeded generator with platform-independent helpers (the standard
/// distributions are implementation-defined).
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }
  bool chance(int percent) { return uniform(1, 100) <= percent; }

  template <class V>
  void shuffle(V& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[uniform(0, i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class WeightKind { Unit, Integer, Rational };

struct RandomNetworkOptions {
  int cycle_percent = 45;   ///< chance of hanging a cycle where one fits
  int max_cycle = 7;
  bool binary = false;
  WeightKind weights = WeightKind::Rational;
};

inline Rational random_weight(Random& rng, WeightKind kind) {
  switch (kind) {
    case WeightKind::Unit: return 1;
    case WeightKind::Integer: return rng.uniform(1, 10);
    case WeightKind::Rational:
      if (rng.chance(50)) return rng.uniform(1, 10);
      return Rational(rng.uniform(1, 20), rng.uniform(2, 7));
  }
  return 1;
}

namespace detail {

class NetworkGenerator {
 public:
  NetworkGenerator(Random& rng, RandomNetworkOptions opt) : rng_(rng), opt_(opt) {}

  NetworkDescription generate(int n) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    rng_.shuffle(labels);
    for (int l : labels) desc_.leaves.push_back({l, "L" + std::to_string(l)});
    const std::string root = "L" + std::to_string(labels[0]);
    std::vector<int> rest(labels.begin() + 1, labels.end());
    if (rest.size() == 1) {
      edge(root, "L" + std::to_string(rest[0]));
    } else {
      std::string v = fresh();
      edge(root, v);
      fill(v, rest, 1);
    }
    return desc_;
  }

 private:
  std::string fresh() { return "v" + std::to_string(next_++); }
  void edge(const std::string& a, const std::string& b) { desc_.edges.push_back({a, b, random_weight(rng_, opt_.weights)}); }

  /// Hang the leaves `labels` at node `v`, which already has `degree` edges.
  void fill(const std::string& v, const std::vector<int>& labels, int degree) {
    const int k = static_cast<int>(labels.size());
    const int room = opt_.binary ? 3 - degree : k + 2;  // edges still allowed at v
    if (k >= 3 && room >= 2 && opt_.max_cycle >= 4 && rng_.chance(opt_.cycle_percent)) {
      // a cycle through v: parts >= 3 new nodes, each holding a nonempty part
      const int parts = rng_.uniform(3, std::min(k, opt_.max_cycle - 1));
      int used = k;
      if (room > 2 && k > parts && rng_.chance(35)) used = rng_.uniform(parts, k - 1);
      std::vector<int> mine(labels.begin(), labels.begin() + used);
      std::vector<int> left(labels.begin() + used, labels.end());
      auto chunks = split_into(mine, parts);
      std::vector<std::string> ring{v};
      for (int i = 0; i < parts; ++i) ring.push_back(fresh());
      for (std::size_t i = 0; i < ring.size(); ++i) edge(ring[i], ring[(i + 1) % ring.size()]);
      for (int i = 0; i < parts; ++i) hang_part(ring[i + 1], chunks[i], 2);
      if (!left.empty()) fill_items(v, left, degree + 2);
      return;
    }
    fill_items(v, labels, degree);
  }

  /// Attach a part to a cycle node: a lone leaf directly, otherwise either
  /// directly at the node or through a bridge.
  void hang_part(const std::string& u, const std::vector<int>& part, int degree) {
    if (part.size() == 1) {
      edge(u, "L" + std::to_string(part[0]));
      return;
    }
    if (opt_.binary || rng_.chance(60)) {
      std::string w = fresh();
      edge(u, w);
      fill(w, part, 1);
    } else {
      fill(u, part, degree);
    }
  }

  /// Tree-style items at v: split labels into groups, each a leaf or a bridged subtree.
  void fill_items(const std::string& v, const std::vector<int>& labels, int degree) {
    const int k = static_cast<int>(labels.size());
    const int need = std::max(1, 3 - degree);
    const int items = opt_.binary ? std::min(3 - degree, k) : rng_.uniform(need, std::min(k, std::max(need, 4)));
    auto chunks = split_into(labels, items);
    for (const auto& c : chunks) {
      if (c.size() == 1) {
        edge(v, "L" + std::to_string(c[0]));
      } else {
        std::string w = fresh();
        edge(v, w);
        fill(w, c, 1);
      }
    }
  }

  std::vector<std::vector<int>> split_into(const std::vector<int>& v, int parts) {
    // random composition of v.size() into `parts` positive sizes
    const int k = static_cast<int>(v.size());
    std::vector<int> cuts;
    std::vector<int> pool;
    for (int i = 1; i < k; ++i) pool.push_back(i);
    rng_.shuffle(pool);
    cuts.assign(pool.begin(), pool.begin() + (parts - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(k);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < parts; ++i) out.emplace_back(v.begin() + cuts[i], v.begin() + cuts[i + 1]);
    return out;
  }

  Random& rng_;
  RandomNetworkOptions opt_;
  NetworkDescription desc_;
  int next_ = 0;
};

}  // namespace detail

/// A random weighted 1-nested network on n >= 2 leaves with every cycle of
/// length >= 4 and every unlabeled node of degree >= 3.
inline PhyloNetwork random_one_nested(Random& rng, int n, RandomNetworkOptions opt = {}) {
  if (n < 2) throw Error(ErrorCode::OutOfRange, "need at least two leaves");
  return validate(detail::NetworkGenerator(rng, opt).generate(n));
}

/// Adds one chord between two non-adjacent nodes of a random cycle, turning
/// it into a theta block. Returns the input when it has no cycle.
inline PhyloNetwork add_random_chord(Random& rng, const PhyloNetwork& net) {
  auto bd = decompose_blocks(net);
  std::vector<int> long_cycles;
  for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b) {
    if (bd.blocks[b].kind == BlockKind::Cycle && bd.blocks[b].ring.size() >= 4) long_cycles.push_back(b);
  }
  if (long_cycles.empty()) return net;
  const auto& ring = bd.blocks[long_cycles[rng.uniform(0, static_cast<int>(long_cycles.size()) - 1)]].ring;
  const int m = static_cast<int>(ring.size());
  const int i = rng.uniform(0, m - 1);
  const int j = (i + rng.uniform(2, m - 2)) % m;
  auto d = describe(net);
  d.edges.push_back({net.node_id(ring[i]), net.node_id(ring[j]), random_weight(rng, WeightKind::Rational)});
  return validate(d);
}

}  // namespace phyres
