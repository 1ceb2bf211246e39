#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "phyres/blocks.hpp"
#include "phyres/network.hpp"

namespace phyres {

namespace detail {

/// Encodes a level <= 2 network as a tree of blocks hanging from a root leaf.
/// Children at a cut vertex are unordered (sorted), cycles are read in the
/// smaller of their two directions, and the three paths of a theta are
/// unordered. Two networks get the same string iff they are isomorphic by a
/// map fixing the leaf labels (or, unlabeled, fixing nothing).
class CanonicalEncoder {
 public:
  CanonicalEncoder(const PhyloNetwork& net, bool labeled) : net_(net), bd_(decompose_blocks(net)), labeled_(labeled) {
    for (const auto& b : bd_.blocks) {
      if (b.kind == BlockKind::Other) throw Error(ErrorCode::PreconditionViolated, "canonical forms cover networks of level at most 2");
    }
  }

  std::string from_leaf(int label) const { return hang(net_.leaf_node(label), -1); }

 private:
  std::string hang(int v, int via) const {
    std::vector<std::string> parts;
    for (int b : bd_.blocks_of_node[v]) {
      if (b != via) parts.push_back(block(b, v));
    }
    std::sort(parts.begin(), parts.end());
    std::string s = net_.is_leaf(v) ? (labeled_ ? std::to_string(net_.leaf_label(v)) : "*") : "";
    if (parts.empty()) return s;
    s += "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    return s + ")";
  }

  std::string seq(const std::vector<int>& nodes, int b) const {
    std::string s;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? ";" : "") + hang(nodes[i], b);
    return s;
  }

  std::string block(int b, int v) const {
    const Block& blk = bd_.blocks[b];
    switch (blk.kind) {
      case BlockKind::Bridge: return "-" + hang(net_.edge(blk.edges.front()).other(v), b);
      case BlockKind::Cycle: return cycle(blk, b, v);
      case BlockKind::Theta: return theta(blk, b, v);
      case BlockKind::Other: break;
    }
    return "?";
  }

  std::string cycle(const Block& blk, int b, int v) const {
    const auto& ring = blk.ring;
    const int m = static_cast<int>(ring.size());
    const int at = static_cast<int>(std::find(ring.begin(), ring.end(), v) - ring.begin());
    std::vector<int> fwd, bwd;
    for (int k = 1; k < m; ++k) {
      fwd.push_back(ring[(at + k) % m]);
      bwd.push_back(ring[(at - k + m) % m]);
    }
    return "C[" + std::min(seq(fwd, b), seq(bwd, b)) + "]";
  }

  /// Internal nodes of `path` listed from `start` (one of its ends).
  static std::vector<int> interior(const std::vector<int>& path, int start) {
    std::vector<int> in(path.begin() + 1, path.end() - 1);
    if (path.front() != start) std::reverse(in.begin(), in.end());
    return in;
  }

  std::string parallel(const std::vector<std::vector<int>>& paths, int from, int b) const {
    std::vector<std::string> parts;
    for (const auto& p : paths) parts.push_back("<" + seq(interior(p, from), b) + ">");
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) s += p;
    return s;
  }

  std::string theta(const Block& blk, int b, int v) const {
    const int x = blk.paths[0].front(), y = blk.paths[0].back();
    if (v == x || v == y) {
      const int other = v == x ? y : x;
      return "T{" + parallel(blk.paths, v, b) + "|" + hang(other, b) + "}";
    }
    // v is interior to one path; read it both ways round
    int on = 0;
    while (std::find(blk.paths[on].begin(), blk.paths[on].end(), v) == blk.paths[on].end()) ++on;
    const auto& p = blk.paths[on];
    const auto pos = std::find(p.begin(), p.end(), v) - p.begin();
    std::vector<int> to_x(p.begin() + 1, p.begin() + pos);  // x side, read from v
    std::reverse(to_x.begin(), to_x.end());
    std::vector<int> to_y(p.begin() + pos + 1, p.end() - 1);
    std::vector<std::vector<int>> rest;
    for (int i = 0; i < 3; ++i) {
      if (i != on) rest.push_back(blk.paths[i]);
    }
    auto read = [&](int first, const std::vector<int>& near, int last, const std::vector<int>& far) {
      std::vector<int> back(far.rbegin(), far.rend());
      return "[" + seq(near, b) + "|" + hang(first, b) + "|" + parallel(rest, first, b) + "|" + hang(last, b) + "|" + seq(back, b) + "]";
    };
    return "T" + std::min(read(x, to_x, y, to_y), read(y, to_y, x, to_x));
  }

  const PhyloNetwork& net_;
  BlockDecomposition bd_;
  bool labeled_;
};

}  // namespace detail

/// Canonical string of the unweighted network up to isomorphisms fixing leaf
/// labels; used as the network id. Level <= 2 only.
inline std::string canonical_form(const PhyloNetwork& net) {
  return detail::CanonicalEncoder(net, true).from_leaf(1);
}

/// Canonical string with leaf labels erased: equal iff the networks have the
/// same unlabeled shape.
inline std::string unlabeled_canonical_form(const PhyloNetwork& net) {
  detail::CanonicalEncoder enc(net, false);
  std::string best;
  for (int l = 1; l <= net.leaf_count(); ++l) {
    std::string s = enc.from_leaf(l);
    if (l == 1 || s < best) best = s;
  }
  return best;
}

}  // namespace phyres
