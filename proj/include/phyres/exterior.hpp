#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "phyres/min_path.hpp"
#include "phyres/network.hpp"
#include "phyres/sigma.hpp"
#include "phyres/split.hpp"

namespace phyres {

/// A cycle of the exterior network. gaps[k] is a circular gap of the order
/// (gap t sits between positions t and t+1); edges[k] is the cycle edge
/// crossing that gap.
struct ExteriorCycle {
  std::vector<int> gaps;
  std::vector<int> edges;
};

/// The smoothed exterior network of a circular split system, with the
/// bookkeeping needed to map splits to edges.
struct ExteriorNetwork {
  PhyloNetwork network;
  CircularOrder order;
  std::vector<ExteriorCycle> cycles;
  std::map<Split, int> bridge_edge;  ///< compatible split -> its bridge (or pendant) edge
  std::map<Split, int> cycle_of;     ///< crossing split -> index into cycles
};

namespace detail {

/// Chord (a, b), a < b, for a split circular in `order`: the two gaps where
/// the side without leaf order[0] begins and ends.
inline std::pair<int, int> chord_of(const Split& s, const CircularOrder& order) {
  const int n = order.size();
  int first = -1, last = -1;
  for (int p = 1; p < n; ++p) {
    const bool away = !s.with_first(order[p]);
    if (away && first < 0) first = p;
    if (away) last = p;
  }
  return {first - 1, last};
}

/// The split whose far side is positions a+1..b.
inline Split split_of_chord(int a, int b, const CircularOrder& order) {
  std::uint64_t mask = 0;
  for (int p = a + 1; p <= b; ++p) mask |= std::uint64_t{1} << (order[p] - 1);
  return Split(order.size(), mask);
}

class ExteriorBuilder {
 public:
  ExteriorBuilder(const std::map<Split, Rational>& weights, const CircularOrder& order) : order_(order) {
    n_ = order.size();
    for (const auto& [s, w] : weights) {
      auto [a, b] = chord_of(s, order);
      chords_.push_back({a, b, s, w});
    }
    group_classes();
  }

  ExteriorNetwork build() {
    ExteriorNetwork out;
    out.order = order_;
    if (n_ == 2) {
      desc_.leaves = {{1, "L1"}, {2, "L2"}};
      add_edge("L1", "L2", {0});
      out.bridge_edge[chords_[0].split] = 0;
    } else {
      for (int p = 0; p < n_; ++p) desc_.leaves.push_back({order_[p], "L" + std::to_string(order_[p])});
      int root_class = class_of_chord(0, n_ - 1);
      std::string r = region(0, n_ - 1, root_class);
      add_edge("L" + std::to_string(order_[0]), r, classes_[root_class].chords);
    }
    out.network = validate(desc_);
    for (int e = 0; e < static_cast<int>(edge_chords_.size()); ++e) {
      for (int c : edge_chords_[e]) {
        if (cycle_index_.count(chords_[c].cls)) {
          out.cycle_of[chords_[c].split] = cycle_index_[chords_[c].cls];
        } else {
          out.bridge_edge[chords_[c].split] = e;
        }
      }
    }
    out.cycles = std::move(cycles_);
    return out;
  }

 private:
  struct Chord {
    int a;
    int b;
    Split split;
    Rational weight;
    int cls = -1;
  };
  struct Class {
    std::vector<int> chords;
    std::vector<int> gaps;
  };

  void group_classes() {
    const int c = static_cast<int>(chords_.size());
    std::vector<int> parent(c);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i < c; ++i) {
      for (int j = i + 1; j < c; ++j) {
        const auto &x = chords_[i], &y = chords_[j];
        bool cross = (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
        if (cross) parent[find(i)] = find(j);
      }
    }
    std::map<int, int> index;
    for (int i = 0; i < c; ++i) {
      int root = find(i);
      auto [it, fresh] = index.emplace(root, static_cast<int>(classes_.size()));
      if (fresh) classes_.emplace_back();
      chords_[i].cls = it->second;
      classes_[it->second].chords.push_back(i);
    }
    for (auto& cl : classes_) {
      for (int i : cl.chords) {
        cl.gaps.push_back(chords_[i].a);
        cl.gaps.push_back(chords_[i].b);
      }
      std::sort(cl.gaps.begin(), cl.gaps.end());
      cl.gaps.erase(std::unique(cl.gaps.begin(), cl.gaps.end()), cl.gaps.end());
      if (cl.gaps.size() == 3) throw Error(ErrorCode::NotRealizable, "a crossing class with three gaps would form a triangle");
    }
  }

  int class_of_chord(int a, int b) const {
    for (const auto& ch : chords_) {
      if (ch.a == a && ch.b == b) return ch.cls;
    }
    throw Error(ErrorCode::MissingTrivialSplits, "missing a trivial split");
  }

  bool is_chord(int cls) const { return classes_[cls].gaps.size() == 2; }

  /// Y lies inside X: within X's chord span, or within a non-wrap side of X's polygon.
  bool contains(int x, int y) const {
    if (x == y) return false;
    const auto& gx = classes_[x].gaps;
    const auto& gy = classes_[y].gaps;
    for (std::size_t k = 0; k + 1 < gx.size(); ++k) {
      if (gx[k] <= gy.front() && gy.back() <= gx[k + 1]) return true;
    }
    return false;
  }

  std::vector<int> children(int a, int b, int parent) const {
    std::vector<int> inside;
    for (int c = 0; c < static_cast<int>(classes_.size()); ++c) {
      if (c == parent) continue;
      if (classes_[c].gaps.front() >= a && classes_[c].gaps.back() <= b) inside.push_back(c);
    }
    std::vector<int> top;
    for (int c : inside) {
      bool nested = std::any_of(inside.begin(), inside.end(), [&](int d) { return contains(d, c); });
      if (!nested) top.push_back(c);
    }
    std::sort(top.begin(), top.end(), [&](int x, int y) { return classes_[x].gaps < classes_[y].gaps; });
    return top;
  }

  std::string fresh() { return "v" + std::to_string(next_++); }

  void add_edge(const std::string& u, const std::string& v, const std::vector<int>& chord_ids) {
    Rational w = 0;
    for (int c : chord_ids) w += chords_[c].weight;
    desc_.edges.push_back({u, v, w});
    edge_chords_.push_back(chord_ids);
  }

  /// Node for the cap over gaps [a, b] seen from class `parent`.
  std::string region(int a, int b, int parent) {
    if (is_chord(parent) && b == a + 1) return "L" + std::to_string(order_[b]);
    std::string node = fresh();
    for (int c : children(a, b, parent)) {
      const auto& cl = classes_[c];
      if (is_chord(c)) {
        std::string below = region(cl.gaps[0], cl.gaps[1], c);
        add_edge(node, below, cl.chords);
        continue;
      }
      const int m = static_cast<int>(cl.gaps.size());
      std::vector<std::string> ring{node};
      for (int k = 0; k + 1 < m; ++k) ring.push_back(region(cl.gaps[k], cl.gaps[k + 1], c));
      ExteriorCycle cyc;
      cyc.gaps = cl.gaps;
      for (int k = 0; k < m; ++k) {
        std::vector<int> at_gap;
        for (int ch : cl.chords) {
          if (chords_[ch].a == cl.gaps[k] || chords_[ch].b == cl.gaps[k]) at_gap.push_back(ch);
        }
        cyc.edges.push_back(static_cast<int>(desc_.edges.size()));
        add_edge(ring[k], ring[(k + 1) % m], at_gap);
        // every chord touches two gaps; record its class only once
      }
      cycle_index_[c] = static_cast<int>(cycles_.size());
      cycles_.push_back(std::move(cyc));
    }
    return node;
  }

  CircularOrder order_;
  int n_ = 0;
  std::vector<Chord> chords_;
  std::vector<Class> classes_;
  NetworkDescription desc_;
  std::vector<std::vector<int>> edge_chords_;
  std::vector<ExteriorCycle> cycles_;
  std::map<int, int> cycle_index_;
  int next_ = 0;
};

inline void require_circular(const SplitSet& s, const CircularOrder& order) {
  for (const auto& sp : s) {
    if (sp.n() != order.size()) throw Error(ErrorCode::SizeMismatch, "split and order disagree on n");
  }
  if (!is_circular(s, order)) throw Error(ErrorCode::NotCircular, "split system is not circular for (" + order.str() + ")");
}

}  // namespace detail

/// The smoothed exterior network of an unweighted circular split system
/// (all edge weights 1). Every trivial split must be present.
inline ExteriorNetwork exterior_network_info(const SplitSet& s, const CircularOrder& order) {
  detail::require_circular(s, order);
  if (!has_all_trivial(s, order.size())) throw Error(ErrorCode::MissingTrivialSplits, "every trivial split is required");
  std::map<Split, Rational> w;
  for (const auto& sp : s) w[sp] = 1;
  auto out = detail::ExteriorBuilder(w, order).build();
  out.network = unweighted(out.network);
  return out;
}

inline PhyloNetwork exterior_network(const SplitSet& s, const CircularOrder& order) {
  return exterior_network_info(s, order).network;
}

/// Weighted exterior network: each edge carries the summed weight of the splits
/// it represents (a bridge its split, a cycle edge every class split ending at
/// its gap). Zero-weight splits are dropped first; absent trivial splits are
/// taken with weight 0.
template <Scalar T>
ExteriorNetwork weighted_exterior_network_info(const CircularSplitSystem<T>& s) {
  const int n = s.n();
  std::map<Split, Rational> w;
  for (const auto& [sp, x] : s.system.weights) {
    if (x < T(0)) throw Error(ErrorCode::NegativeWeight, "split " + sp.str() + " has negative weight");
    if (x != T(0)) w[sp] = Rational(x);
  }
  for (int l = 1; l <= n; ++l) w.emplace(Split::trivial(n, l), Rational(0));
  SplitSet keys;
  for (const auto& [sp, x] : w) keys.insert(sp);
  detail::require_circular(keys, s.order);
  return detail::ExteriorBuilder(w, s.order).build();
}

template <Scalar T>
PhyloNetwork weighted_exterior_network(const CircularSplitSystem<T>& s) {
  return weighted_exterior_network_info(s).network;
}

/// min_path_vector(L_w(s)) = split_metric(s), exactly in rational mode.
template <Scalar T>
bool is_outer_path(const CircularSplitSystem<T>& s, double tol = kDefaultTolerance) {
  auto net = weighted_exterior_network(s);
  return approx_equal(min_path_vector<T>(net), split_metric(s.system), tol);
}

/// Sigma of the exterior network reproduces the split set (trivial splits implied).
inline bool is_faithfully_phylogenetic(const SplitSet& s, const CircularOrder& order) {
  SplitSet full = s;
  for (int l = 1; l <= order.size(); ++l) full.insert(Split::trivial(order.size(), l));
  return sigma(exterior_network(full, order)) == full;
}

template <Scalar T>
bool is_faithfully_phylogenetic(const CircularSplitSystem<T>& s) {
  return is_faithfully_phylogenetic(support(s.system), s.order);
}

}  // namespace phyres
