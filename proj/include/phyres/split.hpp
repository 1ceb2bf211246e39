#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "phyres/circular_order.hpp"
#include "phyres/distance.hpp"

namespace phyres {

inline constexpr int kMaxLeaves = 64;

/// A bipartition A|B of the leaves 1..n, stored as the bit set of the side
/// containing leaf 1 (bit l-1 for label l).
class Split {
 public:
  Split() = default;

  Split(int n, std::uint64_t side) : n_(n) {
    if (n < 2 || n > kMaxLeaves) throw Error(ErrorCode::OutOfRange, "splits support 2..64 leaves");
    const std::uint64_t all = full(n);
    side &= all;
    if (!(side & 1)) side = all & ~side;
    if (side == all || side == 0) throw Error(ErrorCode::PreconditionViolated, "a split needs two non-empty sides");
    side_ = side;
  }

  static Split from_side(int n, const std::vector<int>& labels) {
    std::uint64_t mask = 0;
    for (int l : labels) {
      if (l < 1 || l > n) throw Error(ErrorCode::OutOfRange, "leaf " + std::to_string(l) + " outside 1.." + std::to_string(n));
      mask |= std::uint64_t{1} << (l - 1);
    }
    return Split(n, mask);
  }

  static Split trivial(int n, int label) { return from_side(n, {label}); }

  int n() const { return n_; }
  std::uint64_t mask() const { return side_; }
  std::uint64_t other_mask() const { return full(n_) & ~side_; }

  /// True when `label` is on the side of leaf 1.
  bool with_first(int label) const { return (side_ >> (label - 1)) & 1; }
  bool separates(int i, int j) const { return with_first(i) != with_first(j); }

  std::vector<int> side_a() const { return members(side_); }
  std::vector<int> side_b() const { return members(other_mask()); }

  int min_side_size() const {
    int a = std::popcount(side_);
    return std::min(a, n_ - a);
  }
  bool is_trivial() const { return min_side_size() == 1; }

  /// Compatible splits have some pair of sides that do not intersect.
  bool compatible(const Split& o) const {
    const std::uint64_t a = side_, b = other_mask(), c = o.side_, d = o.other_mask();
    return !(a & c) || !(a & d) || !(b & c) || !(b & d);
  }

  /// "1,2|3,4"
  std::string str() const { return join(side_a()) + "|" + join(side_b()); }

  bool operator==(const Split& o) const { return n_ == o.n_ && side_ == o.side_; }

  /// File order: smaller side first, then lexicographic on the side holding leaf 1.
  bool operator<(const Split& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    const int s1 = min_side_size(), s2 = o.min_side_size();
    if (s1 != s2) return s1 < s2;
    const std::uint64_t diff = side_ ^ o.side_;
    if (!diff) return false;
    const int low = std::countr_zero(diff);
    // the side holding leaf `low+1` wins unless the other side has run out
    const bool mine = (side_ >> low) & 1;
    const std::uint64_t rest = mine ? (o.side_ >> low) : (side_ >> low);
    if (rest == 0) return !mine;
    return mine;
  }

 private:
  static std::uint64_t full(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

  std::vector<int> members(std::uint64_t m) const {
    std::vector<int> out;
    for (int l = 1; l <= n_; ++l) {
      if ((m >> (l - 1)) & 1) out.push_back(l);
    }
    return out;
  }

  static std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  }

  int n_ = 0;
  std::uint64_t side_ = 0;
};

using SplitSet = std::set<Split>;

template <Scalar T>
struct WeightedSplitSystem {
  int n = 0;
  std::map<Split, T> weights;

  SplitSet splits() const {
    SplitSet s;
    for (const auto& [sp, w] : weights) s.insert(sp);
    return s;
  }
  bool operator==(const WeightedSplitSystem&) const = default;
};

template <Scalar T>
struct CircularSplitSystem {
  WeightedSplitSystem<T> system;
  CircularOrder order;

  int n() const { return system.n; }
  SplitSet splits() const { return system.splits(); }
};

/// d_s(i,j) = sum of the weights of splits separating i and j.
template <Scalar T>
DistanceVector<T> split_metric(const WeightedSplitSystem<T>& s) {
  DistanceVector<T> d(s.n);
  for (int i = 1; i <= s.n; ++i) {
    for (int j = i + 1; j <= s.n; ++j) {
      T sum(0);
      for (const auto& [sp, w] : s.weights) {
        if (sp.separates(i, j)) sum += w;
      }
      d.set(i, j, sum);
    }
  }
  return d;
}

/// True when the leaves of `mask` form one contiguous arc of the order.
inline bool is_arc(std::uint64_t mask, const CircularOrder& order) {
  const int n = order.size();
  int changes = 0;
  for (int i = 0; i < n; ++i) {
    bool a = (mask >> (order.at(i) - 1)) & 1;
    bool b = (mask >> (order.at(i + 1) - 1)) & 1;
    if (a != b) ++changes;
  }
  return changes == 2;
}

inline bool is_circular(const SplitSet& s, const CircularOrder& order) {
  for (const auto& sp : s) {
    if (sp.n() != order.size() || !is_arc(sp.mask(), order)) return false;
  }
  return true;
}

/// s1 refines s2 when s1 contains every split of s2.
inline bool refines(const SplitSet& s1, const SplitSet& s2) {
  return std::includes(s1.begin(), s1.end(), s2.begin(), s2.end());
}

inline bool has_all_trivial(const SplitSet& s, int n) {
  for (int l = 1; l <= n; ++l) {
    if (!s.count(Split::trivial(n, l))) return false;
  }
  return true;
}

/// The unweighted (overline) split set of positive-weight splits.
template <Scalar T>
SplitSet support(const WeightedSplitSystem<T>& s) {
  SplitSet out;
  for (const auto& [sp, w] : s.weights) {
    if (w != T(0)) out.insert(sp);
  }
  return out;
}

}  // namespace phyres
