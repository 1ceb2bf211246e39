#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "phyres/canonical.hpp"
#include "phyres/network.hpp"
#include "phyres/scalar.hpp"

namespace phyres {

inline constexpr int kMinEnumerationLeaves = 4;
inline constexpr int kMaxEnumerationLeaves = 7;

/// C(n-3, k) (n+k-1)! / (2k+2)!!: binary triangle-free 1-nested networks with
/// n leaves and k nontrivial bridges.
inline BigInt binary_one_nested_count(int n, int k) {
  if (n < 3 || k < 0 || k > n - 3) return 0;
  BigInt binom = 1;
  for (int i = 0; i < k; ++i) binom = binom * (n - 3 - i) / (i + 1);
  BigInt fact = 1;
  for (int i = 2; i <= n + k - 1; ++i) fact *= i;
  BigInt dfact = 1;
  for (int i = 2; i <= 2 * k + 2; i += 2) dfact *= i;
  return binom * fact / dfact;
}

struct EnumeratedNetwork {
  std::string id;  ///< canonical_form
  PhyloNetwork network;
  int bridges = 0;  ///< nontrivial
};

namespace detail {

/// A rooted piece of a binary 1-nested network hanging below one edge: a
/// leaf, a tree node with two children, or a cycle whose top node carries the
/// edge and whose other nodes each carry one child.
struct Shape {
  enum Kind { Leaf, Tree, Cycle } kind = Leaf;
  int label = 0;
  std::vector<std::shared_ptr<const Shape>> kids;
  int bridges = 0;
};
using ShapePtr = std::shared_ptr<const Shape>;

class ShapeGenerator {
 public:
  const std::vector<ShapePtr>& shapes(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::vector<ShapePtr> out;
    if (std::popcount(mask) == 1) {
      auto s = std::make_shared<Shape>();
      s->label = std::countr_zero(mask) + 1;
      out.push_back(s);
    } else {
      const std::uint64_t low = mask & -mask;
      for (std::uint64_t a = (mask - 1) & mask; a; a = (a - 1) & mask) {
        if (!(a & low)) continue;
        const auto left = shapes(a);
        const auto right = shapes(mask & ~a);
        for (const auto& x : left) {
          for (const auto& y : right) out.push_back(make(Shape::Tree, {x, y}));
        }
      }
      std::vector<std::uint64_t> parts;
      cycles(mask, parts, out);
    }
    return memo_[mask] = std::move(out);
  }

 private:
  static ShapePtr make(Shape::Kind kind, std::vector<ShapePtr> kids) {
    auto s = std::make_shared<Shape>();
    s->kind = kind;
    for (const auto& k : kids) s->bridges += k->bridges + (k->kind == Shape::Leaf ? 0 : 1);
    s->kids = std::move(kids);
    return s;
  }

  /// Ordered partitions of `rest` into >= 3 blocks, one per non-top cycle
  /// node; a sequence and its reverse give the same cycle, so keep the one
  /// whose first block has the smaller least label.
  void cycles(std::uint64_t rest, std::vector<std::uint64_t>& parts, std::vector<ShapePtr>& out) {
    if (!rest) {
      if (parts.size() < 3 || std::countr_zero(parts.front()) > std::countr_zero(parts.back())) return;
      std::vector<ShapePtr> kids(parts.size());
      product(parts, 0, kids, out);
      return;
    }
    for (std::uint64_t a = rest; a; a = (a - 1) & rest) {
      parts.push_back(a);
      cycles(rest & ~a, parts, out);
      parts.pop_back();
    }
  }

  void product(const std::vector<std::uint64_t>& parts, std::size_t i, std::vector<ShapePtr>& kids, std::vector<ShapePtr>& out) {
    if (i == parts.size()) {
      out.push_back(make(Shape::Cycle, kids));
      return;
    }
    for (const auto& s : shapes(parts[i])) {
      kids[i] = s;
      product(parts, i + 1, kids, out);
    }
  }

  std::map<std::uint64_t, std::vector<ShapePtr>> memo_;
};

class ShapeBuilder {
 public:
  explicit ShapeBuilder(int n) {
    for (int l = 1; l <= n; ++l) desc_.leaves.push_back({l, leaf(l)});
  }

  PhyloNetwork build(const Shape& top) {
    attach(top, leaf(1));
    return validate(desc_);
  }

 private:
  static std::string leaf(int l) { return "L" + std::to_string(l); }
  std::string fresh() { return "v" + std::to_string(next_++); }
  void edge(const std::string& a, const std::string& b) { desc_.edges.push_back({a, b, Rational(1)}); }

  void attach(const Shape& s, const std::string& parent) {
    if (s.kind == Shape::Leaf) {
      edge(parent, leaf(s.label));
      return;
    }
    const std::string t = fresh();
    edge(parent, t);
    if (s.kind == Shape::Tree) {
      for (const auto& k : s.kids) attach(*k, t);
      return;
    }
    std::string prev = t;
    for (const auto& k : s.kids) {
      const std::string u = fresh();
      edge(prev, u);
      attach(*k, u);
      prev = u;
    }
    edge(prev, t);
  }

  NetworkDescription desc_;
  int next_ = 0;
};

inline void require_enumeration_range(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw Error(ErrorCode::OutOfRange, "enumeration supports " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
  }
}

}  // namespace detail

/// Every binary triangle-free 1-nested network on n leaves, up to
/// isomorphisms fixing the leaf labels, sorted by id. Unit weights.
inline const std::vector<EnumeratedNetwork>& enumerate_binary_1nested_all(int n) {
  detail::require_enumeration_range(n, kMinEnumerationLeaves, kMaxEnumerationLeaves);
  static std::map<int, std::vector<EnumeratedNetwork>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  detail::ShapeGenerator gen;
  const std::uint64_t rest = ((std::uint64_t{1} << n) - 1) & ~std::uint64_t{1};
  std::vector<EnumeratedNetwork> out;
  for (const auto& top : gen.shapes(rest)) {
    auto net = detail::ShapeBuilder(n).build(*top);
    out.push_back({canonical_form(net), std::move(net), top->bridges});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return cache[n] = std::move(out);
}

inline std::vector<EnumeratedNetwork> enumerate_binary_1nested(int n, int k) {
  std::vector<EnumeratedNetwork> out;
  for (const auto& e : enumerate_binary_1nested_all(n)) {
    if (e.bridges == k) out.push_back(e);
  }
  if (k < 0 || k > n - 3) throw Error(ErrorCode::OutOfRange, "k must lie in 0..n-3");
  return out;
}

}  // namespace phyres
