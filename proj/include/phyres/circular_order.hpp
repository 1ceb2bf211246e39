#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "phyres/error.hpp"
#include "phyres/scalar.hpp"

namespace phyres {

/// A cyclic arrangement of leaf labels 1..n, stored canonically: it starts at
/// label 1 and its second entry is the smaller of the two neighbours of 1.
/// Two orders compare equal iff they agree up to rotation and reflection.
class CircularOrder {
 public:
  CircularOrder() = default;

  explicit CircularOrder(std::vector<int> labels) : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    std::vector<char> seen(n + 1, 0);
    for (int x : labels_) {
      if (x < 1 || x > n || seen[x]) throw Error(ErrorCode::SizeMismatch, "circular order is not a permutation of 1..n");
      seen[x] = 1;
    }
    canonicalize();
  }

  static CircularOrder identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return CircularOrder(std::move(v));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  int operator[](int i) const { return labels_[i]; }
  const std::vector<int>& labels() const { return labels_; }

  /// Label at circular position `i` (any integer).
  int at(int i) const {
    const int n = size();
    return labels_[((i % n) + n) % n];
  }

  /// position()[label] is the index of `label`; entry 0 unused.
  std::vector<int> positions() const {
    std::vector<int> pos(labels_.size() + 1, -1);
    for (int i = 0; i < size(); ++i) pos[labels_[i]] = i;
    return pos;
  }

  bool adjacent(int a, int b) const {
    auto pos = positions();
    int diff = std::abs(pos[a] - pos[b]);
    return diff == 1 || diff == size() - 1;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
      if (i) s += ',';
      s += std::to_string(labels_[i]);
    }
    return s;
  }

  auto operator<=>(const CircularOrder&) const = default;

 private:
  void canonicalize() {
    const int n = size();
    if (n == 0) return;
    auto one = std::find(labels_.begin(), labels_.end(), 1);
    std::rotate(labels_.begin(), one, labels_.end());
    if (n >= 3 && labels_[n - 1] < labels_[1]) std::reverse(labels_.begin() + 1, labels_.end());
  }

  std::vector<int> labels_;
};

inline CircularOrder parse_order(std::string_view text) {
  std::vector<int> labels;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      labels.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad leaf label '" + token + "' in order");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '(' || c == ')') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  if (labels.empty()) throw Error(ErrorCode::ParseError, "empty circular order");
  return CircularOrder(std::move(labels));
}

/// All (n-1)!/2 canonical circular orders of 1..n (one for n <= 2), in
/// lexicographic order of their canonical sequences.
inline std::vector<CircularOrder> all_circular_orders(int n) {
  std::vector<CircularOrder> out;
  if (n <= 0) return out;
  std::vector<int> tail(n - 1);
  std::iota(tail.begin(), tail.end(), 2);
  do {
    if (n >= 3 && tail.front() > tail.back()) continue;
    std::vector<int> seq{1};
    seq.insert(seq.end(), tail.begin(), tail.end());
    out.emplace_back(std::move(seq));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

}  // namespace phyres
