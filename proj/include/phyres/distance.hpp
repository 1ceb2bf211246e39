#pragma once

#include <algorithm>
#include <vector>

#include "phyres/error.hpp"
#include "phyres/scalar.hpp"

namespace phyres {

/// Pairwise leaf distances, stored in lexicographic pair order
/// (1,2), (1,3), ..., (n-1,n). Access is symmetric; d(i,i) is 0.
template <Scalar T>
class DistanceVector {
 public:
  DistanceVector() = default;
  explicit DistanceVector(int n) : n_(n), entries_(pair_count(n), T(0)) {}
  DistanceVector(int n, std::vector<T> entries) : n_(n), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != pair_count(n)) {
      throw Error(ErrorCode::SizeMismatch, "distance vector for n=" + std::to_string(n) + " needs " +
                                               std::to_string(pair_count(n)) + " entries, got " +
                                               std::to_string(entries_.size()));
    }
  }

  static int pair_count(int n) { return n * (n - 1) / 2; }

  /// Position of the pair {i, j} (1-based labels, i != j) in lexicographic order.
  static int index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
  }

  int size() const { return n_; }
  const std::vector<T>& entries() const { return entries_; }

  T operator()(int i, int j) const {
    if (i == j) return T(0);
    return entries_[index(n_, i, j)];
  }

  void set(int i, int j, T value) { entries_[index(n_, i, j)] = std::move(value); }

  bool operator==(const DistanceVector& other) const = default;

 private:
  int n_ = 0;
  std::vector<T> entries_;
};

template <Scalar To, Scalar From>
DistanceVector<To> convert(const DistanceVector<From>& d) {
  std::vector<To> out;
  out.reserve(d.entries().size());
  for (const auto& x : d.entries()) {
    if constexpr (std::same_as<To, From>) {
      out.push_back(x);
    } else if constexpr (is_exact_v<From>) {
      out.push_back(to_double(x));
    } else {
      out.push_back(Rational(x));
    }
  }
  return DistanceVector<To>(d.size(), std::move(out));
}

template <Scalar T>
double max_abs_difference(const DistanceVector<T>& a, const DistanceVector<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "distance vectors differ in size");
  double worst = 0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, to_double(abs_value<T>(a.entries()[i] - b.entries()[i])));
  }
  return worst;
}

template <Scalar T>
bool approx_equal(const DistanceVector<T>& a, const DistanceVector<T>& b, double tol = kDefaultTolerance) {
  if (a.size() != b.size()) return false;
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    return max_abs_difference(a, b) <= tol;
  }
}

}  // namespace phyres
