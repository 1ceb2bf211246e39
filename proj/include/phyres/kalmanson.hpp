#pragma once

#include <array>
#include <optional>
#include <vector>

#include "phyres/circular_order.hpp"
#include "phyres/distance.hpp"
#include "phyres/linalg.hpp"

namespace phyres {

template <Scalar T>
struct KalmansonViolation {
  std::array<int, 4> quad{};  ///< leaves (i, j, k, l) in order position
  T amount{};                 ///< max{d_ij + d_kl, d_jk + d_il} - (d_ik + d_jl)
};

template <Scalar T>
struct KalmansonReport {
  CircularOrder order;
  std::vector<KalmansonViolation<T>> violations;
  long long equalities = 0;
  T max_violation{0};

  bool kalmanson() const { return violations.empty(); }
};

namespace detail {

template <Scalar T>
Matrix<T> square_matrix(const DistanceVector<T>& d) {
  const int n = d.size();
  Matrix<T> m(n + 1, std::vector<T>(n + 1, T(0)));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) m[i][j] = m[j][i] = d(i, j);
  }
  return m;
}

}  // namespace detail

/// Checks max{d_ij + d_kl, d_jk + d_il} <= d_ik + d_jl for every
/// subsequence (i, j, k, l) of the order. Ties are counted as equalities,
/// never as violations. `tol` applies in float mode only.
template <Scalar T>
KalmansonReport<T> is_kalmanson(const DistanceVector<T>& d, const CircularOrder& order, double tol = kDefaultTolerance) {
  if (order.size() != d.size()) throw Error(ErrorCode::SizeMismatch, "order and distance vector disagree on n");
  KalmansonReport<T> report;
  report.order = order;
  const int n = d.size();
  if (n < 4) return report;
  auto m = detail::square_matrix(d);
  const auto& o = order.labels();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int e = c + 1; e < n; ++e) {
          const int i = o[a], j = o[b], k = o[c], l = o[e];
          T lhs = m[i][j] + m[k][l];
          T other = m[j][k] + m[i][l];
          if (other > lhs) lhs = other;
          const T rhs = m[i][k] + m[j][l];
          if (approx_equal<T>(lhs, rhs, tol)) {
            ++report.equalities;
          } else if (lhs > rhs) {
            T amount = lhs - rhs;
            if (report.violations.empty() || amount > report.max_violation) report.max_violation = amount;
            report.violations.push_back({{i, j, k, l}, amount});
          }
        }
      }
    }
  }
  return report;
}

namespace detail {

/// Largest Kalmanson violation for an order (0 when Kalmanson), with early exit
/// once it exceeds `stop_above`.
template <Scalar T>
T max_violation(const Matrix<T>& m, const std::vector<int>& o, double tol,
                const std::optional<T>& stop_above = std::nullopt) {
  const int n = static_cast<int>(o.size());
  T worst(0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int e = c + 1; e < n; ++e) {
          const int i = o[a], j = o[b], k = o[c], l = o[e];
          T lhs = m[i][j] + m[k][l];
          T other = m[j][k] + m[i][l];
          if (other > lhs) lhs = other;
          T rhs = m[i][k] + m[j][l];
          if (!leq<T>(lhs, rhs, tol)) {
            T amount = lhs - rhs;
            if (amount > worst) {
              worst = amount;
              if (stop_above && worst > *stop_above) return worst;
            }
          }
        }
      }
    }
  }
  return worst;
}

}  // namespace detail

enum class OrderSearch { Exact, Heuristic };

template <Scalar T>
struct OrderSearchResult {
  std::optional<CircularOrder> order;  ///< a Kalmanson order, if one was found
  CircularOrder best_order;            ///< order with the smallest maximum violation seen
  T best_max_violation{0};
  long long orders_examined = 0;
};

inline constexpr int kMaxExactOrderSearch = 9;

namespace detail {

template <Scalar T>
std::vector<int> chain_order(const DistanceVector<T>& d) {
  const int n = d.size();
  std::vector<std::vector<int>> chains;
  for (int i = 1; i <= n; ++i) chains.push_back({i});
  auto mean = [&](const std::vector<int>& a, const std::vector<int>& b) {
    double s = 0;
    for (int x : a) for (int y : b) s += to_double(d(x, y));
    return s / static_cast<double>(a.size() * b.size());
  };
  while (chains.size() > 1) {
    const int m = static_cast<int>(chains.size());
    std::vector<double> r(m, 0.0);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b) r[a] += mean(chains[a], chains[b]);
      }
    }
    int best_a = 0, best_b = 1;
    double best_q = 0;
    bool have = false;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        double q = m > 2 ? (m - 2) * mean(chains[a], chains[b]) - r[a] - r[b] : mean(chains[a], chains[b]);
        if (!have || q < best_q - 1e-12) {
          have = true;
          best_q = q;
          best_a = a;
          best_b = b;
        }
      }
    }
    auto left = chains[best_a];
    auto right = chains[best_b];
    // orient so the closest pair of end points meet
    double best = 0;
    int choice = -1;
    for (int c = 0; c < 4; ++c) {
      int x = (c & 1) ? left.front() : left.back();
      int y = (c & 2) ? right.back() : right.front();
      double dist = to_double(d(x, y));
      if (choice < 0 || dist < best - 1e-12) {
        best = dist;
        choice = c;
      }
    }
    if (choice & 1) std::reverse(left.begin(), left.end());
    if (choice & 2) std::reverse(right.begin(), right.end());
    left.insert(left.end(), right.begin(), right.end());
    chains.erase(chains.begin() + best_b);
    chains[best_a] = std::move(left);
  }
  return chains.front();
}

}  // namespace detail

/// Looks for a circular order in which `d` is Kalmanson.
///
/// Exact: scans all (n-1)!/2 canonical orders (n <= 9) and returns the first
/// lexicographic hit. Heuristic: agglomerative chaining followed by segment
/// reversal repair; falls back to the exact scan when n <= 9.
template <Scalar T>
OrderSearchResult<T> find_kalmanson_order(const DistanceVector<T>& d, OrderSearch mode, double tol = kDefaultTolerance) {
  const int n = d.size();
  OrderSearchResult<T> result;
  if (n <= 3) {
    result.order = CircularOrder::identity(n);
    result.best_order = *result.order;
    result.orders_examined = 1;
    return result;
  }
  auto m = detail::square_matrix(d);

  auto exact_scan = [&] {
    bool have = false;
    for (const auto& o : all_circular_orders(n)) {
      ++result.orders_examined;
      std::optional<T> cap;
      if (have) cap = result.best_max_violation;
      T worst = detail::max_violation(m, o.labels(), tol, cap);
      if (!have || worst < result.best_max_violation) {
        have = true;
        result.best_max_violation = worst;
        result.best_order = o;
      }
      if (worst == T(0)) {
        result.order = o;
        return;
      }
    }
  };

  if (mode == OrderSearch::Exact) {
    if (n > kMaxExactOrderSearch) {
      throw Error(ErrorCode::TooLargeForExact, "exact order search is limited to n <= " + std::to_string(kMaxExactOrderSearch));
    }
    exact_scan();
    return result;
  }

  std::vector<int> seq = detail::chain_order(d);
  T worst = detail::max_violation(m, seq, tol);
  ++result.orders_examined;
  bool improved = worst > T(0);
  while (improved) {
    improved = false;
    for (int a = 1; a < n && worst > T(0); ++a) {
      for (int b = a + 1; b < n && worst > T(0); ++b) {
        auto cand = seq;
        std::reverse(cand.begin() + a, cand.begin() + b + 1);
        ++result.orders_examined;
        T w = detail::max_violation(m, cand, tol, std::optional<T>(worst));
        if (w < worst) {
          worst = w;
          seq = std::move(cand);
          improved = true;
        }
      }
    }
  }
  result.best_order = CircularOrder(seq);
  result.best_max_violation = worst;
  if (worst == T(0)) {
    result.order = result.best_order;
    return result;
  }
  if (n <= kMaxExactOrderSearch) exact_scan();
  return result;
}

/// Like find_kalmanson_order, but raises NotFound instead of returning an empty result.
template <Scalar T>
CircularOrder require_kalmanson_order(const DistanceVector<T>& d, double tol = kDefaultTolerance) {
  auto mode = d.size() <= kMaxExactOrderSearch ? OrderSearch::Exact : OrderSearch::Heuristic;
  auto res = find_kalmanson_order(d, mode, tol);
  if (!res.order) {
    throw Error(ErrorCode::NotFound, "no Kalmanson order; smallest maximum violation " +
                                         format_scalar<T>(res.best_max_violation) + " at (" + res.best_order.str() + ")");
  }
  return *res.order;
}

}  // namespace phyres
