#pragma once

#include <cmath>
#include <vector>

#include "phyres/error.hpp"
#include "phyres/scalar.hpp"

namespace phyres {

template <Scalar T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline Matrix<double> solve_pivoting(Matrix<double> a, Matrix<double> b) {
  const int n = static_cast<int>(a.size());
  const int m = b.empty() ? 0 : static_cast<int>(b[0].size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    }
    if (std::fabs(a[pivot][col]) < 1e-300) throw Error(ErrorCode::SingularSystem, "matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int r = col + 1; r < n; ++r) {
      double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      for (int c = 0; c < m; ++c) b[r][c] -= f * b[col][c];
    }
  }
  Matrix<double> x(n, std::vector<double>(m, 0.0));
  for (int c = 0; c < m; ++c) {
    for (int r = n - 1; r >= 0; --r) {
      double s = b[r][c];
      for (int k = r + 1; k < n; ++k) s -= a[r][k] * x[k][c];
      x[r][c] = s / a[r][r];
    }
  }
  return x;
}

/// Fraction-free (Bareiss) elimination on the integer-scaled system, then
/// exact back substitution.
inline Matrix<Rational> solve_bareiss(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  const int n = static_cast<int>(a.size());
  const int m = b.empty() ? 0 : static_cast<int>(b[0].size());
  BigInt scale = 1;
  auto absorb = [&](const Rational& x) {
    BigInt den = boost::multiprecision::denominator(x);
    scale = boost::multiprecision::lcm(scale, den);
  };
  for (const auto& row : a) for (const auto& x : row) absorb(x);
  for (const auto& row : b) for (const auto& x : row) absorb(x);

  const int width = n + m;
  std::vector<std::vector<BigInt>> w(n, std::vector<BigInt>(width));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      w[r][c] = boost::multiprecision::numerator(a[r][c]) * (scale / boost::multiprecision::denominator(a[r][c]));
    }
    for (int c = 0; c < m; ++c) {
      w[r][n + c] = boost::multiprecision::numerator(b[r][c]) * (scale / boost::multiprecision::denominator(b[r][c]));
    }
  }

  BigInt prev = 1;
  for (int k = 0; k < n; ++k) {
    if (w[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (w[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) throw Error(ErrorCode::SingularSystem, "matrix is singular");
      std::swap(w[k], w[swap_row]);
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < width; ++c) {
        w[r][c] = (w[r][c] * w[k][k] - w[r][k] * w[k][c]) / prev;
      }
      w[r][k] = 0;
    }
    prev = w[k][k];
  }

  Matrix<Rational> x(n, std::vector<Rational>(m, Rational(0)));
  for (int c = 0; c < m; ++c) {
    for (int r = n - 1; r >= 0; --r) {
      Rational s = Rational(w[r][n + c]);
      for (int k = r + 1; k < n; ++k) s -= Rational(w[r][k]) * x[k][c];
      x[r][c] = s / Rational(w[r][r]);
    }
  }
  return x;
}

}  // namespace detail

/// Solves A X = B for square nonsingular A.
template <Scalar T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if constexpr (is_exact_v<T>) {
    return detail::solve_bareiss(a, b);
  } else {
    return detail::solve_pivoting(a, b);
  }
}

}  // namespace phyres
