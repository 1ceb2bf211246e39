#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "phyres/error.hpp"

namespace phyres {

/// Jukes-Cantor distance for c matching sites out of m:
/// D = -3/4 ln(1 - 4p/3) with p = (m - c)/m, i.e. 3/4 ln(3m / (4c - m)).
inline double jc_distance(double c, double m) {
  if (!(m > 0)) throw Error(ErrorCode::DomainError, "sequence length must be positive");
  if (!(c > m / 4) || c > m) throw Error(ErrorCode::DomainError, "Jukes-Cantor needs m/4 < c <= m");
  return 0.75 * std::log(3 * m / (4 * c - m));
}

/// Kimura two-parameter distance for transition proportion p and
/// transversion proportion q: K = -1/2 ln((1 - 2p - q) sqrt(1 - 2q)).
inline double kimura_distance(double p, double q) {
  if (p < 0 || q < 0) throw Error(ErrorCode::DomainError, "proportions must be nonnegative");
  const double a = 1 - 2 * p - q, b = 1 - 2 * q;
  if (!(a > 0) || !(b > 0)) throw Error(ErrorCode::DomainError, "Kimura needs 1-2p-q > 0 and 1-2q > 0");
  return -0.5 * std::log(a * std::sqrt(b));
}

/// Matching sites c on each of two equal parallel branches whose combined
/// (halved) Jukes-Cantor distance matches a single branch with c1 matches:
/// c = m/4 + sqrt(3 (m c1/4 - (m/4)^2)).
inline double jc_parallel_sites(double c1, double m) {
  if (!(m > 0)) throw Error(ErrorCode::DomainError, "sequence length must be positive");
  if (c1 < m / 4 || c1 > m) throw Error(ErrorCode::DomainError, "need m/4 <= c1 <= m");
  const double q = m / 4;
  return q + std::sqrt(std::max(0.0, 3 * (m * c1 / 4 - q * q)));
}

/// (c, D) samples for m/4 < c <= m, plot-ready.
inline std::vector<std::pair<double, double>> jc_curve(double m, int steps) {
  std::vector<std::pair<double, double>> out;
  for (int i = 1; i <= steps; ++i) {
    const double c = m / 4 + (m - m / 4) * i / steps;
    out.emplace_back(c, jc_distance(c, m));
  }
  return out;
}

/// (c1, c) samples for m/4 <= c1 <= m.
inline std::vector<std::pair<double, double>> jc_parallel_curve(double m, int steps) {
  std::vector<std::pair<double, double>> out;
  for (int i = 0; i <= steps; ++i) {
    const double c1 = m / 4 + (m - m / 4) * i / steps;
    out.emplace_back(c1, jc_parallel_sites(c1, m));
  }
  return out;
}

}  // namespace phyres
