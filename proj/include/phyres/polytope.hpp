#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "phyres/consistent_orders.hpp"
#include "phyres/enumerate.hpp"
#include "phyres/exterior.hpp"
#include "phyres/min_path.hpp"
#include "phyres/reconstruct.hpp"
#include "phyres/resistance.hpp"
#include "phyres/sigma.hpp"

namespace phyres {

/// x(N): one nonnegative integer per leaf pair, lexicographic pair order.
struct XVector {
  int n = 0;
  std::vector<long long> entries;

  explicit XVector(int leaves = 0) : n(leaves), entries(DistanceVector<double>::pair_count(leaves), 0) {}

  long long& at(int i, int j) { return entries[DistanceVector<double>::index(n, i, j)]; }
  long long operator()(int i, int j) const { return entries[DistanceVector<double>::index(n, i, j)]; }

  long long sum() const {
    long long s = 0;
    for (auto x : entries) s += x;
    return s;
  }

  template <Scalar T>
  T dot(const DistanceVector<T>& d) const {
    if (d.size() != n) throw Error(ErrorCode::SizeMismatch, "x-vector and distance vector disagree on n");
    T s(0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i]) s += T(entries[i]) * d.entries()[i];
    }
    return s;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + std::to_string(entries[i]);
    return s + ")";
  }

  auto operator<=>(const XVector&) const = default;
};

/// x_ij = 2^(k - b_ij) when some consistent order has i, j adjacent, else 0;
/// k counts nontrivial bridges and b_ij those on the i-j pairwise circuit.
/// Adjacency is possible iff the path enters and leaves every cycle it
/// crosses at neighbouring cycle nodes.
inline XVector x_vector_binary(const PhyloNetwork& net) {
  if (!is_binary(net)) throw Error(ErrorCode::NotBinary, "x_vector_binary needs every unlabeled node of degree 3");
  require_one_nested(net);
  const auto bd = decompose_blocks(net);
  const int n = net.leaf_count();
  const int k = static_cast<int>(bridges(net).nontrivial.size());
  auto nontrivial = [&](const Block& b) {
    const auto& e = net.edge(b.edges.front());
    return b.kind == BlockKind::Bridge && !net.is_leaf(e.u) && !net.is_leaf(e.v);
  };
  auto shared = [&](int a, int b) {
    for (int v : bd.blocks[a].nodes) {
      const auto& other = bd.blocks[b].nodes;
      if (std::find(other.begin(), other.end(), v) != other.end()) return v;
    }
    return -1;
  };
  XVector x(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto path = pairwise_circuit(net, bd, i, j).blocks;
      int b = 0;
      bool adjacent = true;
      for (std::size_t t = 0; t < path.size(); ++t) {
        const Block& blk = bd.blocks[path[t]];
        if (nontrivial(blk)) ++b;
        if (blk.kind == BlockKind::Cycle && !net.edge_between(shared(path[t - 1], path[t]), shared(path[t], path[t + 1]))) {
          adjacent = false;
        }
      }
      if (adjacent) x.at(i, j) = 1LL << (k - b);
    }
  }
  return x;
}

/// Sum of the adjacency incidence vectors of every consistent circular order.
inline XVector x_vector_general(const PhyloNetwork& net) {
  const int n = net.leaf_count();
  XVector x(n);
  for (const auto& c : consistent_orders(net)) {
    for (int p = 0; p < n; ++p) {
      const int a = c.at(p), b = c.at(p + 1);
      if (n == 2 && p == 1) break;
      ++x.at(std::min(a, b), std::max(a, b));
    }
  }
  return x;
}

struct BmeVertex {
  std::string id;
  PhyloNetwork network;
  XVector x;
  SplitSet splits;  ///< sigma(network)
};

/// x(N) for every binary 1-nested N with n leaves and k nontrivial bridges,
/// sorted by network id.
inline const std::vector<BmeVertex>& bme_vertices(int n, int k) {
  static std::map<std::pair<int, int>, std::vector<BmeVertex>> cache;
  if (auto it = cache.find({n, k}); it != cache.end()) return it->second;
  std::vector<BmeVertex> out;
  for (auto& e : enumerate_binary_1nested(n, k)) {
    auto x = x_vector_binary(e.network);
    auto s = sigma(e.network);
    out.push_back({e.id, std::move(e.network), std::move(x), std::move(s)});
  }
  return cache[{n, k}] = std::move(out);
}

inline std::set<XVector> distinct_vertices(int n, int k) {
  std::set<XVector> out;
  for (const auto& v : bme_vertices(n, k)) out.insert(v.x);
  return out;
}

template <Scalar T>
struct MinimizeResult {
  T value{};
  std::vector<std::string> argmin;  ///< network ids, sorted
  std::size_t count = 0;            ///< vertices examined
};

/// Exhaustive minimum of x . d over the vertices of BME(n, k); every
/// minimizer is reported. Float mode treats values within tol (relative) as ties.
template <Scalar T>
MinimizeResult<T> minimize_functional(const DistanceVector<T>& d, int n, int k, double tol = kDefaultTolerance) {
  if (d.size() != n) throw Error(ErrorCode::SizeMismatch, "distance vector has " + std::to_string(d.size()) + " leaves, not " + std::to_string(n));
  const auto& verts = bme_vertices(n, k);
  MinimizeResult<T> out;
  out.count = verts.size();
  std::vector<T> values;
  values.reserve(verts.size());
  for (const auto& v : verts) values.push_back(v.x.dot(d));
  if (values.empty()) return out;
  out.value = *std::min_element(values.begin(), values.end());
  const double slack = tol * std::max(1.0, std::abs(to_double(out.value)));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const bool tie = is_exact_v<T> ? values[i] == out.value : to_double(values[i] - out.value) <= slack;
    if (tie) out.argmin.push_back(verts[i].id);
  }
  return out;
}

enum class FaceMetric { Resistance, MinPath };

struct FaceCheck {
  int k = 0;
  Rational value;
  std::vector<std::string> argmin;
  std::vector<std::string> expected;  ///< binary k-bridge refinements
  bool vacuous() const { return expected.empty(); }
  bool match() const { return argmin == expected; }
};

struct FaceReport {
  FaceMetric metric = FaceMetric::Resistance;
  int n = 0;
  std::vector<FaceCheck> checks;  ///< one per k in 0..n-3
  Rational x_dot_d;               ///< x(N) . d_N
  std::optional<Rational> x_dot_exterior;  ///< x(N) . d_{L_w(R_w(N))}, resistance only

  bool identity_holds() const { return !x_dot_exterior || *x_dot_exterior == x_dot_d; }
  bool passed() const {
    for (const auto& c : checks) {
      if (!c.vacuous() && !c.match()) return false;
    }
    return identity_holds();
  }
};

/// Checks the face theorems exactly: for each k with a nonempty refinement
/// set, the minimizers of x . d over BME(n, k) are exactly the binary k-bridge
/// networks whose splits contain those of N (resistance) or those of S_w(N)
/// (minimum path). For resistance also checks x(N) . d_N = x(N) . d_{L_w(R_w(N))}.
inline FaceReport verify_face_theorem(const PhyloNetwork& net, FaceMetric metric) {
  require_one_nested(net);
  const int n = net.leaf_count();
  detail::require_enumeration_range(n, kMinEnumerationLeaves, kMaxEnumerationLeaves);
  FaceReport rep;
  rep.metric = metric;
  rep.n = n;
  const auto d = metric == FaceMetric::Resistance ? resistance_vector<Rational>(net) : min_path_vector<Rational>(net);
  const SplitSet target = metric == FaceMetric::Resistance ? sigma(net) : support(s_w<Rational>(net).system);
  for (int k = 0; k <= n - 3; ++k) {
    FaceCheck c;
    c.k = k;
    auto m = minimize_functional(d, n, k);
    c.value = m.value;
    c.argmin = std::move(m.argmin);
    for (const auto& v : bme_vertices(n, k)) {
      if (refines(v.splits, target)) c.expected.push_back(v.id);
    }
    rep.checks.push_back(std::move(c));
  }
  const auto x = x_vector_general(net);
  rep.x_dot_d = x.dot(d);
  if (metric == FaceMetric::Resistance) {
    rep.x_dot_exterior = x.dot(min_path_vector<Rational>(weighted_exterior_network(r_w<Rational>(net))));
  }
  return rep;
}

}  // namespace phyres
