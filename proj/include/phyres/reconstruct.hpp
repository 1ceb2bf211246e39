#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "phyres/consistent_orders.hpp"
#include "phyres/exterior.hpp"
#include "phyres/kalmanson.hpp"
#include "phyres/min_path.hpp"
#include "phyres/resistance.hpp"
#include "phyres/sigma.hpp"

namespace phyres {

template <Scalar T>
struct DecompositionResult {
  CircularSplitSystem<T> system;
  double residual = 0;  ///< max |split_metric(system) - d|
};

struct DecompositionOptions {
  double tol = kDefaultTolerance;
  /// Drop negative interval weights instead of rejecting the input (for
  /// rounded published vectors); the residual then shows the misfit.
  bool clamp_negative = false;
};

/// The unique weighted circular split system for a metric that is Kalmanson
/// in `order`. The split on the arc x_i..x_j gets
/// (d(x_{i-1},x_j) + d(x_i,x_{j+1}) - d(x_{i-1},x_{j+1}) - d(x_i,x_j)) / 2.
template <Scalar T>
DecompositionResult<T> circular_decomposition(const DistanceVector<T>& d, const CircularOrder& order,
                                              DecompositionOptions opt = {}) {
  const int n = d.size();
  if (order.size() != n) throw Error(ErrorCode::SizeMismatch, "order and distance vector disagree on n");
  if (!opt.clamp_negative) {
    auto report = is_kalmanson(d, order, opt.tol);
    if (!report.kalmanson()) {
      const auto& v = report.violations.front();
      throw Error(ErrorCode::NotKalmanson, "quadruple (" + std::to_string(v.quad[0]) + "," + std::to_string(v.quad[1]) +
                                               "," + std::to_string(v.quad[2]) + "," + std::to_string(v.quad[3]) +
                                               ") violates the Kalmanson condition by " + format_scalar<T>(v.amount));
    }
  }
  DecompositionResult<T> out;
  out.system.order = order;
  out.system.system.n = n;
  if (n == 2) {
    if (d(1, 2) != T(0)) out.system.system.weights[Split::trivial(2, 1)] = d(1, 2);
    return out;
  }
  auto x = [&](int p) { return order.at(p); };
  for (int i = 1; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      T w = (d(x(i - 1), x(j)) + d(x(i), x(j + 1)) - d(x(i - 1), x(j + 1)) - d(x(i), x(j))) / T(2);
      if (approx_zero<T>(w, opt.tol)) continue;
      if (w < T(0)) {
        if (!opt.clamp_negative) {
          throw Error(ErrorCode::NotKalmanson, "negative interval weight " + format_scalar<T>(w));
        }
        continue;
      }
      std::uint64_t mask = 0;
      for (int p = i; p <= j; ++p) mask |= std::uint64_t{1} << (x(p) - 1);
      out.system.system.weights[Split(n, mask)] = w;
    }
  }
  out.residual = max_abs_difference(split_metric(out.system.system), d);
  return out;
}

namespace detail {

/// An order to decompose a network metric in: the first consistent order for
/// 1-nested networks, otherwise a searched Kalmanson order.
template <Scalar T>
CircularOrder decomposition_order(const PhyloNetwork& net, const DistanceVector<T>& d, double tol) {
  if (is_one_nested(net)) return consistent_orders(net).front();
  return require_kalmanson_order(d, tol);
}

}  // namespace detail

/// R_w: circular decomposition of the resistance metric.
template <Scalar T>
CircularSplitSystem<T> r_w(const PhyloNetwork& net, double tol = kDefaultTolerance) {
  auto d = resistance_vector<T>(net);
  return circular_decomposition(d, detail::decomposition_order(net, d, tol), {tol, false}).system;
}

/// S_w: circular decomposition of the minimum-path metric.
template <Scalar T>
CircularSplitSystem<T> s_w(const PhyloNetwork& net, double tol = kDefaultTolerance) {
  auto d = min_path_vector<T>(net);
  return circular_decomposition(d, detail::decomposition_order(net, d, tol), {tol, false}).system;
}

/// Split weights straight from the network: a bridge contributes its weight,
/// a pair of edges a, x of cycle c contributes a*x / (total weight of c).
template <Scalar T>
CircularSplitSystem<T> r_w_direct(const PhyloNetwork& net) {
  require_one_nested(net);
  auto bd = decompose_blocks(net);
  std::map<int, T> cycle_total;
  for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b) {
    if (bd.blocks[b].kind != BlockKind::Cycle) continue;
    T z(0);
    for (int e : bd.blocks[b].edges) z += from_rational<T>(net.edge(e).weight);
    cycle_total[b] = z;
  }
  CircularSplitSystem<T> out;
  out.system.n = net.leaf_count();
  out.order = consistent_orders(net).front();
  for (const auto& disp : displays(net, bd)) {
    T w;
    if (disp.edges.size() == 1) {
      w = from_rational<T>(net.edge(disp.edges[0]).weight);
    } else {
      const T& z = cycle_total[disp.block];
      if (z == T(0)) continue;
      w = from_rational<T>(net.edge(disp.edges[0]).weight) * from_rational<T>(net.edge(disp.edges[1]).weight) / z;
    }
    auto [it, fresh] = out.system.weights.emplace(disp.split, w);
    if (!fresh) it->second += w;
  }
  for (auto it = out.system.weights.begin(); it != out.system.weights.end();) {
    it = it->second == T(0) ? out.system.weights.erase(it) : std::next(it);
  }
  return out;
}

namespace detail {

template <Scalar T>
T square_root(const T& x, const char* what) {
  if constexpr (is_exact_v<T>) {
    auto r = exact_sqrt(x);
    if (!r) throw Error(ErrorCode::NotInvertible, std::string(what) + " is not the square of a rational");
    return *r;
  } else {
    if (x < 0) throw Error(ErrorCode::NotInvertible, std::string(what) + " is negative");
    return std::sqrt(x);
  }
}

template <Scalar T>
bool close_relative(const T& a, const T& b, double rel) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    return std::fabs(a - b) <= rel * std::max({1.0, std::fabs(a), std::fabs(b)});
  }
}

/// Cycle edge weights a_0..a_(m-1) from the weights s(p, q) = a_p a_q / z of
/// the splits on non-adjacent edge pairs (z = sum of a).
template <Scalar T>
std::vector<T> cycle_weights(int m, const std::function<T(int, int)>& s, double rel) {
  auto at = [&](int p, int q) { return s(((p % m) + m) % m, ((q % m) + m) % m); };
  std::vector<T> t(m);  // t_p = a_p^2 / z
  if (m == 4) {
    // only s02 and s13 are free of bridge contributions: take a0 = a2, a1 = a3
    const T s02 = at(0, 2), s13 = at(1, 3);
    const T g = square_root<T>(s02 * s13, "s02*s13");
    const T a0 = T(2) * (s02 + g);
    const T a1 = T(2) * (s13 + g);
    return {a0, a1, a0, a1};
  }
  for (int p = 0; p < m; ++p) {
    std::vector<T> estimates;
    if (m == 5) {
      estimates.push_back(at(p, p + 2) * at(p + 1, p + 4) * at(p, p + 3) / (at(p + 2, p + 4) * at(p + 1, p + 3)));
    } else {
      for (int q = p + 2; q < p + m - 1; ++q) {
        for (int r = q + 2; r < p + m - 1; ++r) {
          const T den = at(q, r);
          if (den == T(0)) throw Error(ErrorCode::NotInvertible, "zero split weight inside a cycle");
          estimates.push_back(at(p, q) * at(p, r) / den);
        }
      }
    }
    for (const auto& e : estimates) {
      if (!close_relative<T>(e, estimates.front(), rel)) {
        throw Error(ErrorCode::NotInvertible, "cycle split weights are inconsistent across partner choices");
      }
    }
    t[p] = estimates.front();
    if (!(t[p] > T(0))) throw Error(ErrorCode::NotInvertible, "non-positive cycle edge estimate");
  }
  // a_p = sqrt(t_p) * sum_q sqrt(t_q); with r_q = sqrt(t_q / t_0), a_0 = t_0 * sum r.
  std::vector<T> ratio(m);
  T sum(0);
  for (int p = 0; p < m; ++p) {
    ratio[p] = square_root<T>(t[p] / t[0], "cycle edge ratio");
    sum += ratio[p];
  }
  std::vector<T> a(m);
  for (int p = 0; p < m; ++p) a[p] = ratio[p] * t[0] * sum;
  return a;
}

template <Scalar T>
Rational to_rational(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x;
  } else {
    return Rational(x);
  }
}

}  // namespace detail

/// A weighted 1-nested network M with r_w(M) = s.
///
/// M has the shape of L(overline(s)); bridges get their split weight minus the
/// cycle contributions of the same split, cycle edges are solved from the
/// cycle's non-adjacent splits. Zero-weight nontrivial bridges are contracted.
template <Scalar T>
PhyloNetwork invert_to_network(const CircularSplitSystem<T>& s, double rel_tol = 1e-6) {
  const int n = s.n();
  if (!is_faithfully_phylogenetic(s)) {
    throw Error(ErrorCode::NotInvertible, "split system is not faithfully phylogenetic");
  }
  SplitSet full = support(s.system);
  for (int l = 1; l <= n; ++l) full.insert(Split::trivial(n, l));
  auto info = exterior_network_info(full, s.order);
  const PhyloNetwork& shape = info.network;
  auto weight_of = [&](const Split& sp) {
    auto it = s.system.weights.find(sp);
    return it == s.system.weights.end() ? T(0) : it->second;
  };

  std::vector<T> edge_weight(shape.edge_count(), T(0));
  std::map<Split, T> cycle_share;  // contributions of adjacent cycle pairs
  for (const auto& cyc : info.cycles) {
    const int m = static_cast<int>(cyc.gaps.size());
    auto split_at = [&](int p, int q) {
      int a = cyc.gaps[std::min(p, q)], b = cyc.gaps[std::max(p, q)];
      return weight_of(detail::split_of_chord(a, b, s.order));
    };
    auto a = detail::cycle_weights<T>(m, split_at, rel_tol);
    T z(0);
    for (const auto& x : a) z += x;
    for (int p = 0; p < m; ++p) {
      edge_weight[cyc.edges[p]] = a[p];
      int q = (p + 1) % m;
      Split side = detail::split_of_chord(cyc.gaps[std::min(p, q)], cyc.gaps[std::max(p, q)], s.order);
      cycle_share[side] += a[p] * a[q] / z;
    }
  }
  for (const auto& [sp, e] : info.bridge_edge) {
    T w = weight_of(sp) - cycle_share[sp];
    if (approx_zero<T>(w, rel_tol * 1e-3)) w = T(0);
    if (w < T(0)) throw Error(ErrorCode::NotInvertible, "split " + sp.str() + " is lighter than its cycle contributions");
    edge_weight[e] = w;
  }

  // rebuild with weights, contracting zero-weight internal bridges
  std::vector<int> rep(shape.node_count());
  std::iota(rep.begin(), rep.end(), 0);
  std::function<int(int)> find = [&](int v) { return rep[v] == v ? v : rep[v] = find(rep[v]); };
  std::vector<char> contracted(shape.edge_count(), 0);
  for (const auto& [sp, e] : info.bridge_edge) {
    const auto& ed = shape.edge(e);
    if (edge_weight[e] == T(0) && !shape.is_leaf(ed.u) && !shape.is_leaf(ed.v)) {
      contracted[e] = 1;
      rep[find(ed.v)] = find(ed.u);
    }
  }
  NetworkDescription d;
  for (int l = 1; l <= n; ++l) d.leaves.push_back({l, shape.node_id(shape.leaf_node(l))});
  for (int e = 0; e < shape.edge_count(); ++e) {
    if (contracted[e]) continue;
    const auto& ed = shape.edge(e);
    d.edges.push_back({shape.node_id(find(ed.u)), shape.node_id(find(ed.v)), detail::to_rational(edge_weight[e])});
  }
  PhyloNetwork out = validate(d);

  // postcondition: the direct split weights of the result reproduce s
  auto back = r_w_direct<T>(out);
  for (const auto& sp : full) {
    T want = weight_of(sp);
    auto it = back.system.weights.find(sp);
    T got = it == back.system.weights.end() ? T(0) : it->second;
    if (!detail::close_relative<T>(got, want, 1e-9)) {
      throw Error(ErrorCode::NotInvertible, "reconstructed network does not reproduce split " + sp.str());
    }
  }
  if (back.system.weights.size() > full.size()) {
    throw Error(ErrorCode::NotInvertible, "reconstructed network displays extra splits");
  }
  return out;
}

}  // namespace phyres
