#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "phyres/distance.hpp"
#include "phyres/network.hpp"
#include "phyres/split.hpp"

namespace phyres {

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

/// Lines with '#' comments stripped, blank lines dropped; (line number, text).
inline std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(no, line);
  }
  return out;
}

inline Error parse_error(int line, const std::string& what) {
  return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline int parse_int(const std::string& s, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw parse_error(line, "expected an integer, got '" + s + "'");
  return v;
}

inline NetworkDescription parse_network_json(const std::string& text) {
  NetworkDescription d;
  try {
    auto j = nlohmann::json::parse(text);
    for (const auto& l : j.at("leaves")) d.leaves.push_back({l.at("label").get<int>(), l.at("node").get<std::string>()});
    for (const auto& e : j.at("edges")) {
      Rational w = 1;
      if (e.contains("weight")) {
        const auto& x = e.at("weight");
        w = x.is_string() ? parse_rational(x.get<std::string>()) : parse_rational(x.dump());
      }
      d.edges.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(), w});
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("bad network JSON: ") + ex.what());
  }
  return d;
}

}  // namespace detail

/// Network text (`leaf <label> <node>`, `edge <u> <v> [weight]`, '#'
/// comments) or the equivalent JSON object with `leaves` and `edges`.
inline NetworkDescription parse_network_description(const std::string& text) {
  if (auto first = text.find_first_not_of(" \t\r\n"); first != std::string::npos && text[first] == '{') {
    return detail::parse_network_json(text);
  }
  std::istringstream in(text);
  NetworkDescription d;
  for (const auto& [no, line] : detail::content_lines(in)) {
    auto t = detail::tokens(line);
    if (t[0] == "leaf" && t.size() == 3) {
      d.leaves.push_back({detail::parse_int(t[1], no), t[2]});
    } else if (t[0] == "edge" && (t.size() == 3 || t.size() == 4)) {
      d.edges.push_back({t[1], t[2], t.size() == 4 ? parse_rational(t[3]) : Rational(1)});
    } else {
      throw detail::parse_error(no, "expected 'leaf <label> <node>' or 'edge <u> <v> <weight>'");
    }
  }
  return d;
}

inline PhyloNetwork parse_network(const std::string& text) { return validate(parse_network_description(text)); }

/// Weights print exactly, or rounded to `precision` significant digits when
/// it is positive (for networks built from floating data).
inline std::string weight_text(const Rational& w, int precision) {
  return precision > 0 ? format_double(to_double(w), precision) : format_rational(w);
}

inline std::string format_network(const PhyloNetwork& net, int precision = 0) {
  std::string out;
  for (int l = 1; l <= net.leaf_count(); ++l) out += "leaf " + std::to_string(l) + " " + net.node_id(net.leaf_node(l)) + "\n";
  for (const auto& e : net.edges()) {
    out += "edge " + net.node_id(e.u) + " " + net.node_id(e.v) + " " + weight_text(e.weight, precision) + "\n";
  }
  return out;
}

inline nlohmann::json network_json(const PhyloNetwork& net, int precision = 0) {
  nlohmann::json j;
  j["leaves"] = nlohmann::json::array();
  for (int l = 1; l <= net.leaf_count(); ++l) j["leaves"].push_back({{"label", l}, {"node", net.node_id(net.leaf_node(l))}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : net.edges()) {
    j["edges"].push_back({{"u", net.node_id(e.u)}, {"v", net.node_id(e.v)}, {"weight", weight_text(e.weight, precision)}});
  }
  return j;
}

/// Distance vector text: `n <count>` then `i j value` for every pair, or a
/// square matrix (first line n, then n rows, optionally led by a taxon name).
/// Values are read exactly.
inline DistanceVector<Rational> parse_distance(const std::string& text) {
  std::istringstream in(text);
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty distance file");
  auto head = detail::tokens(lines[0].second);
  if (head.size() == 2 && head[0] == "n") {
    const int n = detail::parse_int(head[1], lines[0].first);
    if (n < 2) throw detail::parse_error(lines[0].first, "need n >= 2");
    DistanceVector<Rational> d(n);
    std::vector<char> seen(DistanceVector<Rational>::pair_count(n), 0);
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const auto& [no, line] = lines[k];
      auto t = detail::tokens(line);
      if (t.size() != 3) throw detail::parse_error(no, "expected 'i j value'");
      int i = detail::parse_int(t[0], no), j = detail::parse_int(t[1], no);
      if (i > j) std::swap(i, j);
      if (i < 1 || j > n || i == j) throw detail::parse_error(no, "pair out of range");
      const int idx = DistanceVector<Rational>::index(n, i, j);
      if (seen[idx]) throw detail::parse_error(no, "pair given twice");
      seen[idx] = 1;
      d.set(i, j, parse_rational(t[2]));
    }
    for (char s : seen) {
      if (!s) throw Error(ErrorCode::ParseError, "distance file is missing pairs");
    }
    return d;
  }
  if (head.size() != 1) throw detail::parse_error(lines[0].first, "expected 'n <count>' or a matrix size");
  const int n = detail::parse_int(head[0], lines[0].first);
  if (n < 2) throw detail::parse_error(lines[0].first, "need n >= 2");
  if (static_cast<int>(lines.size()) != n + 1) throw Error(ErrorCode::ParseError, "matrix needs exactly n rows");
  std::vector<std::vector<Rational>> m(n);
  for (int r = 0; r < n; ++r) {
    const auto& [no, line] = lines[r + 1];
    auto t = detail::tokens(line);
    if (static_cast<int>(t.size()) == n + 1) t.erase(t.begin());
    if (static_cast<int>(t.size()) != n) throw detail::parse_error(no, "row needs n values");
    for (const auto& x : t) m[r].push_back(parse_rational(x));
  }
  DistanceVector<Rational> d(n);
  for (int i = 0; i < n; ++i) {
    if (m[i][i] != 0) throw Error(ErrorCode::ParseError, "matrix diagonal must be zero");
    for (int j = i + 1; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw Error(ErrorCode::ParseError, "matrix is not symmetric");
      d.set(i + 1, j + 1, m[i][j]);
    }
  }
  return d;
}

template <Scalar T>
std::string format_distance(const DistanceVector<T>& d, int precision = 6) {
  std::string out = "n " + std::to_string(d.size()) + "\n";
  for (int i = 1; i <= d.size(); ++i) {
    for (int j = i + 1; j <= d.size(); ++j) {
      out += std::to_string(i) + " " + std::to_string(j) + " " + format_scalar(d(i, j), precision) + "\n";
    }
  }
  return out;
}

/// A split-system file: weights are absent for unweighted systems.
struct SplitFile {
  int n = 0;
  std::optional<CircularOrder> order;
  bool weighted = true;
  WeightedSplitSystem<Rational> system;  ///< unweighted systems carry weight 1
};

namespace detail {

inline std::vector<int> parse_labels(const std::string& s, int line) {
  std::vector<int> out;
  std::istringstream in(s);
  for (std::string t; std::getline(in, t, ',');) {
    auto tt = tokens(t);
    if (tt.size() != 1) throw parse_error(line, "bad leaf list '" + s + "'");
    out.push_back(parse_int(tt[0], line));
  }
  return out;
}

}  // namespace detail

/// Header `n <count> order <comma-list or ->`, then `<weight or -> | A | B`.
inline SplitFile parse_splits(const std::string& text) {
  std::istringstream in(text);
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty split file");
  SplitFile f;
  auto head = detail::tokens(lines[0].second);
  if (head.size() != 4 || head[0] != "n" || head[2] != "order") {
    throw detail::parse_error(lines[0].first, "expected 'n <count> order <list or ->'");
  }
  f.n = detail::parse_int(head[1], lines[0].first);
  f.system.n = f.n;
  if (head[3] != "-") {
    auto labels = detail::parse_labels(head[3], lines[0].first);
    if (static_cast<int>(labels.size()) != f.n) throw detail::parse_error(lines[0].first, "order must list every leaf");
    try {
      f.order = CircularOrder(labels);
    } catch (const Error& e) {
      throw detail::parse_error(lines[0].first, e.what());
    }
  }
  std::optional<bool> weighted;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [no, line] = lines[k];
    std::vector<std::string> parts;
    std::istringstream ls(line);
    for (std::string p; std::getline(ls, p, '|');) parts.push_back(p);
    if (parts.size() != 3) throw detail::parse_error(no, "expected '<weight> | side | side'");
    auto w = detail::tokens(parts[0]);
    if (w.size() != 1) throw detail::parse_error(no, "missing weight");
    const bool has_weight = w[0] != "-";
    if (weighted && *weighted != has_weight) throw detail::parse_error(no, "mixes weighted and unweighted splits");
    weighted = has_weight;
    auto a = detail::parse_labels(parts[1], no), b = detail::parse_labels(parts[2], no);
    if (static_cast<int>(a.size() + b.size()) != f.n) throw detail::parse_error(no, "split must cover every leaf once");
    std::uint64_t ma = 0, mb = 0;
    for (int l : a) ma |= std::uint64_t{1} << (l - 1);
    for (int l : b) mb |= std::uint64_t{1} << (l - 1);
    if (a.empty() || b.empty() || (ma & mb)) throw detail::parse_error(no, "sides must be disjoint and non-empty");
    Split s = Split::from_side(f.n, a);
    if (f.system.weights.count(s)) throw detail::parse_error(no, "split " + s.str() + " given twice");
    f.system.weights[s] = has_weight ? parse_rational(w[0]) : Rational(1);
  }
  f.weighted = weighted.value_or(true);
  return f;
}

template <Scalar T>
std::string format_splits(const WeightedSplitSystem<T>& s, const std::optional<CircularOrder>& order, bool weighted = true,
                          int precision = 6) {
  std::string out = "n " + std::to_string(s.n) + " order ";
  if (order) {
    const auto& l = order->labels();
    for (std::size_t i = 0; i < l.size(); ++i) out += (i ? "," : "") + std::to_string(l[i]);
  } else {
    out += "-";
  }
  out += "\n";
  for (const auto& [sp, w] : s.weights) {
    auto text = sp.str();
    const auto bar = text.find('|');
    out += (weighted ? format_scalar(w, precision) : std::string("-")) + " | " + text.substr(0, bar) + " | " + text.substr(bar + 1) + "\n";
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace phyres
