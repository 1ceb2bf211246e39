#pragma once

#include <algorithm>
#include <clocale>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "phyres/phyres.hpp"

namespace phyres::cli {

using nlohmann::json;

struct Options {
  bool json = false;
  int precision = 6;
  double tol = kDefaultTolerance;
};

template <Scalar T>
json scalar_json(const T& x, int precision) {
  if constexpr (is_exact_v<T>) {
    return format_rational(x);
  } else {
    return std::stod(format_double(x, precision));
  }
}

inline json order_json(const CircularOrder& o) { return o.labels(); }

template <Scalar T>
json splits_json(const WeightedSplitSystem<T>& s, const std::optional<CircularOrder>& order, bool weighted, int precision) {
  json j;
  j["n"] = s.n;
  j["order"] = order ? order_json(*order) : json(nullptr);
  j["splits"] = json::array();
  for (const auto& [sp, w] : s.weights) {
    json e{{"a", sp.side_a()}, {"b", sp.side_b()}};
    e["weight"] = weighted ? scalar_json(w, precision) : json(nullptr);
    j["splits"].push_back(e);
  }
  return j;
}

template <Scalar To>
CircularSplitSystem<To> convert_system(const CircularSplitSystem<Rational>& s) {
  CircularSplitSystem<To> out;
  out.order = s.order;
  out.system.n = s.system.n;
  for (const auto& [sp, w] : s.system.weights) out.system.weights[sp] = from_rational<To>(w);
  return out;
}

inline std::string level_name(int level) { return level == kLevelHigher ? "higher" : std::to_string(level); }

/// Runs one CLI invocation. Exit codes: 0 ok, 1 module error, 2 usage error.
class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"Resistance distances, circular splits and 1-nested phylogenetic networks", "phyres"};
    app.require_subcommand(1);
    app.add_flag("--json", opt_.json, "Emit JSON instead of text");
    app.add_option("--precision", opt_.precision, "Significant digits for floating output")->check(CLI::Range(1, 17));
    app.add_option("--tol", opt_.tol, "Absolute tolerance in floating mode");
    setup(app);
    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err_ << "usage error: " << e.what() << "\n";
      return 2;
    }
    try {
      action_();
    } catch (const Error& e) {
      if (opt_.json) {
        const std::string what = e.what();
        const std::string message = what.substr(what.find(": ") + 2);
        err_ << json{{"error", std::string(to_string(e.code()))}, {"message", message}}.dump() << "\n";
      } else {
        err_ << "error: " << e.what() << "\n";
      }
      return 1;
    }
    return 0;
  }

 private:
  void emit(const json& j, const std::string& text) {
    if (opt_.json) {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << text;
    }
  }

  static PhyloNetwork load_network(const std::string& path) { return parse_network(read_file(path)); }

  template <class F>
  void with_scalar(bool exact, F&& f) {
    if (exact) {
      f.template operator()<Rational>();
    } else {
      f.template operator()<double>();
    }
  }

  template <Scalar T>
  DistanceVector<T> load_distance(const std::string& path) {
    return convert<T>(parse_distance(read_file(path)));
  }

  template <Scalar T>
  void emit_splits(const CircularSplitSystem<T>& s, double residual = -1) {
    auto j = splits_json(s.system, s.order, true, opt_.precision);
    if (residual >= 0) j["residual"] = residual;
    emit(j, format_splits(s.system, s.order, true, opt_.precision));
  }

  void setup(CLI::App& app) {
    {
      auto* c = app.add_subcommand("validate", "Check a network file");
      c->add_option("net", net_path_, "Network file")->required();
      c->callback([this] {
        action_ = [this] {
          auto net = load_network(net_path_);
          json j{{"valid", true}, {"leaves", net.leaf_count()}, {"nodes", net.node_count()}, {"edges", net.edge_count()},
                 {"total_weight", format_rational(net.total_weight())}};
          emit(j, "valid: " + std::to_string(net.leaf_count()) + " leaves, " + std::to_string(net.node_count()) + " nodes, " +
                      std::to_string(net.edge_count()) + " edges\n");
        };
      });
    }
    {
      auto* c = app.add_subcommand("classify", "Level, triangle-freeness, blocks and bridges");
      c->add_option("net", net_path_, "Network file")->required();
      c->callback([this] { action_ = [this] { classify_cmd(); }; });
    }
    {
      auto* c = app.add_subcommand("dist", "Leaf distance vector of a network");
      c->add_option("net", net_path_, "Network file")->required();
      c->add_option("--metric", metric_, "resistance or minpath")->check(CLI::IsMember({"resistance", "minpath"}));
      c->add_flag("--exact", exact_, "Rational arithmetic");
      c->callback([this] { action_ = [this] { dist_cmd(); }; });
    }
    {
      auto* c = app.add_subcommand("kalmanson", "Kalmanson check in an order, or a search for one");
      c->add_option("dist", dist_path_, "Distance file")->required();
      auto* o = c->add_option("--order", order_, "Circular order, e.g. 1,2,3,4");
      c->add_option("--search", search_, "exact or heuristic")->check(CLI::IsMember({"exact", "heuristic"}))->excludes(o);
      c->add_flag("--exact", exact_, "Rational arithmetic");
      c->callback([this] { action_ = [this] { kalmanson_cmd(); }; });
    }
    {
      auto* c = app.add_subcommand("decompose", "Circular split decomposition of a Kalmanson distance vector");
      c->add_option("dist", dist_path_, "Distance file")->required();
      c->add_option("--order", order_, "Circular order (searched when omitted)");
      c->add_flag("--exact", exact_, "Rational arithmetic");
      c->add_flag("--clamp", clamp_, "Drop negative weights instead of failing (rounded inputs)");
      c->callback([this] { action_ = [this] { decompose_cmd(); }; });
    }
    for (const char* name : {"rw", "sw"}) {
      auto* c = app.add_subcommand(name, std::string(name) == "rw" ? "Weighted circular splits of the resistance metric"
                                                                   : "Weighted circular splits of the minimum path metric");
      c->add_option("net", net_path_, "Network file")->required();
      c->add_flag("--exact", exact_, "Rational arithmetic");
      c->callback([this, name] {
        action_ = [this, rw = std::string(name) == "rw"] {
          auto net = load_network(net_path_);
          with_scalar(exact_, [&]<Scalar T>() { emit_splits(rw ? r_w<T>(net, opt_.tol) : s_w<T>(net, opt_.tol)); });
        };
      });
    }
    {
      auto* c = app.add_subcommand("sigma", "Splits displayed by a 1-nested network");
      c->add_option("net", net_path_, "Network file")->required();
      c->callback([this] {
        action_ = [this] {
          auto net = load_network(net_path_);
          WeightedSplitSystem<Rational> s;
          s.n = net.leaf_count();
          for (const auto& sp : sigma(net)) s.weights[sp] = 1;
          std::optional<CircularOrder> order = consistent_orders(net).front();
          emit(splits_json(s, order, false, opt_.precision), format_splits(s, order, false));
        };
      });
    }
    {
      auto* c = app.add_subcommand("exterior", "Exterior network of a circular split file (L, or L_w when weighted)");
      c->add_option("splits", splits_path_, "Split file")->required();
      c->add_flag("--unweighted", unweighted_, "Forget weights: L of the positive-weight splits");
      c->callback([this] { action_ = [this] { exterior_cmd(); }; });
    }
    {
      auto* c = app.add_subcommand("invert", "1-nested network whose resistance metric is a weighted circular split system");
      c->add_option("splits", splits_path_, "Split file")->required();
      c->add_flag("--exact", exact_, "Rational arithmetic (fails on irrational cycle weights)");
      c->callback([this] { action_ = [this] { invert_cmd(); }; });
    }
    {
      auto* c = app.add_subcommand("xvector", "BME vertex vector x(N)");
      c->add_option("net", net_path_, "Network file")->required();
      c->add_flag("--general", general_, "Sum over consistent orders (any 1-nested network)");
      c->callback([this] {
        action_ = [this] {
          auto net = load_network(net_path_);
          auto x = general_ ? x_vector_general(net) : x_vector_binary(net);
          emit(json{{"n", x.n}, {"entries", x.entries}}, x.str() + "\n");
        };
      });
    }
    {
      auto* c = app.add_subcommand("bme-min", "Minimize x . d over the vertices of BME(n, k)");
      c->add_option("dist", dist_path_, "Distance file")->required();
      c->add_option("--n", n_, "Leaves")->required();
      c->add_option("--k", k_, "Nontrivial bridges")->required();
      c->add_flag("--exact", exact_, "Rational arithmetic");
      c->callback([this] { action_ = [this] { bme_min_cmd(); }; });
    }
    {
      auto* c = app.add_subcommand("verify-face", "Check the BME face theorems on a weighted 1-nested network");
      c->add_option("net", net_path_, "Network file")->required();
      c->add_option("--metric", metric_, "resistance or minpath")->check(CLI::IsMember({"resistance", "minpath"}));
      c->callback([this] { action_ = [this] { verify_face_cmd(); }; });
    }
    {
      auto* c = app.add_subcommand("count", "Count binary 1-nested (level 1) or 2-nested (level 2) networks");
      c->add_option("--level", level_, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
      c->add_option("--n", n_, "Leaves")->required();
      c->add_option("--k", k_, "Nontrivial bridges (level 1 only)");
      c->callback([this] { action_ = [this] { count_cmd(); }; });
    }
    {
      auto* c = app.add_subcommand("jc", "Jukes-Cantor distance");
      c->add_option("--m", m_, "Sequence length")->required();
      auto* v = c->add_option("--c", c_, "Matching sites");
      c->add_option("--csv", steps_, "Emit a (c, D) curve with this many samples")->excludes(v);
      c->callback([this] { action_ = [this] { jc_cmd(false); }; });
    }
    {
      auto* c = app.add_subcommand("jc-parallel", "Matching sites per parallel branch halving the Jukes-Cantor distance");
      c->add_option("--m", m_, "Sequence length")->required();
      auto* v = c->add_option("--c1", c_, "Matching sites on the single branch");
      c->add_option("--csv", steps_, "Emit a (c1, c) curve with this many samples")->excludes(v);
      c->callback([this] { action_ = [this] { jc_cmd(true); }; });
    }
    {
      auto* c = app.add_subcommand("scan", "Seeded random scans gathering evidence on open conjectures");
      c->add_option("--conjecture", conjecture_, "outer-planar, faithful or two-nested")
          ->required()
          ->check(CLI::IsMember({"outer-planar", "faithful", "two-nested"}));
      c->add_option("--trials", trials_, "Number of random instances");
      c->add_option("--seed", seed_, "Generator seed");
      c->callback([this] { action_ = [this] { scan_cmd(); }; });
    }
  }

  void classify_cmd() {
    auto net = load_network(net_path_);
    auto c = classify(net);
    auto br = bridges(net);
    json blocks = json::array();
    std::string text = "level " + level_name(c.level) + "\ntriangle_free " + (c.triangle_free ? "yes" : "no") + "\nbinary " +
                       (is_binary(net) ? "yes" : "no") + "\nbridges " + std::to_string(br.trivial.size()) + " trivial, " +
                       std::to_string(br.nontrivial.size()) + " nontrivial\n";
    for (const auto& b : c.blocks.blocks) {
      if (b.kind == BlockKind::Bridge) continue;
      std::string nodes;
      for (int v : b.kind == BlockKind::Cycle ? b.ring : b.nodes) nodes += (nodes.empty() ? "" : " ") + net.node_id(v);
      text += std::string(to_string(b.kind)) + " " + std::to_string(b.edges.size()) + " edges: " + nodes + "\n";
      blocks.push_back({{"kind", std::string(to_string(b.kind))}, {"edges", b.edges.size()}});
    }
    json j{{"level", level_name(c.level)}, {"triangle_free", c.triangle_free}, {"binary", is_binary(net)},
           {"trivial_bridges", br.trivial.size()}, {"nontrivial_bridges", br.nontrivial.size()}, {"blocks", blocks}};
    emit(j, text);
  }

  void dist_cmd() {
    auto net = load_network(net_path_);
    with_scalar(exact_, [&]<Scalar T>() {
      auto d = metric_ == "minpath" ? min_path_vector<T>(net) : resistance_vector<T>(net);
      json e = json::array();
      for (const auto& x : d.entries()) e.push_back(scalar_json(x, opt_.precision));
      emit(json{{"n", d.size()}, {"metric", metric_}, {"entries", e}}, format_distance(d, opt_.precision));
    });
  }

  template <Scalar T>
  void kalmanson_report(const DistanceVector<T>& d, const CircularOrder& order, json extra = json::object()) {
    auto rep = is_kalmanson(d, order, opt_.tol);
    json j = extra;
    j["order"] = order_json(order);
    j["kalmanson"] = rep.kalmanson();
    j["violations"] = rep.violations.size();
    j["equalities"] = rep.equalities;
    j["max_violation"] = scalar_json(rep.max_violation, opt_.precision);
    std::string text = "order " + order.str() + "\nkalmanson " + (rep.kalmanson() ? "yes" : "no") + "\nviolations " +
                       std::to_string(rep.violations.size()) + "\nequalities " + std::to_string(rep.equalities) + "\n";
    if (!rep.kalmanson()) text += "max_violation " + format_scalar(rep.max_violation, opt_.precision) + "\n";
    emit(j, text);
  }

  void kalmanson_cmd() {
    with_scalar(exact_, [&]<Scalar T>() {
      auto d = load_distance<T>(dist_path_);
      if (!order_.empty()) {
        kalmanson_report(d, parse_order(order_));
        return;
      }
      auto mode = search_ == "exact" ? OrderSearch::Exact : OrderSearch::Heuristic;
      auto res = find_kalmanson_order(d, mode, opt_.tol);
      if (!res.order) {
        throw Error(ErrorCode::NotFound, "no Kalmanson order after " + std::to_string(res.orders_examined) +
                                             " orders; best " + res.best_order.str() + " has maximum violation " +
                                             format_scalar(res.best_max_violation, opt_.precision));
      }
      kalmanson_report(d, *res.order, json{{"orders_examined", res.orders_examined}});
    });
  }

  void decompose_cmd() {
    with_scalar(exact_, [&]<Scalar T>() {
      auto d = load_distance<T>(dist_path_);
      auto order = order_.empty() ? require_kalmanson_order(d, opt_.tol) : parse_order(order_);
      auto res = circular_decomposition(d, order, {opt_.tol, clamp_});
      emit_splits(res.system, to_double(res.residual));
    });
  }

  SplitFile load_splits() {
    auto f = parse_splits(read_file(splits_path_));
    if (!f.order) throw Error(ErrorCode::PreconditionViolated, "split file must name a circular order");
    return f;
  }

  void exterior_cmd() {
    auto f = load_splits();
    PhyloNetwork net;
    if (unweighted_ || !f.weighted) {
      // L needs every trivial split; they are implied
      SplitSet s = support(f.system);
      for (int l = 1; l <= f.n; ++l) s.insert(Split::trivial(f.n, l));
      net = exterior_network(s, *f.order);
    } else {
      net = weighted_exterior_network(CircularSplitSystem<Rational>{f.system, *f.order});
    }
    json j = network_json(net);
    j["id"] = canonical_form(net);
    emit(j, format_network(net));
  }

  void invert_cmd() {
    auto f = load_splits();
    if (!f.weighted) throw Error(ErrorCode::PreconditionViolated, "inversion needs a weighted split system");
    with_scalar(exact_, [&]<Scalar T>() {
      auto net = invert_to_network(convert_system<T>(CircularSplitSystem<Rational>{f.system, *f.order}));
      const int precision = is_exact_v<T> ? 0 : opt_.precision;
      emit(network_json(net, precision), format_network(net, precision));
    });
  }

  void bme_min_cmd() {
    with_scalar(exact_, [&]<Scalar T>() {
      auto d = load_distance<T>(dist_path_);
      auto res = minimize_functional(d, n_, k_, opt_.tol);
      std::string text = "value " + format_scalar(res.value, opt_.precision) + "\ncount " + std::to_string(res.count) +
                         "\nargmin " + std::to_string(res.argmin.size()) + "\n";
      for (const auto& id : res.argmin) text += id + "\n";
      emit(json{{"value", scalar_json(res.value, opt_.precision)}, {"argmin", res.argmin}, {"count", res.count}}, text);
    });
  }

  void verify_face_cmd() {
    auto net = load_network(net_path_);
    auto rep = verify_face_theorem(net, metric_ == "minpath" ? FaceMetric::MinPath : FaceMetric::Resistance);
    json checks = json::array();
    std::string text = "metric " + metric_ + "\nk value argmin refinements result\n";
    for (const auto& c : rep.checks) {
      const std::string result = c.vacuous() ? "vacuous" : c.match() ? "match" : "MISMATCH";
      text += std::to_string(c.k) + " " + format_double(to_double(c.value), opt_.precision) + " " +
              std::to_string(c.argmin.size()) + " " + std::to_string(c.expected.size()) + " " + result + "\n";
      checks.push_back({{"k", c.k}, {"value", format_rational(c.value)}, {"argmin", c.argmin}, {"refinements", c.expected},
                        {"result", result}});
    }
    json j{{"metric", metric_}, {"n", rep.n}, {"checks", checks}, {"x_dot_d", format_rational(rep.x_dot_d)},
           {"passed", rep.passed()}};
    text += "x.d " + format_rational(rep.x_dot_d) + "\n";
    if (rep.x_dot_exterior) {
      j["x_dot_exterior"] = format_rational(*rep.x_dot_exterior);
      j["identity"] = rep.identity_holds();
      text += "x.d_exterior " + format_rational(*rep.x_dot_exterior) + (rep.identity_holds() ? " (equal)\n" : " (DIFFERENT)\n");
    }
    text += std::string("result ") + (rep.passed() ? "PASS" : "FAIL") + "\n";
    emit(j, text);
  }

  void count_cmd() {
    if (level_ == 1) {
      json rows = json::array();
      std::string text = "k enumerated closed_form\n";
      for (int k = 0; k <= n_ - 3; ++k) {
        if (k_ >= 0 && k != k_) continue;
        const auto got = enumerate_binary_1nested(n_, k).size();
        const auto want = binary_one_nested_count(n_, k);
        rows.push_back({{"k", k}, {"count", got}, {"closed_form", want.str()}});
        text += std::to_string(k) + " " + std::to_string(got) + " " + want.str() + "\n";
      }
      emit(json{{"level", 1}, {"n", n_}, {"rows", rows}}, text);
      return;
    }
    auto e = enumerate_binary_2nested(n_);
    json rows = json::array();
    std::string text = "count " + std::to_string(e.count()) + "\nskeletons " + std::to_string(e.breakdown.size()) +
                       "\nlevel1_structures " + std::to_string(skeleton_census(n_)) +
                       "\nexterior_networks count structure\n";
    for (const auto& r : e.breakdown) {
      rows.push_back({{"structure", r.summary}, {"skeleton", r.skeleton}, {"exterior_networks", r.exterior_networks}, {"count", r.count}});
      text += std::to_string(r.exterior_networks) + " " + std::to_string(r.count) + " " + r.summary + "\n";
    }
    emit(json{{"level", 2}, {"n", n_}, {"count", e.count()}, {"skeletons", e.breakdown.size()},
                {"level1_structures", skeleton_census(n_)}, {"breakdown", rows}}, text);
  }

  void jc_cmd(bool parallel) {
    if (steps_ > 0) {
      auto curve = parallel ? jc_parallel_curve(m_, steps_) : jc_curve(m_, steps_);
      std::string text = parallel ? "c1,c\n" : "c,D\n";
      json pts = json::array();
      for (auto [x, y] : curve) {
        text += format_double(x, opt_.precision) + "," + format_double(y, opt_.precision) + "\n";
        pts.push_back({std::stod(format_double(x, opt_.precision)), std::stod(format_double(y, opt_.precision))});
      }
      emit(json{{"m", m_}, {"points", pts}}, text);
      return;
    }
    if (c_ < 0) throw Error(ErrorCode::DomainError, parallel ? "give --c1 or --csv" : "give --c or --csv");
    const double v = parallel ? jc_parallel_sites(c_, m_) : jc_distance(c_, m_);
    const char* name = parallel ? "c" : "D";
    emit(json{{"m", m_}, {parallel ? "c1" : "c", c_}, {name, std::stod(format_double(v, opt_.precision))}},
         std::string(name) + " " + format_double(v, opt_.precision) + "\n");
  }

  void scan_cmd();

  std::ostream& out_;
  std::ostream& err_;
  Options opt_;
  std::function<void()> action_;
  std::string net_path_, dist_path_, splits_path_, order_, search_ = "heuristic", metric_ = "resistance", conjecture_;
  bool exact_ = false, clamp_ = false, unweighted_ = false, general_ = false;
  int n_ = 0, k_ = -1, level_ = 1, steps_ = 0, trials_ = 100;
  double m_ = 0, c_ = -1;
  std::uint64_t seed_ = 1;
};

/// A 1-nested network with one or two chords added inside its cycles, so
/// level 2 and still outer planar; nullopt if the draws found no long cycle.
inline std::optional<std::pair<PhyloNetwork, PhyloNetwork>> chorded_network(Random& rng, int n, int chords) {
  RandomNetworkOptions opt;
  opt.cycle_percent = 90;
  for (int attempt = 0; attempt < 20; ++attempt) {
    auto base = random_one_nested(rng, n, opt);
    auto net = base;
    for (int c = 0; c < chords; ++c) net = add_random_chord(rng, net);
    if (classify(net).level == 2) return std::make_pair(base, net);
  }
  return std::nullopt;
}

/// Each trial draws a random instance, tests the conjecture's claim, and
/// logs one line; the header records the seed.
inline void Runner::scan_cmd() {
  Random rng(seed_);
  std::string text = "# scan " + conjecture_ + " trials " + std::to_string(trials_) + " seed " + std::to_string(seed_) + "\n";
  json log = json::array();
  int supported = 0, against = 0, skipped = 0;
  for (int t = 0; t < trials_; ++t) {
    const int n = rng.uniform(4, 7);
    std::string verdict, detail;
    if (conjecture_ == "outer-planar") {
      // chords drawn inside their cycle keep the network outer planar, with
      // the exterior order of the chordless network
      auto drawn = chorded_network(rng, n, rng.uniform(1, 2));
      if (!drawn) {
        ++skipped;
        text += std::to_string(t) + " n=" + std::to_string(n) + " no-long-cycle\n";
        continue;
      }
      const auto& [base, net] = *drawn;
      auto order = consistent_orders(base).front();
      auto rep = is_kalmanson(resistance_vector<Rational>(net), order);
      verdict = rep.kalmanson() ? "kalmanson" : "VIOLATION";
      detail = "level " + level_name(classify(net).level) + " order " + order.str();
      if (!rep.kalmanson()) detail += " max_violation " + format_rational(rep.max_violation);
      (rep.kalmanson() ? supported : against)++;
    } else if (conjecture_ == "faithful") {
      // random circular split system; faithful ones should invert to a network
      std::vector<int> labels(n);
      for (int i = 0; i < n; ++i) labels[i] = i + 1;
      rng.shuffle(labels);
      CircularOrder order(labels);
      CircularSplitSystem<Rational> s;
      s.order = order;
      s.system.n = n;
      for (int i = 1; i < n; ++i) {
        for (int j = i; j < n; ++j) {
          const bool trivial = i == j || (i == 1 && j == n - 1);
          if (!trivial && !rng.chance(30)) continue;
          std::uint64_t mask = 0;
          for (int p = i; p <= j; ++p) mask |= std::uint64_t{1} << (order[p] - 1);
          s.system.weights[Split(n, mask)] = random_weight(rng, WeightKind::Integer);
        }
      }
      for (int l = 1; l <= n; ++l) s.system.weights.emplace(Split::trivial(n, l), Rational(1));
      if (!is_faithfully_phylogenetic(s)) {
        verdict = "not-faithful";
        ++skipped;
      } else {
        try {
          auto net = invert_to_network(convert_system<double>(s));
          const bool same = max_abs_difference(resistance_vector<double>(net), split_metric(convert_system<double>(s).system)) < 1e-6;
          verdict = same ? "realized" : "MISMATCH";
          (same ? supported : against)++;
        } catch (const Error& e) {
          verdict = "NOT-REALIZED";
          detail = e.what();
          ++against;
        }
      }
      detail += (detail.empty() ? "" : " ") + std::to_string(s.system.weights.size()) + " splits order " + order.str();
    } else {
      // 2-nested: Kalmanson resistance, and a 1-nested network with the same resistances
      auto drawn = chorded_network(rng, n, 1);
      if (!drawn) {
        verdict = "no-long-cycle";
        ++skipped;
      } else {
        auto d = resistance_vector<double>(drawn->second);
        auto res = find_kalmanson_order(d, OrderSearch::Heuristic, 1e-9);
        if (!res.order) {
          verdict = "NOT-KALMANSON";
          detail = "max_violation " + format_double(res.best_max_violation, opt_.precision);
          ++against;
        } else {
          try {
            auto s = circular_decomposition(d, *res.order).system;
            auto twin = invert_to_network(s);
            const double gap = max_abs_difference(resistance_vector<double>(twin), d);
            verdict = gap < 1e-6 ? "1-nested-twin" : "MISMATCH";
            detail = "order " + res.order->str();
            (gap < 1e-6 ? supported : against)++;
          } catch (const Error& e) {
            verdict = "kalmanson-no-twin";
            detail = e.what();
            ++against;
          }
        }
      }
    }
    text += std::to_string(t) + " n=" + std::to_string(n) + " " + verdict + (detail.empty() ? "" : " " + detail) + "\n";
    log.push_back({{"trial", t}, {"n", n}, {"verdict", verdict}, {"detail", detail}});
  }
  text += "# supported " + std::to_string(supported) + " against " + std::to_string(against) + " skipped " +
          std::to_string(skipped) + "\n";
  emit(json{{"conjecture", conjecture_}, {"trials", trials_}, {"seed", seed_}, {"supported", supported},
            {"against", against}, {"skipped", skipped}, {"log", log}},
       text);
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Runner(out, err).run(args);
}

}  // namespace phyres::cli
