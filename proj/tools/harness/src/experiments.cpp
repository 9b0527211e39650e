#include "gromov/harness/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>

#include "gromov/acquisition.hpp"
#include "gromov/combination.hpp"
#include "gromov/format.hpp"
#include "gromov/graph_io.hpp"
#include "gromov/metrics.hpp"
#include "gromov/placement.hpp"
#include "gromov/spectral.hpp"
#include "gromov/harness/parallel.hpp"

namespace gromov::harness {

namespace {

std::vector<std::string> names_except(const WeightedGraph& graph, NodeId skip) {
  std::vector<std::string> out;
  for (NodeId x = 0; x < graph.size(); ++x) {
    if (x != skip) out.push_back(graph.name(x));
  }
  return out;
}

RngSeed draw_seed(Engine& engine, std::uint64_t stream) { return {engine(), stream}; }

NodeId uniform_node(Engine& engine, const WeightedGraph& graph) {
  return std::uniform_int_distribution<NodeId>(0, graph.size() - 1)(engine);
}

std::string fmt(double value) { return format_double(value); }
std::string fmt(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string();
}
std::string fmt(std::size_t value) { return std::to_string(value); }
std::string fmt(bool value) { return value ? "1" : "0"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

RngSeed trial_seed(std::uint64_t seed, std::size_t series, std::size_t trial) {
  return {seed, (static_cast<std::uint64_t>(series) << 32) | static_cast<std::uint64_t>(trial)};
}

WeightedGraph trial_graph(const GraphSpec& spec, bool unit_weights, RngSeed seed) {
  if (const auto* path = std::get_if<std::filesystem::path>(&spec.source)) {
    return read_graph(*path, {unit_weights});
  }
  return generate_graph(std::get<GraphKind>(spec.source), seed);
}

ApproxPathResult approx_path_trial(const WeightedGraph& graph, const DelayModel& delay,
                                   RngSeed seed, std::size_t grid_steps) {
  if (graph.size() < 2) throw Error("approx-path needs at least two nodes");
  Engine engine = make_engine(seed);
  const NodeId v = uniform_node(engine, graph);
  const auto delays = sample_delays(graph, delay, draw_seed(engine, 1));
  const std::string& root = graph.name(v);
  const auto base_set = names_except(graph, v);
  const auto matrix_of = [&](WeightedTree tree) {
    return gromov_matrix(Base(std::move(tree), root, base_set));
  };
  const GromovMatrix target = matrix_of(shortest_path_tree(graph, v, delays));
  const GromovMatrix m0 = matrix_of(bfs_tree(graph, v, RandomOrder{draw_seed(engine, 2)}));
  const GromovMatrix m1 = matrix_of(bfs_tree(graph, v, RandomOrder{draw_seed(engine, 3)}));
  const GromovMatrix diag = m1.diagonal();

  ApproxPathResult r{spectral_norm(target.entries() - m0.entries()),
                     std::numeric_limits<double>::infinity(), 0.0};
  const std::array<GromovMatrix, 2> bfs_pair{m0, m1};
  for (std::size_t a = 0; a <= grid_steps; ++a) {
    const auto alpha = CombinationWeights::pair(static_cast<double>(a) / grid_steps);
    const std::array<GromovMatrix, 2> with_diag{g_convex(bfs_pair, alpha), diag};
    for (std::size_t b = 0; b <= grid_steps; ++b) {
      const auto beta = CombinationWeights::pair(static_cast<double>(b) / grid_steps);
      const GromovMatrix m = g_convex(with_diag, beta);
      r.d = std::min(r.d, spectral_norm(target.entries() - m.entries()));
    }
  }
  if (r.d > 0.0) {
    r.ratio = (r.d0 - r.d) / r.d;
  } else {
    r.ratio = r.d0 > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return r;
}

AcqOrderResult acq_order_trial(const WeightedGraph& graph, const DelayModel& delay,
                               RngSeed seed, const ExperimentConfig& config) {
  if (graph.size() < config.base_nodes + 1) {
    throw Error("acq-order needs more than base_nodes = " +
                std::to_string(config.base_nodes) + " nodes");
  }
  Engine engine = make_engine(seed);
  const NodeId s = uniform_node(engine, graph);
  std::vector<NodeId> others;
  for (NodeId x = 0; x < graph.size(); ++x) {
    if (x != s) others.push_back(x);
  }
  std::vector<NodeId> chosen;
  std::sample(others.begin(), others.end(), std::back_inserter(chosen), config.base_nodes,
              engine);
  std::vector<std::string> labels;
  for (NodeId x : chosen) labels.push_back(graph.name(x));

  std::uint64_t stream = 0;
  const auto sample = [&] {
    const auto delays = sample_delays(graph, delay, draw_seed(engine, ++stream));
    return gromov_matrix(Base(shortest_path_tree(graph, s, delays), graph.name(s), labels));
  };
  std::vector<GromovMatrix> truth;
  for (std::size_t i = 0; i < config.samples; ++i) truth.push_back(sample());
  std::vector<GromovMatrix> sampled;
  for (std::size_t i = 0; i < config.sampled_trees; ++i) sampled.push_back(sample());

  const Matrix p = on_path_frequencies(truth);
  const Matrix p_gromov =
      on_path_frequencies(synthesize_family(sampled, {config.theta_step}));
  const Matrix p_sampled = on_path_frequencies(sampled);
  std::vector<double> truths, gromov, raw;
  for (Eigen::Index u = 0; u < p.rows(); ++u) {
    for (Eigen::Index v = 0; v < p.rows(); ++v) {
      if (u == v) continue;
      truths.push_back(p(u, v));
      gromov.push_back(p_gromov(u, v));
      raw.push_back(p_sampled(u, v));
    }
  }
  const auto a = order_accuracy(gromov, truths);
  const auto b = order_accuracy(raw, truths);
  return {s, a.accuracy, b.accuracy, a.used, a.excluded};
}

SnapshotTrialResult snapshot_trial(const WeightedGraph& graph, const DelayModel& delay,
                                   RngSeed seed, const ExperimentConfig& config) {
  Engine engine = make_engine(seed);
  const NodeId source = uniform_node(engine, graph);
  const auto delays = sample_delays(graph, delay, draw_seed(engine, 1));
  const auto spread = dijkstra(graph, source, delays);
  const double fraction =
      std::uniform_real_distribution<double>(config.infected_min, config.infected_max)(engine);
  const auto count = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(graph.size()))), 1,
      graph.size());
  const std::vector<NodeId> infected(spread.order.begin(), spread.order.begin() + count);

  const SnapshotOptions options{config.direction, config.candidates};
  const auto bfs = source_estimate_snapshot(graph, infected,
                                            BfsHeuristic{draw_seed(engine, 2)}, options);
  const auto gromov =
      source_estimate_snapshot(graph, infected, GromovMethod{config.grid_steps}, options);
  const auto distance = dijkstra(graph, source).distance;
  const auto outcome = [&](const SnapshotResult& r) {
    const std::size_t rank = rank_of(r, source);
    const std::size_t n = r.ranking.size();
    const NodeId estimate = r.ranking.front().node;
    return SnapshotOutcome{estimate, distance[estimate], rank, rank_percentile(rank, n),
                           in_top_fraction(rank, n, config.top_fraction)};
  };
  return {source, count, outcome(bfs), outcome(gromov), gromov.corners_included};
}

PlacementTrialResult placement_trial(const WeightedGraph& graph, RngSeed seed,
                                     const ExperimentConfig& config) {
  Engine engine = make_engine(seed);
  PlacementProblem problem;
  problem.demand = pareto_demand(graph.size(), draw_seed(engine, 1));
  problem.k = config.k > 0
                  ? config.k
                  : std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(
                                                 config.k_fraction * graph.size())));
  problem.eta = config.eta;
  problem.max_iterations = config.max_iterations;
  const auto greedy = place_greedy(graph, problem);
  const auto gromov = place_gromov(graph, problem, draw_seed(engine, 2), config.grid_steps);
  PlacementTrialResult r;
  r.k = problem.k;
  r.cost_greedy = greedy.step_costs.back();
  r.cost_gromov = gromov.cost;
  r.cost_gromov_check = placement_cost(graph, problem.demand, gromov.centers);
  r.iterations = gromov.iterations;
  r.converged = gromov.converged;
  r.greedy_monotone =
      std::is_sorted(greedy.step_costs.rbegin(), greedy.step_costs.rend());
  return r;
}

std::string Table::csv() const {
  std::string out;
  const auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_field(fields[i]);
    }
    out += '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

namespace {

struct Series {
  const GraphSpec* graph;
  const DelaySpec* delay;
  std::string name() const {
    return delay == nullptr ? graph->text : graph->text + " " + delay->text;
  }
};

std::vector<Series> series_of(const ExperimentConfig& config) {
  std::vector<Series> out;
  for (const auto& g : config.graphs) {
    if (config.kind == ExperimentKind::kPlacement) {
      out.push_back({&g, nullptr});
      continue;
    }
    for (const auto& d : config.delays) out.push_back({&g, &d});
  }
  return out;
}

struct Stats {
  std::vector<double> values;
  void add(double v) { values.push_back(v); }
  std::optional<double> mean() const { return gromov::mean(values); }
  std::optional<double> se() const { return standard_error(values); }
};

// Every trial row starts with series, graph, delay, trial.
std::vector<std::string> row_head(const Series& s, std::size_t trial) {
  return {s.name(), s.graph->text, s.delay ? s.delay->text : "", fmt(trial)};
}

void add_plot(Table& plot, const std::string& series, const std::string& metric, double x,
              const Stats& y) {
  plot.rows.push_back({series, metric, fmt(x), fmt(y.mean()), fmt(y.se())});
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config, std::size_t jobs) {
  const auto all_series = series_of(config);
  std::vector<std::optional<WeightedGraph>> loaded(all_series.size());
  for (std::size_t s = 0; s < all_series.size(); ++s) {
    if (all_series[s].graph->is_file()) {
      loaded[s] = trial_graph(*all_series[s].graph, config.unit_weights, {});
    }
  }
  const std::size_t count = all_series.size() * config.trials;
  const auto graph_for = [&](std::size_t s, std::size_t t) {
    if (loaded[s]) return *loaded[s];
    // The graph draw uses its own stream family, apart from trial seeds.
    return trial_graph(*all_series[s].graph, config.unit_weights,
                       {config.seed ^ 0x9e3779b97f4a7c15ULL, trial_seed(0, s, t).stream});
  };

  ExperimentReport report;
  report.plotdata.header = {"series", "metric", "x", "y", "stderr"};
  const std::vector<std::string> head{"series", "graph", "delay", "trial"};
  const auto with_head = [&](std::vector<std::string> tail) {
    auto h = head;
    h.insert(h.end(), tail.begin(), tail.end());
    return h;
  };

  switch (config.kind) {
    case ExperimentKind::kApproxPath: {
      std::vector<ApproxPathResult> results(count);
      parallel_for(count, jobs, [&](std::size_t i) {
        const std::size_t s = i / config.trials, t = i % config.trials;
        results[i] = approx_path_trial(graph_for(s, t), all_series[s].delay->model,
                                       trial_seed(config.seed, s, t), config.grid_steps);
      });
      report.trials.header = with_head({"d0", "d", "ratio"});
      report.summary.header = {"series", "graph", "delay", "trials", "mean_d0", "mean_d",
                               "mean_ratio", "stderr_ratio", "infinite_ratios",
                               "all_d_le_d0"};
      for (std::size_t s = 0; s < all_series.size(); ++s) {
        Stats d0, d, ratio;
        std::size_t infinite = 0;
        bool bounded = true;
        for (std::size_t t = 0; t < config.trials; ++t) {
          const auto& r = results[s * config.trials + t];
          auto row = row_head(all_series[s], t);
          row.insert(row.end(), {fmt(r.d0), fmt(r.d), fmt(r.ratio)});
          report.trials.rows.push_back(std::move(row));
          d0.add(r.d0);
          d.add(r.d);
          if (std::isfinite(r.ratio)) {
            ratio.add(r.ratio);
          } else {
            ++infinite;
          }
          bounded = bounded && r.d <= r.d0;
        }
        const auto& sr = all_series[s];
        report.summary.rows.push_back({sr.name(), sr.graph->text, sr.delay->text,
                                       fmt(config.trials), fmt(d0.mean()), fmt(d.mean()),
                                       fmt(ratio.mean()), fmt(ratio.se()), fmt(infinite),
                                       fmt(bounded)});
        add_plot(report.plotdata, sr.graph->text, "ratio", sr.delay->location(), ratio);
      }
      break;
    }
    case ExperimentKind::kAcqOrder: {
      std::vector<AcqOrderResult> results(count);
      std::vector<double> density(count);
      parallel_for(count, jobs, [&](std::size_t i) {
        const std::size_t s = i / config.trials, t = i % config.trials;
        const auto graph = graph_for(s, t);
        const double n = static_cast<double>(graph.size());
        density[i] = 2.0 * static_cast<double>(graph.edge_count()) / n / n;
        results[i] = acq_order_trial(graph, all_series[s].delay->model,
                                     trial_seed(config.seed, s, t), config);
      });
      report.trials.header = with_head({"source", "accuracy_gromov", "accuracy_sampled",
                                        "triples_used", "triples_excluded"});
      report.summary.header = {"series", "graph", "delay", "trials", "degree_node_ratio",
                               "mean_accuracy_gromov", "stderr_accuracy_gromov",
                               "mean_accuracy_sampled", "stderr_accuracy_sampled"};
      for (std::size_t s = 0; s < all_series.size(); ++s) {
        Stats gromov, sampled, ratio;
        for (std::size_t t = 0; t < config.trials; ++t) {
          const std::size_t i = s * config.trials + t;
          const auto& r = results[i];
          auto row = row_head(all_series[s], t);
          row.insert(row.end(), {fmt(r.source), fmt(r.accuracy_gromov),
                                 fmt(r.accuracy_sampled), fmt(r.used), fmt(r.excluded)});
          report.trials.rows.push_back(std::move(row));
          if (r.used > 0) {
            gromov.add(r.accuracy_gromov);
            sampled.add(r.accuracy_sampled);
          }
          ratio.add(density[i]);
        }
        const auto& sr = all_series[s];
        const double x = ratio.mean().value_or(0.0);
        report.summary.rows.push_back({sr.name(), sr.graph->text, sr.delay->text,
                                       fmt(config.trials), fmt(x), fmt(gromov.mean()),
                                       fmt(gromov.se()), fmt(sampled.mean()),
                                       fmt(sampled.se())});
        add_plot(report.plotdata, sr.name(), "accuracy_gromov", x, gromov);
        add_plot(report.plotdata, sr.name(), "accuracy_sampled", x, sampled);
      }
      break;
    }
    case ExperimentKind::kSourceSnapshot: {
      std::vector<SnapshotTrialResult> results(count);
      std::vector<std::size_t> sizes(count);
      parallel_for(count, jobs, [&](std::size_t i) {
        const std::size_t s = i / config.trials, t = i % config.trials;
        const auto graph = graph_for(s, t);
        sizes[i] = graph.size();
        results[i] = snapshot_trial(graph, all_series[s].delay->model,
                                    trial_seed(config.seed, s, t), config);
      });
      report.trials.header =
          with_head({"method", "source", "infected", "estimate", "error_distance", "rank",
                     "rank_percentile", "hit", "corners_included"});
      report.summary.header = {"series", "graph", "delay", "trials", "mean_error_bfs",
                               "mean_error_gromov", "error_reduction", "accuracy_bfs",
                               "accuracy_gromov", "detection_improvement",
                               "corners_always_included"};
      for (std::size_t s = 0; s < all_series.size(); ++s) {
        std::vector<SnapshotTrial> paired;
        bool corners = true;
        Stats size, hit_b, hit_g;
        for (std::size_t t = 0; t < config.trials; ++t) {
          const std::size_t i = s * config.trials + t;
          const auto& r = results[i];
          for (const auto& [method, o] :
               {std::pair{"bfs", r.bfs}, std::pair{"gromov", r.gromov}}) {
            auto row = row_head(all_series[s], t);
            row.insert(row.end(),
                       {method, fmt(r.source), fmt(r.infected), fmt(o.estimate),
                        fmt(o.error_distance), fmt(o.rank), fmt(o.rank_percentile),
                        fmt(o.hit), fmt(r.corners_included)});
            report.trials.rows.push_back(std::move(row));
          }
          paired.push_back(
              {r.bfs.error_distance, r.gromov.error_distance, r.bfs.hit, r.gromov.hit});
          corners = corners && r.corners_included;
          size.add(static_cast<double>(sizes[i]));
          hit_b.add(r.bfs.hit ? 1.0 : 0.0);
          hit_g.add(r.gromov.hit ? 1.0 : 0.0);
        }
        const auto rep = evaluate_snapshot(paired);
        const auto& sr = all_series[s];
        report.summary.rows.push_back(
            {sr.name(), sr.graph->text, sr.delay->text, fmt(config.trials),
             fmt(rep.mean_error_bfs), fmt(rep.mean_error_gromov), fmt(rep.error_reduction),
             fmt(rep.accuracy_bfs), fmt(rep.accuracy_gromov), fmt(rep.detection_improvement),
             fmt(corners)});
        const double x = size.mean().value_or(0.0);
        add_plot(report.plotdata, sr.name(), "accuracy_bfs", x, hit_b);
        add_plot(report.plotdata, sr.name(), "accuracy_gromov", x, hit_g);
      }
      break;
    }
    case ExperimentKind::kPlacement: {
      std::vector<PlacementTrialResult> results(count);
      std::vector<std::size_t> sizes(count);
      parallel_for(count, jobs, [&](std::size_t i) {
        const std::size_t s = i / config.trials, t = i % config.trials;
        const auto graph = graph_for(s, t);
        sizes[i] = graph.size();
        results[i] = placement_trial(graph, trial_seed(config.seed, s, t), config);
      });
      report.trials.header =
          with_head({"size", "k", "cost_greedy", "cost_gromov", "cost_ratio", "iterations",
                     "converged", "greedy_monotone"});
      report.summary.header = {"series", "graph", "trials", "mean_cost_greedy",
                               "mean_cost_gromov", "mean_cost_ratio", "stderr_cost_ratio",
                               "costs_recomputed_exactly", "greedy_always_monotone"};
      for (std::size_t s = 0; s < all_series.size(); ++s) {
        Stats greedy, gromov, ratio, size;
        bool exact = true, monotone = true;
        for (std::size_t t = 0; t < config.trials; ++t) {
          const std::size_t i = s * config.trials + t;
          const auto& r = results[i];
          const std::optional<double> rc =
              r.cost_gromov > 0.0 ? std::optional(r.cost_greedy / r.cost_gromov)
                                  : std::nullopt;
          auto row = row_head(all_series[s], t);
          row.insert(row.end(), {fmt(sizes[i]), fmt(r.k), fmt(r.cost_greedy),
                                 fmt(r.cost_gromov), fmt(rc), fmt(r.iterations),
                                 fmt(r.converged), fmt(r.greedy_monotone)});
          report.trials.rows.push_back(std::move(row));
          greedy.add(r.cost_greedy);
          gromov.add(r.cost_gromov);
          if (rc) ratio.add(*rc);
          size.add(static_cast<double>(sizes[i]));
          exact = exact && r.cost_gromov == r.cost_gromov_check;
          monotone = monotone && r.greedy_monotone;
        }
        const auto& sr = all_series[s];
        report.summary.rows.push_back({sr.name(), sr.graph->text, fmt(config.trials),
                                       fmt(greedy.mean()), fmt(gromov.mean()),
                                       fmt(ratio.mean()), fmt(ratio.se()), fmt(exact),
                                       fmt(monotone)});
        add_plot(report.plotdata, "placement", "cost_ratio", size.mean().value_or(0.0), ratio);
      }
      break;
    }
  }
  return report;
}

void write_report(const ExperimentReport& report, const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw Error("cannot create " + directory.string() + ": " + ec.message());
  for (const auto& [name, table] :
       {std::pair{"trials.csv", &report.trials}, std::pair{"summary.csv", &report.summary},
        std::pair{"plotdata.csv", &report.plotdata}}) {
    const auto path = directory / name;
    std::ofstream out(path, std::ios::binary);
    out << table->csv();
    if (!out) throw Error("cannot write " + path.string());
  }
}

}  // namespace gromov::harness
