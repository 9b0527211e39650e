#include "gromov/harness/config.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

#include "gromov/error.hpp"
#include "gromov/format.hpp"
#include "gromov/matrix_io.hpp"

namespace gromov::harness {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    parts.push_back(trim(s.substr(start, at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(what + ": expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

std::pair<std::string, std::string> split_assignment(std::string_view line,
                                                     const std::string& where) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) {
    throw Error(where + ": expected key=value, got '" + std::string(line) + "'");
  }
  std::string key = trim(line.substr(0, eq));
  if (key.empty()) throw Error(where + ": empty key");
  return {key, trim(line.substr(eq + 1))};
}

class Fields {
 public:
  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }

  std::optional<std::string> take(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    std::string value = it->second;
    values_.erase(it);
    return value;
  }

  void take_count(const std::string& key, std::size_t& out, std::size_t minimum) {
    if (auto v = take(key)) {
      out = parse_unsigned(*v, "config field '" + key + "'");
      if (out < minimum) {
        throw Error("config field '" + key + "': must be at least " +
                    std::to_string(minimum));
      }
    }
  }

  void take_real(const std::string& key, double& out) {
    if (auto v = take(key)) out = parse_double(*v, "config field '" + key + "'");
  }

  const std::map<std::string, std::string>& rest() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace

const char* kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kApproxPath:
      return "approx-path";
    case ExperimentKind::kAcqOrder:
      return "acq-order";
    case ExperimentKind::kSourceSnapshot:
      return "source-snapshot";
    case ExperimentKind::kPlacement:
      return "placement";
  }
  return "unknown";
}

double DelaySpec::location() const {
  if (const auto* e = std::get_if<Exponential>(&model)) return e->rate;
  return std::get<TruncatedGaussian>(model).mean;
}

GraphSpec parse_graph_spec(std::string_view text, const std::filesystem::path& base_dir) {
  const std::string spec = trim(text);
  const auto parts = split(spec, ':');
  const std::string& family = parts[0];
  const std::string what = "graph spec '" + spec + "'";
  const auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1) {
      throw Error(what + ": expected " + std::to_string(n) + " parameter(s)");
    }
  };
  GraphSpec out;
  out.text = spec;
  if (family == "file") {
    const auto colon = spec.find(':');
    std::filesystem::path path = spec.substr(colon + 1);
    if (path.empty()) throw Error(what + ": missing path");
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    if (!std::filesystem::exists(path)) {
      throw Error(what + ": no such file " + path.string());
    }
    out.source = path;
  } else if (family == "er") {
    arity(2);
    out.source = ErdosRenyi{parse_unsigned(parts[1], what), parse_double(parts[2], what)};
  } else if (family == "ba") {
    arity(2);
    out.source = BarabasiAlbert{parse_unsigned(parts[1], what), parse_unsigned(parts[2], what)};
  } else if (family == "grid") {
    arity(1);
    const auto dims = split(parts[1], 'x');
    if (dims.size() != 2) throw Error(what + ": expected RxC");
    out.source = Grid2D{parse_unsigned(dims[0], what), parse_unsigned(dims[1], what)};
  } else if (family == "complete") {
    arity(1);
    out.source = Complete{parse_unsigned(parts[1], what)};
  } else {
    throw Error(what + ": unknown family '" + family +
                "' (er, ba, grid, complete, file)");
  }
  return out;
}

DelaySpec parse_delay_spec(std::string_view text) {
  const std::string spec = trim(text);
  const auto parts = split(spec, ':');
  const std::string what = "delay spec '" + spec + "'";
  DelaySpec out;
  out.text = spec;
  if (parts[0] == "exponential" && parts.size() == 2) {
    const double rate = parse_double(parts[1], what);
    if (!(rate > 0.0)) throw Error(what + ": rate must be positive");
    out.model = Exponential{rate};
  } else if (parts[0] == "gaussian" && parts.size() == 3) {
    const double variance = parse_double(parts[2], what);
    if (!(variance > 0.0)) throw Error(what + ": variance must be positive");
    out.model = TruncatedGaussian{parse_double(parts[1], what), variance};
  } else {
    throw Error(what + ": expected exponential:RATE or gaussian:MEAN:VARIANCE");
  }
  return out;
}

ExperimentConfig parse_config(std::string_view text,
                              const std::vector<std::string>& overrides,
                              std::uint64_t default_seed,
                              const std::filesystem::path& base_dir) {
  Fields fields;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    auto [key, value] = split_assignment(line, "config line " + std::to_string(number));
    fields.set(key, std::move(value));
  }
  for (const auto& o : overrides) {
    auto [key, value] = split_assignment(o, "override");
    fields.set(key, std::move(value));
  }

  ExperimentConfig config;
  const auto kind = fields.take("experiment");
  if (!kind) throw Error("config field 'experiment' is required");
  if (*kind == "approx-path") {
    config.kind = ExperimentKind::kApproxPath;
  } else if (*kind == "acq-order") {
    config.kind = ExperimentKind::kAcqOrder;
  } else if (*kind == "source-snapshot") {
    config.kind = ExperimentKind::kSourceSnapshot;
  } else if (*kind == "placement") {
    config.kind = ExperimentKind::kPlacement;
  } else {
    throw Error("config field 'experiment': unknown kind '" + *kind +
                "' (approx-path, acq-order, source-snapshot, placement)");
  }

  const auto graph = fields.take("graph");
  if (!graph) throw Error("config field 'graph' is required");
  for (const auto& g : split(*graph, ',')) {
    try {
      config.graphs.push_back(parse_graph_spec(g, base_dir));
    } catch (const Error& e) {
      throw Error(std::string("config field 'graph': ") + e.what());
    }
  }

  const char* default_delay = config.kind == ExperimentKind::kApproxPath
                                  ? "gaussian:10:1"
                                  : "exponential:1";
  for (const auto& d : split(fields.take("delay").value_or(default_delay), ',')) {
    try {
      config.delays.push_back(parse_delay_spec(d));
    } catch (const Error& e) {
      throw Error(std::string("config field 'delay': ") + e.what());
    }
  }

  if (auto v = fields.take("unit_weights")) {
    if (*v != "true" && *v != "false") {
      throw Error("config field 'unit_weights': expected true or false");
    }
    config.unit_weights = *v == "true";
  }
  config.seed = default_seed;
  if (auto v = fields.take("seed")) config.seed = parse_unsigned(*v, "config field 'seed'");
  fields.take_count("trials", config.trials, 1);
  fields.take_count("grid_steps", config.grid_steps, 1);
  fields.take_count("k", config.k, 0);
  fields.take_real("k_fraction", config.k_fraction);
  fields.take_real("eta", config.eta);
  fields.take_count("max_iterations", config.max_iterations, 1);
  fields.take_real("infected_min", config.infected_min);
  fields.take_real("infected_max", config.infected_max);
  fields.take_real("top_fraction", config.top_fraction);
  fields.take_count("samples", config.samples, 1);
  fields.take_count("sampled_trees", config.sampled_trees, 1);
  fields.take_count("base_nodes", config.base_nodes, 2);
  fields.take_real("theta_step", config.theta_step);
  if (auto v = fields.take("score_direction")) {
    if (*v == "max") {
      config.direction = ScoreDirection::kMax;
    } else if (*v == "min") {
      config.direction = ScoreDirection::kMin;
    } else {
      throw Error("config field 'score_direction': expected max or min");
    }
  }
  if (auto v = fields.take("candidates")) {
    if (*v == "infected") {
      config.candidates = CandidateSet::kInfected;
    } else if (*v == "all") {
      config.candidates = CandidateSet::kAll;
    } else {
      throw Error("config field 'candidates': expected infected or all");
    }
  }
  if (!fields.rest().empty()) {
    throw Error("config field '" + fields.rest().begin()->first + "' is not recognized");
  }

  if (!(config.infected_min > 0.0 && config.infected_min <= config.infected_max &&
        config.infected_max <= 1.0)) {
    throw Error("config fields 'infected_min'/'infected_max': need 0 < min <= max <= 1");
  }
  if (!(config.k_fraction > 0.0 && config.k_fraction <= 1.0)) {
    throw Error("config field 'k_fraction': must lie in (0,1]");
  }
  if (!(config.top_fraction > 0.0 && config.top_fraction <= 1.0)) {
    throw Error("config field 'top_fraction': must lie in (0,1]");
  }
  if (!(config.eta > 0.0)) throw Error("config field 'eta': must be positive");
  if (!(config.theta_step > 0.0 && config.theta_step <= 1.0)) {
    throw Error("config field 'theta_step': must lie in (0,1]");
  }
  return config;
}

ExperimentConfig read_config(const std::filesystem::path& path,
                             const std::vector<std::string>& overrides,
                             std::uint64_t default_seed) {
  return parse_config(read_text_file(path), overrides, default_seed, path.parent_path());
}

std::uint64_t default_seed_from_env() {
  const char* value = std::getenv("GROMOV_SEED");
  if (value == nullptr) return 0;
  return parse_unsigned(value, "environment variable GROMOV_SEED");
}

}  // namespace gromov::harness
