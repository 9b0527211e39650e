#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gromov/combination.hpp"
#include "gromov/format.hpp"
#include "gromov/harness/config.hpp"
#include "gromov/harness/experiments.hpp"
#include "gromov/matrix_io.hpp"
#include "gromov/program.hpp"
#include "gromov/reconstruct.hpp"
#include "gromov/spectral.hpp"

namespace {

using namespace gromov;

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

void print_matrix(const Matrix& m, bool json) {
  std::cout << (json ? format_matrix_json(m) : format_matrix_csv(m));
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto at = text.find(',', start);
    out.push_back(text.substr(start, at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gromov matrices of weighted trees: validation, construction, combination "
               "and network inference experiments"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print matrices as JSON instead of CSV");
  double eps = kTolerance;
  app.add_option("--eps", eps, "Comparison tolerance")->check(CLI::PositiveNumber);

  std::string matrix_path, base_path, second_path, config_path, labels_text;
  std::string base_vertex = "s";
  std::vector<std::string> paths;

  auto* validate_cmd = app.add_subcommand("validate", "Check the Gromov matrix conditions");
  validate_cmd->add_option("matrix", matrix_path, "Matrix file (CSV or JSON)")
      ->required()
      ->check(CLI::ExistingFile);

  auto* build_cmd = app.add_subcommand("build", "Print the Gromov matrix of a base");
  build_cmd->add_option("base", base_path, "Base file")->required()->check(CLI::ExistingFile);

  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Print the canonical base of a Gromov matrix");
  reconstruct_cmd->add_option("matrix", matrix_path, "Matrix file")
      ->required()
      ->check(CLI::ExistingFile);
  reconstruct_cmd->add_option("--labels", labels_text, "Base-set labels, comma-separated");
  reconstruct_cmd->add_option("--base-vertex", base_vertex, "Name of the base vertex");

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Print a build program for a base or a matrix");
  decompose_cmd->add_option("input", base_path, "Base or matrix file")
      ->required()
      ->check(CLI::ExistingFile);

  std::string mode = "gconvex";
  std::string weights_text;
  auto* combine_cmd = app.add_subcommand("combine", "Combine Gromov matrices");
  combine_cmd->add_option("--mode", mode, "convex or gconvex")
      ->check(CLI::IsMember({"convex", "gconvex"}));
  combine_cmd->add_option("--weights", weights_text, "Combination weights, comma-separated")
      ->required();
  combine_cmd->add_option("matrices", paths, "Matrix files")
      ->required()
      ->check(CLI::ExistingFile);

  auto* bound_cmd =
      app.add_subcommand("bound", "Lower bound on the smallest eigenvalue of a program");
  bound_cmd->add_option("input", base_path, "Program or base file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* eigmin_cmd = app.add_subcommand("eigmin", "Smallest eigenvalue of a symmetric matrix");
  eigmin_cmd->add_option("matrix", matrix_path, "Matrix file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* gv_cmd = app.add_subcommand("gv", "Adjacency matrix of the base-node graph G_V");
  gv_cmd->add_option("matrix", matrix_path, "Matrix file")
      ->required()
      ->check(CLI::ExistingFile);

  std::size_t grid = 1000;
  bool samples = false;
  auto* trace_cmd = app.add_subcommand(
      "trace", "Turning points of the G-convex path from M2 (theta 0) to M1 (theta 1)");
  trace_cmd->add_option("m1", matrix_path, "First matrix")->required()->check(CLI::ExistingFile);
  trace_cmd->add_option("m2", second_path, "Second matrix")->required()->check(CLI::ExistingFile);
  trace_cmd->add_option("--grid", grid, "Number of theta intervals")->check(CLI::PositiveNumber);
  trace_cmd->add_flag("--samples", samples,
                      "Print every sample (theta, then the upper triangle) as CSV");

  std::vector<std::string> overrides;
  std::size_t jobs = 1;
  std::string out_dir = "results";
  auto* simulate_cmd = app.add_subcommand("simulate", "Run an experiment from a config file");
  simulate_cmd->add_option("config", config_path, "key=value config file")
      ->required()
      ->check(CLI::ExistingFile);
  simulate_cmd->add_option("--set", overrides, "Override a config field, key=value");
  simulate_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--out", out_dir, "Directory for trials/summary/plotdata CSV");
  simulate_cmd->footer(
      "Config fields: experiment (approx-path | acq-order | source-snapshot | placement), "
      "graph (er:N:DEG, ba:N:M, grid:RxC, complete:N, file:PATH; comma-separated list), "
      "delay (exponential:RATE, gaussian:MEAN:VARIANCE; comma-separated list), trials, "
      "seed (default GROMOV_SEED), grid_steps, k, k_fraction, eta, max_iterations, "
      "infected_min, infected_max, top_fraction, score_direction (max|min), candidates "
      "(infected|all), samples, sampled_trees, base_nodes, theta_step, unit_weights.\n"
      "trials.csv columns start with series, graph, delay, trial; approx-path adds d0, d, "
      "ratio; acq-order adds source, accuracy_gromov, accuracy_sampled, triples_used, "
      "triples_excluded; source-snapshot adds method, source, infected, estimate, "
      "error_distance, rank, rank_percentile, hit, corners_included; placement adds size, "
      "k, cost_greedy, cost_gromov, cost_ratio, iterations, converged, greedy_monotone.\n"
      "plotdata.csv columns: series, metric, x, y, stderr.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) {
      const Matrix m = read_matrix(matrix_path);
      if (const auto violation = validate(m, eps)) {
        std::cout << "invalid: " << violation->message() << "\n";
        return kExitInvalid;
      }
      std::cout << "valid Gromov matrix (" << m.rows() << "x" << m.cols() << ")\n";
    } else if (build_cmd->parsed()) {
      print_matrix(gromov_matrix(read_base(base_path)).entries(), json);
    } else if (reconstruct_cmd->parsed()) {
      ReconstructOptions options;
      if (!labels_text.empty()) options.labels = split_commas(labels_text);
      options.base_vertex = base_vertex;
      options.eps = eps;
      std::cout << format_base(reconstruct_tree(read_matrix(matrix_path), options));
    } else if (decompose_cmd->parsed()) {
      const std::string text = read_text_file(base_path);
      const Base base = looks_like_base(text)
                            ? parse_base(text)
                            : reconstruct_tree(parse_matrix(text), {{}, "s", "_p", eps});
      std::cout << format_program(decompose(base));
    } else if (combine_cmd->parsed()) {
      const auto weights = CombinationWeights::parse(weights_text);
      std::vector<GromovMatrix> matrices;
      for (const auto& p : paths) matrices.emplace_back(read_matrix(p), eps);
      if (mode == "convex") {
        print_matrix(convex(matrices, weights), json);
      } else {
        print_matrix(g_convex(matrices, weights).entries(), json);
      }
    } else if (bound_cmd->parsed()) {
      const std::string text = read_text_file(base_path);
      const BuildProgram program =
          looks_like_base(text) ? decompose(parse_base(text)) : parse_program(text);
      std::cout << format_double(lambda_min_bound(program)) << "\n";
    } else if (eigmin_cmd->parsed()) {
      const Matrix m = read_matrix(matrix_path);
      require_symmetric(m, eps);
      std::cout << format_double(lambda_min(m)) << "\n";
    } else if (gv_cmd->parsed()) {
      const Eigen::MatrixXi a = gv_adjacency(GromovMatrix(read_matrix(matrix_path), eps), eps);
      print_matrix(a.cast<double>(), json);
    } else if (trace_cmd->parsed()) {
      const GromovMatrix m1(read_matrix(matrix_path), eps);
      const GromovMatrix m2(read_matrix(second_path), eps);
      const auto trace = trace_path(m1, m2, grid);
      if (samples) {
        for (const auto& s : trace.samples) {
          std::cout << format_double(s.theta);
          for (Eigen::Index i = 0; i < s.matrix.size(); ++i) {
            for (Eigen::Index j = i; j < s.matrix.size(); ++j) {
              std::cout << ',' << format_double(s.matrix(i, j));
            }
          }
          std::cout << "\n";
        }
      } else {
        std::cout << "turning_points " << trace.turning_points.size() << "\n";
        for (double t : trace.turning_points) std::cout << format_double(t) << "\n";
      }
    } else if (simulate_cmd->parsed()) {
      const auto config = harness::read_config(config_path, overrides,
                                               harness::default_seed_from_env());
      const auto report = harness::run_experiment(config, jobs);
      harness::write_report(report, out_dir);
      std::cout << report.summary.csv();
    }
  } catch (const ValidationError& e) {
    std::cerr << "gromov: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const StructuralError& e) {
    std::cerr << "gromov: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ProgramError& e) {
    std::cerr << "gromov: invalid program: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "gromov: " << e.what() << "\n";
    return kExitUsage;
  }
  return EXIT_SUCCESS;
}
