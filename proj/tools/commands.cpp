// Copyright 2026 The daqc-compiler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include "daqc/circuit.hpp"
#include "daqc/error.hpp"
#include "daqc/experiments.hpp"
#include "daqc/json_io.hpp"
#include "daqc/verifier.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>

namespace daqc::cli {
namespace {

int report_error(std::ostream& err, const std::exception& e, int code) {
  err << "error: " << e.what() << "\n";
  return code;
}

void require_file(const std::string& path, const char* what) {
  if (!std::filesystem::is_regular_file(path)) {
    throw InputError(std::string(what) + " file not found: " + path);
  }
}

}  // namespace

int cmd_compile(const CompileOptions& options, std::ostream& out, std::ostream& err) {
  try {
    require_file(options.problem_path, "problem");
    require_file(options.source_path, "source");
    if (!(options.sim_time > 0.0)) throw InvalidArgument("--time must be positive");
    if (!(options.threshold >= 0.0)) throw InvalidArgument("--threshold must be non-negative");

    const TwoBodyHamiltonian problem = load_hamiltonian(options.problem_path);
    const TwoBodyHamiltonian source = load_hamiltonian(options.source_path);
    const CompileResult result =
        compile_schedule(problem, source, options.sim_time, options.threshold);
    write_text_file(options.out_path, serialize_schedule(result.schedule));

    if (result.schedule.blocks.empty()) {
      err << "warning: every eigenvalue was discarded; the schedule is empty\n";
    }
    out << "n_qubits=" << problem.n_qubits() << " blocks=" << result.schedule.blocks.size()
        << " t_A=" << format_double(result.total_analog_time)
        << " discarded_weight=" << format_double(result.schedule.discarded_weight)
        << " lambda_tilde_min=" << format_double(result.lambda_tilde_min) << "\n";
    return kOk;
  } catch (const InputError& e) {
    return report_error(err, e, kInputError);
  } catch (const std::exception& e) {
    return report_error(err, e, kNumericalError);
  }
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  try {
    require_file(options.schedule_path, "schedule");
    require_file(options.problem_path, "problem");
    const Schedule schedule = load_schedule(options.schedule_path);
    const TwoBodyHamiltonian problem = load_hamiltonian(options.problem_path);
    if (schedule.n_qubits() > kMaxVerifyQubits) {
      throw TooLarge("verification is limited to " + std::to_string(kMaxVerifyQubits) +
                     " qubits, schedule has " + std::to_string(schedule.n_qubits()));
    }

    const TrotterReport report = evaluate_schedule(schedule, problem, options.steps);
    out << report_to_json(report);
    if (options.verbose) {
      for (const auto& point : report.points) {
        err << "n_t=" << point.n_t << " distance=" << format_double(point.distance)
            << " frobenius=" << format_double(point.frobenius) << "\n";
      }
    }
    if (report.min_distance() > 0.1) {
      err << "convergence not reached: smallest distance " << format_double(report.min_distance())
          << " > 0.1\n";
      return kNotConverged;
    }
    return kOk;
  } catch (const TooLarge& e) {
    return report_error(err, e, kNumericalError);
  } catch (const InputError& e) {
    return report_error(err, e, kInputError);
  } catch (const std::exception& e) {
    return report_error(err, e, kNumericalError);
  }
}

int cmd_experiment(const ExperimentOptions& options, std::ostream& /*out*/, std::ostream& err) {
  try {
    if (options.out_path.empty()) throw InvalidArgument("--out is required");
    ScalingConfig config;
    config.n_min = options.n_min;
    config.n_max = options.n_max;
    config.n_step = options.n_step;
    config.samples_per_n = options.samples;
    config.seed = options.seed;
    config.discard_threshold = options.threshold;
    const auto rows = run_scaling_experiment(config, [&err](const ScalingRow& row) {
      err << "N=" << row.n_qubits << " samples=" << row.samples
          << " mean_t_A=" << format_double(row.mean_ta) << "\n";
    });
    emit_csv(rows, options.out_path);
    return kOk;
  } catch (const InputError& e) {
    return report_error(err, e, kInputError);
  } catch (const std::exception& e) {
    return report_error(err, e, kNumericalError);
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digital-analog schedule compiler for two-body Hamiltonians", "daqc"};
  app.require_subcommand(1);

  CompileOptions compile;
  auto* compile_cmd = app.add_subcommand("compile", "compile a problem Hamiltonian into a schedule");
  compile_cmd->add_option("--problem", compile.problem_path, "problem Hamiltonian JSON")->required();
  compile_cmd->add_option("--source", compile.source_path, "ZZ source Hamiltonian JSON")->required();
  compile_cmd->add_option("--time", compile.sim_time, "simulation time T")->required();
  compile_cmd->add_option("--threshold", compile.threshold, "discard eigenpairs with t_k <= value");
  compile_cmd->add_option("--out", compile.out_path, "output schedule JSON")->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "compare a schedule with the exact evolution");
  verify_cmd->add_option("--schedule", verify.schedule_path, "schedule JSON")->required();
  verify_cmd->add_option("--problem", verify.problem_path, "problem Hamiltonian JSON")->required();
  verify_cmd->add_option("--steps", verify.steps, "Trotter step counts, e.g. 1,2,4,8")
      ->delimiter(',');
  verify_cmd->add_flag("--verbose", verify.verbose, "also print phase-aligned Frobenius distances");

  ExperimentOptions experiment;
  auto* experiment_cmd = app.add_subcommand("experiment", "random-problem scaling study (CSV)");
  experiment_cmd->add_option("--n-min", experiment.n_min, "smallest N");
  experiment_cmd->add_option("--n-max", experiment.n_max, "largest N");
  experiment_cmd->add_option("--n-step", experiment.n_step, "N increment");
  experiment_cmd->add_option("--samples", experiment.samples, "random matrices per N");
  experiment_cmd->add_option("--seed", experiment.seed, "master seed");
  experiment_cmd->add_option("--threshold", experiment.threshold, "discard threshold on t_k");
  experiment_cmd->add_option("--out", experiment.out_path, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  if (compile_cmd->parsed()) return cmd_compile(compile, out, err);
  if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
  if (experiment_cmd->parsed()) {
    if (experiment.n_min > experiment.n_max || experiment.n_min < 2) {
      err << "error: need 2 <= --n-min <= --n-max\n" << experiment_cmd->help();
      return kInputError;
    }
    return cmd_experiment(experiment, out, err);
  }
  return kInputError;
}

}  // namespace daqc::cli
