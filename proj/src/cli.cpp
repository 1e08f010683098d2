#include "diffest/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffest/common.hpp"
#include "diffest/csv.hpp"
#include "diffest/drift.hpp"
#include "diffest/estimate.hpp"
#include "diffest/model.hpp"
#include "diffest/montecarlo.hpp"
#include "diffest/numeric.hpp"
#include "diffest/rng.hpp"
#include "diffest/simulate.hpp"
#include "diffest/theory.hpp"

namespace diffest::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kUsage =
    "usage: diffest <command> [--config FILE] [--key value ...]\n"
    "\n"
    "commands: simulate | estimate | montecarlo | check | report\n"
    "\n"
    "keys (config file and flags share names):\n"
    "  command n h h_exponent alpha0 beta0 drift kappa level sigma_mu mu0\n"
    "  amplitude omega substeps L init_rule init_value seed out_dir input\n"
    "\n"
    "see README.md for per-command requirements and defaults\n";

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t");
  return text.substr(begin, end - begin + 1);
}

double parse_double_value(const std::string& key, const std::string& text) {
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE ||
      !std::isfinite(value)) {
    throw config_error("invalid number for '" + key + "': '" + text + "'");
  }
  return value;
}

std::uint64_t parse_u64_value(const std::string& key, const std::string& text) {
  char* end = nullptr;
  errno = 0;
  const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
  if (text.empty() || text[0] == '-' || end != text.c_str() + text.size() ||
      errno == ERANGE) {
    throw config_error("invalid integer for '" + key + "': '" + text + "'");
  }
  return value;
}

void assign(RunConfig& config, const std::string& key,
            const std::string& value) {
  if (key == "command") {
    config.command = value;
  } else if (key == "n") {
    config.n = parse_u64_value(key, value);
  } else if (key == "h") {
    config.h = parse_double_value(key, value);
  } else if (key == "h_exponent") {
    config.h_exponent = parse_double_value(key, value);
  } else if (key == "alpha0") {
    config.alpha0 = parse_double_value(key, value);
  } else if (key == "beta0") {
    config.beta0 = parse_double_value(key, value);
  } else if (key == "drift") {
    config.drift = value;
  } else if (key == "kappa") {
    config.kappa = parse_double_value(key, value);
  } else if (key == "level") {
    config.level = parse_double_value(key, value);
  } else if (key == "sigma_mu") {
    config.sigma_mu = parse_double_value(key, value);
  } else if (key == "mu0") {
    config.mu0 = parse_double_value(key, value);
  } else if (key == "amplitude") {
    config.amplitude = parse_double_value(key, value);
  } else if (key == "omega") {
    config.omega = parse_double_value(key, value);
  } else if (key == "substeps") {
    config.substeps = parse_u64_value(key, value);
  } else if (key == "L") {
    config.trials = parse_u64_value(key, value);
  } else if (key == "init_rule") {
    config.init_rule = value;
  } else if (key == "init_value") {
    config.init_value = parse_double_value(key, value);
  } else if (key == "seed") {
    config.seed = parse_u64_value(key, value);
  } else if (key == "out_dir") {
    config.out_dir = value;
  } else if (key == "input") {
    config.input = value;
  } else {
    throw config_error("unknown config key '" + key + "'");
  }
}

std::string fmt(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

ObservationGrid grid_from(const RunConfig& config) {
  const std::size_t n = static_cast<std::size_t>(config.n.value_or(500));
  if (config.h && config.h_exponent) {
    throw config_error("give 'h' or 'h_exponent', not both");
  }
  if (config.h) {
    return make_grid(n, *config.h);
  }
  return make_grid_exponent(n, config.h_exponent.value_or(0.75));
}

DriftSpec drift_from(const RunConfig& config) {
  const std::string kind = config.drift.value_or("constant");
  if (kind == "zero") {
    return ZeroDrift{};
  }
  if (kind == "constant") {
    return ConstantDrift{config.alpha0.value_or(0.0)};
  }
  if (kind == "sinusoidal") {
    if (!config.amplitude) {
      throw config_error("sinusoidal drift needs 'amplitude'");
    }
    return SinusoidalDrift{*config.amplitude, config.omega.value_or(1.0)};
  }
  if (kind == "ou") {
    if (!config.kappa) {
      throw config_error("ou drift needs 'kappa'");
    }
    if (!config.sigma_mu) {
      throw config_error("ou drift needs 'sigma_mu'");
    }
    OrnsteinUhlenbeckDrift ou;
    ou.mean_reversion = *config.kappa;
    ou.level = config.level.value_or(0.0);
    ou.vol = *config.sigma_mu;
    if (config.mu0) {
      ou.initial = *config.mu0;
    }
    return ou;
  }
  throw config_error("unknown drift '" + kind +
                     "' (expected zero, constant, sinusoidal or ou)");
}

double required_beta0(const RunConfig& config) {
  if (!config.beta0) {
    throw config_error("'beta0' is required for this command");
  }
  return *config.beta0;
}

fs::path out_dir_from(const RunConfig& config) {
  const fs::path dir = config.out_dir.value_or(".");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw io_error("cannot create output directory '" + dir.string() +
                   "': " + ec.message());
  }
  return dir;
}

csv::CsvMeta meta_from(const RunConfig& config) {
  return csv::CsvMeta{config.seed.value_or(0), config_hash_hex(config)};
}

void print_growth(std::ostream& out, const GridGrowthReport& report) {
  out << "growth check: exponent " << fmt(report.effective_exponent)
      << " threshold " << fmt(report.threshold) << " status "
      << (report.pass ? "ok" : "fail") << "\n";
}

// The exponent estimate needs two grid points; a single-step grid is legal
// for simulation but has no growth rate to report.
void print_growth_or_skip(std::ostream& out, const ObservationGrid& grid) {
  if (grid.size() < 2) {
    out << "growth check: skipped (n < 2)\n";
    return;
  }
  print_growth(out, check_grid_growth(grid));
}

void write_path_csv(const fs::path& file, const SimulatedPath& path,
                    const csv::CsvMeta& meta) {
  csv::CsvWriter writer(file, meta, "j,t,x,dx,drift_integral");
  const std::size_t n = path.grid.size();
  std::string row;
  for (std::size_t j = 0; j <= n; ++j) {
    row.clear();
    row += csv::format_index(j);
    row += ',';
    row += csv::format_double(path.grid.time(j));
    row += ',';
    row += csv::format_double(path.x_values[j]);
    row += ',';
    if (j > 0) {
      row += csv::format_double(path.increments.values()[j - 1]);
      row += ',';
      row += csv::format_double(path.drift_integrals[j - 1]);
    } else {
      row += ',';
    }
    writer.row(row);
  }
  writer.finish();
}

void write_trajectory_csv(const fs::path& file,
                          const EstimatorTrajectory& trajectory,
                          const csv::CsvMeta& meta) {
  csv::CsvWriter writer(file, meta, "j,beta_hat");
  std::string row;
  for (std::size_t j = 0; j < trajectory.betas.size(); ++j) {
    row.clear();
    row += csv::format_index(j);
    row += ',';
    row += csv::format_double(trajectory.betas[j]);
    writer.row(row);
  }
  writer.finish();
}

void write_diagnostics_csv(const fs::path& file,
                           const DiagnosticsReport& report,
                           const csv::CsvMeta& meta) {
  csv::CsvWriter writer(
      file, meta,
      "n,h,condition_i,sum_ii,sum_iii,equivalence_gap,linear_stat,qmle");
  std::string row;
  row += csv::format_index(report.n);
  row += ',';
  row += csv::format_double(report.h);
  row += ',';
  row += csv::format_double(report.condition_i);
  row += ',';
  if (report.sum_ii) row += csv::format_double(*report.sum_ii);
  row += ',';
  if (report.sum_iii) row += csv::format_double(*report.sum_iii);
  row += ',';
  row += csv::format_double(report.equivalence_gap);
  row += ',';
  if (report.linear_stat) row += csv::format_double(*report.linear_stat);
  row += ',';
  row += csv::format_double(report.qmle);
  writer.row(row);
  writer.finish();
}

int cmd_simulate(const RunConfig& config, std::ostream& out) {
  const ObservationGrid grid = grid_from(config);
  const DriftSpec drift = drift_from(config);
  const double beta0 = required_beta0(config);
  const std::size_t substeps =
      static_cast<std::size_t>(config.substeps.value_or(16));
  const std::uint64_t seed = config.seed.value_or(0);

  RngStream rng(seed, 0);
  const SimulatedPath path =
      simulate_general_drift(grid, drift, beta0, substeps, rng);

  const fs::path dir = out_dir_from(config);
  const fs::path file = dir / "path.csv";
  write_path_csv(file, path, meta_from(config));

  out << "simulate: n=" << grid.size() << " h=" << fmt(grid.step())
      << " T=" << fmt(grid.horizon()) << "\n";
  print_growth_or_skip(out, grid);
  out << "wrote " << file.string() << "\n";
  return 0;
}

struct EstimateInputs {
  IncrementSeries data;
  std::optional<std::vector<double>> drift_integrals;
  std::optional<double> alpha;
  bool beta0_given;
  double beta0;  // plug-in batch estimate when not given
};

EstimateInputs estimate_inputs(const RunConfig& config) {
  if (config.input) {
    csv::PathTable table = csv::read_path_csv(*config.input);
    const ObservationGrid grid = make_grid(table.n, table.h);
    IncrementSeries data(grid, std::move(table.dx));
    const bool beta0_given = config.beta0.has_value();
    const double beta0 = beta0_given ? *config.beta0 : qmle_batch(data);
    return EstimateInputs{std::move(data), std::move(table.drift_integrals),
                          config.alpha0, beta0_given, beta0};
  }
  const ObservationGrid grid = grid_from(config);
  const DriftSpec drift = drift_from(config);
  const double beta0 = required_beta0(config);
  const std::size_t substeps =
      static_cast<std::size_t>(config.substeps.value_or(16));
  RngStream rng(config.seed.value_or(0), 0);
  SimulatedPath path =
      simulate_general_drift(grid, drift, beta0, substeps, rng);
  std::optional<double> alpha;
  if (std::holds_alternative<ConstantDrift>(drift)) {
    alpha = std::get<ConstantDrift>(drift).alpha;
  }
  return EstimateInputs{std::move(path.increments),
                        std::move(path.drift_integrals), alpha, true, beta0};
}

int cmd_estimate(const RunConfig& config, std::ostream& out) {
  EstimateInputs inputs = estimate_inputs(config);
  const double init = config.init_value.value_or(1.0);

  const EstimatorTrajectory trajectory = recursive_run(inputs.data, init);
  const DiagnosticsReport report = diagnose(
      inputs.data,
      inputs.drift_integrals ? &*inputs.drift_integrals : nullptr,
      inputs.beta0, inputs.alpha, init);

  const fs::path dir = out_dir_from(config);
  const csv::CsvMeta meta = meta_from(config);
  const fs::path trajectory_file = dir / "trajectory.csv";
  const fs::path diagnostics_file = dir / "diagnostics.csv";
  write_trajectory_csv(trajectory_file, trajectory, meta);
  write_diagnostics_csv(diagnostics_file, report, meta);

  out << "estimate: n=" << report.n << " h=" << fmt(report.h) << "\n";
  if (!inputs.beta0_given) {
    out << "note: beta0 not given; diagnostics use the batch estimate\n";
  }
  if (!inputs.drift_integrals) {
    out << "note: drift integrals unavailable; linear_stat omitted\n";
  }
  out << "beta_hat=" << fmt(trajectory.betas.back())
      << " qmle=" << fmt(report.qmle)
      << " equivalence_gap=" << fmt(report.equivalence_gap) << "\n";
  out << "wrote " << trajectory_file.string() << "\n";
  out << "wrote " << diagnostics_file.string() << "\n";
  return 0;
}

InitSpec init_spec_from(const RunConfig& config) {
  const std::string rule = config.init_rule.value_or("uniform");
  if (rule == "uniform") {
    return InitSpec{InitRule::kUniform, 1.0};
  }
  if (rule == "fixed") {
    if (!config.init_value) {
      throw config_error("init_rule=fixed needs 'init_value'");
    }
    return InitSpec{InitRule::kFixed, *config.init_value};
  }
  throw config_error("unknown init_rule '" + rule +
                     "' (expected uniform or fixed)");
}

int cmd_montecarlo(const RunConfig& config, std::ostream& out) {
  MonteCarloConfig mc;
  mc.trials = static_cast<std::size_t>(config.trials.value_or(100));
  mc.n = static_cast<std::size_t>(config.n.value_or(500));
  if (config.h && config.h_exponent) {
    throw config_error("give 'h' or 'h_exponent', not both");
  }
  if (config.h) {
    mc.step = *config.h;
  } else {
    mc.step_exponent = config.h_exponent.value_or(0.75);
  }
  mc.alpha0 = config.alpha0.value_or(0.0);
  mc.beta0 = required_beta0(config);
  mc.init = init_spec_from(config);
  mc.master_seed = config.seed.value_or(0);
  if (config.drift) {
    mc.drift = drift_from(config);
  }
  mc.substeps = static_cast<std::size_t>(config.substeps.value_or(16));

  const MonteCarloSummary summary = run_trials(mc);

  const fs::path dir = out_dir_from(config);
  const csv::CsvMeta meta = meta_from(config);

  const fs::path summary_file = dir / "mc_summary.csv";
  {
    csv::CsvWriter writer(summary_file, meta, "j,mean_beta,sd_beta");
    std::string row;
    for (std::size_t j = 0; j < summary.mean_trajectory.size(); ++j) {
      row.clear();
      row += csv::format_index(j);
      row += ',';
      row += csv::format_double(summary.mean_trajectory[j]);
      row += ',';
      row += csv::format_double(summary.sd_trajectory[j]);
      writer.row(row);
    }
    writer.finish();
  }

  const fs::path finals_file = dir / "mc_finals.csv";
  {
    csv::CsvWriter writer(finals_file, meta, "trial,beta_init,beta_final,w");
    std::string row;
    for (std::size_t l = 0; l < summary.final_estimates.size(); ++l) {
      row.clear();
      row += csv::format_index(l + 1);
      row += ',';
      row += csv::format_double(summary.initial_values[l]);
      row += ',';
      row += csv::format_double(summary.final_estimates[l]);
      row += ',';
      row += csv::format_double(summary.w_sample[l]);
      writer.row(row);
    }
    writer.finish();
  }

  const fs::path qq_file = dir / "qq.csv";
  {
    csv::CsvWriter writer(qq_file, meta, "q_theoretical,q_empirical");
    std::string row;
    for (const auto& [theoretical, empirical] : qq_pairs(summary.w_sample)) {
      row.clear();
      row += csv::format_double(theoretical);
      row += ',';
      row += csv::format_double(empirical);
      writer.row(row);
    }
    writer.finish();
  }

  out << "montecarlo: trials=" << mc.trials << " n=" << summary.grid.size()
      << " h=" << fmt(summary.grid.step()) << " seed=" << mc.master_seed
      << "\n";
  print_growth(out, summary.growth);
  out << "mean_final=" << fmt(summary.mean_final)
      << " sd_final=" << fmt(summary.sd_final) << "\n";
  if (summary.final_estimates.size() >= 30) {
    out << "variance_check="
        << fmt(variance_check(summary, mc.beta0, summary.grid.size()))
        << " reference=" << fmt(2.0 * mc.beta0 * mc.beta0) << "\n";
  } else {
    out << "variance_check: insufficient trials (need 30)\n";
  }
  if (summary.normality) {
    out << "ks_statistic=" << fmt(summary.normality->ks_statistic)
        << " ks_pvalue=" << fmt(summary.normality->ks_pvalue) << "\n";
  } else {
    out << "ks: insufficient sample (need 20)\n";
  }
  out << "wrote " << summary_file.string() << "\n";
  out << "wrote " << finals_file.string() << "\n";
  out << "wrote " << qq_file.string() << "\n";
  return 0;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  const ObservationGrid grid = grid_from(config);
  out << "check: n=" << grid.size() << " h=" << fmt(grid.step())
      << " T=" << fmt(grid.horizon()) << "\n";
  print_growth_or_skip(out, grid);
  if (config.beta0) {
    const double beta0 = *config.beta0;
    const double condition_i = static_cast<double>(grid.size()) /
                               quasi_fisher(grid.size(), beta0);
    out << "condition_i=" << fmt(condition_i) << "\n";
    if (config.alpha0) {
      const ConditionSums sums =
          condition_sums_constant_drift(grid, *config.alpha0, beta0);
      out << "sum_ii=" << fmt(sums.sum_ii) << " sum_iii=" << fmt(sums.sum_iii)
          << "\n";
    }
  }
  return 0;
}

int cmd_report(const RunConfig& config, std::ostream& out) {
  if (!config.input) {
    throw config_error("'input' (a finals CSV) is required for report");
  }
  const double beta0 = required_beta0(config);
  if (!config.n) {
    throw config_error("'n' is required for report");
  }
  const std::size_t n = static_cast<std::size_t>(*config.n);

  const std::vector<csv::FinalsRow> rows = csv::read_finals_csv(*config.input);
  std::vector<double> finals(rows.size());
  std::vector<double> w_sample(rows.size());
  for (std::size_t l = 0; l < rows.size(); ++l) {
    finals[l] = rows[l].beta_final;
    w_sample[l] = rows[l].w;
  }

  KahanSum sum;
  for (double f : finals) sum.add(f);
  const double mean_final = sum.value() / static_cast<double>(finals.size());
  double sd_final = 0.0;
  if (finals.size() >= 2) {
    KahanSum sq;
    for (double f : finals) sq.add((f - mean_final) * (f - mean_final));
    sd_final = std::sqrt(sq.value() / static_cast<double>(finals.size() - 1));
  }

  out << "report: trials=" << finals.size() << " beta0=" << fmt(beta0)
      << " n=" << n << "\n";
  out << "mean_final=" << fmt(mean_final) << " sd_final=" << fmt(sd_final)
      << "\n";
  if (finals.size() >= 30) {
    const double root_n = std::sqrt(static_cast<double>(n));
    KahanSum dev_sum;
    std::vector<double> deviations(finals.size());
    for (std::size_t l = 0; l < finals.size(); ++l) {
      deviations[l] = root_n * (finals[l] - beta0);
      dev_sum.add(deviations[l]);
    }
    const double dev_mean =
        dev_sum.value() / static_cast<double>(deviations.size());
    KahanSum dev_sq;
    for (double d : deviations) dev_sq.add((d - dev_mean) * (d - dev_mean));
    const double variance =
        dev_sq.value() / static_cast<double>(deviations.size() - 1);
    out << "variance_check=" << fmt(variance)
        << " reference=" << fmt(2.0 * beta0 * beta0) << "\n";
  } else {
    out << "variance_check: insufficient trials (need 30)\n";
  }
  if (w_sample.size() >= 20) {
    const NormalityCheck normality = ks_normality(w_sample);
    out << "ks_statistic=" << fmt(normality.ks_statistic)
        << " ks_pvalue=" << fmt(normality.ks_pvalue) << "\n";
  } else {
    out << "ks: insufficient sample (need 20)\n";
  }
  return 0;
}

}  // namespace

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw io_error("cannot open config file '" + path + "'");
  }
  RunConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw config_error("config file line " + std::to_string(line_no) +
                         " is not 'key = value': '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw config_error("config file line " + std::to_string(line_no) +
                         " has an empty key");
    }
    assign(config, key, value);
  }
  return config;
}

RunConfig parse_args(int argc, const char* const* argv) {
  std::optional<std::string> config_path;
  std::optional<std::string> positional_command;
  std::vector<std::pair<std::string, std::string>> flags;

  int i = 1;
  if (i < argc && argv[i][0] != '-') {
    positional_command = argv[i];
    ++i;
  }
  for (; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.rfind("--", 0) != 0) {
      throw config_error("unexpected argument '" + arg + "'");
    }
    arg.erase(0, 2);
    std::string key;
    std::string value;
    const std::size_t eq = arg.find('=');
    if (eq != std::string::npos) {
      key = arg.substr(0, eq);
      value = arg.substr(eq + 1);
    } else {
      key = arg;
      if (i + 1 >= argc) {
        throw config_error("flag '--" + key + "' needs a value");
      }
      value = argv[++i];
    }
    if (key == "config") {
      if (config_path) {
        throw config_error("duplicate --config");
      }
      config_path = value;
    } else {
      flags.emplace_back(std::move(key), std::move(value));
    }
  }

  RunConfig config;
  if (config_path) {
    config = parse_config_file(*config_path);
  }
  for (const auto& [key, value] : flags) {
    assign(config, key, value);
  }
  if (positional_command) {
    config.command = *positional_command;
  }
  return config;
}

std::string serialize_config(const RunConfig& config) {
  std::string text;
  const auto add_str = [&text](const char* key,
                               const std::optional<std::string>& value) {
    if (value) {
      text += key;
      text += '=';
      text += *value;
      text += '\n';
    }
  };
  const auto add_u64 = [&text](const char* key,
                               const std::optional<std::uint64_t>& value) {
    if (value) {
      text += key;
      text += '=';
      text += std::to_string(*value);
      text += '\n';
    }
  };
  const auto add_double = [&text](const char* key,
                                  const std::optional<double>& value) {
    if (value) {
      text += key;
      text += '=';
      text += csv::format_double(*value);
      text += '\n';
    }
  };
  add_str("command", config.command);
  add_u64("n", config.n);
  add_double("h", config.h);
  add_double("h_exponent", config.h_exponent);
  add_double("alpha0", config.alpha0);
  add_double("beta0", config.beta0);
  add_str("drift", config.drift);
  add_double("kappa", config.kappa);
  add_double("level", config.level);
  add_double("sigma_mu", config.sigma_mu);
  add_double("mu0", config.mu0);
  add_double("amplitude", config.amplitude);
  add_double("omega", config.omega);
  add_u64("substeps", config.substeps);
  add_u64("L", config.trials);
  add_str("init_rule", config.init_rule);
  add_double("init_value", config.init_value);
  add_u64("seed", config.seed);
  add_str("out_dir", config.out_dir);
  add_str("input", config.input);
  return text;
}

std::string config_hash_hex(const RunConfig& config) {
  return csv::to_hex(csv::fnv1a64(serialize_config(config)));
}

int run(const RunConfig& config, std::ostream& out) {
  if (!config.command) {
    throw config_error(
        "no command given (simulate|estimate|montecarlo|check|report)");
  }
  const std::string& command = *config.command;
  if (command == "simulate") return cmd_simulate(config, out);
  if (command == "estimate") return cmd_estimate(config, out);
  if (command == "montecarlo") return cmd_montecarlo(config, out);
  if (command == "check") return cmd_check(config, out);
  if (command == "report") return cmd_report(config, out);
  throw config_error("unknown command '" + command + "'");
}

int main_entry(int argc, const char* const* argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--help" || arg == "-h") {
      std::cout << kUsage;
      return 0;
    }
  }
  if (argc < 2) {
    std::cerr << kUsage;
    return 2;
  }
  try {
    return run(parse_args(argc, argv), std::cout);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const data_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace diffest::cli
