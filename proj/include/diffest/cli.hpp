#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace diffest::cli {

/// Flat view of every config key the tool understands. A missing field
/// means "not given"; command-specific defaults are applied at dispatch.
/// `trials` is spelled L in config files and on the command line.
struct RunConfig {
  std::optional<std::string> command;
  std::optional<std::uint64_t> n;
  std::optional<double> h;
  std::optional<double> h_exponent;
  std::optional<double> alpha0;
  std::optional<double> beta0;
  std::optional<std::string> drift;  // zero | constant | sinusoidal | ou
  std::optional<double> kappa;
  std::optional<double> level;
  std::optional<double> sigma_mu;
  std::optional<double> mu0;
  std::optional<double> amplitude;
  std::optional<double> omega;
  std::optional<std::uint64_t> substeps;
  std::optional<std::uint64_t> trials;
  std::optional<std::string> init_rule;  // uniform | fixed
  std::optional<double> init_value;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::string> input;
};

/// Parse a flat `key = value` config file ('#' starts a comment line).
/// Unknown keys are rejected.
RunConfig parse_config_file(const std::string& path);

/// Parse argv: optional positional command, --config FILE, then --key value
/// or --key=value pairs mirroring the config keys. Flags override file
/// values; the positional command overrides both.
RunConfig parse_args(int argc, const char* const* argv);

/// Canonical one-line-per-key form of the effective config; its FNV-1a
/// hash is the config_hash stamped into output files.
std::string serialize_config(const RunConfig& config);

std::string config_hash_hex(const RunConfig& config);

/// Dispatch a parsed config. Throws the error taxonomy from common.hpp;
/// returns the process exit code (0 on success).
int run(const RunConfig& config, std::ostream& out);

/// Top-level entry: parse, run, map exceptions to exit codes
/// (2 config, 3 data, 4 I/O).
int main_entry(int argc, const char* const* argv);

}  // namespace diffest::cli
