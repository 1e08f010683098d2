#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diffest::csv {

/// 17 significant digits; round-trips any double exactly.
std::string format_double(double value);

std::string format_index(std::size_t value);

/// FNV-1a over the canonical config serialization; 16 hex digits.
std::uint64_t fnv1a64(std::string_view text);
std::string to_hex(std::uint64_t value);

/// Provenance stamped into every output file.
struct CsvMeta {
  std::uint64_t seed = 0;
  std::string config_hash_hex;
};

/// Writes the comment preamble (# seed, # generator, # config_hash), the
/// column header, then caller-formatted rows. LF endings, UTF-8, no BOM.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const CsvMeta& meta,
            std::string_view columns);

  void row(std::string_view line);

  // Flushes and checks the stream; call before relying on the file.
  void finish();

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  bool finished_ = false;
};

/// In-memory form of a path file: positions at t_0..t_n plus the per-step
/// increments and, when the file carries them, drift integrals.
struct PathTable {
  std::size_t n = 0;
  double h = 0.0;
  std::vector<double> x;                          // n+1 entries
  std::vector<double> dx;                         // n entries
  std::optional<std::vector<double>> drift_integrals;  // n entries if present
};

/// Strict reader for the path CSV layout (header j,t,x,dx,drift_integral;
/// comment lines ignored). Malformed cells and missing required columns
/// raise data errors naming the line or column; the grid step is derived
/// from the t column and must be uniform to 1e-9 relative.
PathTable read_path_csv(const std::filesystem::path& path);

/// One row of a Monte Carlo finals file.
struct FinalsRow {
  std::size_t trial = 0;
  double beta_init = 0.0;
  double beta_final = 0.0;
  double w = 0.0;
};

std::vector<FinalsRow> read_finals_csv(const std::filesystem::path& path);

}  // namespace diffest::csv
