#include "diffest/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "diffest/common.hpp"

namespace diffest::csv {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_double_field(std::string_view field, std::size_t line_no,
                          const char* column) {
  if (field.empty()) {
    throw data_error("csv: empty " + std::string(column) + " cell at line " +
                     std::to_string(line_no));
  }
  std::string buffer(field);
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(buffer.c_str(), &end);
  if (end != buffer.c_str() + buffer.size() || errno == ERANGE) {
    throw data_error("csv: malformed " + std::string(column) +
                     " value '" + buffer + "' at line " +
                     std::to_string(line_no));
  }
  return value;
}

std::size_t parse_index_field(std::string_view field, std::size_t line_no,
                              const char* column) {
  std::string buffer(field);
  char* end = nullptr;
  errno = 0;
  const unsigned long long value = std::strtoull(buffer.c_str(), &end, 10);
  if (buffer.empty() || end != buffer.c_str() + buffer.size() ||
      errno == ERANGE) {
    throw data_error("csv: malformed " + std::string(column) +
                     " value '" + buffer + "' at line " +
                     std::to_string(line_no));
  }
  return static_cast<std::size_t>(value);
}

// Reads the next non-comment line; returns false at EOF. line_no counts
// every physical line, so error messages match an editor's view.
bool next_content_line(std::istream& in, std::string& line,
                       std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') continue;
    return true;
  }
  return false;
}

std::size_t find_column(const std::vector<std::string_view>& headers,
                        std::string_view name) {
  for (std::size_t i = 0; i < headers.size(); ++i) {
    if (headers[i] == name) return i;
  }
  throw data_error("csv: missing required column '" + std::string(name) + "'");
}

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_index(std::size_t value) { return std::to_string(value); }

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string to_hex(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(value));
  return buffer;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const CsvMeta& meta,
                     std::string_view columns)
    : path_(path), out_(path, std::ios::binary) {
  if (!out_) {
    throw io_error("cannot open '" + path.string() + "' for writing");
  }
  out_ << "# seed=" << meta.seed << '\n';
  out_ << "# generator=" << generator_tag() << '\n';
  out_ << "# config_hash=" << meta.config_hash_hex << '\n';
  out_ << columns << '\n';
}

void CsvWriter::row(std::string_view line) { out_ << line << '\n'; }

void CsvWriter::finish() {
  if (finished_) return;
  out_.flush();
  if (!out_) {
    throw io_error("write failed for '" + path_.string() + "'");
  }
  out_.close();
  finished_ = true;
}

PathTable read_path_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw io_error("cannot open '" + path.string() + "' for reading");
  }

  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw data_error("csv: '" + path.string() + "' has no header row");
  }
  const auto headers = split_fields(line);
  const std::size_t col_j = find_column(headers, "j");
  const std::size_t col_t = find_column(headers, "t");
  const std::size_t col_x = find_column(headers, "x");
  const std::size_t col_dx = find_column(headers, "dx");
  const std::size_t col_di = find_column(headers, "drift_integral");

  std::vector<double> t;
  std::vector<double> x;
  std::vector<double> dx;
  std::vector<double> integrals;
  std::size_t empty_integrals = 0;

  std::size_t expected_j = 0;
  while (next_content_line(in, line, line_no)) {
    const auto fields = split_fields(line);
    if (fields.size() != headers.size()) {
      throw data_error("csv: line " + std::to_string(line_no) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(headers.size()));
    }
    const std::size_t j = parse_index_field(fields[col_j], line_no, "j");
    if (j != expected_j) {
      throw data_error("csv: line " + std::to_string(line_no) +
                       " has j=" + std::to_string(j) + ", expected " +
                       std::to_string(expected_j));
    }
    t.push_back(parse_double_field(fields[col_t], line_no, "t"));
    x.push_back(parse_double_field(fields[col_x], line_no, "x"));
    if (j > 0) {
      const double increment = parse_double_field(fields[col_dx], line_no, "dx");
      if (!std::isfinite(increment)) {
        throw data_error("csv: non-finite dx at line " +
                         std::to_string(line_no));
      }
      dx.push_back(increment);
      if (fields[col_di].empty()) {
        ++empty_integrals;
      } else {
        integrals.push_back(
            parse_double_field(fields[col_di], line_no, "drift_integral"));
      }
    }
    ++expected_j;
  }

  if (x.size() < 2) {
    throw data_error("csv: '" + path.string() +
                     "' needs at least rows j=0 and j=1");
  }

  PathTable table;
  table.n = x.size() - 1;
  table.x = std::move(x);
  table.dx = std::move(dx);
  if (empty_integrals == 0) {
    table.drift_integrals = std::move(integrals);
  } else if (empty_integrals != table.n) {
    throw data_error("csv: drift_integral column is only partially filled");
  }

  // The estimators assume an equidistant grid; reconstruct the step from
  // the time span and insist the stamps actually follow it.
  const double h = (t.back() - t.front()) / static_cast<double>(table.n);
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw data_error("csv: time column is not increasing");
  }
  const double scale = std::max(1.0, std::abs(t.back()));
  for (std::size_t j = 0; j < t.size(); ++j) {
    const double expected = t.front() + static_cast<double>(j) * h;
    if (std::abs(t[j] - expected) > 1e-9 * scale) {
      throw data_error("csv: non-uniform time step at row j=" +
                       std::to_string(j));
    }
  }
  table.h = h;
  return table;
}

std::vector<FinalsRow> read_finals_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw io_error("cannot open '" + path.string() + "' for reading");
  }

  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw data_error("csv: '" + path.string() + "' has no header row");
  }
  const auto headers = split_fields(line);
  const std::size_t col_trial = find_column(headers, "trial");
  const std::size_t col_init = find_column(headers, "beta_init");
  const std::size_t col_final = find_column(headers, "beta_final");
  const std::size_t col_w = find_column(headers, "w");

  std::vector<FinalsRow> rows;
  while (next_content_line(in, line, line_no)) {
    const auto fields = split_fields(line);
    if (fields.size() != headers.size()) {
      throw data_error("csv: line " + std::to_string(line_no) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(headers.size()));
    }
    FinalsRow row;
    row.trial = parse_index_field(fields[col_trial], line_no, "trial");
    row.beta_init = parse_double_field(fields[col_init], line_no, "beta_init");
    row.beta_final =
        parse_double_field(fields[col_final], line_no, "beta_final");
    row.w = parse_double_field(fields[col_w], line_no, "w");
    if (!std::isfinite(row.beta_final) || !std::isfinite(row.w)) {
      throw data_error("csv: non-finite estimate at line " +
                       std::to_string(line_no));
    }
    rows.push_back(row);
  }
  if (rows.empty()) {
    throw data_error("csv: '" + path.string() + "' has no data rows");
  }
  return rows;
}

}  // namespace diffest::csv
