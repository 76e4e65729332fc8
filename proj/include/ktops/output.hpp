#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace ktops::output {

/// Ordered key/value pairs written as `# key: value` lines above the CSV header.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Shortest decimal that round-trips to the same double.
std::string format_number(double x);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

/// Writes metadata, then a header line, then rows. Throws std::runtime_error on I/O failure.
void write_csv(const std::filesystem::path& path, const Metadata& meta, const CsvTable& table);

/// Text of write_csv, for tests and stdout.
std::string render_csv(const Metadata& meta, const CsvTable& table);

/// `runs/evolve.csv` -> `runs/evolve.json`; a path without extension gets `.json` appended.
std::filesystem::path companion_json_path(const std::filesystem::path& csv_path);

/// `runs/rdm.csv` + "curve" -> `runs/rdm_curve.csv`
std::filesystem::path sibling_path(const std::filesystem::path& csv_path, const std::string& suffix);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace ktops::output
