#include "ktops/output.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ktops/types.hpp"

namespace ktops::output {

std::string format_number(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

void CsvTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw InvalidArgument("CSV row width does not match the header");
  rows.push_back(std::move(row));
}

std::string render_csv(const Metadata& meta, const CsvTable& table) {
  std::ostringstream os;
  for (const auto& [key, value] : meta) os << "# " << key << ": " << value << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
    os << '\n';
  }
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

void write_csv(const std::filesystem::path& path, const Metadata& meta, const CsvTable& table) {
  write_text(path, render_csv(meta, table));
}

std::filesystem::path companion_json_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  if (p.has_extension()) return p.replace_extension(".json");
  p += ".json";
  return p;
}

std::filesystem::path sibling_path(const std::filesystem::path& csv_path, const std::string& suffix) {
  std::filesystem::path p = csv_path;
  const std::string ext = p.has_extension() ? p.extension().string() : std::string(".csv");
  const std::string stem = p.stem().string();
  return p.replace_filename(stem + "_" + suffix + ext);
}

}  // namespace ktops::output
