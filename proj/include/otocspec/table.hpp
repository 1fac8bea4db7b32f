#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace otocspec {

// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

// Comma-separated table with a fixed header; rows are written in insertion
// order so identical runs produce identical bytes.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  CsvTable& row();
  CsvTable& cell(std::string_view text);
  CsvTable& cell(double value);
  CsvTable& cell(long long value);
  CsvTable& cell(int value) { return cell(static_cast<long long>(value)); }

  std::string str() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::string body_;
  std::size_t cells_in_row_ = 0;
  bool open_row_ = false;
};

struct CsvData {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column index by name; throws IoError when absent.
  std::size_t column(std::string_view name) const;
};

CsvData read_csv(const std::filesystem::path& path);

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace otocspec
