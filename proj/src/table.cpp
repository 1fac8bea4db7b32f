#include "otocspec/table.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "otocspec/error.hpp"

namespace otocspec {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable& CsvTable::row() {
  if (open_row_ && cells_in_row_ != header_.size()) {
    throw Error(ErrorCode::InvalidArgument, "CSV row has the wrong number of cells");
  }
  if (open_row_) body_ += '\n';
  open_row_ = true;
  cells_in_row_ = 0;
  return *this;
}

CsvTable& CsvTable::cell(std::string_view text) {
  if (!open_row_) throw Error(ErrorCode::InvalidArgument, "CSV cell written before row()");
  if (cells_in_row_ > 0) body_ += ',';
  body_.append(text);
  ++cells_in_row_;
  return *this;
}

CsvTable& CsvTable::cell(double value) { return cell(format_double(value)); }

CsvTable& CsvTable::cell(long long value) { return cell(std::to_string(value)); }

std::string CsvTable::str() const {
  std::string out;
  for (std::size_t c = 0; c < header_.size(); ++c) {
    if (c > 0) out += ',';
    out += header_[c];
  }
  out += '\n';
  out += body_;
  if (open_row_) out += '\n';
  return out;
}

void CsvTable::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << str();
}

std::size_t CsvData::column(std::string_view name) const {
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == name) return c;
  }
  throw Error(ErrorCode::IoError, "CSV has no column '" + std::string(name) + "'");
}

CsvData read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  CsvData data;
  std::string line;
  if (std::getline(in, line)) data.header = split(line);
  while (std::getline(in, line)) {
    if (!line.empty()) data.rows.push_back(split(line));
  }
  return data;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

}  // namespace otocspec
