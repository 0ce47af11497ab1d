#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace gpe {

// Full-precision decimal rendering (17 significant digits, '.' decimal point).
std::string format_full(double v);

std::uint64_t fnv1a_hash(std::string_view text);

// Comma-separated writer: optional '#' comment lines (resolved config echo),
// one header row, then data rows.
class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path);

  void comment(const std::string& key, const std::string& value);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
};

}  // namespace gpe
