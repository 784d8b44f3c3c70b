#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hydro1d::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitRegime = 4;

inline constexpr int kSchemaVersion = 1;

using Cell = std::variant<double, std::int64_t, bool, std::string>;

struct OutputRecord {
  std::string schema;  // spectrum | samples | scan | action
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Ordered parameter echo; values are stored as cells so CSV and JSON agree.
  std::vector<std::pair<std::string, Cell>> metadata;

  void add_meta(std::string key, Cell value) { metadata.emplace_back(std::move(key), std::move(value)); }
};

std::string format_number(double v);

void write_csv(const OutputRecord& r, std::ostream& os);
void write_json(const OutputRecord& r, std::ostream& os);

// Entry point shared by the binary and the tests.  `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hydro1d::cli
