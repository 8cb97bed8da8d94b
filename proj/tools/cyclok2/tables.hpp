#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"

namespace cyclok2::cli {

class RangeError : public std::invalid_argument {
 public:
  explicit RangeError(const std::string& what) : std::invalid_argument(what) {}
};

/// "7", "1..5", "2,3,10..12". Values are nonnegative; a..b needs a <= b.
std::vector<std::uint64_t> parse_range(const std::string& text);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Rows whose computed and predicted columns disagree.
  std::size_t mismatches = 0;
};

struct TableRequest {
  std::string kind;  // zset, counts or genus
  std::vector<std::uint64_t> l, p, n;
  unsigned jobs = 1;
};

/// Throws std::invalid_argument for an unknown kind or a missing range.
Table make_table(const TableRequest& req);

void render(std::ostream& out, const Table& t, Format fmt);

}  // namespace cyclok2::cli
