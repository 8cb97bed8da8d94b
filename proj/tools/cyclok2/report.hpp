#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclok2::cli {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

struct CheckResult {
  std::string id;
  std::string anchor;  // the statement being checked, in words
  Status status = Status::Pass;
  std::string detail;  // for skipped checks, the reason
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;

  void pass_if(bool ok, std::string id, std::string anchor, std::string detail);
  void skip(std::string id, std::string anchor, std::string reason);
  std::size_t failures() const;
  /// Stable order for output.
  void sort();
};

enum class Format { Text, Json, Csv };

/// Text carries wall time; JSON and CSV omit it unless `timing` is set, so
/// they stay byte-identical across runs.
void render(std::ostream& out, const std::vector<SuiteReport>& reports, Format fmt, bool timing);

}  // namespace cyclok2::cli
