#include "report.hpp"

#include <algorithm>
#include <iomanip>

#include "json.hpp"

namespace cyclok2::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

void SuiteReport::pass_if(bool ok, std::string id, std::string anchor, std::string detail) {
  checks.push_back({std::move(id), std::move(anchor), ok ? Status::Pass : Status::Fail, std::move(detail)});
}

void SuiteReport::skip(std::string id, std::string anchor, std::string reason) {
  checks.push_back({std::move(id), std::move(anchor), Status::Skipped, std::move(reason)});
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Fail; }));
}

void SuiteReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

}  // namespace

void render(std::ostream& out, const std::vector<SuiteReport>& reports, Format fmt, bool timing) {
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.failures();
  if (fmt == Format::Json) {
    nlohmann::ordered_json j;
    j["ok"] = failed == 0;
    auto& arr = j["suites"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json s;
      s["suite"] = r.suite;
      s["ok"] = r.failures() == 0;
      if (timing) s["seconds"] = r.seconds;
      auto& cs = s["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : r.checks) {
        cs.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"detail", c.detail}});
      }
      arr.push_back(std::move(s));
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (fmt == Format::Csv) {
    out << "suite,id,anchor,status,detail\n";
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        out << csv_field(r.suite) << ',' << csv_field(c.id) << ',' << csv_field(c.anchor) << ','
            << to_string(c.status) << ',' << csv_field(c.detail) << "\n";
      }
    }
    return;
  }
  for (const auto& r : reports) {
    out << "== " << r.suite << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
    for (const auto& c : r.checks) {
      out << "  [" << to_string(c.status) << "] " << c.id;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
  }
  out << (failed == 0 ? "ok" : "FAILED") << ": " << failed << " failing check(s)\n";
}

}  // namespace cyclok2::cli
