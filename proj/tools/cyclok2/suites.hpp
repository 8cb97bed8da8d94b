#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace cyclok2::cli {

struct RunOptions {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

/// degree-law, factor-law, tame, zset, counts, bruteforce, diophantine,
/// genus, identities, nonclosure.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const RunOptions& opt);

}  // namespace cyclok2::cli
