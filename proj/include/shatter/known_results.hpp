#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace shatter {

struct KnownResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Recomputes the published values for the standard families and worked
/// examples and compares them exactly.
std::vector<KnownResult> verify_known_results();

void print_known_results(std::ostream& out, const std::vector<KnownResult>& results);
nlohmann::ordered_json to_json(const std::vector<KnownResult>& results);

}  // namespace shatter
