#pragma once

#include <stdexcept>
#include <string>

namespace aslw {

// Bad user input: malformed degree, letter outside the alphabet, query that
// makes no sense for the given chain kind. CLI exit code 2.
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Unsupported system: unknown family letter, rank outside the family's range.
// CLI exit code 2.
struct configuration_error : std::runtime_error {
  explicit configuration_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Query beyond the generated table depth. Callers that own the table should
// catch this and extend generation; it reaches the user only when extension
// is impossible.
struct depth_error : std::runtime_error {
  depth_error(const std::string& msg, int needed_depth)
      : std::runtime_error(msg), needed(needed_depth) {}
  int needed;
};

// Hard resource limit (generation depth cap). CLI exit code 3.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated internal invariant: a structural guarantee of the algorithms did
// not hold on actual data. Always a bug, never a user mistake.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace aslw
