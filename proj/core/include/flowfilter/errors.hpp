#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace flowfilter {

enum class Errc {
  kParse,
  kDuplicateEdge,
  kSelfLoop,
  kEmptyGraph,
  kUnknownNode,
  kCycleDetected,
  kNoSource,
  kMultipleSources,
  kAlreadyFilter,
  kNotACTree,
  kRootNotFound,
  kBudgetExceeded,
  kInvalidArgument,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Carries the node labels of one directed cycle, first node repeated at the end.
class CycleError : public Error {
 public:
  explicit CycleError(std::vector<std::string> cycle);

  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

}  // namespace flowfilter
