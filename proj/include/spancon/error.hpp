#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spancon {

// Malformed arguments: wrong sizes, labels out of range, bad pins.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well formed but names a family with no container.
class UnsupportedFamily : public InputError {
 public:
  using InputError::InputError;
};

// A construction step could not complete. case_path() names the
// branch that failed, e.g. "high/disjoint/crossing-labels/step2".
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what);
  const std::string& case_path() const { return case_path_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string case_path_;
  std::string detail_;
};

// Pushes a case label for the lifetime of the scope. Labels nest, and
// ConstructionError snapshots the current stack of the calling thread.
class CaseScope {
 public:
  explicit CaseScope(std::string label);
  ~CaseScope();
  CaseScope(const CaseScope&) = delete;
  CaseScope& operator=(const CaseScope&) = delete;
};

std::string current_case_path();

}  // namespace spancon
