#include "spancon/error.hpp"

namespace spancon {
namespace {

thread_local std::vector<std::string> case_stack;

std::string prefixed(const std::string& what) {
  std::string path = current_case_path();
  return path.empty() ? what : path + ": " + what;
}

}  // namespace

ConstructionError::ConstructionError(const std::string& what)
    : std::runtime_error(prefixed(what)), case_path_(current_case_path()), detail_(what) {}

CaseScope::CaseScope(std::string label) { case_stack.push_back(std::move(label)); }

CaseScope::~CaseScope() { case_stack.pop_back(); }

std::string current_case_path() {
  std::string out;
  for (const auto& label : case_stack) {
    if (!out.empty()) out += '/';
    out += label;
  }
  return out;
}

}  // namespace spancon
