#ifndef MAPCONE_ERRORS_HPP
#define MAPCONE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace mapcone {

// "input" errors are malformed text, "math" errors are structured refusals
// (input is well-formed but lacks the property an operation needs), and
// "internal" errors indicate a broken invariant upstream.  The CLI maps
// them to exit codes 1, 2, 1 respectively.
enum class ErrorCategory { input, math, internal };

class Error : public std::runtime_error {
public:
  Error(ErrorCategory category, std::string kind, const std::string& message)
      : std::runtime_error(message), category_(category), kind_(std::move(kind)) {}

  ErrorCategory category() const { return category_; }
  const std::string& kind() const { return kind_; }

  static Error input(std::string kind, const std::string& msg) {
    return Error(ErrorCategory::input, std::move(kind), msg);
  }
  static Error math(std::string kind, const std::string& msg) {
    return Error(ErrorCategory::math, std::move(kind), msg);
  }
  static Error internal(std::string kind, const std::string& msg) {
    return Error(ErrorCategory::internal, std::move(kind), msg);
  }

private:
  ErrorCategory category_;
  std::string kind_;
};

}  // namespace mapcone

#endif
