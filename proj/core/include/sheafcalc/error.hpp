#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sheafcalc {

/// Malformed input: bad tables, unknown names, syntax errors, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential enumeration would exceed a configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that failed a law check; carries every violation found.
class LawViolation : public InputError {
 public:
  LawViolation(const std::string& what, std::vector<std::string> violations)
      : InputError(what + join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += "\n  " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace sheafcalc
