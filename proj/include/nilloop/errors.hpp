#pragma once

#include <stdexcept>
#include <string>

namespace nilloop {

// Errors a malformed input can trigger (bad table, bad map, bad parameters).
// `kind` carries a stable machine-readable tag, e.g. "NotLatinSquare".
class validation_error : public std::runtime_error {
public:
  validation_error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

// Errors from exceeding an explicit resource guard (order limits, search
// budgets, refusing to quotient by an uncertified subloop).
class guard_error : public std::runtime_error {
public:
  guard_error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

} // namespace nilloop
