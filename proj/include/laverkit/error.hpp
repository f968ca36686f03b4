#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace laverkit {

// Domain error carrying a stable machine-readable name ("NotCNF", "BadT", ...)
// alongside the human-readable message.  The CLI maps these to exit code 1 and
// prints the name on stderr; library callers can switch on name().
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& message) {
  throw Error(std::move(name), message);
}

}  // namespace laverkit
