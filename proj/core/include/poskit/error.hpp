#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace poskit {

// Every failure raised by the library carries a stable machine-readable kind
// ("CycleError", "SpaceMismatch", ...) next to the human-readable message.
// The CLI maps any Error to exit code 2.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& msg) {
  throw Error(std::move(kind), msg);
}

}  // namespace poskit
