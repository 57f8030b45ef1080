#pragma once

#include <stdexcept>
#include <string>

namespace rhmap {

// Every failure the library reports carries a short machine-readable code
// (e.g. "presentation-mismatch") next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace rhmap
