#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rmt {

// Error with a stable machine-readable code alongside the human message.
// Codes in use: moment-unavailable, eigensolver-no-convergence,
// resolvent-solve-unstable, identity-degenerate, eigenvalue-collision,
// insufficient-samples, contract-violation, config-invalid.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace rmt
