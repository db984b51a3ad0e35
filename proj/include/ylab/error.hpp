#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ylab {

enum class ErrorKind {
  pole,            // evaluation at a singular parameter (lambda = 1 for Y, -1 for Euler)
  domain,          // argument outside the operation's domain
  parse,           // malformed textual input
  non_invertible,  // series division by a series with zero constant term
  order_mismatch,  // series operands truncated at different orders
  unknown_check,   // identity id not in the catalog
  usage,           // CLI flag misuse
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ylab
