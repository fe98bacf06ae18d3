#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperobs {

/// A size guard (term cap, Kronecker cap, enumeration budget) refused the request.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& what, std::size_t required, std::size_t cap)
      : std::runtime_error(what + " (required " + std::to_string(required) + ", cap " +
                           std::to_string(cap) + ")"),
        required_(required),
        cap_(cap) {}

  std::size_t required() const { return required_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

}  // namespace hyperobs
