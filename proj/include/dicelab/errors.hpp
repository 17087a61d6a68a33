// errors.hpp -- error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace dicelab {

// Thrown when a requested computation exceeds a configured work or memory
// budget. The message names the offending quantity.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace dicelab
