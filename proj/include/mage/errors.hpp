#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mage {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mathematical precondition violated: poles, degenerate symbols, elliptic points...
struct DomainError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

}  // namespace mage
